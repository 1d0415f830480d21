// Copyright 2026 The tlqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tlqc/numerics.hpp"
#include "tlqc/pauli.hpp"

namespace tlqc {

// Measurement-correction bookkeeping for the teleportation protocols.
//
// Every derivation here is brute force: the prepared register is built as a
// dense state, the measured pairs are projected branch by branch, and the
// operator left on the surviving qubits is read off column by column. The
// projection discards one power of 1/2 per measured pair, so each extracted
// map is rescaled by 2 per pair; the residual_op listed in a table is then
// exactly the excess over the protocol's target gate, and its adjoint is the
// correction that restores the target.

struct CorrectionEntry {
  std::vector<int> outcome;  // measurement bits in protocol order
  Matrix residual_op;        // excess operator on the data qubits
  Matrix correction;         // adjoint of residual_op
  bool is_pauli = false;     // residual_op is a phased Pauli word
  PhasedPauli pauli;         // valid when is_pauli
};

struct CorrectionTable {
  std::string protocol;
  int data_qubits = 1;
  std::vector<CorrectionEntry> entries;  // outcome bits ascending
};

// Branch residual of plain teleportation as a map on the input qubit:
// alpha -> 2 (<psi(ij)| (x) 1)(|alpha> (x) |Psi>). Equals X^i Z^j.
Matrix teleport_residual(int i, int j);

// Transpose protocol, resource first: alpha -> 2 (1 (x) <psi(ij)|)
// (|Psi> (x) |alpha>). Equals (X^i Z^j)^T.
Matrix teleport_residual_transpose(int i, int j);

// Probability of the (i, j) branch for a normalized 1-qubit input.
double teleport_branch_probability(const StateVector& alpha, int i, int j);

// Gate teleportation through (1 (x) u)|Psi> with a Bell measurement on the
// input qubit and the first resource qubit. The residual is R_ij u with
// R_ij = u W_ij u^dag; entries record R_ij and its adjoint.
CorrectionTable single_gate_teleport(const Matrix& u);

// Raised when a two-qubit correction does not split into a tensor product of
// single-qubit gates; carries the raw 4x4 conjugation result.
class NotFactorizableError : public std::runtime_error {
 public:
  NotFactorizableError(const std::string& what, Matrix raw);
  const Matrix& raw() const { return raw_; }

 private:
  Matrix raw_;
};

struct FactorPair {
  bool factorizable = false;
  Matrix q;  // 2x2 left factor
  Matrix p;  // 2x2 right factor
};

// Operator Schmidt split of a 4x4 matrix into q (x) p. factorizable is false
// when the Schmidt rank exceeds 1 at the given tolerance.
FactorPair factor_two_qubit(const Matrix& m, double tol = kDefaultTol);

// Two-qubit gate teleportation through (1 (x) cu (x) 1)(|Psi> (x) |Psi>),
// Bell measurements on pairs (1,2) and (5,6), residual on (3,4). The excess
// is Q (x) P = cu (W_{i1 j1} (x) W_{i2 j2}^T) cu^dag. Throws
// NotFactorizableError when any branch excess has Schmidt rank > 1 (cu not
// Clifford).
CorrectionTable two_gate_teleport(const Matrix& cu);

// Raw residual map of the two-gate protocol for one outcome, rescaled by 4:
// columns indexed by the |alpha beta> product basis. Equals (Q (x) P) cu.
Matrix two_gate_residual(const Matrix& cu, int i1, int j1, int i2, int j2);

// Index formulas for the corrections of the B(eps, eta) product-basis
// protocols. All arithmetic is mod-2 on bits; products are logical AND.
struct WIndexRow {
  int i = 0, j = 0;   // measurement bits
  int k = 0, l = 0;   // preparation bits
  int p = 0;          // sign exponent, forward operator order
  int pp = 0;         // sign exponent, reversed operator order
  int a = 0;          // Z power
  int b = 0;          // X power
};

WIndexRow w_index_formula(int eps, int eta, int i, int j, int k, int l);

// The 16 rows for one (eps, eta), ascending by (i, j, k, l).
std::vector<WIndexRow> w_index_table(int eps, int eta);

// W = (-1)^p Z^a X^b and W' = (-1)^pp Z^a X^b as phased Pauli words.
PhasedPauli w_from_indices(const WIndexRow& row, bool reversed);

// Brute-force residual of (B (x) 1)(1 (x) B)(|alpha> (x) |kl>) on the
// product-basis outcome <ij|, rescaled by 2. Equals w_from_indices(.., false).
Matrix ybg_residual(int eps, int eta, int k, int l, int i, int j);

// Reversed operator order (1 (x) B)(B (x) 1)(|kl> (x) |alpha>): the data
// lands on qubit 1 and the product measurement reads qubits (2,3).
Matrix ybg_residual_reversed(int eps, int eta, int k, int l, int i, int j);

// State teleportation driven by B(eps, eta) on the preparation |kl>; entries
// record W (or W' when reversed) and its adjoint.
CorrectionTable ybg_teleport(int eps, int eta, int k, int l,
                             bool reversed = false);

// Single-qubit gate construction in the product-measurement protocol:
// (B (x) 1)(1 (x) 1 (x) u)(1 (x) B)(|alpha> (x) |kl>). The excess is
// R = u W u^dag.
CorrectionTable ybg_gate_teleport_single(int eps, int eta, const Matrix& u,
                                         int k, int l);

// Two-qubit gate construction: ancillas prepared as
// (1 (x) cu (x) 1)(B (x) B)|k1 l1 k2 l2>, each Bell measurement realized as
// B followed by a product measurement. The excess over cu is
// Q (x) P = cu (W (x) W') cu^dag with W from (i1, j1, k1, l1) and W' from
// (i2, j2, k2, l2).
CorrectionTable ybg_gate_teleport_two(int eps, int eta, const Matrix& cu,
                                      int k1, int l1, int k2, int l2);

// Raw residual map on the central pair for one outcome, rescaled by 4.
// Equals (Q (x) P) cu.
Matrix ybg_two_gate_residual(int eps, int eta, const Matrix& cu, int k1,
                             int l1, int k2, int l2, int i1, int j1, int i2,
                             int j2);

// Symbolic correction rows for the B-gate construction (cu = B(eps, eta)),
// ordered ascending by (i1, j1, i2, j2, k1, l1, k2, l2).
struct QpRow {
  int i1 = 0, j1 = 0, i2 = 0, j2 = 0;
  int k1 = 0, l1 = 0, k2 = 0, l2 = 0;
  PhasedPauli q;
  PhasedPauli p;
};

QpRow qp_formula(int eps, int eta, int i1, int j1, int i2, int j2, int k1,
                 int l1, int k2, int l2);
std::vector<QpRow> qp_table(int eps, int eta);

// Correction word of the B(1,1) teleportation operator on preparation |kl>
// and product outcome <ij|: (-1)^{ij + (k+l)(i+k+1)} Z^{i+k+1} X^{i+j+k+l}.
PhasedPauli w11_formula(int i, int j, int k, int l);

struct W11Row {
  int i = 0, j = 0, k = 0, l = 0;
  PhasedPauli w;
};

// All 16 rows, ascending by (i, j, k, l).
std::vector<W11Row> w11_table();

// m-stage teleportation chains. Plain mode projects <psi(00)| on successive
// pairs of |alpha> (x) |Psi>^(x m); ybg mode applies B(1,1) on pairs
// (2,3), (4,5), ... then (1,2), (3,4), ... of |alpha> (x) |1>^(x 2m) and
// projects <0| on the first 2m qubits. Both leave (1/2)^m |alpha| on the
// last qubit.
enum class ChainMode { kPlain, kYbg };

struct ChainReport {
  int stages = 0;
  double amplitude_error = 0.0;  // worst |branch norm - (1/2)^m|
  double state_error = 0.0;      // rescaled map vs identity
  bool ok = false;
};

ChainReport chained_teleport(int stages, ChainMode mode);

}  // namespace tlqc
