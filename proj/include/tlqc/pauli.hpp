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

#include <optional>
#include <string>
#include <vector>

#include "tlqc/numerics.hpp"

namespace tlqc {

// phase * (X^x1 Z^z1) (x) ... (x) (X^xn Z^zn), phase = i^phase_pow.
// Index 0 of x/z is qubit 1 (the leftmost factor). The convention Y = ZX
// canonicalizes to phase_pow 2, x = z = 1 on the qubit ("-XZ").
struct PhasedPauli {
  int num_qubits = 1;
  unsigned phase_pow = 0;  // 0..3
  std::vector<std::uint8_t> x, z;
};

PhasedPauli pauli_identity(int num_qubits);

// Single-qubit X^i Z^j. Satisfies W^T == W^dag as matrices.
PhasedPauli make_w(int i, int j);

// phase * Z^a X^b on one qubit (canonicalized to X-then-Z order).
PhasedPauli make_zx_form(int sign_pow, int a, int b);

Complex phase_value(const PhasedPauli& p);
Matrix to_matrix(const PhasedPauli& p);

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b);
PhasedPauli transpose(const PhasedPauli& p);
PhasedPauli adjoint(const PhasedPauli& p);
PhasedPauli tensor(const PhasedPauli& a, const PhasedPauli& b);
bool equal(const PhasedPauli& a, const PhasedPauli& b);

// Canonical rendering: optional phase prefix ("", "i", "-", "-i"), then per
// qubit "X<q>" and/or "Z<q>" in X-then-Z order (subscripts omitted for one
// qubit). Identity renders as "1".
std::string render(const PhasedPauli& p);

// Phase prefix alone, always signed: "+1", "+i", "-1", or "-i".
std::string render_phase(const PhasedPauli& p);

// Tensor word alone, phase stripped; identity renders as "1".
std::string render_word(const PhasedPauli& p);

// Recognizes m as a phased Pauli when every entry matches within tol and the
// phase is one of {1, i, -1, -i}.
std::optional<PhasedPauli> recognize_pauli(const Matrix& m,
                                           double tol = kDefaultTol);

struct ConjugationResult {
  bool is_pauli = false;
  PhasedPauli pauli;  // valid when is_pauli
  Matrix raw;         // u * p * u^dag, always populated
};

// Conjugation u p u^dag with Pauli recognition.
ConjugationResult conjugate_by(const Matrix& u, const PhasedPauli& p,
                               double tol = kDefaultTol);

struct CliffordImage {
  std::string generator;  // "X1", "Z2", ...
  bool is_pauli = false;
  PhasedPauli image;
  Matrix raw;
};

struct CliffordTable {
  bool is_clifford = false;
  std::vector<CliffordImage> images;  // X1..Xn then Z1..Zn
};

// Conjugation table of all single-qubit X/Z generators through u.
CliffordTable clifford_table(const Matrix& u, double tol = kDefaultTol);

struct GateApplication {
  std::string name;         // H, S, T, X, Z, CNOT, CZ
  std::vector<int> qubits;  // 1-based targets
};

// Checks that the word (applied first-to-last) equals u up to global phase.
bool check_decomposition(const Matrix& u,
                         const std::vector<GateApplication>& word, int n,
                         double tol = kDefaultTol);

}  // namespace tlqc
