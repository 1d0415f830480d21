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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace tlqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

// Dense state on num_qubits qubits. amps.size() == 2^num_qubits.
// Qubit 1 is the leftmost tensor factor, i.e. the most significant bit of
// the amplitude index.
struct StateVector {
  int num_qubits = 0;
  Vector amps;
};

// Bit position (shift) of 1-based qubit q in an n-qubit index.
inline int qubit_shift(int n, int q) { return n - q; }

StateVector make_zero_state(int num_qubits);
StateVector basis_state(int num_qubits, std::uint64_t index);
StateVector from_amplitudes(int num_qubits, std::vector<Complex> amps);

// Normalized state with Gaussian-random amplitudes; deterministic in seed.
StateVector random_state(int num_qubits, std::uint64_t seed);

// Haar-like random 2^k x 2^k unitary via QR of a Gaussian matrix.
Matrix random_unitary(int dim, std::uint64_t seed);

StateVector tensor(const StateVector& a, const StateVector& b);
Matrix tensor(const Matrix& a, const Matrix& b);

Matrix identity_matrix(int dim);
Matrix dagger(const Matrix& m);

// Lifts a gate on k qubits onto the given 1-based target qubits of an
// n-qubit register. targets[0] is the gate's own leftmost factor. Targets
// must be distinct and need not be adjacent or ordered.
Matrix embed_on_qubits(const Matrix& gate, const std::vector<int>& targets,
                       int n);

StateVector apply(const Matrix& gate, const std::vector<int>& targets,
                  const StateVector& s);

double norm(const StateVector& s);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Vector& a, const Vector& b);

struct PhaseMatch {
  bool match = false;
  Complex phase{1.0, 0.0};  // b == phase * a when match
  double residual = 0.0;    // max-norm residual after phase alignment
};

// Tests b == phase * a for some unit-modulus phase, in max norm.
PhaseMatch equal_up_to_global_phase(const Vector& a, const Vector& b,
                                    double tol = kDefaultTol);
PhaseMatch equal_up_to_global_phase(const Matrix& a, const Matrix& b,
                                    double tol = kDefaultTol);

struct ProjectionResult {
  double probability = 0.0;
  bool possible = false;  // branch amplitude above tolerance
  StateVector state;      // renormalized post-measurement state
};

ProjectionResult project_and_renormalize(const StateVector& s,
                                         const Matrix& projector,
                                         double tol = kDefaultTol);

// <phi| applied to qubit pair (q1, q2) of s; phi is the 2-qubit ket of the
// bra (conjugated internally). Returns the unnormalized state on the
// remaining qubits, order preserved.
StateVector partial_inner_pair(const StateVector& s, int q1, int q2,
                               const Vector& phi);

// <phi| applied to single qubit q; phi is a 1-qubit ket.
StateVector partial_inner_single(const StateVector& s, int q,
                                 const Vector& phi);

// Reorders tensor factors: result qubit k carries input qubit perm[k-1].
// perm must be a permutation of 1..n.
StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm);

}  // namespace tlqc
