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

#include "tlqc/numerics.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace tlqc {

namespace {

void check_qubit_range(int n, int q) {
  if (q < 1 || q > n) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

StateVector make_zero_state(int num_qubits) {
  return basis_state(num_qubits, 0);
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > 30)
    throw std::invalid_argument("unsupported qubit count");
  const std::uint64_t dim = 1ull << num_qubits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  StateVector s{num_qubits, Vector::Zero(static_cast<Eigen::Index>(dim))};
  s.amps[static_cast<Eigen::Index>(index)] = Complex{1.0, 0.0};
  return s;
}

StateVector from_amplitudes(int num_qubits, std::vector<Complex> amps) {
  if (amps.size() != (1ull << num_qubits))
    throw std::invalid_argument("amplitude count mismatch");
  StateVector s{num_qubits, Vector::Zero(static_cast<Eigen::Index>(amps.size()))};
  for (std::size_t i = 0; i < amps.size(); ++i)
    s.amps[static_cast<Eigen::Index>(i)] = amps[i];
  return s;
}

StateVector random_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  StateVector s{num_qubits, Vector(dim)};
  for (Eigen::Index i = 0; i < dim; ++i) s.amps[i] = Complex{dist(gen), dist(gen)};
  s.amps.normalize();
  return s;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Complex{dist(gen), dist(gen)};
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution does not collapse.
  for (int c = 0; c < dim; ++c) {
    Complex d = r(c, c);
    double mag = std::abs(d);
    if (mag > 0) q.col(c) *= d / mag;
  }
  return q;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out{a.num_qubits + b.num_qubits,
                  Vector(a.amps.size() * b.amps.size())};
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < a.amps.size(); ++i)
    for (Eigen::Index j = 0; j < b.amps.size(); ++j)
      out.amps[idx++] = a.amps[i] * b.amps[j];
  return out;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix identity_matrix(int dim) { return Matrix::Identity(dim, dim); }

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix embed_on_qubits(const Matrix& gate, const std::vector<int>& targets,
                       int n) {
  const int k = static_cast<int>(targets.size());
  if (gate.rows() != gate.cols() || gate.rows() != (1 << k))
    throw std::invalid_argument("gate dimension does not match target count");
  unsigned seen = 0;
  for (int q : targets) {
    check_qubit_range(n, q);
    unsigned bit = 1u << qubit_shift(n, q);
    if (seen & bit) throw std::invalid_argument("duplicate target qubit");
    seen |= bit;
  }
  const int dim = 1 << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    int rt = 0;
    for (int t = 0; t < k; ++t)
      rt = (rt << 1) | ((r >> qubit_shift(n, targets[t])) & 1);
    const int rest = r & ~static_cast<int>(seen);
    for (int ct = 0; ct < (1 << k); ++ct) {
      int c = rest;
      for (int t = 0; t < k; ++t)
        if ((ct >> (k - 1 - t)) & 1) c |= 1 << qubit_shift(n, targets[t]);
      out(r, c) = gate(rt, ct);
    }
  }
  return out;
}

StateVector apply(const Matrix& gate, const std::vector<int>& targets,
                  const StateVector& s) {
  Matrix full = embed_on_qubits(gate, targets, s.num_qubits);
  return StateVector{s.num_qubits, full * s.amps};
}

double norm(const StateVector& s) { return s.amps.norm(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

namespace {

PhaseMatch phase_match_impl(const Vector& a, const Vector& b, double tol) {
  PhaseMatch pm;
  Eigen::Index imax = 0;
  double amax = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) > amax) {
      amax = std::abs(a[i]);
      imax = i;
    }
  }
  if (amax <= tol) {
    pm.phase = Complex{1, 0};
    pm.residual = b.size() ? b.cwiseAbs().maxCoeff() : 0.0;
    pm.match = pm.residual <= tol;
    return pm;
  }
  Complex ratio = b[imax] / a[imax];
  double mag = std::abs(ratio);
  pm.phase = mag > 0 ? ratio / mag : Complex{1, 0};
  pm.residual = (b - pm.phase * a).cwiseAbs().maxCoeff();
  pm.match = pm.residual <= tol;
  return pm;
}

}  // namespace

PhaseMatch equal_up_to_global_phase(const Vector& a, const Vector& b,
                                    double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
  return phase_match_impl(a, b, tol);
}

PhaseMatch equal_up_to_global_phase(const Matrix& a, const Matrix& b,
                                    double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch");
  Vector av = Eigen::Map<const Vector>(a.data(), a.size());
  Vector bv = Eigen::Map<const Vector>(b.data(), b.size());
  return phase_match_impl(av, bv, tol);
}

ProjectionResult project_and_renormalize(const StateVector& s,
                                         const Matrix& projector, double tol) {
  if (projector.rows() != s.amps.size() || projector.cols() != s.amps.size())
    throw std::invalid_argument("projector dimension mismatch");
  ProjectionResult res;
  Vector v = projector * s.amps;
  double amp = v.norm();
  res.probability = amp * amp;
  res.possible = amp > tol;
  if (res.possible) res.state = StateVector{s.num_qubits, v / amp};
  return res;
}

StateVector partial_inner_pair(const StateVector& s, int q1, int q2,
                               const Vector& phi) {
  const int n = s.num_qubits;
  check_qubit_range(n, q1);
  check_qubit_range(n, q2);
  if (q1 == q2) throw std::invalid_argument("pair qubits must differ");
  if (phi.size() != 4) throw std::invalid_argument("phi must be a 2-qubit ket");
  const int s1 = qubit_shift(n, q1), s2 = qubit_shift(n, q2);
  const Eigen::Index out_dim = Eigen::Index{1} << (n - 2);
  StateVector out{n - 2, Vector::Zero(out_dim)};
  const int hi = std::max(s1, s2), lo = std::min(s1, s2);
  for (Eigen::Index i = 0; i < s.amps.size(); ++i) {
    const int b1 = (static_cast<int>(i) >> s1) & 1;
    const int b2 = (static_cast<int>(i) >> s2) & 1;
    // Delete the two measured bit positions, keeping the rest in order.
    auto u = static_cast<std::uint64_t>(i);
    std::uint64_t upper = u >> (hi + 1);
    std::uint64_t mid = (u >> (lo + 1)) & ((1ull << (hi - lo - 1)) - 1);
    std::uint64_t lower = u & ((1ull << lo) - 1);
    std::uint64_t rest = (upper << (hi - 1)) | (mid << lo) | lower;
    out.amps[static_cast<Eigen::Index>(rest)] +=
        std::conj(phi[(b1 << 1) | b2]) * s.amps[i];
  }
  return out;
}

StateVector partial_inner_single(const StateVector& s, int q,
                                 const Vector& phi) {
  const int n = s.num_qubits;
  check_qubit_range(n, q);
  if (phi.size() != 2) throw std::invalid_argument("phi must be a 1-qubit ket");
  const int sh = qubit_shift(n, q);
  StateVector out{n - 1, Vector::Zero(Eigen::Index{1} << (n - 1))};
  for (Eigen::Index i = 0; i < s.amps.size(); ++i) {
    const int b = (static_cast<int>(i) >> sh) & 1;
    auto u = static_cast<std::uint64_t>(i);
    std::uint64_t upper = u >> (sh + 1);
    std::uint64_t lower = u & ((1ull << sh) - 1);
    std::uint64_t rest = (upper << sh) | lower;
    out.amps[static_cast<Eigen::Index>(rest)] += std::conj(phi[b]) * s.amps[i];
  }
  return out;
}

StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm) {
  const int n = s.num_qubits;
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  unsigned seen = 0;
  for (int q : perm) {
    check_qubit_range(n, q);
    if (seen & (1u << q)) throw std::invalid_argument("not a permutation");
    seen |= 1u << q;
  }
  StateVector out{n, Vector::Zero(s.amps.size())};
  for (Eigen::Index i = 0; i < s.amps.size(); ++i) {
    std::uint64_t r = 0;
    for (int k = 1; k <= n; ++k) {
      const int src = perm[k - 1];
      const int bit = (static_cast<int>(i) >> qubit_shift(n, src)) & 1;
      if (bit) r |= 1ull << qubit_shift(n, k);
    }
    out.amps[static_cast<Eigen::Index>(r)] = s.amps[i];
  }
  return out;
}

}  // namespace tlqc
