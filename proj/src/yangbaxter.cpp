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

#include "tlqc/yangbaxter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tlqc/bell.hpp"

namespace tlqc {

namespace {
const Complex kI{0.0, 1.0};
}  // namespace

Matrix tl_generator(const Matrix& t, int i, int sites) {
  if (t.rows() != 4 || t.cols() != 4) {
    throw std::invalid_argument("tl_generator requires a 4x4 seed");
  }
  if (i < 1 || i + 1 > sites) {
    throw std::invalid_argument("tl_generator strand out of range");
  }
  return embed_on_qubits(t, {i, i + 1}, sites);
}

TlReport verify_tl_relations(const Matrix& t, double loop_weight, int sites,
                             double tol) {
  if (sites < 3) {
    throw std::invalid_argument("verify_tl_relations requires sites >= 3");
  }
  TlReport report;
  const double w = 1.0 / (loop_weight * loop_weight);
  double idem = 0.0, braid = 0.0, comm = 0.0;
  std::vector<Matrix> e;
  e.reserve(sites - 1);
  for (int i = 1; i < sites; ++i) e.push_back(tl_generator(t, i, sites));
  for (int i = 0; i + 1 < sites; ++i) {
    idem = std::max(idem, max_abs_diff(Matrix(e[i] * e[i]), e[i]));
    if (i + 2 < sites) {
      braid = std::max(
          braid, max_abs_diff(Matrix(e[i] * e[i + 1] * e[i]), Matrix(w * e[i])));
      braid = std::max(braid, max_abs_diff(Matrix(e[i + 1] * e[i] * e[i + 1]),
                                           Matrix(w * e[i + 1])));
    }
    for (int j = i + 2; j + 1 < sites; ++j) {
      comm = std::max(comm, max_abs_diff(Matrix(e[i] * e[j]),
                                         Matrix(e[j] * e[i])));
    }
  }
  report.idempotent = idem <= tol;
  report.braid_contraction = braid <= tol;
  report.far_commutation = comm <= tol;
  report.ok =
      report.idempotent && report.braid_contraction && report.far_commutation;
  report.max_residual = std::max({idem, braid, comm});
  return report;
}

YbgCoefficients solve_ybg_coefficients(double loop_weight, int branch,
                                       double mu) {
  if (!(loop_weight > 0.0) || loop_weight > 2.0) {
    throw std::invalid_argument("loop weight must lie in (0, 2]");
  }
  const double disc = std::sqrt(4.0 - loop_weight * loop_weight);
  const Complex phase = std::exp(kI * mu);
  YbgCoefficients c;
  c.a = phase;
  c.b = -(loop_weight / 2.0) *
        (Complex{loop_weight, 0.0} +
         (branch >= 0 ? kI : -kI) * Complex{disc, 0.0}) *
        phase;
  return c;
}

Matrix make_r(const Matrix& t, const YbgCoefficients& c) {
  if (t.rows() != t.cols()) {
    throw std::invalid_argument("make_r requires a square seed");
  }
  return c.a * identity_matrix(static_cast<int>(t.rows())) + c.b * t;
}

YbeReport verify_yang_baxter(const Matrix& r, double tol) {
  if (r.rows() != 4 || r.cols() != 4) {
    throw std::invalid_argument("verify_yang_baxter requires a 4x4 matrix");
  }
  YbeReport report;
  const Matrix r12 = embed_on_qubits(r, {1, 2}, 3);
  const Matrix r23 = embed_on_qubits(r, {2, 3}, 3);
  report.residual =
      max_abs_diff(Matrix(r12 * r23 * r12), Matrix(r23 * r12 * r23));
  report.ok = report.residual <= tol;
  report.unitary =
      max_abs_diff(Matrix(r * dagger(r)), identity_matrix(4)) <= tol;
  return report;
}

Matrix make_type1(int s, Complex tau) {
  if (tau == Complex{0.0, 0.0}) {
    throw std::invalid_argument("make_type1 requires nonzero twist");
  }
  Matrix t = Matrix::Zero(4, 4);
  if (s >= 0) {
    t(0, 0) = 0.5;
    t(0, 3) = 0.5 * tau;
    t(3, 0) = 0.5 / tau;
    t(3, 3) = 0.5;
  } else {
    t(1, 1) = 0.5;
    t(1, 2) = 0.5 * tau;
    t(2, 1) = 0.5 / tau;
    t(2, 2) = 0.5;
  }
  return t;
}

Matrix make_r_type1(int s, Complex tau) {
  return identity_matrix(4) - 2.0 * make_type1(s, tau);
}

Matrix make_r_bell(int i, int j) {
  return identity_matrix(4) - 2.0 * bell_projector(i, j);
}

Matrix make_type2(int eps, double phi) {
  const double e = eps >= 0 ? 1.0 : -1.0;
  Matrix t = Matrix::Zero(4, 4);
  t(0, 0) = 0.5;
  t(0, 3) = -0.5 * kI * std::exp(-kI * phi);
  t(3, 0) = 0.5 * kI * std::exp(kI * phi);
  t(3, 3) = 0.5;
  t(1, 1) = 0.5;
  t(1, 2) = -0.5 * kI * e;
  t(2, 1) = 0.5 * kI * e;
  t(2, 2) = 0.5;
  return t;
}

Matrix make_r_type2(int eps, double phi, int branch) {
  const Matrix t = make_type2(eps, phi);
  const double quarter = std::numbers::pi / 4.0;
  if (branch < 0) {
    return std::exp(-kI * quarter) * identity_matrix(4) +
           kI * std::sqrt(2.0) * t;
  }
  return std::exp(kI * quarter) * identity_matrix(4) -
         kI * std::sqrt(2.0) * t;
}

Matrix make_b(int eps, int eta) {
  const double e = eps >= 0 ? 1.0 : -1.0;
  const double h = eta >= 0 ? 1.0 : -1.0;
  Matrix b = Matrix::Zero(4, 4);
  b(0, 0) = 1;
  b(0, 3) = h;
  b(1, 1) = 1;
  b(1, 2) = e;
  b(2, 1) = -e;
  b(2, 2) = 1;
  b(3, 0) = -h;
  b(3, 3) = 1;
  return b / std::sqrt(2.0);
}

Matrix teleportation_swapping_operator(int i, int j) {
  const Matrix r = make_r_bell(i, j);
  const Matrix r12 = embed_on_qubits(r, {1, 2}, 3);
  const Matrix r23 = embed_on_qubits(r, {2, 3}, 3);
  return r23 * r12 * r23;
}

}  // namespace tlqc
