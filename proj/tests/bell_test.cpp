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

#include "tlqc/bell.hpp"

#include <gtest/gtest.h>

#include "tlqc/gates.hpp"
#include "tlqc/pauli.hpp"

namespace tlqc {
namespace {

TEST(BellStates, ExplicitAmplitudes) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector phi_plus(4), phi_minus(4), psi_plus(4), psi_minus(4);
  phi_plus << r, 0, 0, r;
  phi_minus << r, 0, 0, -r;
  psi_plus << 0, r, r, 0;
  psi_minus << 0, r, -r, 0;
  EXPECT_NEAR(max_abs_diff(bell_state(0, 0).amps, phi_plus), 0.0, 1e-15);
  EXPECT_NEAR(max_abs_diff(bell_state(0, 1).amps, phi_minus), 0.0, 1e-15);
  EXPECT_NEAR(max_abs_diff(bell_state(1, 0).amps, psi_plus), 0.0, 1e-15);
  EXPECT_NEAR(max_abs_diff(bell_state(1, 1).amps, psi_minus), 0.0, 1e-15);
}

TEST(BellStates, Orthonormal) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const Complex ip =
          bell_state(a >> 1, a & 1).amps.dot(bell_state(b >> 1, b & 1).amps);
      EXPECT_NEAR(std::abs(ip - (a == b ? Complex{1, 0} : Complex{0, 0})), 0.0,
                  1e-15);
    }
  }
}

TEST(BellTransform, MatchesClosedForm) {
  Matrix t(4, 4);
  t << 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, -1, 1, -1, 0, 0;
  t /= std::sqrt(2.0);
  EXPECT_NEAR(max_abs_diff(bell_transform_matrix(), t), 0.0, 1e-15);
  EXPECT_NEAR(max_abs_diff(Matrix(t * dagger(t)), identity_matrix(4)), 0.0,
              1e-15);
}

TEST(BellTransform, TransportsRightFactorToTransposedLeft) {
  // (1 (x) U)|Psi> == (U^T (x) 1)|Psi>.
  const Matrix u = random_unitary(2, 31);
  const StateVector psi = maximally_entangled_state();
  StateVector lhs = apply(u, {2}, psi);
  StateVector rhs = apply(u.transpose(), {1}, psi);
  EXPECT_NEAR(max_abs_diff(lhs.amps, rhs.amps), 0.0, 1e-12);
}

TEST(BellTransform, DressedBraEqualsSignedBellBra) {
  // <Psi|(1 (x) W_ab) == (-1)^(ab) <psi(ab)|.
  const StateVector v = random_state(2, 33);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      StateVector moved = apply(to_matrix(make_w(a, b)), {2}, v);
      const Complex lhs = maximally_entangled_state().amps.dot(moved.amps);
      const Complex rhs = ((a & b) ? -1.0 : 1.0) *
                          bell_state(a, b).amps.dot(v.amps);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12) << a << b;
    }
  }
}

TEST(BellProjectors, ResolveIdentity) {
  Matrix sum = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix p = bell_projector(i, j);
      EXPECT_NEAR(max_abs_diff(Matrix(p * p), p), 0.0, 1e-15);
      sum += p;
    }
  }
  EXPECT_NEAR(max_abs_diff(sum, identity_matrix(4)), 0.0, 1e-15);
}

TEST(BellDecompose, ControlledZPattern) {
  // CZ = |psi(00)><psi(01)| + |psi(01)><psi(00)| + |psi(10)><psi(10)|
  //    + |psi(11)><psi(11)|.
  auto terms = bell_decompose(gate_cz());
  ASSERT_EQ(terms.size(), 4u);
  auto expect_term = [&](std::size_t idx, int ki, int kj, int bk, int bl) {
    EXPECT_EQ(terms[idx].ket_i, ki);
    EXPECT_EQ(terms[idx].ket_j, kj);
    EXPECT_EQ(terms[idx].bra_k, bk);
    EXPECT_EQ(terms[idx].bra_l, bl);
    EXPECT_NEAR(std::abs(terms[idx].coeff - Complex{1, 0}), 0.0, 1e-12);
  };
  expect_term(0, 0, 0, 0, 1);
  expect_term(1, 0, 1, 0, 0);
  expect_term(2, 1, 0, 1, 0);
  expect_term(3, 1, 1, 1, 1);
}

TEST(BellDecompose, IdentityPattern) {
  auto terms = bell_decompose(identity_matrix(4));
  ASSERT_EQ(terms.size(), 4u);
  for (const BellTerm& t : terms) {
    EXPECT_EQ(t.ket_i, t.bra_k);
    EXPECT_EQ(t.ket_j, t.bra_l);
    EXPECT_NEAR(std::abs(t.coeff - Complex{1, 0}), 0.0, 1e-12);
  }
}

TEST(BellDecompose, RoundTripsRandomMatrix) {
  const Matrix g = random_unitary(4, 37);
  EXPECT_NEAR(max_abs_diff(bell_recompose(bell_decompose(g)), g), 0.0, 1e-12);
}

TEST(BellMeasurement, ExtractsCorrectionOperand) {
  // For |alpha> (x) |Psi>, projecting qubits (1, 2) onto <psi(ij)| leaves
  // (1/2) W_ij |alpha> on qubit 3.
  const StateVector alpha = random_state(1, 41);
  const StateVector s = tensor(alpha, maximally_entangled_state());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      StateVector rest = partial_inner_pair(s, 1, 2, bell_state(i, j).amps);
      StateVector expect = apply(to_matrix(make_w(i, j)), {1}, alpha);
      EXPECT_NEAR(max_abs_diff(rest.amps, Vector(0.5 * expect.amps)), 0.0,
                  1e-12)
          << i << j;
    }
  }
}

}  // namespace
}  // namespace tlqc
