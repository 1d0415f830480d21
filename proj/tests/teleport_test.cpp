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

#include "tlqc/teleport.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "tlqc/gates.hpp"
#include "tlqc/pauli.hpp"
#include "tlqc/yangbaxter.hpp"

namespace tlqc {
namespace {

PhasedPauli x_pow(int b) { return make_w(b & 1, 0); }
PhasedPauli z_pow(int a) { return make_w(0, a & 1); }

PhasedPauli signed_word(int sign_exponent, std::initializer_list<PhasedPauli>
                                               factors) {
  PhasedPauli acc = pauli_identity(1);
  if (sign_exponent & 1) acc.phase_pow = 2;
  for (const PhasedPauli& f : factors) acc = multiply(acc, f);
  return acc;
}

TEST(PlainTeleport, ResidualIsPauliWord) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(
          max_abs_diff(teleport_residual(i, j), to_matrix(make_w(i, j))), 0.0,
          1e-12)
          << i << j;
      EXPECT_NEAR(max_abs_diff(teleport_residual_transpose(i, j),
                               Matrix(to_matrix(make_w(i, j)).transpose())),
                  0.0, 1e-12)
          << i << j;
    }
  }
}

TEST(PlainTeleport, TrivialBranchNeedsNoCorrection) {
  EXPECT_NEAR(max_abs_diff(teleport_residual(0, 0), identity_matrix(2)), 0.0,
              1e-12);
}

TEST(PlainTeleport, BranchProbabilitiesUniform) {
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    const StateVector alpha = random_state(1, seed);
    double total = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const double p = teleport_branch_probability(alpha, i, j);
        EXPECT_NEAR(p, 0.25, 1e-12);
        total += p;
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(SingleGateTeleport, IdentityGateReducesToPlain) {
  const CorrectionTable table = single_gate_teleport(identity_matrix(2));
  ASSERT_EQ(table.entries.size(), 4u);
  for (const CorrectionEntry& e : table.entries) {
    EXPECT_TRUE(e.is_pauli);
    EXPECT_NEAR(max_abs_diff(e.residual_op,
                             to_matrix(make_w(e.outcome[0], e.outcome[1]))),
                0.0, 1e-12);
  }
}

TEST(SingleGateTeleport, HadamardSwapsIndices) {
  // H W_ij H = W_ji^T: X and Z trade places and the transpose fixes the
  // sign convention.
  const CorrectionTable table = single_gate_teleport(gate_h());
  for (const CorrectionEntry& e : table.entries) {
    const int i = e.outcome[0], j = e.outcome[1];
    const Matrix expect = to_matrix(make_w(j, i)).transpose();
    EXPECT_TRUE(e.is_pauli);
    EXPECT_NEAR(max_abs_diff(e.residual_op, expect), 0.0, 1e-10) << i << j;
  }
}

TEST(SingleGateTeleport, TGateResidualLeavesCliffordCorrections) {
  // T W_ij T^dag = ((X - iY)/sqrt(2))^i Z^j: Pauli only when i = 0.
  const CorrectionTable table = single_gate_teleport(gate_t());
  for (const CorrectionEntry& e : table.entries) {
    const int i = e.outcome[0], j = e.outcome[1];
    Matrix expect = identity_matrix(2);
    if (i) expect = gate_x_minus_iy() * expect;
    if (j) expect = expect * gate_z();
    EXPECT_NEAR(max_abs_diff(e.residual_op, expect), 0.0, 1e-10) << i << j;
    EXPECT_EQ(e.is_pauli, i == 0);
    EXPECT_NEAR(max_abs_diff(Matrix(e.correction * e.residual_op),
                             identity_matrix(2)),
                0.0, 1e-10);
  }
}

TEST(SingleGateTeleport, ConjugationFormulaForRandomUnitary) {
  const Matrix u = random_unitary(2, 91);
  const CorrectionTable table = single_gate_teleport(u);
  for (const CorrectionEntry& e : table.entries) {
    const Matrix expect =
        u * to_matrix(make_w(e.outcome[0], e.outcome[1])) * dagger(u);
    EXPECT_NEAR(max_abs_diff(e.residual_op, expect), 0.0, 1e-10);
  }
}

TEST(SingleGateTeleport, RejectsNonUnitary) {
  Matrix bad = identity_matrix(2);
  bad(0, 0) = 2.0;
  EXPECT_THROW(single_gate_teleport(bad), std::invalid_argument);
}

TEST(FactorTwoQubit, SplitsTensorProducts) {
  const Matrix q = random_unitary(2, 11);
  const Matrix p = random_unitary(2, 12);
  const FactorPair f = factor_two_qubit(tensor(q, p));
  ASSERT_TRUE(f.factorizable);
  EXPECT_NEAR(max_abs_diff(tensor(f.q, f.p), tensor(q, p)), 0.0, 1e-10);
}

TEST(FactorTwoQubit, RejectsEntanglingGates) {
  EXPECT_FALSE(factor_two_qubit(gate_cnot()).factorizable);
  EXPECT_FALSE(factor_two_qubit(gate_cz()).factorizable);
}

TEST(TwoGateTeleport, ResidualMatchesConjugationFormula) {
  for (const Matrix& cu : {gate_cnot(), gate_cz(), gate_cnot_rev()}) {
    for (int o = 0; o < 16; ++o) {
      const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1;
      const int i2 = (o >> 1) & 1, j2 = o & 1;
      const Matrix w1 = to_matrix(make_w(i1, j1));
      const Matrix w2t = to_matrix(make_w(i2, j2)).transpose();
      const Matrix expect = cu * tensor(w1, w2t) * dagger(cu) * cu;
      EXPECT_NEAR(
          max_abs_diff(two_gate_residual(cu, i1, j1, i2, j2), expect), 0.0,
          1e-10)
          << o;
    }
  }
}

TEST(TwoGateTeleport, CnotCorrectionsMatchClosedForm) {
  // Q = Z^j2 X^i1 Z^j1, P = Z^j2 X^i2 X^i1.
  const CorrectionTable table = two_gate_teleport(gate_cnot());
  ASSERT_EQ(table.entries.size(), 16u);
  ASSERT_EQ(table.data_qubits, 2);
  for (const CorrectionEntry& e : table.entries) {
    const int i1 = e.outcome[0], j1 = e.outcome[1];
    const int i2 = e.outcome[2], j2 = e.outcome[3];
    const PhasedPauli q = signed_word(0, {z_pow(j2), x_pow(i1), z_pow(j1)});
    const PhasedPauli p = signed_word(0, {z_pow(j2), x_pow(i2), x_pow(i1)});
    EXPECT_TRUE(e.is_pauli);
    EXPECT_NEAR(max_abs_diff(e.residual_op, to_matrix(tensor(q, p))), 0.0,
                1e-10)
        << i1 << j1 << i2 << j2;
  }
}

TEST(TwoGateTeleport, CzCorrectionsMatchClosedForm) {
  // Q = Z^i2 X^i1 Z^j1, P = Z^j2 X^i2 Z^i1.
  const CorrectionTable table = two_gate_teleport(gate_cz());
  for (const CorrectionEntry& e : table.entries) {
    const int i1 = e.outcome[0], j1 = e.outcome[1];
    const int i2 = e.outcome[2], j2 = e.outcome[3];
    const PhasedPauli q = signed_word(0, {z_pow(i2), x_pow(i1), z_pow(j1)});
    const PhasedPauli p = signed_word(0, {z_pow(j2), x_pow(i2), z_pow(i1)});
    EXPECT_NEAR(max_abs_diff(e.residual_op, to_matrix(tensor(q, p))), 0.0,
                1e-10)
        << i1 << j1 << i2 << j2;
  }
}

TEST(TwoGateTeleport, IdentityGateGivesTransposedSecondFactor) {
  const CorrectionTable table = two_gate_teleport(identity_matrix(4));
  for (const CorrectionEntry& e : table.entries) {
    const Matrix w1 = to_matrix(make_w(e.outcome[0], e.outcome[1]));
    const Matrix w2t =
        to_matrix(make_w(e.outcome[2], e.outcome[3])).transpose();
    EXPECT_NEAR(max_abs_diff(e.residual_op, tensor(w1, w2t)), 0.0, 1e-10);
  }
}

TEST(TwoGateTeleport, ControlledPhaseGateIsNotFactorizable) {
  Matrix ct = identity_matrix(4);
  ct(3, 3) = std::exp(Complex{0.0, std::numbers::pi / 4.0});
  try {
    two_gate_teleport(ct);
    FAIL() << "expected NotFactorizableError";
  } catch (const NotFactorizableError& err) {
    ASSERT_EQ(err.raw().rows(), 4);
    ASSERT_EQ(err.raw().cols(), 4);
    EXPECT_NEAR(max_abs_diff(Matrix(err.raw() * dagger(err.raw())),
                             identity_matrix(4)),
                0.0, 1e-10);
    EXPECT_FALSE(factor_two_qubit(err.raw()).factorizable);
  }
}

TEST(WIndexTable, MatchesBruteForceResiduals) {
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      const std::vector<WIndexRow> rows = w_index_table(eps, eta);
      ASSERT_EQ(rows.size(), 16u);
      for (const WIndexRow& row : rows) {
        const Matrix fwd =
            ybg_residual(eps, eta, row.k, row.l, row.i, row.j);
        const Matrix rev =
            ybg_residual_reversed(eps, eta, row.k, row.l, row.i, row.j);
        const auto w = recognize_pauli(fwd);
        const auto wp = recognize_pauli(rev);
        ASSERT_TRUE(w.has_value());
        ASSERT_TRUE(wp.has_value());
        EXPECT_TRUE(equal(*w, w_from_indices(row, false)))
            << render(*w) << " vs " << render(w_from_indices(row, false));
        EXPECT_TRUE(equal(*wp, w_from_indices(row, true)))
            << render(*wp) << " vs " << render(w_from_indices(row, true));
      }
    }
  }
}

TEST(WIndexTable, ForwardAndReversedDifferOnlyInSign) {
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      for (const WIndexRow& row : w_index_table(eps, eta)) {
        const PhasedPauli w = w_from_indices(row, false);
        const PhasedPauli wp = w_from_indices(row, true);
        EXPECT_EQ(w.x, wp.x);
        EXPECT_EQ(w.z, wp.z);
        EXPECT_EQ((w.phase_pow + 2 * ((row.p ^ row.pp) & 1)) % 4,
                  wp.phase_pow);
      }
    }
  }
}

TEST(WIndexTable, RowOrderIsAscending) {
  const std::vector<WIndexRow> rows = w_index_table(-1, 1);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const int key = static_cast<int>(n);
    EXPECT_EQ(rows[n].i, (key >> 3) & 1);
    EXPECT_EQ(rows[n].j, (key >> 2) & 1);
    EXPECT_EQ(rows[n].k, (key >> 1) & 1);
    EXPECT_EQ(rows[n].l, key & 1);
  }
}

TEST(YbgTeleport, SpecialPreparationCorrections) {
  // eps = eta = 1 on |11>: W = (-1)^(ij) Z^i X^(i+j).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const PhasedPauli expect = make_zx_form(i & j, i, (i + j) & 1);
      const auto got = recognize_pauli(ybg_residual(1, 1, 1, 1, i, j));
      ASSERT_TRUE(got.has_value());
      EXPECT_TRUE(equal(*got, expect)) << render(*got);
      EXPECT_TRUE(equal(w11_formula(i, j, 1, 1), expect));
    }
  }
}

TEST(YbgTeleport, TableEntriesCarryAdjointCorrections) {
  const CorrectionTable table = ybg_teleport(-1, 1, 0, 1);
  ASSERT_EQ(table.entries.size(), 4u);
  for (const CorrectionEntry& e : table.entries) {
    EXPECT_TRUE(e.is_pauli);
    EXPECT_NEAR(max_abs_diff(Matrix(e.correction * e.residual_op),
                             identity_matrix(2)),
                0.0, 1e-10);
  }
}

TEST(YbgSingleGate, HadamardResidualExchangesAxes) {
  // R = H W H = (-1)^p X^a Z^b with the same table indices.
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      for (int prep = 0; prep < 4; ++prep) {
        const int k = prep >> 1, l = prep & 1;
        const CorrectionTable table =
            ybg_gate_teleport_single(eps, eta, gate_h(), k, l);
        for (const CorrectionEntry& e : table.entries) {
          const WIndexRow row =
              w_index_formula(eps, eta, e.outcome[0], e.outcome[1], k, l);
          const PhasedPauli expect =
              signed_word(row.p, {x_pow(row.a), z_pow(row.b)});
          EXPECT_NEAR(max_abs_diff(e.residual_op, to_matrix(expect)), 0.0,
                      1e-10)
              << eps << eta << prep;
        }
      }
    }
  }
}

TEST(YbgSingleGate, TGateResidualClosedForm) {
  // R = T W T^dag = (-1)^p Z^a ((X - iY)/sqrt(2))^b.
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      const CorrectionTable table =
          ybg_gate_teleport_single(eps, eta, gate_t(), 1, 1);
      for (const CorrectionEntry& e : table.entries) {
        const WIndexRow row =
            w_index_formula(eps, eta, e.outcome[0], e.outcome[1], 1, 1);
        Matrix expect = (row.p & 1) ? Matrix(-identity_matrix(2))
                                    : identity_matrix(2);
        if (row.a) expect = expect * gate_z();
        if (row.b) expect = expect * gate_x_minus_iy();
        EXPECT_NEAR(max_abs_diff(e.residual_op, expect), 0.0, 1e-10)
            << eps << eta;
        EXPECT_EQ(e.is_pauli, row.b == 0);
      }
    }
  }
}

TEST(YbgSingleGate, SpecialPreparationHadamardAndT) {
  // eps = eta = 1, |11>: R(H) = (-1)^(ij) X^i Z^(i+j) and
  // R(T) = (-1)^(ij) Z^i ((X - iY)/sqrt(2))^(i+j).
  const CorrectionTable h_table = ybg_gate_teleport_single(1, 1, gate_h(), 1, 1);
  const CorrectionTable t_table = ybg_gate_teleport_single(1, 1, gate_t(), 1, 1);
  for (int o = 0; o < 4; ++o) {
    const int i = o >> 1, j = o & 1;
    const PhasedPauli rh = signed_word(i & j, {x_pow(i), z_pow((i + j) & 1)});
    EXPECT_NEAR(max_abs_diff(h_table.entries[o].residual_op, to_matrix(rh)),
                0.0, 1e-10)
        << i << j;
    Matrix rt = (i & j) ? Matrix(-identity_matrix(2)) : identity_matrix(2);
    if (i) rt = rt * gate_z();
    if ((i + j) & 1) rt = rt * gate_x_minus_iy();
    EXPECT_NEAR(max_abs_diff(t_table.entries[o].residual_op, rt), 0.0, 1e-10)
        << i << j;
  }
}

TEST(YbgTwoGate, ResidualMatchesConjugationFormula) {
  // Q (x) P = cu (W (x) W') cu^dag for cu = B(eps, eta), sampled over
  // preparations and outcomes.
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      const Matrix b = make_b(eps, eta);
      for (int prep : {0b1111, 0b0110, 0b1001}) {
        const int k1 = (prep >> 3) & 1, l1 = (prep >> 2) & 1;
        const int k2 = (prep >> 1) & 1, l2 = prep & 1;
        for (int o : {0b0000, 0b0101, 0b1010, 0b1111, 0b0011, 0b1100}) {
          const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1;
          const int i2 = (o >> 1) & 1, j2 = o & 1;
          const WIndexRow r1 = w_index_formula(eps, eta, i1, j1, k1, l1);
          const WIndexRow r2 = w_index_formula(eps, eta, i2, j2, k2, l2);
          const Matrix w = to_matrix(w_from_indices(r1, false));
          const Matrix wp = to_matrix(w_from_indices(r2, true));
          const Matrix expect = b * tensor(w, wp) * dagger(b) * b;
          EXPECT_NEAR(max_abs_diff(ybg_two_gate_residual(eps, eta, b, k1, l1,
                                                         k2, l2, i1, j1, i2,
                                                         j2),
                                   expect),
                      0.0, 1e-10)
              << eps << eta << prep << " " << o;
        }
      }
    }
  }
}

TEST(YbgTwoGate, QpFormulaMatchesBruteForceSample) {
  // Full 4 x 256 coverage lives in the acceptance suite; spot check the
  // formula against the protocol on mixed preparations here.
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      const Matrix b = make_b(eps, eta);
      for (int o : {0b00000000, 0b01100101, 0b10011010, 0b11111111,
                    0b00101101, 0b11010010}) {
        const int i1 = (o >> 7) & 1, j1 = (o >> 6) & 1;
        const int i2 = (o >> 5) & 1, j2 = (o >> 4) & 1;
        const int k1 = (o >> 3) & 1, l1 = (o >> 2) & 1;
        const int k2 = (o >> 1) & 1, l2 = o & 1;
        const QpRow row =
            qp_formula(eps, eta, i1, j1, i2, j2, k1, l1, k2, l2);
        const Matrix expect = tensor(to_matrix(row.q), to_matrix(row.p)) * b;
        EXPECT_NEAR(max_abs_diff(ybg_two_gate_residual(eps, eta, b, k1, l1,
                                                       k2, l2, i1, j1, i2,
                                                       j2),
                                 expect),
                    0.0, 1e-10)
            << eps << eta << o;
      }
    }
  }
}

TEST(YbgTwoGate, SpecialPreparationQbPb) {
  // eps = eta = 1 on |1111>: Q = (-1)^(i1 (j1+1)) X^i1 Z^(i1+j1) Y^i2 and
  // P = X^j1 Y^i2 X^(i2+j2).
  const PhasedPauli y = make_zx_form(0, 1, 1);  // Y = ZX
  for (int o = 0; o < 16; ++o) {
    const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1;
    const int i2 = (o >> 1) & 1, j2 = o & 1;
    const QpRow row = qp_formula(1, 1, i1, j1, i2, j2, 1, 1, 1, 1);
    PhasedPauli qb = signed_word(i1 & (j1 ^ 1),
                                 {x_pow(i1), z_pow((i1 + j1) & 1)});
    if (i2) qb = multiply(qb, y);
    PhasedPauli pb = x_pow(j1);
    if (i2) pb = multiply(pb, y);
    pb = multiply(pb, x_pow((i2 + j2) & 1));
    EXPECT_TRUE(equal(row.q, qb)) << o << " " << render(row.q);
    EXPECT_TRUE(equal(row.p, pb)) << o << " " << render(row.p);
  }
}

TEST(YbgTwoGate, TableOrderAndSize) {
  const std::vector<QpRow> rows = qp_table(1, -1);
  ASSERT_EQ(rows.size(), 256u);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const int key = static_cast<int>(n);
    EXPECT_EQ(rows[n].i1, (key >> 7) & 1);
    EXPECT_EQ(rows[n].j1, (key >> 6) & 1);
    EXPECT_EQ(rows[n].i2, (key >> 5) & 1);
    EXPECT_EQ(rows[n].j2, (key >> 4) & 1);
    EXPECT_EQ(rows[n].k1, (key >> 3) & 1);
    EXPECT_EQ(rows[n].l1, (key >> 2) & 1);
    EXPECT_EQ(rows[n].k2, (key >> 1) & 1);
    EXPECT_EQ(rows[n].l2, key & 1);
  }
}

TEST(W11Table, MatchesPrintedWords) {
  struct Cell {
    int phase_pow, x, z;
  };
  // Rows (k, l), columns (i, j), both ascending.
  const Cell cells[4][4] = {
      {{0, 0, 1}, {2, 1, 1}, {0, 1, 0}, {2, 0, 0}},
      {{0, 1, 1}, {2, 0, 1}, {0, 0, 0}, {2, 1, 0}},
      {{0, 1, 0}, {0, 0, 0}, {2, 0, 1}, {2, 1, 1}},
      {{0, 0, 0}, {0, 1, 0}, {2, 1, 1}, {2, 0, 1}},
  };
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const Cell& c = cells[2 * k + l][2 * i + j];
          PhasedPauli expect = pauli_identity(1);
          expect.phase_pow = c.phase_pow;
          expect.x[0] = static_cast<std::uint8_t>(c.x);
          expect.z[0] = static_cast<std::uint8_t>(c.z);
          EXPECT_TRUE(equal(w11_formula(i, j, k, l), expect))
              << i << j << k << l << " got "
              << render(w11_formula(i, j, k, l));
        }
      }
    }
  }
  ASSERT_EQ(w11_table().size(), 16u);
}

TEST(W11Table, AgreesWithGeneralIndexFormula) {
  for (int o = 0; o < 16; ++o) {
    const int i = (o >> 3) & 1, j = (o >> 2) & 1;
    const int k = (o >> 1) & 1, l = o & 1;
    const WIndexRow row = w_index_formula(1, 1, i, j, k, l);
    EXPECT_TRUE(equal(w11_formula(i, j, k, l), w_from_indices(row, false)));
  }
}

TEST(ChainedTeleport, BothModesTransmitWithHalfPerStage) {
  for (int m = 1; m <= 3; ++m) {
    for (ChainMode mode : {ChainMode::kPlain, ChainMode::kYbg}) {
      const ChainReport report = chained_teleport(m, mode);
      EXPECT_TRUE(report.ok) << m;
      EXPECT_EQ(report.stages, m);
      EXPECT_LT(report.amplitude_error, 1e-12);
      EXPECT_LT(report.state_error, 1e-12);
    }
  }
}

TEST(ChainedTeleport, RejectsBadStageCount) {
  EXPECT_THROW(chained_teleport(0, ChainMode::kPlain), std::invalid_argument);
  EXPECT_THROW(chained_teleport(5, ChainMode::kYbg), std::invalid_argument);
}

}  // namespace
}  // namespace tlqc
