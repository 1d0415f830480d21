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

// End-to-end acceptance slate. Each criterion is one test that prints a
// single "ACCEPTANCE <n> PASS|FAIL <summary>" line, so the full slate can be
// read off any test log at a glance. Criteria re-derive results from scratch
// against the library rather than trusting intermediate caches.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tlqc/bell.hpp"
#include "tlqc/compiler.hpp"
#include "tlqc/diagram.hpp"
#include "tlqc/gates.hpp"
#include "tlqc/identities.hpp"
#include "tlqc/numerics.hpp"
#include "tlqc/pauli.hpp"
#include "tlqc/resource_states.hpp"
#include "tlqc/teleport.hpp"
#include "tlqc/yangbaxter.hpp"

namespace tlqc {
namespace {

class Criterion {
 public:
  Criterion(int number, std::string summary)
      : number_(number),
        summary_(std::move(summary)),
        start_(std::chrono::steady_clock::now()) {}

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  ~Criterion() {
    std::printf("ACCEPTANCE %d %s %s (%.2fs)\n", number_,
                ::testing::Test::HasFailure() ? "FAIL" : "PASS",
                summary_.c_str(), seconds());
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string summary_;
  std::chrono::steady_clock::time_point start_;
};

PhasedPauli x_pow(int b) { return make_w(b & 1, 0); }
PhasedPauli z_pow(int a) { return make_w(0, a & 1); }

PhasedPauli signed_word(int sign_exponent,
                        std::initializer_list<PhasedPauli> factors) {
  PhasedPauli acc = pauli_identity(1);
  if (sign_exponent & 1) acc.phase_pow = 2;
  for (const PhasedPauli& f : factors) acc = multiply(acc, f);
  return acc;
}

// Criterion 1: conjugation of the Pauli generators by every B(eps, eta) is
// Clifford and lands on the expected phased words, 16 rows in total.
TEST(Acceptance, Criterion1) {
  Criterion crit(1, "B(eps,eta) Clifford conjugation table, 16 rows");
  const struct {
    int eps, eta;
    const char* images[4];  // generator order X1, X2, Z1, Z2
  } blocks[] = {
      {-1, 1, {"X1", "X1Z2", "-X1Z1X2Z2", "-X1X2"}},
      {1, -1, {"X1", "-X1Z2", "X1Z1X2Z2", "X1X2"}},
      {1, 1, {"Z1X2", "X2", "-X1X2", "-X1Z1X2Z2"}},
      {-1, -1, {"-Z1X2", "X2", "X1X2", "X1Z1X2Z2"}},
  };
  const Matrix generators[4] = {embed_on_qubits(gate_x(), {1}, 2),
                                embed_on_qubits(gate_x(), {2}, 2),
                                embed_on_qubits(gate_z(), {1}, 2),
                                embed_on_qubits(gate_z(), {2}, 2)};
  const char* names[4] = {"X1", "X2", "Z1", "Z2"};
  for (const auto& blk : blocks) {
    const Matrix b = make_b(blk.eps, blk.eta);
    const CliffordTable table = clifford_table(b);
    ASSERT_TRUE(table.is_clifford) << blk.eps << "," << blk.eta;
    ASSERT_EQ(table.images.size(), 4u);
    for (int g = 0; g < 4; ++g) {
      EXPECT_EQ(table.images[g].generator, names[g]);
      EXPECT_EQ(render(table.images[g].image), blk.images[g])
          << "B(" << blk.eps << "," << blk.eta << ") " << names[g];
      EXPECT_NEAR(max_abs_diff(to_matrix(table.images[g].image),
                               Matrix(b * generators[g] * dagger(b))),
                  0.0, 1e-10);
    }
  }
  EXPECT_LT(crit.seconds(), 1.0);
}

// Criterion 2: the (p, p', a, b) index formulas reproduce the brute-force
// residual words for all 64 (eps, eta, i, j, k, l) combinations, bit-exactly
// in both operator orders.
TEST(Acceptance, Criterion2) {
  Criterion crit(2, "w-index formulas match brute force, 64 combos");
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      for (int o = 0; o < 16; ++o) {
        const int i = (o >> 3) & 1, j = (o >> 2) & 1;
        const int k = (o >> 1) & 1, l = o & 1;
        const WIndexRow row = w_index_formula(eps, eta, i, j, k, l);
        const auto fwd = recognize_pauli(ybg_residual(eps, eta, k, l, i, j));
        const auto rev =
            recognize_pauli(ybg_residual_reversed(eps, eta, k, l, i, j));
        ASSERT_TRUE(fwd.has_value());
        ASSERT_TRUE(rev.has_value());
        EXPECT_TRUE(equal(*fwd, w_from_indices(row, false)))
            << eps << eta << " " << o << ": " << render(*fwd) << " vs "
            << render(w_from_indices(row, false));
        EXPECT_TRUE(equal(*rev, w_from_indices(row, true)))
            << eps << eta << " " << o << ": " << render(*rev) << " vs "
            << render(w_from_indices(row, true));
      }
    }
  }
  EXPECT_LT(crit.seconds(), 1.0);
}

// Criterion 3: the symbolic (Q, P) corrections reproduce the brute-force
// two-gate residuals for all 4 x 256 index combinations, and specialize to
// the closed-form words on the all-ones preparation at eps = eta = 1.
TEST(Acceptance, Criterion3) {
  Criterion crit(3, "qp tables, 4 x 256 rows + all-ones specialization");
  double worst = 0.0;
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      const Matrix b = make_b(eps, eta);
      const std::vector<QpRow> rows = qp_table(eps, eta);
      ASSERT_EQ(rows.size(), 256u);
      for (const QpRow& row : rows) {
        const Matrix brute =
            ybg_two_gate_residual(eps, eta, b, row.k1, row.l1, row.k2, row.l2,
                                  row.i1, row.j1, row.i2, row.j2);
        const Matrix formula = to_matrix(tensor(row.q, row.p)) * b;
        worst = std::max(worst, max_abs_diff(brute, formula));
      }
    }
  }
  EXPECT_LE(worst, 1e-10) << "worst qp residual " << worst;

  const PhasedPauli y = make_zx_form(0, 1, 1);  // Y = ZX
  for (int o = 0; o < 16; ++o) {
    const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1;
    const int i2 = (o >> 1) & 1, j2 = o & 1;
    const QpRow row = qp_formula(1, 1, i1, j1, i2, j2, 1, 1, 1, 1);
    PhasedPauli qb =
        signed_word(i1 & (j1 ^ 1), {x_pow(i1), z_pow((i1 + j1) & 1)});
    if (i2) qb = multiply(qb, y);
    PhasedPauli pb = x_pow(j1);
    if (i2) pb = multiply(pb, y);
    pb = multiply(pb, x_pow((i2 + j2) & 1));
    EXPECT_TRUE(equal(row.q, qb)) << o << " " << render(row.q);
    EXPECT_TRUE(equal(row.p, pb)) << o << " " << render(row.p);
  }
  EXPECT_LT(crit.seconds(), 10.0);
}

// Criterion 4: the 16 W(1,1) correction words, sign-exact in table order
// and against both the closed formula and the brute-force residual.
TEST(Acceptance, Criterion4) {
  Criterion crit(4, "w11 table, 16 entries sign-exact");
  const char* expected[16] = {"Z",  "XZ", "X",  "1",  "-XZ", "-Z",
                              "1",  "X",  "X",  "1",  "-Z",  "-XZ",
                              "-1", "-X", "-XZ", "-Z"};
  const std::vector<W11Row> rows = w11_table();
  ASSERT_EQ(rows.size(), 16u);
  for (int n = 0; n < 16; ++n) {
    const W11Row& row = rows[n];
    ASSERT_EQ(row.i, (n >> 3) & 1);
    ASSERT_EQ(row.j, (n >> 2) & 1);
    ASSERT_EQ(row.k, (n >> 1) & 1);
    ASSERT_EQ(row.l, n & 1);
    EXPECT_EQ(render(row.w), expected[n]) << n;
    EXPECT_TRUE(equal(row.w, w11_formula(row.i, row.j, row.k, row.l)));
    const auto brute =
        recognize_pauli(ybg_residual(1, 1, row.k, row.l, row.i, row.j));
    ASSERT_TRUE(brute.has_value());
    EXPECT_TRUE(equal(*brute, row.w)) << n << ": " << render(*brute);
  }
  EXPECT_LT(crit.seconds(), 1.0);
}

// Criterion 5: every gate in the Yang-Baxter catalogue satisfies the braided
// relation and unitarity below 1e-10 on the dense 3-strand evaluation, and
// CNOT fails it decisively.
TEST(Acceptance, Criterion5) {
  Criterion crit(5, "Yang-Baxter catalogue + CNOT negative control");
  std::vector<Matrix> catalogue;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) catalogue.push_back(make_r_bell(i, j));
  }
  for (int s : {1, -1}) {
    for (Complex tau : {Complex(1, 0), Complex(-1, 0), Complex(0, 1)}) {
      catalogue.push_back(make_r_type1(s, tau));
    }
  }
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) catalogue.push_back(make_b(eps, eta));
  }
  for (int eps : {1, -1}) {
    for (double phi : {0.0, std::numbers::pi / 3.0, std::numbers::pi}) {
      catalogue.push_back(make_r_type2(eps, phi));
    }
  }
  ASSERT_EQ(catalogue.size(), 20u);
  for (std::size_t n = 0; n < catalogue.size(); ++n) {
    const YbeReport rep = verify_yang_baxter(catalogue[n], 1e-10);
    EXPECT_TRUE(rep.ok) << "catalogue entry " << n << " residual "
                        << rep.residual;
    EXPECT_TRUE(rep.unitary) << "catalogue entry " << n;
  }
  const YbeReport cnot = verify_yang_baxter(gate_cnot(), 1e-10);
  EXPECT_FALSE(cnot.ok);
  EXPECT_GT(cnot.residual, 0.1);
  EXPECT_LT(crit.seconds(), 1.0);
}

// Criterion 6: Bell projectors generate the loop-weight-2 relations and the
// weight-sqrt(2) seeds generate theirs, on 3 and 4 strands below 1e-12. The
// coefficient solver rejects weight 2.5 and solves the braid and unitarity
// constraints below 1e-12 for weights {1, sqrt2, sqrt3, 2}.
TEST(Acceptance, Criterion6) {
  Criterion crit(6, "TL relations on 3,4 sites + solver domain");
  for (int sites : {3, 4}) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const TlReport rep =
            verify_tl_relations(bell_projector(i, j), 2.0, sites, 1e-12);
        EXPECT_TRUE(rep.ok) << "bell(" << i << j << ") sites " << sites
                            << " residual " << rep.max_residual;
      }
    }
    for (int eps : {1, -1}) {
      for (double phi : {0.0, std::numbers::pi / 3.0}) {
        const TlReport rep = verify_tl_relations(make_type2(eps, phi),
                                                 std::sqrt(2.0), sites, 1e-12);
        EXPECT_TRUE(rep.ok) << "type2(" << eps << "," << phi << ") sites "
                            << sites << " residual " << rep.max_residual;
      }
    }
  }

  EXPECT_THROW(solve_ybg_coefficients(2.5), std::invalid_argument);
  for (double lw : {1.0, std::sqrt(2.0), std::sqrt(3.0), 2.0}) {
    for (int branch : {1, -1}) {
      const YbgCoefficients c = solve_ybg_coefficients(lw, branch);
      const Complex braid = c.a * c.a + c.a * c.b + c.b * c.b / (lw * lw);
      const double unitarity =
          2.0 * std::real(c.a * std::conj(c.b)) + std::norm(c.b);
      EXPECT_LT(std::abs(braid), 1e-12) << "weight " << lw;
      EXPECT_LT(std::abs(unitarity), 1e-12) << "weight " << lw;
    }
  }
  const YbeReport r1 = verify_yang_baxter(
      make_r(make_type1(1, Complex(1, 0)), solve_ybg_coefficients(2.0)),
      1e-12);
  EXPECT_TRUE(r1.ok && r1.unitary);
  const YbeReport r2 = verify_yang_baxter(
      make_r(make_type2(1, 0.0), solve_ybg_coefficients(std::sqrt(2.0))),
      1e-12);
  EXPECT_TRUE(r2.ok && r2.unitary);
  EXPECT_LT(crit.seconds(), 5.0);
}

// Criterion 7: for 100 random inputs, every branch of every protocol
// reconstructs its target after correction, with uniform branch
// probabilities.
TEST(Acceptance, Criterion7) {
  Criterion crit(7, "teleportation branches over 100 random states");
  const StateVector psi = maximally_entangled_state();
  const Matrix named_singles[3] = {gate_h(), gate_t(), gate_s()};
  CorrectionTable named_tables[3] = {single_gate_teleport(gate_h()),
                                     single_gate_teleport(gate_t()),
                                     single_gate_teleport(gate_s())};
  const Matrix twos[3] = {gate_cnot(), gate_cz(), make_b(1, 1)};
  CorrectionTable two_tables[3] = {two_gate_teleport(gate_cnot()),
                                   two_gate_teleport(gate_cz()),
                                   two_gate_teleport(make_b(1, 1))};
  double worst_state = 0.0;
  double worst_prob = 0.0;

  for (int trial = 0; trial < 100; ++trial) {
    const StateVector alpha = random_state(1, 1000 + trial);

    // Plain: input on qubit 1, resource on (2, 3), measure (1, 2).
    const StateVector plain = tensor(alpha, psi);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const StateVector branch =
            partial_inner_pair(plain, 1, 2, bell_state(i, j).amps);
        worst_prob =
            std::max(worst_prob, std::abs(branch.amps.squaredNorm() - 0.25));
        const Vector corrected =
            to_matrix(adjoint(make_w(i, j))) * (2.0 * branch.amps);
        const PhaseMatch pm =
            equal_up_to_global_phase(alpha.amps, corrected, 1e-10);
        EXPECT_TRUE(pm.match) << "plain " << i << j;
        worst_state = std::max(worst_state, pm.residual);
      }
    }

    // Transpose: resource on (1, 2), input on 3, measure (2, 3).
    const StateVector transposed = tensor(psi, alpha);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const StateVector branch =
            partial_inner_pair(transposed, 2, 3, bell_state(i, j).amps);
        worst_prob =
            std::max(worst_prob, std::abs(branch.amps.squaredNorm() - 0.25));
        const Vector corrected =
            to_matrix(adjoint(transpose(make_w(i, j)))) * (2.0 * branch.amps);
        const PhaseMatch pm =
            equal_up_to_global_phase(alpha.amps, corrected, 1e-10);
        EXPECT_TRUE(pm.match) << "transpose " << i << j;
        worst_state = std::max(worst_state, pm.residual);
      }
    }

    // Single-gate: H, T, S, and a fresh random unitary per trial.
    const Matrix random_u = random_unitary(2, 5000 + trial);
    const CorrectionTable random_table = single_gate_teleport(random_u);
    for (int g = 0; g < 4; ++g) {
      const Matrix& u = g < 3 ? named_singles[g] : random_u;
      const CorrectionTable& table = g < 3 ? named_tables[g] : random_table;
      const StateVector prepared = tensor(alpha, psi_u(u));
      const Vector target = u * alpha.amps;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const StateVector branch =
              partial_inner_pair(prepared, 1, 2, bell_state(i, j).amps);
          worst_prob =
              std::max(worst_prob, std::abs(branch.amps.squaredNorm() - 0.25));
          const CorrectionEntry& entry = table.entries[2 * i + j];
          const Vector corrected = entry.correction * (2.0 * branch.amps);
          const PhaseMatch pm =
              equal_up_to_global_phase(target, corrected, 1e-10);
          EXPECT_TRUE(pm.match) << "single gate " << g << " branch " << i << j;
          worst_state = std::max(worst_state, pm.residual);
        }
      }
    }

    // Two-gate: input pair on (1, 2), resource on (3..6), measure (1, 3)
    // then the pair that starts as (6, 2).
    const StateVector beta = random_state(2, 3000 + trial);
    for (int g = 0; g < 3; ++g) {
      const StateVector prepared = tensor(beta, psi_cu(twos[g]));
      const Vector target = twos[g] * beta.amps;
      for (int o = 0; o < 16; ++o) {
        const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1;
        const int i2 = (o >> 1) & 1, j2 = o & 1;
        const StateVector first =
            partial_inner_pair(prepared, 1, 3, bell_state(i1, j1).amps);
        // Qubits (2,4,5,6) renumber to (1,2,3,4); original (6,2) is (4,1).
        const StateVector second =
            partial_inner_pair(first, 4, 1, bell_state(i2, j2).amps);
        worst_prob = std::max(
            worst_prob, std::abs(second.amps.squaredNorm() - 1.0 / 16.0));
        const CorrectionEntry& entry = two_tables[g].entries[o];
        const Vector corrected = entry.correction * (4.0 * second.amps);
        const PhaseMatch pm =
            equal_up_to_global_phase(target, corrected, 1e-10);
        EXPECT_TRUE(pm.match) << "two gate " << g << " outcome " << o;
        worst_state = std::max(worst_state, pm.residual);
      }
    }
  }
  EXPECT_LE(worst_state, 1e-10);
  EXPECT_LE(worst_prob, 1e-12);
  EXPECT_LT(crit.seconds(), 30.0);
}

// Criterion 8: all three four-qubit resource constructions, both correction
// placements, all four outcomes, with branch probability 1/4 and agreement
// between variants up to the recorded phases.
TEST(Acceptance, Criterion8) {
  Criterion crit(8, "resource constructions, 3 kinds x 2 variants x 4 outcomes");
  for (ResourceKind kind :
       {ResourceKind::kCnot, ResourceKind::kCnotUp, ResourceKind::kCz}) {
    const StateVector target = direct_state(kind);
    for (int variant : {1, 2}) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const ResourceBranch branch =
              construct_via_teleportation(kind, variant, i, j);
          EXPECT_NEAR(branch.probability, 0.25, 1e-12);
          const Vector corrected =
              to_matrix(branch.correction) * branch.state.amps;
          EXPECT_NEAR((corrected - target.amps).cwiseAbs().maxCoeff(), 0.0,
                      1e-10)
              << "kind " << static_cast<int>(kind) << " variant " << variant
              << " outcome " << i << j;
        }
      }
    }
    const VariantReport rep = verify_variant_equivalence(kind, 1e-10);
    EXPECT_TRUE(rep.ok);
    for (const Complex& phase : rep.phases) {
      EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
    }
  }
  EXPECT_LT(crit.seconds(), 5.0);
}

// Criterion 9: diagram functoriality on 500 random composition pairs up to
// six strands, plus the full verified identity catalogue.
TEST(Acceptance, Criterion9) {
  Criterion crit(9, "diagram functoriality x500 + identity catalogue");
  const int arities[][3] = {{2, 2, 2}, {1, 1, 1}, {1, 3, 1}, {2, 4, 2},
                            {3, 1, 3}, {4, 2, 4}, {5, 3, 5}, {6, 2, 6},
                            {3, 5, 3}, {2, 6, 2}, {0, 2, 2}, {2, 2, 0},
                            {4, 4, 4}, {6, 6, 6}, {1, 5, 1}, {6, 4, 6}};
  const int kPairs = 500;
  double worst = 0.0;
  int seed = 40000;
  for (int rep = 0; rep < kPairs; ++rep) {
    const auto& [nb, mid, nt] = arities[rep % (sizeof(arities) /
                                               sizeof(arities[0]))];
    const DiagramExpr lower = random_planar_expr(nb, mid, 3, seed++);
    const DiagramExpr upper = random_planar_expr(mid, nt, 3, seed++);
    worst = std::max(
        worst, max_abs_diff(compile_diagram(compose(lower, upper)),
                            compile_diagram(upper) * compile_diagram(lower)));
  }
  EXPECT_LE(worst, 1e-10) << "worst functoriality residual " << worst;

  const std::vector<std::string> catalogue = identity_catalogue();
  EXPECT_GE(catalogue.size(), 18u);
  for (const std::string& key : catalogue) {
    const IdentityReport rep = verify_identity(key);
    EXPECT_TRUE(rep.ok) << key << " residual " << rep.residual;
  }
  EXPECT_LT(crit.seconds(), 30.0);
}

// Criterion 10: compiled schedules reproduce their circuits on every
// measurement branch, for all short single-qubit circuits and the two-qubit
// set, under both lowering strategies.
TEST(Acceptance, Criterion10) {
  Criterion crit(10, "compiler all-branch verification, both strategies");
  const std::vector<std::string> pool = {"H", "S", "T", "X", "Z"};
  const StateVector one_qubit_input = basis_state(1, 0);
  for (Strategy strategy : {Strategy::kBell, Strategy::kYbg}) {
    for (int len = 0; len <= 3; ++len) {
      int combos = 1;
      for (int p = 0; p < len; ++p) combos *= static_cast<int>(pool.size());
      for (int code = 0; code < combos; ++code) {
        CircuitIR c;
        c.num_qubits = 1;
        int rest = code;
        for (int p = 0; p < len; ++p) {
          c.ops.push_back({pool[rest % pool.size()], {1}});
          rest /= static_cast<int>(pool.size());
        }
        const BranchReport rep =
            verify_all_branches(c, strategy, one_qubit_input, 1e-10);
        EXPECT_TRUE(rep.ok)
            << "len " << len << " code " << code << " strategy "
            << (strategy == Strategy::kBell ? "bell" : "ybg") << " state "
            << rep.max_state_error << " prob " << rep.max_probability_error;
      }
    }

    const std::vector<CircuitIR> two_qubit = {
        {2, {{"CNOT", {1, 2}}}},
        {2, {{"CZ", {1, 2}}}},
        {2, {{"B", {1, 2}, 1, 1}}},
        {2, {{"H", {1}}, {"CNOT", {1, 2}}, {"T", {2}}}},
    };
    const StateVector two_qubit_input = basis_state(2, 0);
    for (const CircuitIR& c : two_qubit) {
      const BranchReport rep =
          verify_all_branches(c, strategy, two_qubit_input, 1e-10);
      EXPECT_TRUE(rep.ok);
    }
  }
  EXPECT_LT(crit.seconds(), 120.0);
}

// Criterion 11: two-stage chains in both modes transmit the input with
// branch amplitude exactly 1/4.
TEST(Acceptance, Criterion11) {
  Criterion crit(11, "two-stage chains carry amplitude 1/4");
  for (ChainMode mode : {ChainMode::kPlain, ChainMode::kYbg}) {
    const ChainReport rep = chained_teleport(2, mode);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.stages, 2);
    EXPECT_LE(rep.amplitude_error, 1e-12);
    EXPECT_LE(rep.state_error, 1e-12);
  }
  EXPECT_LT(crit.seconds(), 5.0);
}

// Criterion 12: the table and diagram commands of the installed binary are
// byte-identical across repeated runs with fixed flags.
TEST(Acceptance, Criterion12) {
  Criterion crit(12, "CLI byte-stability across repeated runs");
  const std::string binary = TLQC_CLI_PATH;
  const std::string samples = TLQC_SAMPLES_DIR;
  const std::vector<std::string> commands = {
      " tables w-indices --format json",
      " tables qp",
      " tables clifford --format json",
      " tables w11",
      " diagram render --in " + samples + "/diagrams/tl_mix.json",
      " diagram normalize --in " + samples + "/diagrams/decorated_cup.json",
      " diagram compile --in " + samples + "/diagrams/tl_mix.json",
  };
  const std::string dir = ::testing::TempDir();
  int index = 0;
  for (const std::string& command : commands) {
    const std::string out1 = dir + "acc12_" + std::to_string(index) + "_a";
    const std::string out2 = dir + "acc12_" + std::to_string(index) + "_b";
    ++index;
    ASSERT_EQ(
        std::system((binary + command + " --out " + out1).c_str()), 0)
        << command;
    ASSERT_EQ(
        std::system((binary + command + " --out " + out2).c_str()), 0)
        << command;
    std::ifstream f1(out1, std::ios::binary);
    std::ifstream f2(out2, std::ios::binary);
    ASSERT_TRUE(f1.is_open() && f2.is_open()) << command;
    std::ostringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    EXPECT_FALSE(b1.str().empty()) << command;
    EXPECT_EQ(b1.str(), b2.str()) << command;
  }
  EXPECT_LT(crit.seconds(), 30.0);
}

}  // namespace
}  // namespace tlqc
