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

#include "tlqc/identities.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "tlqc/bell.hpp"
#include "tlqc/diagram.hpp"
#include "tlqc/gates.hpp"
#include "tlqc/pauli.hpp"
#include "tlqc/resource_states.hpp"
#include "tlqc/teleport.hpp"
#include "tlqc/yangbaxter.hpp"

namespace tlqc {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// ket * row^T; `row` holds the entries of the bra so no conjugation happens.
Matrix dyad(const Vector& ket, const Vector& row) {
  return ket * row.transpose();
}

// Entries of the row <Psi|(1 (x) u), which is ((1 (x) u^T)|Psi>)^T.
Vector row_psi_u(const Matrix& u) {
  return apply(Matrix(u.transpose()), {2}, maximally_entangled_state()).amps;
}

Vector ket_psi_u(const Matrix& u) {
  return apply(u, {2}, maximally_entangled_state()).amps;
}

// (U1, M, U4) = (|Psi_U1><Psi| (x) M)(1 (x) |Psi><Psi_U4|) on three qubits.
Matrix dyad_term(const Matrix& u1, const Matrix& m, const Matrix& u4) {
  const Vector psi = maximally_entangled_state().amps;
  const Matrix left = tensor(dyad(ket_psi_u(u1), psi), m);
  const Matrix right = tensor(identity_matrix(2), dyad(psi, row_psi_u(u4)));
  return left * right;
}

// (|ij>, W, <kl|) = (|ij><Psi| (x) W)(1 (x) |Psi><kl|) on three qubits.
Matrix product_dyad_term(int i, int j, const Matrix& w, int k, int l) {
  const Vector psi = maximally_entangled_state().amps;
  const Matrix left = tensor(dyad(basis_state(2, 2 * i + j).amps, psi), w);
  const Matrix right =
      tensor(identity_matrix(2), dyad(psi, basis_state(2, 2 * k + l).amps));
  return left * right;
}

Matrix teleportation_operator() {
  const Matrix b = make_b(1, 1);
  return embed_on_qubits(b, {1, 2}, 3) * embed_on_qubits(b, {2, 3}, 3);
}

IdentityReport check_tl_identity(double tol) {
  IdentityReport report;
  DiagramExpr expr;
  expr.n_bottom = 2;
  expr.n_top = 2;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix w = to_matrix(make_w(i, j));
      DiagramTerm term;
      term.arcs.push_back(make_cap(1, 2, {make_dot(0.75, Matrix(dagger(w)))}));
      term.arcs.push_back(make_cup(1, 2, {make_dot(0.75, w)}));
      expr.terms.push_back(term);
    }
  }
  report.residual = max_abs_diff(compile_diagram(expr), identity_matrix(4));
  report.ok = report.residual <= tol;
  report.detail = "four projector terms with cup words 1, Z, X, XZ";
  return report;
}

IdentityReport check_cz_bell(double tol) {
  IdentityReport report;
  const DiagramExpr expr = decompose_two_qubit(gate_cz());
  report.residual = max_abs_diff(compile_diagram(expr), gate_cz());
  bool pattern = expr.terms.size() == 4;
  const auto terms = bell_decompose(gate_cz());
  const int expected[4][4] = {{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 0},
                              {1, 1, 1, 1}};
  pattern = pattern && terms.size() == 4;
  for (std::size_t t = 0; pattern && t < terms.size(); ++t) {
    pattern = terms[t].ket_i == expected[t][0] &&
              terms[t].ket_j == expected[t][1] &&
              terms[t].bra_k == expected[t][2] &&
              terms[t].bra_l == expected[t][3] &&
              std::abs(terms[t].coeff - 1.0) <= tol;
  }
  report.ok = report.residual <= tol && pattern;
  report.detail = pattern ? "dyads (00|01), (01|00), (10|10), (11|11)"
                          : "unexpected Bell dyad pattern";
  return report;
}

IdentityReport check_b_expansion(double tol) {
  IdentityReport report;
  const Matrix x = gate_x(), z = gate_z();
  const Matrix xz = Matrix(x * z), zx = Matrix(z * x);
  for (int eps : {1, -1}) {
    for (int eta : {1, -1}) {
      DiagramExpr expr;
      expr.n_bottom = 2;
      expr.n_top = 2;
      DiagramTerm lines;
      lines.coeff = kInvSqrt2;
      lines.arcs = {make_line(1, 1), make_line(2, 2)};
      expr.terms.push_back(lines);
      auto dyad = [&](Complex c, const Matrix* cup_dot, const Matrix* cap_dot) {
        DiagramTerm term;
        term.coeff = c * kInvSqrt2;
        std::vector<Dot> cap_dots, cup_dots;
        if (cap_dot != nullptr) cap_dots.push_back(make_dot(0.75, *cap_dot));
        if (cup_dot != nullptr) cup_dots.push_back(make_dot(0.75, *cup_dot));
        term.arcs.push_back(make_cap(1, 2, cap_dots));
        term.arcs.push_back(make_cup(1, 2, cup_dots));
        expr.terms.push_back(term);
      };
      dyad(eta, &z, nullptr);
      dyad(-eta, nullptr, &z);
      dyad(-eps, &x, &zx);
      dyad(eps, &xz, &x);
      report.residual = std::max(
          report.residual, max_abs_diff(compile_diagram(expr), make_b(eps, eta)));
    }
  }
  report.ok = report.residual <= tol;
  report.detail = "line term plus four decorated dyads, all four sign pairs";
  return report;
}

IdentityReport check_b_cup_form(double tol) {
  IdentityReport report;
  Matrix sum = Matrix::Zero(4, 4);
  std::ostringstream words;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const PhasedPauli v = make_w((k + l) & 1, (k + 1) & 1);
      sum += dyad(ket_psi_u(to_matrix(v)), basis_state(2, 2 * k + l).amps);
      words << (words.tellp() > 0 ? ", " : "") << render(v);
    }
  }
  report.residual = max_abs_diff(sum, make_b(1, 1));
  report.ok = report.residual <= tol;
  report.detail = "cup words " + words.str();
  return report;
}

IdentityReport check_b_cap_form(double tol) {
  IdentityReport report;
  Matrix sum = Matrix::Zero(4, 4);
  std::ostringstream words;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const PhasedPauli u = make_zx_form(i, i, (i + j) & 1);
      sum += dyad(basis_state(2, 2 * i + j).amps, row_psi_u(to_matrix(u)));
      words << (words.tellp() > 0 ? ", " : "") << render(u);
    }
  }
  report.residual = max_abs_diff(sum, make_b(1, 1));
  report.ok = report.residual <= tol;
  report.detail = "cap words " + words.str();
  return report;
}

IdentityReport check_product_basis_dictionary(double tol) {
  IdentityReport report;
  const Matrix x = gate_x(), z = gate_z();
  const Matrix xz = Matrix(x * z), zx = Matrix(z * x);
  struct Entry {
    int index;
    const Matrix* first;
    const Matrix* second;
    double sign;
  };
  // |index> = (first_word cup + sign * second_word cup)/sqrt(2); nullptr is
  // the undecorated arc.
  const Entry kets[4] = {{0, nullptr, &z, 1.0},
                         {1, &x, &xz, 1.0},
                         {2, &x, &xz, -1.0},
                         {3, nullptr, &z, -1.0}};
  const Entry bras[4] = {{0, nullptr, &z, 1.0},
                         {1, &x, &zx, 1.0},
                         {2, &x, &zx, -1.0},
                         {3, nullptr, &z, -1.0}};
  for (const auto& e : kets) {
    DiagramExpr expr;
    expr.n_bottom = 0;
    expr.n_top = 2;
    for (int half = 0; half < 2; ++half) {
      DiagramTerm term;
      term.coeff = (half == 0 ? 1.0 : e.sign) * kInvSqrt2;
      const Matrix* dot = (half == 0) ? e.first : e.second;
      term.arcs.push_back(
          dot ? make_cup(1, 2, {make_dot(0.75, *dot)}) : make_cup(1, 2));
      expr.terms.push_back(term);
    }
    report.residual =
        std::max(report.residual,
                 max_abs_diff(Vector(compile_diagram(expr).col(0)),
                              basis_state(2, e.index).amps));
  }
  for (const auto& e : bras) {
    DiagramExpr expr;
    expr.n_bottom = 2;
    expr.n_top = 0;
    for (int half = 0; half < 2; ++half) {
      DiagramTerm term;
      term.coeff = (half == 0 ? 1.0 : e.sign) * kInvSqrt2;
      const Matrix* dot = (half == 0) ? e.first : e.second;
      term.arcs.push_back(
          dot ? make_cap(1, 2, {make_dot(0.75, *dot)}) : make_cap(1, 2));
      expr.terms.push_back(term);
    }
    report.residual = std::max(
        report.residual,
        max_abs_diff(Vector(compile_diagram(expr).row(0).transpose()),
                     Vector(basis_state(2, e.index).amps)));
  }
  report.ok = report.residual <= tol;
  report.detail = "eight product states in decorated cup/cap form";
  return report;
}

IdentityReport check_teleop_16(double tol) {
  IdentityReport report;
  Matrix sum = Matrix::Zero(8, 8);
  bool table_match = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const PhasedPauli w = w11_formula(i, j, k, l);
          sum += product_dyad_term(i, j, to_matrix(w), k, l);
          const auto seen = recognize_pauli(ybg_residual(1, 1, k, l, i, j));
          table_match = table_match && seen.has_value() && equal(*seen, w);
        }
      }
    }
  }
  report.residual = max_abs_diff(sum, teleportation_operator());
  report.ok = report.residual <= tol && table_match;
  report.detail = table_match
                      ? "16 terms; every label matches the brute-force word"
                      : "label mismatch against brute-force extraction";
  return report;
}

IdentityReport check_teleop_bellmeas_16(double tol) {
  IdentityReport report;
  const Matrix id2 = identity_matrix(2);
  const Matrix x = gate_x(), z = gate_z();
  const Matrix xz = Matrix(x * z), zx = Matrix(z * x);
  struct Term {
    double sign;
    const Matrix* u1;
    const Matrix* m;
    const Matrix* u4;
  };
  const Term terms[16] = {
      {1, &z, &id2, &id2}, {1, &z, &z, &id2},  {1, &x, &x, &id2},
      {-1, &x, &xz, &id2}, {-1, &id2, &id2, &z}, {1, &id2, &z, &z},
      {-1, &xz, &x, &z},   {-1, &xz, &xz, &z},  {1, &z, &x, &x},
      {1, &z, &xz, &x},    {1, &x, &id2, &x},   {-1, &x, &z, &x},
      {-1, &id2, &x, &zx}, {1, &id2, &xz, &zx}, {-1, &xz, &id2, &zx},
      {-1, &xz, &z, &zx}};
  Matrix sum = Matrix::Zero(8, 8);
  for (const auto& t : terms) {
    sum += t.sign * dyad_term(*t.u1, *t.m, *t.u4);
  }
  report.residual = max_abs_diff(sum, teleportation_operator());
  report.ok = report.residual <= tol;
  report.detail = "16 signed Bell-pair dyad terms";
  return report;
}

IdentityReport check_mult_rule(double tol, std::uint64_t seed) {
  IdentityReport report;
  const Matrix id2 = identity_matrix(2);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix u[4];
    for (int g = 0; g < 4; ++g) {
      u[g] = random_unitary(2, seed + 4 * trial + g);
    }
    const Matrix lhs =
        tensor(dyad(ket_psi_u(u[0]), row_psi_u(u[1])), id2) *
        tensor(id2, dyad(ket_psi_u(u[2]), row_psi_u(u[3])));
    const Matrix rhs = dyad_term(u[0], Matrix(u[2] * u[1].transpose()), u[3]);
    report.residual = std::max(report.residual, max_abs_diff(lhs, rhs));
  }
  report.ok = report.residual <= tol;
  report.detail = "20 random unitary quadruples";
  return report;
}

IdentityReport check_product_config_example(double tol) {
  IdentityReport report;
  const Matrix id2 = identity_matrix(2);
  const Matrix lhs = dyad_term(gate_z(), id2, id2) - dyad_term(id2, id2, gate_z());
  const Matrix rhs = product_dyad_term(0, 0, id2, 1, 1) -
                     product_dyad_term(1, 1, id2, 0, 0);
  report.residual = max_abs_diff(lhs, rhs);
  report.ok = report.residual <= tol;
  report.detail = "two-term dyad translation";
  return report;
}

IdentityReport check_chain(double tol) {
  IdentityReport report;
  std::ostringstream detail;
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    for (ChainMode mode : {ChainMode::kPlain, ChainMode::kYbg}) {
      const ChainReport r = chained_teleport(m, mode);
      ok = ok && r.ok;
      report.residual = std::max(
          {report.residual, r.amplitude_error, r.state_error});
      detail << (mode == ChainMode::kPlain ? "plain" : "ybg") << m
             << (r.ok ? " ok" : " FAIL") << (m == 3 && mode == ChainMode::kYbg
                                                 ? ""
                                                 : ", ");
    }
  }
  report.ok = ok && report.residual <= tol;
  report.detail = detail.str();
  return report;
}

IdentityReport check_ghz_variants(double tol) {
  IdentityReport report;
  StateVector reference = basis_state(3, 0);
  reference.amps(0) = kInvSqrt2;
  reference.amps(7) = kInvSqrt2;
  StateVector dressed = reference;
  for (int q = 1; q <= 3; ++q) dressed = apply(gate_h(), {q}, dressed);
  report.residual = std::max(
      {max_abs_diff(ghz(GhzVariant::kCircuit1).amps, reference.amps),
       max_abs_diff(ghz(GhzVariant::kCircuit2).amps, reference.amps),
       max_abs_diff(ghz(GhzVariant::kDressed1).amps, dressed.amps),
       max_abs_diff(ghz(GhzVariant::kDressed2).amps, dressed.amps)});
  report.ok = report.residual <= tol;
  report.detail = "two circuit forms and two dressed forms";
  return report;
}

IdentityReport check_resource(ResourceKind kind, int variant, double tol) {
  IdentityReport report;
  const StateVector target = direct_state(kind);
  bool ok = true;
  std::ostringstream detail;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ResourceBranch branch =
          construct_via_teleportation(kind, variant, i, j);
      const Vector corrected = to_matrix(branch.correction) * branch.state.amps;
      report.residual = std::max(
          {report.residual, max_abs_diff(corrected, target.amps),
           std::abs(branch.probability - 0.25)});
      ok = ok && max_abs_diff(corrected, target.amps) <= tol;
    }
  }
  detail << "printed corrections, e.g. "
         << render(construct_via_teleportation(kind, variant, 1, 1).residual_word);
  report.ok = ok && report.residual <= tol;
  report.detail = detail.str();
  return report;
}

}  // namespace

std::vector<std::string> identity_catalogue() {
  return {"tl-identity",
          "cz-bell",
          "b-expansion",
          "b-cup-form",
          "b-cap-form",
          "product-basis-dictionary",
          "teleop-16",
          "teleop-bellmeas-16",
          "mult-rule",
          "product-config-example",
          "chain",
          "ghz-variants",
          "psi-cnot-1",
          "psi-cnot-2",
          "psi-cnot-up-1",
          "psi-cnot-up-2",
          "psi-cz-1",
          "psi-cz-2"};
}

IdentityReport verify_identity(const std::string& key, double tol,
                               std::uint64_t seed) {
  IdentityReport report;
  if (key == "tl-identity") {
    report = check_tl_identity(tol);
  } else if (key == "cz-bell") {
    report = check_cz_bell(tol);
  } else if (key == "b-expansion") {
    report = check_b_expansion(tol);
  } else if (key == "b-cup-form") {
    report = check_b_cup_form(tol);
  } else if (key == "b-cap-form") {
    report = check_b_cap_form(tol);
  } else if (key == "product-basis-dictionary") {
    report = check_product_basis_dictionary(tol);
  } else if (key == "teleop-16") {
    report = check_teleop_16(tol);
  } else if (key == "teleop-bellmeas-16") {
    report = check_teleop_bellmeas_16(tol);
  } else if (key == "mult-rule") {
    report = check_mult_rule(tol, seed);
  } else if (key == "product-config-example") {
    report = check_product_config_example(tol);
  } else if (key == "chain") {
    report = check_chain(tol);
  } else if (key == "ghz-variants") {
    report = check_ghz_variants(tol);
  } else if (key == "psi-cnot-1") {
    report = check_resource(ResourceKind::kCnot, 1, tol);
  } else if (key == "psi-cnot-2") {
    report = check_resource(ResourceKind::kCnot, 2, tol);
  } else if (key == "psi-cnot-up-1") {
    report = check_resource(ResourceKind::kCnotUp, 1, tol);
  } else if (key == "psi-cnot-up-2") {
    report = check_resource(ResourceKind::kCnotUp, 2, tol);
  } else if (key == "psi-cz-1") {
    report = check_resource(ResourceKind::kCz, 1, tol);
  } else if (key == "psi-cz-2") {
    report = check_resource(ResourceKind::kCz, 2, tol);
  } else {
    throw std::invalid_argument("verify_identity: unknown key " + key);
  }
  report.key = key;
  return report;
}

}  // namespace tlqc
