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

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "tlqc/bell.hpp"
#include "tlqc/gates.hpp"
#include "tlqc/yangbaxter.hpp"

namespace tlqc {
namespace {

void require_unitary(const Matrix& m, const char* who) {
  const auto dim = m.rows();
  if (m.cols() != dim || max_abs_diff(Matrix(m * dagger(m)),
                                      identity_matrix(dim)) > 1e-10) {
    throw std::invalid_argument(std::string(who) + ": gate is not unitary");
  }
}

void require_bit(int value, const char* who) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument(std::string(who) + ": bits must be 0 or 1");
  }
}

void require_sign(int value, const char* who) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument(std::string(who) + ": eps and eta are +1/-1");
  }
}

void fill_entry(CorrectionEntry* entry) {
  entry->correction = dagger(entry->residual_op);
  if (auto word = recognize_pauli(entry->residual_op)) {
    entry->is_pauli = true;
    entry->pauli = *word;
  }
}

PhasedPauli sign_word(int exponent) {
  PhasedPauli word = pauli_identity(1);
  word.phase_pow = (exponent & 1) ? 2 : 0;
  return word;
}

PhasedPauli x_word(int power) { return make_w(power & 1, 0); }
PhasedPauli z_word(int power) { return make_w(0, power & 1); }

// Y = ZX, so Y^a is Z^a X^a.
PhasedPauli y_word(int power) {
  return make_zx_form(0, power & 1, power & 1);
}

PhasedPauli word_product(std::initializer_list<PhasedPauli> factors) {
  PhasedPauli out = pauli_identity(1);
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

}  // namespace

Matrix teleport_residual(int i, int j) {
  require_bit(i, "teleport_residual");
  require_bit(j, "teleport_residual");
  const StateVector resource = maximally_entangled_state();
  const Vector bra = bell_state(i, j).amps;
  Matrix out(2, 2);
  for (int c = 0; c < 2; ++c) {
    const StateVector joint = tensor(basis_state(1, c), resource);
    out.col(c) = 2.0 * partial_inner_pair(joint, 1, 2, bra).amps;
  }
  return out;
}

Matrix teleport_residual_transpose(int i, int j) {
  require_bit(i, "teleport_residual_transpose");
  require_bit(j, "teleport_residual_transpose");
  const StateVector resource = maximally_entangled_state();
  const Vector bra = bell_state(i, j).amps;
  Matrix out(2, 2);
  for (int c = 0; c < 2; ++c) {
    const StateVector joint = tensor(resource, basis_state(1, c));
    out.col(c) = 2.0 * partial_inner_pair(joint, 2, 3, bra).amps;
  }
  return out;
}

double teleport_branch_probability(const StateVector& alpha, int i, int j) {
  if (alpha.num_qubits != 1) {
    throw std::invalid_argument(
        "teleport_branch_probability: input must be one qubit");
  }
  const StateVector joint = tensor(alpha, maximally_entangled_state());
  const Vector bra = bell_state(i, j).amps;
  return partial_inner_pair(joint, 1, 2, bra).amps.squaredNorm();
}

CorrectionTable single_gate_teleport(const Matrix& u) {
  require_unitary(u, "single_gate_teleport");
  StateVector resource = maximally_entangled_state();
  resource = apply(u, {2}, resource);
  CorrectionTable table;
  table.protocol = "single_gate";
  table.data_qubits = 1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vector bra = bell_state(i, j).amps;
      Matrix total(2, 2);
      for (int c = 0; c < 2; ++c) {
        const StateVector joint = tensor(basis_state(1, c), resource);
        total.col(c) = 2.0 * partial_inner_pair(joint, 1, 2, bra).amps;
      }
      CorrectionEntry entry;
      entry.outcome = {i, j};
      entry.residual_op = total * dagger(u);
      fill_entry(&entry);
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

NotFactorizableError::NotFactorizableError(const std::string& what, Matrix raw)
    : std::runtime_error(what), raw_(std::move(raw)) {}

FactorPair factor_two_qubit(const Matrix& m, double tol) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("factor_two_qubit: operator must be 4x4");
  }
  // Realign so that q (x) p becomes the rank-1 outer product q p^T.
  Matrix realigned(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      for (int b = 0; b < 2; ++b) {
        for (int d = 0; d < 2; ++d) {
          realigned(2 * a + c, 2 * b + d) = m(2 * a + b, 2 * c + d);
        }
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(realigned,
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  FactorPair out;
  out.factorizable = sv(1) <= tol * std::max(1.0, sv(0));
  Vector qv = std::sqrt(2.0) * svd.matrixU().col(0);
  Vector pv = (sv(0) / std::sqrt(2.0)) * svd.matrixV().col(0).conjugate();
  int peak = 0;
  qv.cwiseAbs().maxCoeff(&peak);
  const Complex phase = qv(peak) / std::abs(qv(peak));
  qv /= phase;
  pv *= phase;
  out.q = Matrix(2, 2);
  out.p = Matrix(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      out.q(a, c) = qv(2 * a + c);
      out.p(a, c) = pv(2 * a + c);
    }
  }
  return out;
}

Matrix two_gate_residual(const Matrix& cu, int i1, int j1, int i2, int j2) {
  require_unitary(cu, "two_gate_residual");
  StateVector resource =
      tensor(maximally_entangled_state(), maximally_entangled_state());
  resource = apply(cu, {2, 3}, resource);
  const Vector bra1 = bell_state(i1, j1).amps;
  const Vector bra2 = bell_state(i2, j2).amps;
  Matrix out(4, 4);
  for (int c = 0; c < 4; ++c) {
    StateVector joint = tensor(basis_state(1, (c >> 1) & 1), resource);
    joint = tensor(joint, basis_state(1, c & 1));
    StateVector cut = partial_inner_pair(joint, 1, 2, bra1);
    cut = partial_inner_pair(cut, 3, 4, bra2);
    out.col(c) = 4.0 * cut.amps;
  }
  return out;
}

CorrectionTable two_gate_teleport(const Matrix& cu) {
  require_unitary(cu, "two_gate_teleport");
  const Matrix cu_dag = dagger(cu);
  CorrectionTable table;
  table.protocol = "two_gate";
  table.data_qubits = 2;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 2; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          CorrectionEntry entry;
          entry.outcome = {i1, j1, i2, j2};
          entry.residual_op = two_gate_residual(cu, i1, j1, i2, j2) * cu_dag;
          if (!factor_two_qubit(entry.residual_op).factorizable) {
            throw NotFactorizableError(
                "two_gate_teleport: correction does not split into "
                "single-qubit gates",
                entry.residual_op);
          }
          fill_entry(&entry);
          table.entries.push_back(std::move(entry));
        }
      }
    }
  }
  return table;
}

WIndexRow w_index_formula(int eps, int eta, int i, int j, int k, int l) {
  require_sign(eps, "w_index_formula");
  require_sign(eta, "w_index_formula");
  require_bit(i, "w_index_formula");
  require_bit(j, "w_index_formula");
  require_bit(k, "w_index_formula");
  require_bit(l, "w_index_formula");
  WIndexRow row;
  row.i = i;
  row.j = j;
  row.k = k;
  row.l = l;
  if (eps == -1 && eta == 1) {
    row.p = j & (j ^ k ^ l);
    row.pp = (i & j) ^ ((k ^ l) & (j ^ l ^ 1));
    row.a = j ^ l ^ 1;
  } else if (eps == 1 && eta == -1) {
    row.p = (k & l) ^ ((k ^ l) & (j ^ l ^ 1));
    row.pp = (k & l) ^ ((j ^ 1) & (i ^ k ^ l));
    row.a = j ^ l ^ 1;
  } else if (eps == 1 && eta == 1) {
    row.p = (i & j) ^ ((k ^ l) & (i ^ k ^ 1));
    row.pp = i & (i ^ k ^ l);
    row.a = i ^ k ^ 1;
  } else {
    row.p = (k & l) ^ ((i ^ 1) & (j ^ k ^ l));
    row.pp = l ^ (i & (k ^ l));
    row.a = i ^ k ^ 1;
  }
  row.b = i ^ j ^ k ^ l;
  return row;
}

std::vector<WIndexRow> w_index_table(int eps, int eta) {
  std::vector<WIndexRow> rows;
  rows.reserve(16);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          rows.push_back(w_index_formula(eps, eta, i, j, k, l));
        }
      }
    }
  }
  return rows;
}

PhasedPauli w_from_indices(const WIndexRow& row, bool reversed) {
  return make_zx_form(reversed ? row.pp : row.p, row.a, row.b);
}

Matrix ybg_residual(int eps, int eta, int k, int l, int i, int j) {
  require_bit(k, "ybg_residual");
  require_bit(l, "ybg_residual");
  require_bit(i, "ybg_residual");
  require_bit(j, "ybg_residual");
  const Matrix b = make_b(eps, eta);
  const Vector bra = basis_state(2, 2 * i + j).amps;
  Matrix out(2, 2);
  for (int c = 0; c < 2; ++c) {
    StateVector joint = tensor(basis_state(1, c), basis_state(2, 2 * k + l));
    joint = apply(b, {2, 3}, joint);
    joint = apply(b, {1, 2}, joint);
    out.col(c) = 2.0 * partial_inner_pair(joint, 1, 2, bra).amps;
  }
  return out;
}

Matrix ybg_residual_reversed(int eps, int eta, int k, int l, int i, int j) {
  require_bit(k, "ybg_residual_reversed");
  require_bit(l, "ybg_residual_reversed");
  require_bit(i, "ybg_residual_reversed");
  require_bit(j, "ybg_residual_reversed");
  const Matrix b = make_b(eps, eta);
  const Vector bra = basis_state(2, 2 * i + j).amps;
  Matrix out(2, 2);
  for (int c = 0; c < 2; ++c) {
    StateVector joint = tensor(basis_state(2, 2 * k + l), basis_state(1, c));
    joint = apply(b, {1, 2}, joint);
    joint = apply(b, {2, 3}, joint);
    out.col(c) = 2.0 * partial_inner_pair(joint, 2, 3, bra).amps;
  }
  return out;
}

CorrectionTable ybg_teleport(int eps, int eta, int k, int l, bool reversed) {
  CorrectionTable table;
  table.protocol = reversed ? "ybg_state_reversed" : "ybg_state";
  table.data_qubits = 1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CorrectionEntry entry;
      entry.outcome = {i, j};
      entry.residual_op = reversed ? ybg_residual_reversed(eps, eta, k, l, i, j)
                                   : ybg_residual(eps, eta, k, l, i, j);
      fill_entry(&entry);
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

CorrectionTable ybg_gate_teleport_single(int eps, int eta, const Matrix& u,
                                         int k, int l) {
  require_unitary(u, "ybg_gate_teleport_single");
  require_bit(k, "ybg_gate_teleport_single");
  require_bit(l, "ybg_gate_teleport_single");
  const Matrix b = make_b(eps, eta);
  const Matrix u_dag = dagger(u);
  CorrectionTable table;
  table.protocol = "ybg_single_gate";
  table.data_qubits = 1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vector bra = basis_state(2, 2 * i + j).amps;
      Matrix total(2, 2);
      for (int c = 0; c < 2; ++c) {
        StateVector joint =
            tensor(basis_state(1, c), basis_state(2, 2 * k + l));
        joint = apply(b, {2, 3}, joint);
        joint = apply(u, {3}, joint);
        joint = apply(b, {1, 2}, joint);
        total.col(c) = 2.0 * partial_inner_pair(joint, 1, 2, bra).amps;
      }
      CorrectionEntry entry;
      entry.outcome = {i, j};
      entry.residual_op = total * u_dag;
      fill_entry(&entry);
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

Matrix ybg_two_gate_residual(int eps, int eta, const Matrix& cu, int k1,
                             int l1, int k2, int l2, int i1, int j1, int i2,
                             int j2) {
  require_unitary(cu, "ybg_two_gate_residual");
  const Matrix b = make_b(eps, eta);
  const Vector bra1 = basis_state(2, 2 * i1 + j1).amps;
  const Vector bra2 = basis_state(2, 2 * i2 + j2).amps;
  Matrix out(4, 4);
  for (int c = 0; c < 4; ++c) {
    StateVector joint = tensor(basis_state(1, (c >> 1) & 1),
                               basis_state(2, 2 * k1 + l1));
    joint = tensor(joint, basis_state(2, 2 * k2 + l2));
    joint = tensor(joint, basis_state(1, c & 1));
    joint = apply(b, {2, 3}, joint);
    joint = apply(b, {4, 5}, joint);
    joint = apply(cu, {3, 4}, joint);
    joint = apply(b, {1, 2}, joint);
    joint = apply(b, {5, 6}, joint);
    StateVector cut = partial_inner_pair(joint, 1, 2, bra1);
    cut = partial_inner_pair(cut, 3, 4, bra2);
    out.col(c) = 4.0 * cut.amps;
  }
  return out;
}

CorrectionTable ybg_gate_teleport_two(int eps, int eta, const Matrix& cu,
                                      int k1, int l1, int k2, int l2) {
  require_unitary(cu, "ybg_gate_teleport_two");
  const Matrix cu_dag = dagger(cu);
  CorrectionTable table;
  table.protocol = "ybg_two_gate";
  table.data_qubits = 2;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 2; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          CorrectionEntry entry;
          entry.outcome = {i1, j1, i2, j2};
          entry.residual_op = ybg_two_gate_residual(eps, eta, cu, k1, l1, k2,
                                                    l2, i1, j1, i2, j2) *
                              cu_dag;
          fill_entry(&entry);
          table.entries.push_back(std::move(entry));
        }
      }
    }
  }
  return table;
}

QpRow qp_formula(int eps, int eta, int i1, int j1, int i2, int j2, int k1,
                 int l1, int k2, int l2) {
  const WIndexRow left = w_index_formula(eps, eta, i1, j1, k1, l1);
  const WIndexRow right = w_index_formula(eps, eta, i2, j2, k2, l2);
  const int p1 = left.p, a1 = left.a, b1 = left.b;
  const int pp2 = right.pp, a2 = right.a, b2 = right.b;
  QpRow row;
  row.i1 = i1;
  row.j1 = j1;
  row.i2 = i2;
  row.j2 = j2;
  row.k1 = k1;
  row.l1 = l1;
  row.k2 = k2;
  row.l2 = l2;
  if (eps == -1 && eta == 1) {
    row.q = word_product(
        {sign_word(p1 ^ a1), y_word(a1), x_word(b1 ^ b2 ^ a2)});
    row.p = word_product(
        {sign_word(pp2 ^ a2), y_word(a1), x_word(a2), z_word(b2)});
  } else if (eps == 1 && eta == -1) {
    row.q = word_product({sign_word(p1), y_word(a1), x_word(b1 ^ b2 ^ a2)});
    row.p = word_product(
        {sign_word(pp2 ^ b2), y_word(a1), x_word(a2), z_word(b2)});
  } else if (eps == 1 && eta == 1) {
    row.q = word_product(
        {sign_word(p1 ^ a1), x_word(a1), z_word(b1), y_word(a2)});
    row.p = word_product(
        {sign_word(pp2 ^ a2), x_word(a1 ^ b1), y_word(a2), x_word(b2)});
  } else {
    row.q = word_product(
        {sign_word(p1 ^ b1), x_word(a1), z_word(b1), y_word(a2)});
    row.p = word_product(
        {sign_word(pp2), x_word(a1 ^ b1), y_word(a2), x_word(b2)});
  }
  return row;
}

std::vector<QpRow> qp_table(int eps, int eta) {
  std::vector<QpRow> rows;
  rows.reserve(256);
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 2; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          for (int k1 = 0; k1 < 2; ++k1) {
            for (int l1 = 0; l1 < 2; ++l1) {
              for (int k2 = 0; k2 < 2; ++k2) {
                for (int l2 = 0; l2 < 2; ++l2) {
                  rows.push_back(qp_formula(eps, eta, i1, j1, i2, j2, k1, l1,
                                            k2, l2));
                }
              }
            }
          }
        }
      }
    }
  }
  return rows;
}

PhasedPauli w11_formula(int i, int j, int k, int l) {
  return w_from_indices(w_index_formula(1, 1, i, j, k, l), false);
}

std::vector<W11Row> w11_table() {
  std::vector<W11Row> rows;
  rows.reserve(16);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          rows.push_back({i, j, k, l, w11_formula(i, j, k, l)});
        }
      }
    }
  }
  return rows;
}

ChainReport chained_teleport(int stages, ChainMode mode) {
  if (stages < 1 || stages > 3) {
    throw std::invalid_argument("chained_teleport: stages must be 1..3");
  }
  const double expected = std::pow(0.5, stages);
  ChainReport report;
  report.stages = stages;
  Matrix total(2, 2);
  for (int c = 0; c < 2; ++c) {
    StateVector s = basis_state(1, c);
    if (mode == ChainMode::kPlain) {
      for (int m = 0; m < stages; ++m) {
        s = tensor(s, maximally_entangled_state());
      }
      const Vector bra = bell_state(0, 0).amps;
      for (int m = 0; m < stages; ++m) {
        s = partial_inner_pair(s, 1, 2, bra);
      }
    } else {
      const Matrix b = make_b(1, 1);
      const int ancillas = 2 * stages;
      s = tensor(s, basis_state(ancillas, (1u << ancillas) - 1));
      for (int q = 2; q + 1 <= 2 * stages + 1; q += 2) {
        s = apply(b, {q, q + 1}, s);
      }
      for (int q = 1; q + 1 <= 2 * stages; q += 2) {
        s = apply(b, {q, q + 1}, s);
      }
      const Vector zero = basis_state(1, 0).amps;
      for (int m = 0; m < ancillas; ++m) {
        s = partial_inner_single(s, 1, zero);
      }
    }
    report.amplitude_error = std::max(
        report.amplitude_error, std::abs(s.amps.norm() - expected));
    total.col(c) = s.amps / expected;
  }
  report.state_error = max_abs_diff(total, identity_matrix(2));
  report.ok =
      report.amplitude_error < 1e-12 && report.state_error < 1e-12;
  return report;
}

}  // namespace tlqc
