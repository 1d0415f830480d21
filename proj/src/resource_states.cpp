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

#include "tlqc/resource_states.hpp"

#include <stdexcept>

#include "tlqc/bell.hpp"
#include "tlqc/gates.hpp"

namespace tlqc {
namespace {

// Product of single-site factors in written order. Each factor is X^x Z^z on
// one qubit of an n-qubit word; phases from reordering are tracked.
struct SiteFactor {
  int qubit = 1;
  int x = 0;
  int z = 0;
};

PhasedPauli site_product(int num_qubits,
                         std::initializer_list<SiteFactor> factors) {
  PhasedPauli out = pauli_identity(num_qubits);
  for (const auto& f : factors) {
    PhasedPauli factor = pauli_identity(num_qubits);
    factor.x[f.qubit - 1] = static_cast<std::uint8_t>(f.x & 1);
    factor.z[f.qubit - 1] = static_cast<std::uint8_t>(f.z & 1);
    out = multiply(out, factor);
  }
  return out;
}

StateVector six_qubit_preparation(ResourceKind kind) {
  StateVector s = tensor(ghz(GhzVariant::kCircuit1), ghz(GhzVariant::kCircuit1));
  const Matrix h = gate_h();
  switch (kind) {
    case ResourceKind::kCnot:
      s = apply(h, {4}, s);
      s = apply(h, {5}, s);
      s = apply(h, {6}, s);
      break;
    case ResourceKind::kCnotUp:
      s = apply(h, {1}, s);
      s = apply(h, {2}, s);
      s = apply(h, {3}, s);
      break;
    case ResourceKind::kCz:
      s = apply(h, {4}, s);
      break;
  }
  return s;
}

PhasedPauli printed_word(ResourceKind kind, int variant, int i, int j) {
  switch (kind) {
    case ResourceKind::kCnot:
      // Z2^j X1^i X2^i, or X5^i Z5^j Z6^j on the relabeled right pair.
      return variant == 1 ? site_product(4, {{2, 0, j}, {1, i, 0}, {2, i, 0}})
                          : site_product(4, {{3, i, 0}, {3, 0, j}, {4, 0, j}});
    case ResourceKind::kCnotUp:
      // Z1^j Z2^j X2^i, or X5^i X6^i Z5^j.
      return variant == 1 ? site_product(4, {{1, 0, j}, {2, 0, j}, {2, i, 0}})
                          : site_product(4, {{3, i, 0}, {4, i, 0}, {3, 0, j}});
    case ResourceKind::kCz:
      // Z2^j X1^i X2^i, or Z5^i X5^j X6^j.
      return variant == 1 ? site_product(4, {{2, 0, j}, {1, i, 0}, {2, i, 0}})
                          : site_product(4, {{3, 0, i}, {3, j, 0}, {4, j, 0}});
  }
  throw std::invalid_argument("printed_word: unknown resource kind");
}

}  // namespace

StateVector ghz(GhzVariant variant) {
  const StateVector zero = basis_state(1, 0);
  const StateVector bell = maximally_entangled_state();
  StateVector plus = zero;
  plus.amps = gate_h() * plus.amps;
  switch (variant) {
    case GhzVariant::kCircuit1:
      return apply(gate_cnot_rev(), {1, 2}, tensor(zero, bell));
    case GhzVariant::kCircuit2:
      return apply(gate_cnot(), {2, 3}, tensor(bell, zero));
    case GhzVariant::kDressed1:
      return apply(gate_cnot(), {1, 2}, tensor(plus, bell));
    case GhzVariant::kDressed2:
      return apply(gate_cnot_rev(), {2, 3}, tensor(bell, plus));
  }
  throw std::invalid_argument("ghz: unknown variant");
}

StateVector psi_u(const Matrix& u) {
  return apply(u, {2}, maximally_entangled_state());
}

StateVector psi_cu(const Matrix& cu) {
  return apply(cu, {2, 3},
               tensor(maximally_entangled_state(), maximally_entangled_state()));
}

StateVector direct_state(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::kCnot:
      return psi_cu(gate_cnot());
    case ResourceKind::kCnotUp:
      return psi_cu(gate_cnot_rev());
    case ResourceKind::kCz:
      return psi_cu(gate_cz());
  }
  throw std::invalid_argument("direct_state: unknown resource kind");
}

ResourceBranch construct_via_teleportation(ResourceKind kind, int variant,
                                           int i, int j) {
  if (variant != 1 && variant != 2) {
    throw std::invalid_argument(
        "construct_via_teleportation: variant must be 1 or 2");
  }
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw std::invalid_argument(
        "construct_via_teleportation: outcome bits must be 0 or 1");
  }
  const StateVector prepared = six_qubit_preparation(kind);
  StateVector projected =
      partial_inner_pair(prepared, 3, 4, bell_state(i, j).amps);
  ResourceBranch branch;
  branch.probability = projected.amps.squaredNorm();
  projected.amps *= 2.0;
  branch.state = projected;
  branch.residual_word = printed_word(kind, variant, i, j);
  branch.correction = adjoint(branch.residual_word);
  return branch;
}

VariantReport verify_variant_equivalence(ResourceKind kind, double tol) {
  const StateVector target = direct_state(kind);
  VariantReport report;
  report.ok = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ResourceBranch b1 = construct_via_teleportation(kind, 1, i, j);
      const ResourceBranch b2 = construct_via_teleportation(kind, 2, i, j);
      Vector corrected1 = to_matrix(b1.correction) * b1.state.amps;
      Vector corrected2 = to_matrix(b2.correction) * b2.state.amps;
      const PhaseMatch m1 = equal_up_to_global_phase(target.amps, corrected1, tol);
      const PhaseMatch m2 = equal_up_to_global_phase(target.amps, corrected2, tol);
      const PhaseMatch between = equal_up_to_global_phase(corrected2, corrected1, tol);
      report.ok = report.ok && m1.match && m2.match && between.match;
      report.max_residual = std::max(
          {report.max_residual, m1.residual, m2.residual});
      report.phases[2 * i + j] = between.phase;
    }
  }
  return report;
}

}  // namespace tlqc
