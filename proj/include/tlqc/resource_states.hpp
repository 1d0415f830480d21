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

#include <array>

#include "tlqc/numerics.hpp"
#include "tlqc/pauli.hpp"

namespace tlqc {

// GHZ state (|000> + |111>)/sqrt(2) and its Hadamard-dressed companion
// H (x) H (x) H applied to it, each buildable by two equivalent circuits.
enum class GhzVariant { kCircuit1, kCircuit2, kDressed1, kDressed2 };

StateVector ghz(GhzVariant variant);

// Four-qubit entangled resources for two-qubit gate teleportation.
enum class ResourceKind { kCnot, kCnotUp, kCz };

// (1 (x) u)|Psi>.
StateVector psi_u(const Matrix& u);

// (1 (x) cu (x) 1)(|Psi> (x) |Psi>), cu on the middle pair.
StateVector psi_cu(const Matrix& cu);

// The literal definitions: kCnot applies CNOT (control 2, target 3), kCnotUp
// the reversed CNOT (control 3, target 2), kCz the CZ gate.
StateVector direct_state(ResourceKind kind);

// One Bell-measurement branch of the GHZ-pair construction: prepare the
// six-qubit Hadamard-dressed GHZ product for the target, project qubits
// (3, 4) onto |psi(ij)>, rescale by 2, and relabel the surviving qubits
// (1, 2, 5, 6) as (1, 2, 3, 4).
struct ResourceBranch {
  double probability = 0.0;  // 1/4 per branch
  StateVector state;         // rescaled residual, equals residual_word * direct
  PhasedPauli residual_word; // the branch's excess operator
  PhasedPauli correction;    // adjoint of residual_word; restores the target
};

// variant selects which of the two published correction placements is
// returned: 1 acts on the surviving left pair (qubits 1, 2), 2 on the right
// pair (relabeled qubits 3, 4).
ResourceBranch construct_via_teleportation(ResourceKind kind, int variant,
                                           int i, int j);

// Checks that both correction variants recover direct_state(kind) on every
// outcome and records the relative phase between the two corrected states.
struct VariantReport {
  bool ok = false;
  double max_residual = 0.0;
  std::array<Complex, 4> phases{};  // outcome order (00, 01, 10, 11)
};

VariantReport verify_variant_equivalence(ResourceKind kind,
                                         double tol = kDefaultTol);

}  // namespace tlqc
