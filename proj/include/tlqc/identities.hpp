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

#include <cstdint>
#include <string>
#include <vector>

#include "tlqc/numerics.hpp"

namespace tlqc {

// Named two-sided identities of the decorated-diagram calculus and the
// teleportation protocols. Each key builds both sides independently (one
// side usually diagrammatic, the other a dense matrix or a brute-force
// protocol run) and compares them numerically.
//
// Catalogue:
//   tl-identity                sum of Bell projectors is the identity
//   cz-bell                    CZ as four Bell-basis dyads
//   b-expansion                B(eps,eta) as lines plus four decorated dyads
//   b-cup-form                 B maps |kl> to decorated cup states
//   b-cap-form                 <ij|B reads out decorated cap states
//   product-basis-dictionary   product kets/bras as decorated cups/caps
//   teleop-16                  (B (x) 1)(1 (x) B) as 16 product-basis terms
//   teleop-bellmeas-16         the same operator as 16 Bell-pair dyad terms
//   mult-rule                  dyad composition rule on random unitaries
//   product-config-example     a two-term instance of the dyad translation
//   chain                      multi-stage chains transmit with 1/2 per stage
//   ghz-variants               four equivalent GHZ circuit constructions
//   psi-cnot-1 / psi-cnot-2    GHZ-pair construction of the CNOT resource
//   psi-cnot-up-1 / -2         same for the reversed-CNOT resource
//   psi-cz-1 / psi-cz-2        same for the CZ resource
struct IdentityReport {
  std::string key;
  bool ok = false;
  double residual = 0.0;
  std::string detail;
};

IdentityReport verify_identity(const std::string& key,
                               double tol = kDefaultTol,
                               std::uint64_t seed = 0x7312u);

std::vector<std::string> identity_catalogue();

}  // namespace tlqc
