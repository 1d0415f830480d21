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

#include <vector>

#include "tlqc/numerics.hpp"

namespace tlqc {

// |Psi> = (|00> + |11>)/sqrt(2).
StateVector maximally_entangled_state();

// |psi(ij)> = (1 (x) X^i Z^j)|Psi>. Enumeration order (00, 01, 10, 11)
// gives Phi+, Phi-, Psi+, Psi-.
StateVector bell_state(int i, int j);

// Columns are |psi(ij)> in enumeration order: T|ij> = |psi(ij)>.
Matrix bell_transform_matrix();

// T^dag g T: the matrix of g in the Bell basis.
Matrix bell_conjugate(const Matrix& g);

// 4x4 projector |psi(ij)><psi(ij)|.
Matrix bell_projector(int i, int j);

struct BellTerm {
  int ket_i = 0, ket_j = 0;  // |psi(ket_i ket_j)>
  int bra_k = 0, bra_l = 0;  // <psi(bra_k bra_l)|
  Complex coeff;
};

// g = sum coeff * |psi(ij)><psi(kl)|. Coefficients below the snap threshold
// are dropped. Terms are ordered by (ket, bra) index.
std::vector<BellTerm> bell_decompose(const Matrix& g, double snap = 1e-12);

Matrix bell_recompose(const std::vector<BellTerm>& terms);

}  // namespace tlqc
