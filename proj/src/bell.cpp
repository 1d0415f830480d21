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

#include <stdexcept>

#include "tlqc/pauli.hpp"

namespace tlqc {

StateVector maximally_entangled_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return from_amplitudes(2, {Complex{r, 0}, Complex{0, 0}, Complex{0, 0},
                             Complex{r, 0}});
}

StateVector bell_state(int i, int j) {
  StateVector psi = maximally_entangled_state();
  return apply(to_matrix(make_w(i, j)), {2}, psi);
}

Matrix bell_transform_matrix() {
  Matrix t(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t.col(2 * i + j) = bell_state(i, j).amps;
    }
  }
  return t;
}

Matrix bell_conjugate(const Matrix& g) {
  if (g.rows() != 4 || g.cols() != 4) {
    throw std::invalid_argument("bell_conjugate requires a 4x4 matrix");
  }
  const Matrix t = bell_transform_matrix();
  return dagger(t) * g * t;
}

Matrix bell_projector(int i, int j) {
  const Vector v = bell_state(i, j).amps;
  return v * v.adjoint();
}

std::vector<BellTerm> bell_decompose(const Matrix& g, double snap) {
  const Matrix gb = bell_conjugate(g);
  std::vector<BellTerm> terms;
  for (int ket = 0; ket < 4; ++ket) {
    for (int bra = 0; bra < 4; ++bra) {
      Complex c = gb(ket, bra);
      if (std::abs(c.real()) < snap) c = Complex{0.0, c.imag()};
      if (std::abs(c.imag()) < snap) c = Complex{c.real(), 0.0};
      if (c == Complex{0.0, 0.0}) continue;
      BellTerm term;
      term.ket_i = ket >> 1;
      term.ket_j = ket & 1;
      term.bra_k = bra >> 1;
      term.bra_l = bra & 1;
      term.coeff = c;
      terms.push_back(term);
    }
  }
  return terms;
}

Matrix bell_recompose(const std::vector<BellTerm>& terms) {
  Matrix g = Matrix::Zero(4, 4);
  for (const BellTerm& t : terms) {
    const Vector ket = bell_state(t.ket_i, t.ket_j).amps;
    const Vector bra = bell_state(t.bra_k, t.bra_l).amps;
    g += t.coeff * (ket * bra.adjoint());
  }
  return g;
}

}  // namespace tlqc
