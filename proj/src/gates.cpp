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

#include "tlqc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tlqc {

namespace {
const Complex kI{0.0, 1.0};
}

Matrix gate_i() { return Matrix::Identity(2, 2); }

Matrix gate_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix gate_y() {
  Matrix m(2, 2);
  m << 0, 1, -1, 0;
  return m;
}

Matrix gate_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix gate_h() {
  Matrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

Matrix gate_s() {
  Matrix m(2, 2);
  m << 1, 0, 0, kI;
  return m;
}

Matrix gate_t() {
  Matrix m(2, 2);
  m << 1, 0, 0, std::exp(kI * (std::numbers::pi / 4.0));
  return m;
}

Matrix gate_x_minus_iy() {
  // Y = ZX here, giving [[0, exp(-i pi/4)], [exp(i pi/4), 0]] = T X T^dag.
  return (gate_x() - kI * gate_y()) / std::sqrt(2.0);
}

Matrix gate_cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Matrix gate_cnot_rev() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(3, 1) = 1;
  m(2, 2) = 1;
  m(1, 3) = 1;
  return m;
}

Matrix gate_cz() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

Matrix gate_swap() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Matrix gate_by_name(const std::string& name) {
  if (name == "I") return gate_i();
  if (name == "X") return gate_x();
  if (name == "Y") return gate_y();
  if (name == "Z") return gate_z();
  if (name == "XZ") return gate_x() * gate_z();
  if (name == "ZX") return gate_z() * gate_x();
  if (name == "H") return gate_h();
  if (name == "S") return gate_s();
  if (name == "T") return gate_t();
  if (name == "CNOT") return gate_cnot();
  if (name == "CZ") return gate_cz();
  if (name == "SWAP") return gate_swap();
  throw std::invalid_argument("unknown gate name: " + name);
}

}  // namespace tlqc
