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

#include <string>

#include "tlqc/numerics.hpp"

namespace tlqc {

// Single-qubit gates. Note the convention Y = ZX (a real matrix).
Matrix gate_i();
Matrix gate_x();
Matrix gate_y();  // ZX = [[0,1],[-1,0]]
Matrix gate_z();
Matrix gate_h();
Matrix gate_s();  // diag(1, i)
Matrix gate_t();  // diag(1, exp(i pi/4))

// (X - iY)/sqrt(2) under the Y = ZX convention; equals T X T^dag.
Matrix gate_x_minus_iy();

// Two-qubit gates; qubit 1 is the control where applicable.
Matrix gate_cnot();     // control 1, target 2
Matrix gate_cnot_rev(); // control 2, target 1
Matrix gate_cz();
Matrix gate_swap();

// Named gate lookup used by circuit and diagram parsers. Throws on unknown
// names. Supported: I,X,Y,Z,XZ,ZX,H,S,T for 1 qubit; CNOT,CZ,SWAP for 2.
Matrix gate_by_name(const std::string& name);

}  // namespace tlqc
