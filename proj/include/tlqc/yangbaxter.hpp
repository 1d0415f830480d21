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

#include "tlqc/numerics.hpp"

namespace tlqc {

// Generator e_i of the Temperley-Lieb representation on `sites` qubit
// strands: the 4x4 seed t lifted onto strands (i, i+1).
Matrix tl_generator(const Matrix& t, int i, int sites);

struct TlReport {
  bool idempotent = false;     // e_i^2 == e_i
  bool braid_contraction = false;  // e_i e_{i+-1} e_i == loop_weight^-2 e_i
  bool far_commutation = false;    // [e_i, e_j] == 0 for |i-j| >= 2
  bool ok = false;
  double max_residual = 0.0;
};

// Checks the defining relations of the Temperley-Lieb algebra for the given
// 4x4 seed and loop weight on `sites` strands (sites >= 3).
TlReport verify_tl_relations(const Matrix& t, double loop_weight, int sites,
                             double tol = kDefaultTol);

struct YbgCoefficients {
  Complex a, b;  // R = a 1 + b t
};

// Coefficients making R = a 1 + b t a unitary solution of the braided
// relation, for an idempotent seed with the given loop weight. branch
// selects the sign of the discriminant. Throws unless 0 < loop_weight <= 2.
YbgCoefficients solve_ybg_coefficients(double loop_weight, int branch = +1,
                                       double mu = 0.0);

Matrix make_r(const Matrix& t, const YbgCoefficients& c);

struct YbeReport {
  bool ok = false;
  double residual = 0.0;  // max norm of (R12 R23 R12 - R23 R12 R23)
  bool unitary = false;
};

// Checks (R (x) 1)(1 (x) R)(R (x) 1) == (1 (x) R)(R (x) 1)(1 (x) R) for a
// 4x4 candidate, plus unitarity.
YbeReport verify_yang_baxter(const Matrix& r, double tol = kDefaultTol);

// Loop weight 2 family: rank-one idempotents onto a maximally entangled
// vector, parametrized either by a sector sign and twist or by a Bell index.
Matrix make_type1(int s, Complex tau);
Matrix make_r_type1(int s, Complex tau);   // 1 - 2 T
Matrix make_r_bell(int i, int j);          // 1 - 2 |psi(ij)><psi(ij)|

// Loop weight sqrt(2) family.
Matrix make_type2(int eps, double phi);
// branch -1: e^{-i pi/4} 1 + i sqrt(2) T; branch +1: conjugate choice.
Matrix make_r_type2(int eps, double phi, int branch = -1);

// B(eps, eta) = (1/sqrt 2) [[1,0,0,eta],[0,1,eps,0],[0,-eps,1,0],
// [-eta,0,0,1]], eps, eta in {+1, -1}. Equals make_r_type2 at phi = 0 (eta
// = +1) and phi = pi (eta = -1).
Matrix make_b(int eps, int eta);

// S(ij) = R(ij)_23 R(ij)_12 R(ij)_23 on three strands; swaps the outer
// factors: S(ij)(a (x) b (x) c) = c (x) b (x) a.
Matrix teleportation_swapping_operator(int i, int j);

}  // namespace tlqc
