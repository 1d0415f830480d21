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

// Planar string diagrams read bottom (domain) to top (codomain). Strands
// carry qubits; an arc with both ends on the top boundary is a cup and
// compiles to the normalized maximally entangled ket, an arc with both ends
// on the bottom boundary is a cap and compiles to the matching bra. Dots on
// strands are single-qubit operators.
enum class ArcKind { kLine, kCup, kCap };

// A dot at parameter pos along its arc, walking endpoint a -> endpoint b.
// Cups and caps have their apex at pos 0.5; a dot slides across the apex by
// transposing. `gate` names a catalog operator when one applies; `m` is
// authoritative.
struct Dot {
  double pos = 0.5;
  std::string gate;
  Matrix m;
};

// Line: a = bottom index, b = top index. Cup: a < b, both top indices.
// Cap: a < b, both bottom indices. Boundary indices are 1-based from the
// left.
struct Arc {
  ArcKind kind = ArcKind::kLine;
  int a = 1, b = 1;
  std::vector<Dot> dots;
};

struct DiagramTerm {
  Complex coeff{1.0, 0.0};
  std::vector<Arc> arcs;
};

// A formal sum of diagrams with common boundary arity.
struct DiagramExpr {
  int n_bottom = 0, n_top = 0;
  std::vector<DiagramTerm> terms;
};

Dot make_dot(double pos, const std::string& gate);
Dot make_dot(double pos, const Matrix& m);
Arc make_line(int bottom, int top, std::vector<Dot> dots = {});
Arc make_cup(int left, int right, std::vector<Dot> dots = {});
Arc make_cap(int left, int right, std::vector<Dot> dots = {});
DiagramExpr single_term(int n_bottom, int n_top, std::vector<Arc> arcs,
                        Complex coeff = {1.0, 0.0});
DiagramExpr identity_diagram(int n);

// Formal sum; arities must agree.
DiagramExpr add(const DiagramExpr& x, const DiagramExpr& y);
DiagramExpr scale(const DiagramExpr& x, Complex c);

// Throws std::invalid_argument when boundary points are not covered exactly
// once, indices are out of range, an arc kind disagrees with its endpoints,
// or a cup/cap dot sits at the apex.
void validate(const DiagramExpr& expr);

bool is_planar(const DiagramTerm& term, int n_bottom, int n_top);
bool is_planar(const DiagramExpr& expr);

// The 2^n_top x 2^n_bottom matrix of the expression. Qubit 1 of either
// boundary is the leftmost strand and the most significant index bit.
Matrix compile_diagram(const DiagramExpr& expr);

// Vertical composition: upper after lower. lower.n_top must equal
// upper.n_bottom. Chains through the glued boundary are contracted; closed
// loops contribute their trace as a scalar factor.
DiagramExpr compose(const DiagramExpr& lower, const DiagramExpr& upper);

// Moves the dot at dot_index across the apex of a cup or cap, transposing
// its operator. The compiled matrix is unchanged.
void slide_dot(Arc& arc, std::size_t dot_index);

// Canonical form: per arc all dots fuse to at most one (lines at pos 0.25,
// cups and caps on the right leg at pos 0.75); Pauli phases move into the
// coefficient; like terms merge; zero terms drop; terms sort automatically.
DiagramExpr normalize(const DiagramExpr& expr, double snap = 1e-12);

// g as sum of |Bell ket><Bell bra| diagrams: one term per nonzero Bell
// matrix element, a cap carrying the bra word and a cup carrying the ket
// word.
DiagramExpr decompose_two_qubit(const Matrix& g, double snap = 1e-12);

DiagramExpr diagram_from_json(const std::string& text);
std::string diagram_to_json(const DiagramExpr& expr);

std::string render_ascii(const DiagramExpr& expr);

// Standalone SVG, one panel per term, strands drawn bottom to top. Output is
// byte-stable for a given expression: fixed layout constants and one-decimal
// coordinates.
std::string render_svg(const DiagramExpr& expr);

// Uniformly random non-crossing pairings with random catalog dots and
// coefficients; deterministic in seed. n_bottom + n_top must be even.
DiagramExpr random_planar_expr(int n_bottom, int n_top, int max_terms,
                               std::uint64_t seed);

}  // namespace tlqc
