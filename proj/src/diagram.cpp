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

#include "tlqc/diagram.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tlqc/bell.hpp"
#include "tlqc/gates.hpp"
#include "tlqc/jsonio.hpp"
#include "tlqc/pauli.hpp"

namespace tlqc {

namespace {

const double kRoot2 = std::sqrt(2.0);

Matrix ident2() { return identity_matrix(2); }

bool near_identity(const Matrix& m, double tol = 1e-12) {
  return m.rows() == 2 && m.cols() == 2 && max_abs_diff(m, ident2()) <= tol;
}

std::string catalog_name(const Matrix& m, double tol = 1e-12) {
  static const std::vector<std::string> kNames = {"I",  "X", "Z", "XZ",
                                                  "ZX", "H", "S", "T"};
  for (const std::string& name : kNames) {
    if (max_abs_diff(m, gate_by_name(name)) <= tol) return name;
  }
  return "";
}

std::vector<const Dot*> dots_in_range(const Arc& arc, double lo, double hi) {
  std::vector<const Dot*> v;
  for (const Dot& d : arc.dots) {
    if (d.pos > lo && d.pos < hi) v.push_back(&d);
  }
  std::sort(v.begin(), v.end(),
            [](const Dot* x, const Dot* y) { return x->pos < y->pos; });
  return v;
}

// Product with the smallest-pos factor written leftmost.
Matrix product_ascending(const std::vector<const Dot*>& ds) {
  Matrix m = ident2();
  for (const Dot* d : ds) m = m * d->m;
  return m;
}

// Product with the smallest-pos factor written rightmost.
Matrix product_descending(const std::vector<const Dot*>& ds) {
  Matrix m = ident2();
  for (const Dot* d : ds) m = d->m * m;
  return m;
}

// Fused operator of a line, applied to the strand rising from the bottom.
Matrix line_operator(const Arc& arc) {
  return product_descending(dots_in_range(arc, 0.0, 1.0));
}

// Fused leg operators. The strand emanates from the apex of a cup toward
// each top endpoint, and sinks from each bottom endpoint of a cap into its
// apex; the dot nearest the start of the flow applies first.
Matrix cup_left_leg(const Arc& arc) {
  return product_ascending(dots_in_range(arc, 0.0, 0.5));
}
Matrix cup_right_leg(const Arc& arc) {
  return product_descending(dots_in_range(arc, 0.5, 1.0));
}
Matrix cap_left_leg(const Arc& arc) {
  return product_descending(dots_in_range(arc, 0.0, 0.5));
}
Matrix cap_right_leg(const Arc& arc) {
  return product_ascending(dots_in_range(arc, 0.5, 1.0));
}

// 2x2 table of the arc's scalar factor, indexed by the bits at (a, b).
Matrix arc_factor(const Arc& arc) {
  switch (arc.kind) {
    case ArcKind::kLine:
      return line_operator(arc);  // indexed (top bit, bottom bit)
    case ArcKind::kCup:
      return Matrix(cup_left_leg(arc) * cup_right_leg(arc).transpose()) /
             kRoot2;
    case ArcKind::kCap:
      return Matrix(cap_left_leg(arc).transpose() * cap_right_leg(arc)) /
             kRoot2;
  }
  throw std::logic_error("unreachable");
}

int circular_position(bool top, int index, int n_bottom, int n_top) {
  return top ? n_bottom + (n_top - index + 1) : index;
}

struct CircArc {
  int p1, p2;  // circular positions, p1 < p2
};

CircArc circ_of(const Arc& arc, int nb, int nt) {
  int p1 = 0, p2 = 0;
  switch (arc.kind) {
    case ArcKind::kLine:
      p1 = circular_position(false, arc.a, nb, nt);
      p2 = circular_position(true, arc.b, nb, nt);
      break;
    case ArcKind::kCup:
      p1 = circular_position(true, arc.a, nb, nt);
      p2 = circular_position(true, arc.b, nb, nt);
      break;
    case ArcKind::kCap:
      p1 = circular_position(false, arc.a, nb, nt);
      p2 = circular_position(false, arc.b, nb, nt);
      break;
  }
  if (p1 > p2) std::swap(p1, p2);
  return {p1, p2};
}

void validate_term(const DiagramTerm& term, int nb, int nt) {
  std::vector<bool> bottom_used(nb, false), top_used(nt, false);
  auto use_bottom = [&](int q) {
    if (q < 1 || q > nb) throw std::invalid_argument("bottom index range");
    if (bottom_used[q - 1])
      throw std::invalid_argument("bottom index used twice");
    bottom_used[q - 1] = true;
  };
  auto use_top = [&](int q) {
    if (q < 1 || q > nt) throw std::invalid_argument("top index range");
    if (top_used[q - 1]) throw std::invalid_argument("top index used twice");
    top_used[q - 1] = true;
  };
  for (const Arc& arc : term.arcs) {
    switch (arc.kind) {
      case ArcKind::kLine:
        use_bottom(arc.a);
        use_top(arc.b);
        break;
      case ArcKind::kCup:
        if (arc.a >= arc.b) throw std::invalid_argument("cup endpoint order");
        use_top(arc.a);
        use_top(arc.b);
        break;
      case ArcKind::kCap:
        if (arc.a >= arc.b) throw std::invalid_argument("cap endpoint order");
        use_bottom(arc.a);
        use_bottom(arc.b);
        break;
    }
    for (const Dot& d : arc.dots) {
      if (!(d.pos > 0.0) || !(d.pos < 1.0)) {
        throw std::invalid_argument("dot parameter out of range");
      }
      if (arc.kind != ArcKind::kLine && std::abs(d.pos - 0.5) < 1e-9) {
        throw std::invalid_argument("dot sits on a cup or cap apex");
      }
      if (d.m.rows() != 2 || d.m.cols() != 2) {
        throw std::invalid_argument("dot operator must be 2x2");
      }
    }
  }
  for (int q = 0; q < nb; ++q) {
    if (!bottom_used[q]) throw std::invalid_argument("uncovered bottom point");
  }
  for (int q = 0; q < nt; ++q) {
    if (!top_used[q]) throw std::invalid_argument("uncovered top point");
  }
}

std::string dot_signature(const Dot& d) {
  if (!d.gate.empty()) return "g:" + d.gate;
  std::string s = "m:";
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      s += format_double(d.m(r, c).real()) + "," +
           format_double(d.m(r, c).imag()) + ";";
    }
  }
  return s;
}

std::string arc_signature(const Arc& arc) {
  std::string s;
  switch (arc.kind) {
    case ArcKind::kLine:
      s = "L";
      break;
    case ArcKind::kCup:
      s = "U";
      break;
    case ArcKind::kCap:
      s = "C";
      break;
  }
  s += std::to_string(arc.a) + "." + std::to_string(arc.b);
  for (const Dot& d : arc.dots) {
    s += "|" + format_double(d.pos) + ":" + dot_signature(d);
  }
  return s;
}

std::string term_signature(const DiagramTerm& term) {
  std::string s;
  for (const Arc& arc : term.arcs) s += arc_signature(arc) + "/";
  return s;
}

bool same_structure(const DiagramTerm& x, const DiagramTerm& y, double tol) {
  if (x.arcs.size() != y.arcs.size()) return false;
  for (std::size_t k = 0; k < x.arcs.size(); ++k) {
    const Arc& a = x.arcs[k];
    const Arc& b = y.arcs[k];
    if (a.kind != b.kind || a.a != b.a || a.b != b.b ||
        a.dots.size() != b.dots.size()) {
      return false;
    }
    for (std::size_t d = 0; d < a.dots.size(); ++d) {
      if (std::abs(a.dots[d].pos - b.dots[d].pos) > 1e-9) return false;
      if (max_abs_diff(a.dots[d].m, b.dots[d].m) > tol) return false;
    }
  }
  return true;
}

}  // namespace

Dot make_dot(double pos, const std::string& gate) {
  Dot d;
  d.pos = pos;
  d.gate = gate;
  d.m = gate_by_name(gate);
  if (d.m.rows() != 2) {
    throw std::invalid_argument("dot gate must act on one qubit");
  }
  return d;
}

Dot make_dot(double pos, const Matrix& m) {
  Dot d;
  d.pos = pos;
  d.m = m;
  d.gate = catalog_name(m);
  return d;
}

Arc make_line(int bottom, int top, std::vector<Dot> dots) {
  Arc arc;
  arc.kind = ArcKind::kLine;
  arc.a = bottom;
  arc.b = top;
  arc.dots = std::move(dots);
  return arc;
}

Arc make_cup(int left, int right, std::vector<Dot> dots) {
  Arc arc;
  arc.kind = ArcKind::kCup;
  arc.a = left;
  arc.b = right;
  arc.dots = std::move(dots);
  return arc;
}

Arc make_cap(int left, int right, std::vector<Dot> dots) {
  Arc arc;
  arc.kind = ArcKind::kCap;
  arc.a = left;
  arc.b = right;
  arc.dots = std::move(dots);
  return arc;
}

DiagramExpr single_term(int n_bottom, int n_top, std::vector<Arc> arcs,
                        Complex coeff) {
  DiagramExpr expr;
  expr.n_bottom = n_bottom;
  expr.n_top = n_top;
  DiagramTerm term;
  term.coeff = coeff;
  term.arcs = std::move(arcs);
  expr.terms.push_back(std::move(term));
  validate(expr);
  return expr;
}

DiagramExpr identity_diagram(int n) {
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int q = 1; q <= n; ++q) arcs.push_back(make_line(q, q));
  return single_term(n, n, std::move(arcs));
}

DiagramExpr add(const DiagramExpr& x, const DiagramExpr& y) {
  if (x.n_bottom != y.n_bottom || x.n_top != y.n_top) {
    throw std::invalid_argument("add requires equal arities");
  }
  DiagramExpr out = x;
  out.terms.insert(out.terms.end(), y.terms.begin(), y.terms.end());
  return out;
}

DiagramExpr scale(const DiagramExpr& x, Complex c) {
  DiagramExpr out = x;
  for (DiagramTerm& t : out.terms) t.coeff *= c;
  return out;
}

void validate(const DiagramExpr& expr) {
  if (expr.n_bottom < 0 || expr.n_top < 0 ||
      (expr.n_bottom + expr.n_top) % 2 != 0) {
    throw std::invalid_argument("boundary arity must have even total");
  }
  for (const DiagramTerm& term : expr.terms) {
    validate_term(term, expr.n_bottom, expr.n_top);
  }
}

bool is_planar(const DiagramTerm& term, int n_bottom, int n_top) {
  std::vector<CircArc> circ;
  circ.reserve(term.arcs.size());
  for (const Arc& arc : term.arcs) {
    circ.push_back(circ_of(arc, n_bottom, n_top));
  }
  for (std::size_t i = 0; i < circ.size(); ++i) {
    for (std::size_t j = i + 1; j < circ.size(); ++j) {
      const bool in1 = circ[i].p1 < circ[j].p1 && circ[j].p1 < circ[i].p2;
      const bool in2 = circ[i].p1 < circ[j].p2 && circ[j].p2 < circ[i].p2;
      if (in1 != in2) return false;
    }
  }
  return true;
}

bool is_planar(const DiagramExpr& expr) {
  for (const DiagramTerm& term : expr.terms) {
    if (!is_planar(term, expr.n_bottom, expr.n_top)) return false;
  }
  return true;
}

Matrix compile_diagram(const DiagramExpr& expr) {
  validate(expr);
  const int nb = expr.n_bottom;
  const int nt = expr.n_top;
  const std::int64_t rows = std::int64_t{1} << nt;
  const std::int64_t cols = std::int64_t{1} << nb;
  Matrix out = Matrix::Zero(rows, cols);
  for (const DiagramTerm& term : expr.terms) {
    std::vector<Matrix> factor;
    factor.reserve(term.arcs.size());
    for (const Arc& arc : term.arcs) factor.push_back(arc_factor(arc));
    for (std::int64_t r = 0; r < rows; ++r) {
      for (std::int64_t c = 0; c < cols; ++c) {
        Complex v = term.coeff;
        for (std::size_t k = 0; k < term.arcs.size() && v != Complex{0, 0};
             ++k) {
          const Arc& arc = term.arcs[k];
          int x = 0, y = 0;
          switch (arc.kind) {
            case ArcKind::kLine:
              x = static_cast<int>((r >> qubit_shift(nt, arc.b)) & 1);
              y = static_cast<int>((c >> qubit_shift(nb, arc.a)) & 1);
              break;
            case ArcKind::kCup:
              x = static_cast<int>((r >> qubit_shift(nt, arc.a)) & 1);
              y = static_cast<int>((r >> qubit_shift(nt, arc.b)) & 1);
              break;
            case ArcKind::kCap:
              x = static_cast<int>((c >> qubit_shift(nb, arc.a)) & 1);
              y = static_cast<int>((c >> qubit_shift(nb, arc.b)) & 1);
              break;
          }
          v *= factor[k](x, y);
        }
        out(r, c) += v;
      }
    }
  }
  return out;
}

namespace {

// Composite points during composition: result bottom, glue, result top.
enum class PointClass { kResultBottom, kGlue, kResultTop };

struct Point {
  PointClass cls;
  int index;
  bool operator<(const Point& o) const {
    if (cls != o.cls) return cls < o.cls;
    return index < o.index;
  }
  bool operator==(const Point& o) const {
    return cls == o.cls && index == o.index;
  }
};

struct ChainArc {
  ArcKind kind;
  Point pa, pb;
  Matrix leg_a, leg_b;  // line: leg_a = fused operator, leg_b unused
};

// Matrix that advances a chain walk across the arc, entering at `at_a`.
Matrix crossing_matrix(const ChainArc& arc, bool at_a) {
  switch (arc.kind) {
    case ArcKind::kLine:
      return at_a ? arc.leg_a : Matrix(arc.leg_a.transpose());
    case ArcKind::kCup:
      return at_a
                 ? Matrix(arc.leg_b * arc.leg_a.transpose() / kRoot2)
                 : Matrix(arc.leg_a * arc.leg_b.transpose() / kRoot2);
    case ArcKind::kCap:
      return at_a
                 ? Matrix(arc.leg_b.transpose() * arc.leg_a / kRoot2)
                 : Matrix(arc.leg_a.transpose() * arc.leg_b / kRoot2);
  }
  throw std::logic_error("unreachable");
}

DiagramTerm compose_terms(const DiagramTerm& lower, const DiagramTerm& upper,
                          int nb, int nt) {
  std::vector<ChainArc> arcs;
  auto push = [&](const Arc& arc, bool is_lower) {
    ChainArc ca;
    ca.kind = arc.kind;
    switch (arc.kind) {
      case ArcKind::kLine:
        ca.leg_a = line_operator(arc);
        ca.pa = is_lower ? Point{PointClass::kResultBottom, arc.a}
                         : Point{PointClass::kGlue, arc.a};
        ca.pb = is_lower ? Point{PointClass::kGlue, arc.b}
                         : Point{PointClass::kResultTop, arc.b};
        break;
      case ArcKind::kCup:
        ca.leg_a = cup_left_leg(arc);
        ca.leg_b = cup_right_leg(arc);
        ca.pa = is_lower ? Point{PointClass::kGlue, arc.a}
                         : Point{PointClass::kResultTop, arc.a};
        ca.pb = is_lower ? Point{PointClass::kGlue, arc.b}
                         : Point{PointClass::kResultTop, arc.b};
        break;
      case ArcKind::kCap:
        ca.leg_a = cap_left_leg(arc);
        ca.leg_b = cap_right_leg(arc);
        ca.pa = is_lower ? Point{PointClass::kResultBottom, arc.a}
                         : Point{PointClass::kGlue, arc.a};
        ca.pb = is_lower ? Point{PointClass::kResultBottom, arc.b}
                         : Point{PointClass::kGlue, arc.b};
        break;
    }
    arcs.push_back(std::move(ca));
  };
  for (const Arc& arc : lower.arcs) push(arc, true);
  for (const Arc& arc : upper.arcs) push(arc, false);

  std::map<Point, std::vector<std::size_t>> incident;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    incident[arcs[k].pa].push_back(k);
    incident[arcs[k].pb].push_back(k);
  }

  std::vector<bool> visited(arcs.size(), false);
  auto next_unvisited = [&](const Point& p) -> long {
    auto it = incident.find(p);
    if (it == incident.end()) return -1;
    for (std::size_t k : it->second) {
      if (!visited[k]) return static_cast<long>(k);
    }
    return -1;
  };

  DiagramTerm out;
  out.coeff = lower.coeff * upper.coeff;

  auto walk = [&](Point start) -> std::pair<Point, Matrix> {
    Point cur = start;
    Matrix t = ident2();
    while (true) {
      const long k = next_unvisited(cur);
      if (k < 0) return {cur, t};
      visited[static_cast<std::size_t>(k)] = true;
      const ChainArc& arc = arcs[static_cast<std::size_t>(k)];
      const bool at_a = arc.pa == cur;
      t = crossing_matrix(arc, at_a) * t;
      cur = at_a ? arc.pb : arc.pa;
      if (cur.cls != PointClass::kGlue) return {cur, t};
    }
  };

  auto emit_dot = [](const Matrix& m, double pos) {
    std::vector<Dot> dots;
    if (!near_identity(m)) dots.push_back(make_dot(pos, m));
    return dots;
  };

  // Open chains, anchored at result boundary points.
  std::vector<Point> anchors;
  for (int q = 1; q <= nb; ++q) {
    anchors.push_back({PointClass::kResultBottom, q});
  }
  for (int q = 1; q <= nt; ++q) anchors.push_back({PointClass::kResultTop, q});
  for (const Point& s : anchors) {
    if (next_unvisited(s) < 0) continue;
    auto [e, t] = walk(s);
    if (s.cls == PointClass::kResultBottom &&
        e.cls == PointClass::kResultTop) {
      out.arcs.push_back(make_line(s.index, e.index, emit_dot(t, 0.25)));
    } else if (s.cls == PointClass::kResultTop &&
               e.cls == PointClass::kResultBottom) {
      out.arcs.push_back(
          make_line(e.index, s.index, emit_dot(t.transpose(), 0.25)));
    } else if (s.cls == PointClass::kResultTop) {
      const Matrix from_left = s.index < e.index ? t : Matrix(t.transpose());
      out.arcs.push_back(make_cup(std::min(s.index, e.index),
                                  std::max(s.index, e.index),
                                  emit_dot(kRoot2 * from_left, 0.75)));
    } else {
      const Matrix from_left = s.index < e.index ? t : Matrix(t.transpose());
      out.arcs.push_back(
          make_cap(std::min(s.index, e.index), std::max(s.index, e.index),
                   emit_dot(kRoot2 * from_left.transpose(), 0.75)));
    }
  }

  // Remaining arcs form closed loops through the glue boundary.
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (visited[k]) continue;
    visited[k] = true;
    const Point start = arcs[k].pa;
    Matrix t = crossing_matrix(arcs[k], true);
    Point cur = arcs[k].pb;
    while (!(cur == start)) {
      const long n = next_unvisited(cur);
      if (n < 0) throw std::logic_error("broken loop in composition");
      visited[static_cast<std::size_t>(n)] = true;
      const ChainArc& arc = arcs[static_cast<std::size_t>(n)];
      const bool at_a = arc.pa == cur;
      t = crossing_matrix(arc, at_a) * t;
      cur = at_a ? arc.pb : arc.pa;
    }
    out.coeff *= t.trace();
  }
  return out;
}

}  // namespace

DiagramExpr compose(const DiagramExpr& lower, const DiagramExpr& upper) {
  validate(lower);
  validate(upper);
  if (lower.n_top != upper.n_bottom) {
    throw std::invalid_argument("compose requires lower.n_top == upper.n_bottom");
  }
  DiagramExpr out;
  out.n_bottom = lower.n_bottom;
  out.n_top = upper.n_top;
  for (const DiagramTerm& lt : lower.terms) {
    for (const DiagramTerm& ut : upper.terms) {
      out.terms.push_back(compose_terms(lt, ut, lower.n_bottom, upper.n_top));
    }
  }
  return out;
}

void slide_dot(Arc& arc, std::size_t dot_index) {
  if (arc.kind == ArcKind::kLine) {
    throw std::invalid_argument("slide_dot requires a cup or cap");
  }
  if (dot_index >= arc.dots.size()) {
    throw std::invalid_argument("slide_dot index out of range");
  }
  Dot& d = arc.dots[dot_index];
  d.pos = 1.0 - d.pos;
  d.m = d.m.transpose().eval();
  d.gate = catalog_name(d.m);
}

DiagramExpr normalize(const DiagramExpr& expr, double snap) {
  validate(expr);
  DiagramExpr out;
  out.n_bottom = expr.n_bottom;
  out.n_top = expr.n_top;
  for (const DiagramTerm& term : expr.terms) {
    DiagramTerm nt;
    nt.coeff = term.coeff;
    for (const Arc& arc : term.arcs) {
      Matrix fused;
      double pos = 0.25;
      switch (arc.kind) {
        case ArcKind::kLine:
          fused = line_operator(arc);
          pos = 0.25;
          break;
        case ArcKind::kCup:
          fused = cup_right_leg(arc) * cup_left_leg(arc).transpose();
          pos = 0.75;
          break;
        case ArcKind::kCap:
          fused = cap_left_leg(arc).transpose() * cap_right_leg(arc);
          pos = 0.75;
          break;
      }
      // Scaled Pauli extraction: fused == c * W moves c into the
      // coefficient and keeps the plain word on the arc.
      std::int64_t r0 = std::abs(fused(1, 0)) > std::abs(fused(0, 0)) ? 1 : 0;
      if (std::abs(fused(r0, 0)) > snap) {
        const Complex c = fused(r0, 0);
        auto pauli = recognize_pauli(Matrix(fused / c), snap);
        if (pauli) {
          nt.coeff *= c;
          fused = to_matrix(*pauli);
        }
      }
      Arc na = arc;
      na.dots.clear();
      if (!near_identity(fused, snap)) {
        na.dots.push_back(make_dot(pos, fused));
      }
      nt.arcs.push_back(std::move(na));
    }
    std::sort(nt.arcs.begin(), nt.arcs.end(), [&](const Arc& x, const Arc& y) {
      CircArc cx = circ_of(x, expr.n_bottom, expr.n_top);
      CircArc cy = circ_of(y, expr.n_bottom, expr.n_top);
      return cx.p1 < cy.p1;
    });
    if (std::abs(nt.coeff) <= snap) continue;
    bool merged = false;
    for (DiagramTerm& existing : out.terms) {
      if (same_structure(existing, nt, snap)) {
        existing.coeff += nt.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) out.terms.push_back(std::move(nt));
  }
  std::erase_if(out.terms, [&](const DiagramTerm& t) {
    return std::abs(t.coeff) <= snap;
  });
  std::sort(out.terms.begin(), out.terms.end(),
            [](const DiagramTerm& x, const DiagramTerm& y) {
              return term_signature(x) < term_signature(y);
            });
  return out;
}

DiagramExpr decompose_two_qubit(const Matrix& g, double snap) {
  DiagramExpr out;
  out.n_bottom = 2;
  out.n_top = 2;
  for (const BellTerm& bt : bell_decompose(g, snap)) {
    DiagramTerm term;
    term.coeff = bt.coeff;
    term.arcs.push_back(make_cap(
        1, 2,
        {make_dot(0.75, to_matrix(adjoint(make_w(bt.bra_k, bt.bra_l))))}));
    term.arcs.push_back(make_cup(
        1, 2, {make_dot(0.75, to_matrix(make_w(bt.ket_i, bt.ket_j)))}));
    for (Arc& arc : term.arcs) {
      if (!arc.dots.empty() && near_identity(arc.dots[0].m)) arc.dots.clear();
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

namespace {

Complex parse_complex(const nlohmann::json& j) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  return Complex{j.value("re", 0.0), j.value("im", 0.0)};
}

Dot parse_dot(const nlohmann::json& j) {
  const double pos = j.at("pos").get<double>();
  if (j.contains("gate")) {
    return make_dot(pos, j.at("gate").get<std::string>());
  }
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 2) {
    throw std::invalid_argument("dot matrix must be 2x2");
  }
  Matrix m(2, 2);
  for (int r = 0; r < 2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 2) {
      throw std::invalid_argument("dot matrix must be 2x2");
    }
    for (int c = 0; c < 2; ++c) m(r, c) = parse_complex(rows[r][c]);
  }
  return make_dot(pos, m);
}

}  // namespace

DiagramExpr diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DiagramExpr expr;
  expr.n_bottom = j.at("bottom").get<int>();
  expr.n_top = j.at("top").get<int>();
  for (const auto& jt : j.at("terms")) {
    DiagramTerm term;
    term.coeff =
        jt.contains("coeff") ? parse_complex(jt.at("coeff")) : Complex{1, 0};
    for (const auto& ja : jt.at("arcs")) {
      const std::string kind = ja.at("kind").get<std::string>();
      std::vector<Dot> dots;
      if (ja.contains("dots")) {
        for (const auto& jd : ja.at("dots")) dots.push_back(parse_dot(jd));
      }
      if (kind == "line") {
        term.arcs.push_back(make_line(ja.at("bottom").get<int>(),
                                      ja.at("top").get<int>(),
                                      std::move(dots)));
      } else if (kind == "cup") {
        term.arcs.push_back(make_cup(ja.at("left").get<int>(),
                                     ja.at("right").get<int>(),
                                     std::move(dots)));
      } else if (kind == "cap") {
        term.arcs.push_back(make_cap(ja.at("left").get<int>(),
                                     ja.at("right").get<int>(),
                                     std::move(dots)));
      } else {
        throw std::invalid_argument("unknown arc kind: " + kind);
      }
    }
    expr.terms.push_back(std::move(term));
  }
  validate(expr);
  return expr;
}

std::string diagram_to_json(const DiagramExpr& expr) {
  JsonWriter w;
  w.begin_object();
  w.key("bottom");
  w.value_int(expr.n_bottom);
  w.key("top");
  w.value_int(expr.n_top);
  w.key("terms");
  w.begin_array();
  for (const DiagramTerm& term : expr.terms) {
    w.begin_object();
    w.key("coeff");
    w.value_complex(term.coeff);
    w.key("arcs");
    w.begin_array();
    for (const Arc& arc : term.arcs) {
      w.begin_object();
      w.key("kind");
      switch (arc.kind) {
        case ArcKind::kLine:
          w.value_string("line");
          w.key("bottom");
          w.value_int(arc.a);
          w.key("top");
          w.value_int(arc.b);
          break;
        case ArcKind::kCup:
          w.value_string("cup");
          w.key("left");
          w.value_int(arc.a);
          w.key("right");
          w.value_int(arc.b);
          break;
        case ArcKind::kCap:
          w.value_string("cap");
          w.key("left");
          w.value_int(arc.a);
          w.key("right");
          w.value_int(arc.b);
          break;
      }
      if (!arc.dots.empty()) {
        w.key("dots");
        w.begin_array();
        for (const Dot& d : arc.dots) {
          w.begin_object();
          w.key("pos");
          w.value_number(d.pos);
          if (!d.gate.empty()) {
            w.key("gate");
            w.value_string(d.gate);
          } else {
            w.key("matrix");
            w.begin_array();
            for (int r = 0; r < 2; ++r) {
              w.begin_array();
              for (int c = 0; c < 2; ++c) w.value_complex(d.m(r, c));
              w.end_array();
            }
            w.end_array();
          }
          w.end_object();
        }
        w.end_array();
      }
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

namespace {

std::string dot_label(const Dot& d) {
  if (!d.gate.empty()) return d.gate;
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      os << format_double(d.m(r, c).real());
      if (d.m(r, c).imag() != 0.0) {
        os << (d.m(r, c).imag() > 0 ? "+" : "") << format_double(d.m(r, c).imag())
           << "i";
      }
      if (!(r == 1 && c == 1)) os << " ";
    }
  }
  os << "]";
  return os.str();
}

std::string coeff_label(const Complex& c) {
  return "(" + format_double(c.real()) + (c.imag() < 0 ? "" : "+") +
         format_double(c.imag()) + "i)";
}

}  // namespace

std::string render_ascii(const DiagramExpr& expr) {
  std::ostringstream os;
  os << expr.n_bottom << " -> " << expr.n_top << ", " << expr.terms.size()
     << (expr.terms.size() == 1 ? " term\n" : " terms\n");
  int idx = 0;
  for (const DiagramTerm& term : expr.terms) {
    os << "term " << ++idx << ": " << coeff_label(term.coeff) << "\n";
    for (const Arc& arc : term.arcs) {
      switch (arc.kind) {
        case ArcKind::kLine:
          os << "  line  b" << arc.a << " -- t" << arc.b;
          break;
        case ArcKind::kCup:
          os << "  cup   t" << arc.a << " )( t" << arc.b;
          break;
        case ArcKind::kCap:
          os << "  cap   b" << arc.a << " )( b" << arc.b;
          break;
      }
      for (const Dot& d : arc.dots) {
        os << "  " << dot_label(d) << "@" << format_double(d.pos);
      }
      os << "\n";
    }
  }
  return os.str();
}

DiagramExpr random_planar_expr(int n_bottom, int n_top, int max_terms,
                               std::uint64_t seed) {
  if ((n_bottom + n_top) % 2 != 0 || n_bottom + n_top == 0 || max_terms < 1) {
    throw std::invalid_argument("random_planar_expr arity");
  }
  std::mt19937_64 rng(seed);
  // Boundary points in circular order: bottom left to right, then top right
  // to left. first = boundary flag (true for top), second = index.
  std::vector<std::pair<bool, int>> circle;
  for (int q = 1; q <= n_bottom; ++q) circle.push_back({false, q});
  for (int q = n_top; q >= 1; --q) circle.push_back({true, q});

  static const std::vector<std::string> kDotNames = {"X",  "Z", "XZ", "ZX",
                                                     "H",  "S", "T"};

  DiagramExpr expr;
  expr.n_bottom = n_bottom;
  expr.n_top = n_top;
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> pos_dist(0.05, 0.95);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    DiagramTerm term;
    term.coeff = Complex{coeff_dist(rng), coeff_dist(rng)};

    // Uniform non-crossing pairing by recursive splitting.
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> all(circle.size());
    for (std::size_t k = 0; k < circle.size(); ++k) all[k] = static_cast<int>(k);
    std::vector<std::vector<int>> stack = {all};
    while (!stack.empty()) {
      std::vector<int> seg = std::move(stack.back());
      stack.pop_back();
      if (seg.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(
          0, seg.size() / 2 - 1);
      const std::size_t k = 2 * pick(rng) + 1;
      pairs.push_back({seg[0], seg[k]});
      stack.push_back(std::vector<int>(seg.begin() + 1, seg.begin() + k));
      stack.push_back(std::vector<int>(seg.begin() + k + 1, seg.end()));
    }

    for (const auto& [u, v] : pairs) {
      const auto [u_top, u_idx] = circle[static_cast<std::size_t>(u)];
      const auto [v_top, v_idx] = circle[static_cast<std::size_t>(v)];
      Arc arc;
      if (u_top && v_top) {
        arc = make_cup(std::min(u_idx, v_idx), std::max(u_idx, v_idx));
      } else if (!u_top && !v_top) {
        arc = make_cap(std::min(u_idx, v_idx), std::max(u_idx, v_idx));
      } else {
        arc = make_line(u_top ? v_idx : u_idx, u_top ? u_idx : v_idx);
      }
      std::uniform_int_distribution<int> dot_count(0, 2);
      const int nd = dot_count(rng);
      std::uniform_int_distribution<std::size_t> pick_name(
          0, kDotNames.size() - 1);
      for (int d = 0; d < nd; ++d) {
        double pos = pos_dist(rng);
        if (arc.kind != ArcKind::kLine) {
          while (std::abs(pos - 0.5) < 0.05) pos = pos_dist(rng);
        }
        arc.dots.push_back(make_dot(pos, kDotNames[pick_name(rng)]));
      }
      term.arcs.push_back(std::move(arc));
    }
    expr.terms.push_back(std::move(term));
  }
  validate(expr);
  return expr;
}

namespace {

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

struct SvgPoint {
  double x = 0.0, y = 0.0;
};

SvgPoint lerp(SvgPoint a, SvgPoint b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

// Quadratic Bezier through endpoints p0, p1 with control c.
SvgPoint bezier(SvgPoint p0, SvgPoint c, SvgPoint p1, double t) {
  const double u = 1.0 - t;
  return {u * u * p0.x + 2 * u * t * c.x + t * t * p1.x,
          u * u * p0.y + 2 * u * t * c.y + t * t * p1.y};
}

void svg_dot(std::ostringstream& os, SvgPoint p, const Dot& d) {
  const std::string label = d.gate.empty() ? "M" : d.gate;
  os << "<circle cx=\"" << svg_num(p.x) << "\" cy=\"" << svg_num(p.y)
     << "\" r=\"7\" fill=\"#fff\" stroke=\"#333\"/>\n";
  os << "<text x=\"" << svg_num(p.x) << "\" y=\"" << svg_num(p.y + 3.5)
     << "\" font-size=\"8\" text-anchor=\"middle\" fill=\"#333\">"
     << xml_escape(label.substr(0, 64)) << "</text>\n";
}

}  // namespace

std::string render_svg(const DiagramExpr& expr) {
  validate(expr);
  constexpr double kPitch = 44.0;       // strand spacing
  constexpr double kPanelHeight = 104.0;
  constexpr double kGap = 18.0;
  constexpr double kTopY = 14.0;
  constexpr double kBottomY = 90.0;
  const int strands = std::max(expr.n_bottom, expr.n_top);
  const double width = kPitch * (strands + 1) + 120.0;
  const double height =
      kGap + (kPanelHeight + kGap) * std::max<std::size_t>(
                                          expr.terms.size(), 1);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
     << svg_num(width) << " " << svg_num(height) << "\" width=\""
     << svg_num(width) << "\" height=\"" << svg_num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#fdfdfc\"/>\n";

  std::size_t panel = 0;
  for (const DiagramTerm& term : expr.terms) {
    const double oy = kGap + (kPanelHeight + kGap) * panel;
    os << "<g stroke=\"#333\" fill=\"none\" stroke-width=\"1.5\">\n";
    auto bottom_pt = [&](int q) {
      return SvgPoint{kPitch * q, oy + kBottomY};
    };
    auto top_pt = [&](int q) { return SvgPoint{kPitch * q, oy + kTopY}; };

    std::ostringstream dots;
    for (const Arc& arc : term.arcs) {
      switch (arc.kind) {
        case ArcKind::kLine: {
          const SvgPoint p0 = bottom_pt(arc.a), p1 = top_pt(arc.b);
          os << "<line x1=\"" << svg_num(p0.x) << "\" y1=\"" << svg_num(p0.y)
             << "\" x2=\"" << svg_num(p1.x) << "\" y2=\"" << svg_num(p1.y)
             << "\"/>\n";
          for (const Dot& d : arc.dots) svg_dot(dots, lerp(p0, p1, d.pos), d);
          break;
        }
        case ArcKind::kCup: {
          // Both ends on the top boundary, bending down into the panel.
          const SvgPoint p0 = top_pt(arc.a), p1 = top_pt(arc.b);
          const SvgPoint c{(p0.x + p1.x) / 2.0,
                           oy + kTopY + 22.0 + 9.0 * (arc.b - arc.a)};
          os << "<path d=\"M " << svg_num(p0.x) << " " << svg_num(p0.y)
             << " Q " << svg_num(c.x) << " " << svg_num(c.y) << " "
             << svg_num(p1.x) << " " << svg_num(p1.y) << "\"/>\n";
          for (const Dot& d : arc.dots) svg_dot(dots, bezier(p0, c, p1, d.pos), d);
          break;
        }
        case ArcKind::kCap: {
          const SvgPoint p0 = bottom_pt(arc.a), p1 = bottom_pt(arc.b);
          const SvgPoint c{(p0.x + p1.x) / 2.0,
                           oy + kBottomY - 22.0 - 9.0 * (arc.b - arc.a)};
          os << "<path d=\"M " << svg_num(p0.x) << " " << svg_num(p0.y)
             << " Q " << svg_num(c.x) << " " << svg_num(c.y) << " "
             << svg_num(p1.x) << " " << svg_num(p1.y) << "\"/>\n";
          for (const Dot& d : arc.dots) svg_dot(dots, bezier(p0, c, p1, d.pos), d);
          break;
        }
      }
    }
    os << "</g>\n";
    os << dots.str();
    os << "<text x=\"" << svg_num(kPitch * (strands + 1) + 8.0) << "\" y=\""
       << svg_num(oy + kPanelHeight / 2.0)
       << "\" font-size=\"10\" fill=\"#333\">"
       << xml_escape(coeff_label(term.coeff)) << "</text>\n";
    ++panel;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tlqc
