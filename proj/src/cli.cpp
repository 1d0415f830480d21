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

#include "tlqc/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlqc/bell.hpp"
#include "tlqc/compiler.hpp"
#include "tlqc/diagram.hpp"
#include "tlqc/gates.hpp"
#include "tlqc/identities.hpp"
#include "tlqc/jsonio.hpp"
#include "tlqc/numerics.hpp"
#include "tlqc/pauli.hpp"
#include "tlqc/resource_states.hpp"
#include "tlqc/teleport.hpp"
#include "tlqc/yangbaxter.hpp"

namespace tlqc {
namespace {

// Thrown for anything the user typed wrong; run_cli maps it to exit code 2
// together with every other exception escaping a subcommand.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char kUsage[] =
    R"(usage: tlqc <command> [options]

commands:
  verify [--scope all|ybe|tl|tables|diagrams|teleport|states|compiler]
         [--tol X] [--seed N]
      Re-derive the library's checked facts and print one OK/FAIL line per
      check. Exits 1 when any check fails.

  tables <clifford|w-indices|qp|w11> [--eps +1|-1] [--eta +1|-1]
         [--format text|json] [--out FILE]
      Print one of the built-in tables: clifford (Pauli-generator images
      under conjugation by the entangling gate B(eps,eta)), w-indices and qp
      (measurement-correction data for the product-basis protocols), or w11
      (the corrections of the (+1,+1) single-qubit protocol). --eps/--eta
      select blocks of the clifford, w-indices, and qp tables; by default all
      four blocks are printed in the order (+1,+1), (+1,-1), (-1,+1), (-1,-1).

  compile-run <circuit.json> [--strategy bell|ybg] [--outcomes "i,j;i,j;..."]
         [--seed N] [--eager] [--verify-branches] [--out FILE]
      Compile a gate circuit to a teleportation schedule, execute it on the
      all-zeros input, and emit circuit, schedule, and run as JSON. Outcomes
      not pinned with --outcomes are sampled from the branch distribution.
      With --verify-branches every outcome combination is replayed in both
      correction modes and compared against the circuit unitary; exits 1 on
      mismatch.

  diagram <normalize|compile|render> --in FILE [--format text|json|svg]
         [--out FILE]
      Load a diagram expression from JSON and normalize it, compile it to a
      matrix, or render it. normalize/compile default to json output, render
      defaults to svg.

  help
      Show this text.

exit codes: 0 success, 1 a verification ran and failed, 2 usage or input
errors.
)";

struct ArgMap {
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::set<std::string> switches;

  bool has(const std::string& name) const {
    return values.count(name) != 0 || switches.count(name) != 0;
  }
  std::string get(const std::string& name, const std::string& fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
  }
};

ArgMap parse_args(const std::vector<std::string>& args, std::size_t start,
                  const std::set<std::string>& value_flags,
                  const std::set<std::string>& switch_flags) {
  ArgMap m;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0) {
      m.positional.push_back(tok);
      continue;
    }
    std::string name = tok.substr(2);
    std::string inline_value;
    bool has_inline = false;
    if (auto eq = name.find('='); eq != std::string::npos) {
      inline_value = name.substr(eq + 1);
      name = name.substr(0, eq);
      has_inline = true;
    }
    if (switch_flags.count(name) != 0) {
      if (has_inline) {
        throw UsageError("option --" + name + " takes no value");
      }
      m.switches.insert(name);
      continue;
    }
    if (value_flags.count(name) == 0) {
      throw UsageError("unknown option --" + name);
    }
    if (m.values.count(name) != 0) {
      throw UsageError("option --" + name + " given twice");
    }
    if (has_inline) {
      m.values[name] = inline_value;
    } else if (i + 1 < args.size()) {
      m.values[name] = args[++i];
    } else {
      throw UsageError("option --" + name + " needs a value");
    }
  }
  return m;
}

long long require_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + " must be an integer, got '" + s + "'");
  }
  if (pos != s.size()) {
    throw UsageError(what + " must be an integer, got '" + s + "'");
  }
  return v;
}

double require_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + " must be a number, got '" + s + "'");
  }
  if (pos != s.size()) {
    throw UsageError(what + " must be a number, got '" + s + "'");
  }
  return v;
}

int require_sign(const std::string& s, const std::string& what) {
  if (s == "1" || s == "+1") return +1;
  if (s == "-1") return -1;
  throw UsageError(what + " must be +1 or -1, got '" + s + "'");
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot read file '" + path + "'");
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Routes the finished text either to --out or to the provided stream.
void deliver(const std::string& text, const ArgMap& args, std::ostream& out) {
  auto it = args.values.find("out");
  if (it == args.values.end()) {
    out << text;
    return;
  }
  std::ofstream f(it->second, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file '" + it->second + "'");
  }
  f << text;
}

std::string fmt_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// Text rendering of complex entries; snaps sub-1e-14 dirt so that tables
// read cleanly. The JSON emitters keep full precision instead.
std::string fmt_c(const Complex& c) {
  double re = c.real();
  double im = c.imag();
  if (std::abs(re) < 1e-14) re = 0.0;
  if (std::abs(im) < 1e-14) im = 0.0;
  if (im == 0.0) return format_double(re);
  const std::string ipart = format_double(std::abs(im)) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + ipart;
  return format_double(re) + (im < 0 ? "-" : "+") + ipart;
}

std::string fmt_matrix(const Matrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.rows(); ++r) {
    s += r == 0 ? "[" : ", [";
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) s += ", ";
      s += fmt_c(m(r, c));
    }
    s += "]";
  }
  return s + "]";
}

void write_matrix(JsonWriter& w, const Matrix& m) {
  w.begin_array();
  for (int r = 0; r < m.rows(); ++r) {
    w.begin_array();
    for (int c = 0; c < m.cols(); ++c) {
      w.value_complex(m(r, c));
    }
    w.end_array();
  }
  w.end_array();
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool ok = false;
  double residual = 0.0;
};

void add_check(std::vector<Check>& cs, const std::string& name, bool ok,
               double residual) {
  cs.push_back({name, ok, residual});
}

void add_identity_checks(std::vector<Check>& cs, const std::string& prefix,
                         const std::vector<std::string>& keys, double tol,
                         std::uint64_t seed) {
  for (const std::string& key : keys) {
    IdentityReport rep = verify_identity(key, tol, seed);
    add_check(cs, prefix + "/" + key, rep.ok, rep.residual);
  }
}

void run_ybe_checks(double tol, std::vector<Check>& cs) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      YbeReport rep = verify_yang_baxter(make_r_bell(i, j), tol);
      add_check(cs,
                "ybe/r-bell(" + std::to_string(i) + "," + std::to_string(j) +
                    ")",
                rep.ok && rep.unitary, rep.residual);
    }
  }
  const struct {
    Complex tau;
    const char* label;
  } taus[] = {{Complex(1, 0), "1"}, {Complex(-1, 0), "-1"}, {Complex(0, 1), "i"}};
  for (int s : {+1, -1}) {
    for (const auto& t : taus) {
      YbeReport rep = verify_yang_baxter(make_r_type1(s, t.tau), tol);
      add_check(cs,
                std::string("ybe/r-type1(s=") + sign_str(s) + ",tau=" +
                    t.label + ")",
                rep.ok && rep.unitary, rep.residual);
    }
  }
  for (int eps : {+1, -1}) {
    for (int eta : {+1, -1}) {
      YbeReport rep = verify_yang_baxter(make_b(eps, eta), tol);
      add_check(cs, "ybe/b(" + sign_str(eps) + "," + sign_str(eta) + ")",
                rep.ok && rep.unitary, rep.residual);
    }
  }
  const struct {
    double phi;
    const char* label;
  } phis[] = {{0.0, "0"},
              {std::numbers::pi / 3.0, "pi/3"},
              {std::numbers::pi, "pi"}};
  for (int eps : {+1, -1}) {
    for (const auto& p : phis) {
      YbeReport rep = verify_yang_baxter(make_r_type2(eps, p.phi), tol);
      add_check(cs,
                std::string("ybe/r-type2(") + sign_str(eps) + ",phi=" +
                    p.label + ")",
                rep.ok && rep.unitary, rep.residual);
    }
  }
  // Negative control: CNOT satisfies neither side of the braided relation.
  YbeReport cnot = verify_yang_baxter(gate_cnot(), tol);
  add_check(cs, "ybe/cnot-is-not-a-solution", !cnot.ok && cnot.residual > 0.1,
            cnot.residual);
}

void run_tl_checks(double tol, std::vector<Check>& cs) {
  const double sqrt2 = std::sqrt(2.0);
  for (int sites : {3, 4}) {
    TlReport rep =
        verify_tl_relations(make_type1(+1, Complex(1, 0)), 2.0, sites, tol);
    add_check(cs, "tl/relations(type1,sites=" + std::to_string(sites) + ")",
              rep.ok, rep.max_residual);
    TlReport rep2 = verify_tl_relations(make_type2(+1, 0.0), sqrt2, sites, tol);
    add_check(cs, "tl/relations(type2,sites=" + std::to_string(sites) + ")",
              rep2.ok, rep2.max_residual);
  }
  bool rejected = false;
  try {
    solve_ybg_coefficients(2.5);
  } catch (const std::exception&) {
    rejected = true;
  }
  add_check(cs, "tl/solver-rejects(2.5)", rejected, 0.0);
  const struct {
    double lw;
    const char* label;
  } weights[] = {
      {1.0, "1"}, {sqrt2, "sqrt2"}, {std::sqrt(3.0), "sqrt3"}, {2.0, "2"}};
  for (const auto& w : weights) {
    bool ok = true;
    try {
      YbgCoefficients c = solve_ybg_coefficients(w.lw);
      ok = std::isfinite(std::abs(c.a)) && std::isfinite(std::abs(c.b));
    } catch (const std::exception&) {
      ok = false;
    }
    add_check(cs, std::string("tl/solver-accepts(") + w.label + ")", ok, 0.0);
  }
  YbeReport r1 = verify_yang_baxter(
      make_r(make_type1(+1, Complex(1, 0)), solve_ybg_coefficients(2.0)), tol);
  add_check(cs, "tl/r-from-seed(type1)", r1.ok && r1.unitary, r1.residual);
  YbeReport r2 = verify_yang_baxter(
      make_r(make_type2(+1, 0.0), solve_ybg_coefficients(sqrt2)), tol);
  add_check(cs, "tl/r-from-seed(type2)", r2.ok && r2.unitary, r2.residual);
}

void run_table_checks(double tol, std::vector<Check>& cs) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(
          worst, max_abs_diff(teleport_residual(i, j), to_matrix(make_w(i, j))));
    }
  }
  add_check(cs, "tables/plain-residual", worst <= tol, worst);
  worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst,
                       max_abs_diff(teleport_residual_transpose(i, j),
                                    to_matrix(transpose(make_w(i, j)))));
    }
  }
  add_check(cs, "tables/transpose-residual", worst <= tol, worst);

  const struct {
    const char* name;
    Matrix u;
  } singles[] = {{"H", gate_h()}, {"S", gate_s()}, {"T", gate_t()}};
  for (const auto& g : singles) {
    CorrectionTable table = single_gate_teleport(g.u);
    worst = 0.0;
    for (const CorrectionEntry& e : table.entries) {
      const Matrix w = to_matrix(make_w(e.outcome[0], e.outcome[1]));
      worst = std::max(worst,
                       max_abs_diff(e.residual_op, g.u * w * dagger(g.u)));
      worst = std::max(worst, max_abs_diff(e.correction, dagger(e.residual_op)));
    }
    add_check(cs, std::string("tables/single-gate(") + g.name + ")",
              worst <= tol, worst);
  }

  const struct {
    const char* name;
    Matrix cu;
  } twos[] = {{"CNOT", gate_cnot()}, {"CZ", gate_cz()}};
  for (const auto& g : twos) {
    CorrectionTable table = two_gate_teleport(g.cu);
    worst = 0.0;
    for (const CorrectionEntry& e : table.entries) {
      const Matrix w =
          tensor(to_matrix(make_w(e.outcome[0], e.outcome[1])),
                 to_matrix(transpose(make_w(e.outcome[2], e.outcome[3]))));
      worst = std::max(worst,
                       max_abs_diff(e.residual_op, g.cu * w * dagger(g.cu)));
    }
    add_check(cs, std::string("tables/two-gate(") + g.name + ")", worst <= tol,
              worst);
  }

  for (int eps : {+1, -1}) {
    for (int eta : {+1, -1}) {
      worst = 0.0;
      for (const WIndexRow& row : w_index_table(eps, eta)) {
        worst = std::max(
            worst, max_abs_diff(ybg_residual(eps, eta, row.k, row.l, row.i, row.j),
                                to_matrix(w_from_indices(row, false))));
        worst = std::max(
            worst,
            max_abs_diff(ybg_residual_reversed(eps, eta, row.k, row.l, row.i, row.j),
                         to_matrix(w_from_indices(row, true))));
      }
      add_check(cs, "tables/w-index(" + sign_str(eps) + "," + sign_str(eta) + ")",
                worst <= tol, worst);
    }
  }

  for (int eps : {+1, -1}) {
    for (int eta : {+1, -1}) {
      const Matrix b = make_b(eps, eta);
      worst = 0.0;
      for (const QpRow& row : qp_table(eps, eta)) {
        const Matrix brute =
            ybg_two_gate_residual(eps, eta, b, row.k1, row.l1, row.k2, row.l2,
                                  row.i1, row.j1, row.i2, row.j2);
        worst = std::max(
            worst, max_abs_diff(brute, to_matrix(tensor(row.q, row.p)) * b));
      }
      add_check(cs, "tables/qp(" + sign_str(eps) + "," + sign_str(eta) + ")",
                worst <= tol, worst);
    }
  }

  worst = 0.0;
  bool formulas_agree = true;
  for (const W11Row& row : w11_table()) {
    worst = std::max(worst, max_abs_diff(ybg_residual(1, 1, row.k, row.l, row.i,
                                                      row.j),
                                         to_matrix(row.w)));
    const WIndexRow ix = w_index_formula(1, 1, row.i, row.j, row.k, row.l);
    formulas_agree = formulas_agree &&
                     max_abs_diff(to_matrix(w_from_indices(ix, false)),
                                  to_matrix(row.w)) <= tol;
  }
  add_check(cs, "tables/w11", worst <= tol && formulas_agree, worst);
}

void run_diagram_checks(double tol, std::uint64_t seed, std::vector<Check>& cs) {
  add_identity_checks(cs, "diagrams",
                      {"tl-identity", "cz-bell", "b-expansion", "b-cup-form",
                       "b-cap-form", "product-basis-dictionary"},
                      tol, seed);

  const int arities[][3] = {{2, 2, 2}, {1, 1, 1}, {1, 3, 1},
                            {2, 4, 2}, {3, 1, 3}, {4, 2, 4}};
  int sprout = static_cast<int>(seed % 1000) + 1;
  double worst = 0.0;
  for (const auto& [nb, mid, nt] : arities) {
    for (int rep = 0; rep < 2; ++rep) {
      DiagramExpr lower = random_planar_expr(nb, mid, 3, sprout++);
      DiagramExpr upper = random_planar_expr(mid, nt, 3, sprout++);
      worst = std::max(worst,
                       max_abs_diff(compile_diagram(compose(lower, upper)),
                                    compile_diagram(upper) *
                                        compile_diagram(lower)));
    }
  }
  add_check(cs, "diagrams/functoriality", worst <= tol, worst);

  worst = 0.0;
  for (int rep = 0; rep < 6; ++rep) {
    DiagramExpr e = random_planar_expr(rep % 2 ? 3 : 2, rep % 2 ? 3 : 2, 3,
                                       sprout++);
    worst = std::max(
        worst, max_abs_diff(compile_diagram(e), compile_diagram(normalize(e))));
  }
  add_check(cs, "diagrams/normalize-invariance", worst <= tol, worst);

  worst = 0.0;
  const Matrix decomposed[] = {gate_cnot(), gate_cz(), make_b(1, 1),
                               random_unitary(4, seed + 17)};
  for (const Matrix& g : decomposed) {
    worst = std::max(worst,
                     max_abs_diff(compile_diagram(decompose_two_qubit(g)), g));
  }
  add_check(cs, "diagrams/two-qubit-decomposition", worst <= tol, worst);
}

void run_teleport_checks(double tol, std::uint64_t seed,
                         std::vector<Check>& cs) {
  add_identity_checks(cs, "teleport",
                      {"teleop-16", "teleop-bellmeas-16", "mult-rule",
                       "product-config-example", "chain"},
                      tol, seed);

  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector alpha = random_state(1, seed + 31 * trial);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        worst = std::max(
            worst, std::abs(teleport_branch_probability(alpha, i, j) - 0.25));
      }
    }
  }
  add_check(cs, "teleport/uniform-branches", worst <= tol, worst);

  for (ChainMode mode : {ChainMode::kPlain, ChainMode::kYbg}) {
    const char* label = mode == ChainMode::kPlain ? "plain" : "ybg";
    for (int m = 1; m <= 3; ++m) {
      ChainReport rep = chained_teleport(m, mode);
      add_check(cs,
                std::string("teleport/chain(") + label + ",m=" +
                    std::to_string(m) + ")",
                rep.ok, std::max(rep.amplitude_error, rep.state_error));
    }
  }
}

void run_state_checks(double tol, std::uint64_t seed, std::vector<Check>& cs) {
  add_identity_checks(cs, "states",
                      {"ghz-variants", "psi-cnot-1", "psi-cnot-2",
                       "psi-cnot-up-1", "psi-cnot-up-2", "psi-cz-1",
                       "psi-cz-2"},
                      tol, seed);
  const struct {
    ResourceKind kind;
    const char* label;
  } kinds[] = {{ResourceKind::kCnot, "cnot"},
               {ResourceKind::kCnotUp, "cnot-up"},
               {ResourceKind::kCz, "cz"}};
  for (const auto& k : kinds) {
    VariantReport rep = verify_variant_equivalence(k.kind, tol);
    add_check(cs, std::string("states/variant-equivalence(") + k.label + ")",
              rep.ok, rep.max_residual);
  }
}

void run_compiler_checks(double tol, std::vector<Check>& cs) {
  struct Named {
    const char* label;
    CircuitIR circuit;
  };
  const std::vector<Named> circuits = {
      {"h", {1, {{"H", {1}}}}},
      {"t", {1, {{"T", {1}}}}},
      {"cnot", {2, {{"CNOT", {1, 2}}}}},
      {"cz", {2, {{"CZ", {1, 2}}}}},
      {"b", {2, {{"B", {1, 2}, 1, 1}}}},
      {"h-cnot-t", {2, {{"H", {1}}, {"CNOT", {1, 2}}, {"T", {2}}}}},
  };
  for (const Named& n : circuits) {
    const StateVector input = basis_state(n.circuit.num_qubits, 0);
    for (Strategy strategy : {Strategy::kBell, Strategy::kYbg}) {
      const char* slabel = strategy == Strategy::kBell ? "bell" : "ybg";
      BranchReport rep = verify_all_branches(n.circuit, strategy, input, tol);
      add_check(cs,
                std::string("compiler/") + n.label + "(" + slabel + ")",
                rep.ok,
                std::max({rep.max_state_error, rep.max_mode_gap,
                          rep.max_probability_error}));
    }
  }
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  ArgMap a = parse_args(args, 1, {"scope", "tol", "seed"}, {});
  if (!a.positional.empty()) {
    throw UsageError("verify takes no positional arguments");
  }
  const std::string scope = a.get("scope", "all");
  const double tol = a.has("tol")
                         ? require_double(a.values.at("tol"), "--tol")
                         : kDefaultTol;
  if (!(tol > 0)) {
    throw UsageError("--tol must be positive");
  }
  const std::uint64_t seed =
      a.has("seed")
          ? static_cast<std::uint64_t>(require_int(a.values.at("seed"), "--seed"))
          : 0x7312u;

  const std::set<std::string> known = {"all",    "ybe",      "tl",
                                       "tables", "diagrams", "teleport",
                                       "states", "compiler"};
  if (known.count(scope) == 0) {
    throw UsageError("unknown scope '" + scope + "'");
  }
  const bool all = scope == "all";

  std::vector<Check> checks;
  if (all || scope == "ybe") run_ybe_checks(tol, checks);
  if (all || scope == "tl") run_tl_checks(tol, checks);
  if (all || scope == "tables") run_table_checks(tol, checks);
  if (all || scope == "diagrams") run_diagram_checks(tol, seed, checks);
  if (all || scope == "teleport") run_teleport_checks(tol, seed, checks);
  if (all || scope == "states") run_state_checks(tol, seed, checks);
  if (all || scope == "compiler") run_compiler_checks(tol, checks);

  int failures = 0;
  for (const Check& c : checks) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-4s %-44s residual=%s\n",
                  c.ok ? "OK" : "FAIL", c.name.c_str(),
                  fmt_residual(c.residual).c_str());
    out << line;
    if (!c.ok) ++failures;
  }
  out << checks.size() << " checks, " << failures << " failures\n";
  if (failures > 0) {
    err << "verification failed\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// tables

std::vector<int> sign_list(const ArgMap& a, const std::string& name) {
  if (!a.has(name)) return {+1, -1};
  return {require_sign(a.values.at(name), "--" + name)};
}

// Serialized operator shape shared by every table: Paulis split into a
// signed phase prefix and the bare tensor word, anything else as a matrix.
void write_pauli_object(JsonWriter& w, const PhasedPauli& p) {
  w.begin_object();
  w.key("phase");
  w.value_string(render_phase(p));
  w.key("pauli");
  w.value_string(render_word(p));
  w.end_object();
}

void write_matrix_object(JsonWriter& w, const Matrix& m) {
  w.begin_object();
  w.key("matrix");
  write_matrix(w, m);
  w.end_object();
}

void emit_clifford_text(const std::vector<int>& epses,
                        const std::vector<int>& etas, std::string& text) {
  for (int eps : epses) {
    for (int eta : etas) {
      text += "# clifford eps=" + sign_str(eps) + " eta=" + sign_str(eta) +
              "\n";
      const CliffordTable table = clifford_table(make_b(eps, eta));
      for (const CliffordImage& im : table.images) {
        char line[64];
        std::snprintf(line, sizeof(line), "%-2s -> %s\n",
                      im.generator.c_str(), render(im.image).c_str());
        text += line;
      }
    }
  }
}

void emit_clifford_json(const std::vector<int>& epses,
                        const std::vector<int>& etas, std::string& text) {
  JsonWriter w;
  w.begin_object();
  w.key("table");
  w.value_string("clifford");
  w.key("blocks");
  w.begin_array();
  for (int eps : epses) {
    for (int eta : etas) {
      w.begin_object();
      w.key("eps");
      w.value_int(eps);
      w.key("eta");
      w.value_int(eta);
      w.key("rows");
      w.begin_array();
      const CliffordTable table = clifford_table(make_b(eps, eta));
      for (const CliffordImage& im : table.images) {
        w.begin_object();
        w.key("generator");
        w.value_string(im.generator);
        w.key("image");
        write_pauli_object(w, im.image);
        w.end_object();
      }
      w.end_array();
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  text = w.str() + "\n";
}

void emit_w_indices_text(const std::vector<int>& epses,
                         const std::vector<int>& etas, std::string& text) {
  for (int eps : epses) {
    for (int eta : etas) {
      text += "# w-indices eps=" + sign_str(eps) + " eta=" + sign_str(eta) +
              "\n";
      text += "i j k l | p p' a b | W        W'\n";
      for (const WIndexRow& row : w_index_table(eps, eta)) {
        char line[128];
        std::snprintf(line, sizeof(line), "%d %d %d %d | %d %d  %d %d | %-8s %s\n",
                      row.i, row.j, row.k, row.l, row.p, row.pp, row.a, row.b,
                      render(w_from_indices(row, false)).c_str(),
                      render(w_from_indices(row, true)).c_str());
        text += line;
      }
    }
  }
}

void emit_w_indices_json(const std::vector<int>& epses,
                         const std::vector<int>& etas, std::string& text) {
  JsonWriter w;
  w.begin_object();
  w.key("table");
  w.value_string("w-indices");
  w.key("blocks");
  w.begin_array();
  for (int eps : epses) {
    for (int eta : etas) {
      w.begin_object();
      w.key("eps");
      w.value_int(eps);
      w.key("eta");
      w.value_int(eta);
      w.key("rows");
      w.begin_array();
      for (const WIndexRow& row : w_index_table(eps, eta)) {
        w.begin_object();
        w.key("outcome");
        w.begin_array();
        w.value_int(row.i);
        w.value_int(row.j);
        w.value_int(row.k);
        w.value_int(row.l);
        w.end_array();
        w.key("p");
        w.value_int(row.p);
        w.key("pp");
        w.value_int(row.pp);
        w.key("a");
        w.value_int(row.a);
        w.key("b");
        w.value_int(row.b);
        w.key("correction");
        write_pauli_object(w, w_from_indices(row, false));
        w.key("correction_rev");
        write_pauli_object(w, w_from_indices(row, true));
        w.end_object();
      }
      w.end_array();
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  text = w.str() + "\n";
}

void emit_qp_text(const std::vector<int>& epses, const std::vector<int>& etas,
                  std::string& text) {
  for (int eps : epses) {
    for (int eta : etas) {
      text += "# qp eps=" + sign_str(eps) + " eta=" + sign_str(eta) + "\n";
      text += "i1 j1 i2 j2 k1 l1 k2 l2 | Q        P\n";
      for (const QpRow& row : qp_table(eps, eta)) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      " %d  %d  %d  %d  %d  %d  %d  %d | %-8s %s\n", row.i1,
                      row.j1, row.i2, row.j2, row.k1, row.l1, row.k2, row.l2,
                      render(row.q).c_str(), render(row.p).c_str());
        text += line;
      }
    }
  }
}

void emit_qp_json(const std::vector<int>& epses, const std::vector<int>& etas,
                  std::string& text) {
  JsonWriter w;
  w.begin_object();
  w.key("table");
  w.value_string("qp");
  w.key("blocks");
  w.begin_array();
  for (int eps : epses) {
    for (int eta : etas) {
      w.begin_object();
      w.key("eps");
      w.value_int(eps);
      w.key("eta");
      w.value_int(eta);
      w.key("rows");
      w.begin_array();
      for (const QpRow& row : qp_table(eps, eta)) {
        w.begin_object();
        w.key("outcome");
        w.begin_array();
        w.value_int(row.i1);
        w.value_int(row.j1);
        w.value_int(row.i2);
        w.value_int(row.j2);
        w.value_int(row.k1);
        w.value_int(row.l1);
        w.value_int(row.k2);
        w.value_int(row.l2);
        w.end_array();
        w.key("q");
        write_pauli_object(w, row.q);
        w.key("p");
        write_pauli_object(w, row.p);
        w.end_object();
      }
      w.end_array();
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  text = w.str() + "\n";
}

void emit_w11_text(std::string& text) {
  text += "# w11\n";
  text += "i j k l | W\n";
  for (const W11Row& row : w11_table()) {
    char line[64];
    std::snprintf(line, sizeof(line), "%d %d %d %d | %s\n", row.i, row.j,
                  row.k, row.l, render(row.w).c_str());
    text += line;
  }
}

void emit_w11_json(std::string& text) {
  JsonWriter w;
  w.begin_object();
  w.key("table");
  w.value_string("w11");
  w.key("rows");
  w.begin_array();
  for (const W11Row& row : w11_table()) {
    w.begin_object();
    w.key("i");
    w.value_int(row.i);
    w.key("j");
    w.value_int(row.j);
    w.key("k");
    w.value_int(row.k);
    w.key("l");
    w.value_int(row.l);
    w.key("w");
    w.value_string(render(row.w));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  text = w.str() + "\n";
}

int cmd_tables(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& /*err*/) {
  ArgMap a = parse_args(args, 1, {"eps", "eta", "format", "out"}, {});
  if (a.positional.size() != 1) {
    throw UsageError("tables needs exactly one table name: "
                     "clifford, w-indices, qp, or w11");
  }
  const std::string which = a.positional[0];
  const std::string format = a.get("format", "text");
  if (format != "text" && format != "json") {
    throw UsageError("--format must be text or json");
  }
  if ((which == "clifford" || which == "w11") &&
      (a.has("eps") || a.has("eta"))) {
    throw UsageError("--eps/--eta do not apply to table '" + which + "'");
  }

  std::string text;
  if (which == "clifford") {
    format == "json" ? emit_clifford_json(text) : emit_clifford_text(text);
  } else if (which == "w-indices") {
    const auto epses = sign_list(a, "eps");
    const auto etas = sign_list(a, "eta");
    format == "json" ? emit_w_indices_json(epses, etas, text)
                     : emit_w_indices_text(epses, etas, text);
  } else if (which == "qp") {
    const auto epses = sign_list(a, "eps");
    const auto etas = sign_list(a, "eta");
    format == "json" ? emit_qp_json(epses, etas, text)
                     : emit_qp_text(epses, etas, text);
  } else if (which == "w11") {
    format == "json" ? emit_w11_json(text) : emit_w11_text(text);
  } else {
    throw UsageError("unknown table '" + which + "'");
  }
  deliver(text, a, out);
  return 0;
}

// ---------------------------------------------------------------------------
// compile-run

std::vector<std::array<int, 2>> parse_outcomes(const std::string& spec) {
  std::vector<std::array<int, 2>> outcomes;
  std::stringstream pairs(spec);
  std::string pair;
  while (std::getline(pairs, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
      throw UsageError("--outcomes entries must look like 'i,j', got '" +
                       pair + "'");
    }
    const long long i = require_int(pair.substr(0, comma), "--outcomes bit");
    const long long j = require_int(pair.substr(comma + 1), "--outcomes bit");
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
      throw UsageError("--outcomes bits must be 0 or 1");
    }
    outcomes.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  if (outcomes.empty()) {
    throw UsageError("--outcomes must list at least one 'i,j' pair");
  }
  return outcomes;
}

int cmd_compile_run(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  ArgMap a = parse_args(args, 1, {"strategy", "outcomes", "seed", "out"},
                        {"eager", "verify-branches"});
  if (a.positional.size() != 1) {
    throw UsageError("compile-run needs exactly one circuit file");
  }
  const std::string strategy_name = a.get("strategy", "bell");
  Strategy strategy;
  if (strategy_name == "bell") {
    strategy = Strategy::kBell;
  } else if (strategy_name == "ybg") {
    strategy = Strategy::kYbg;
  } else {
    throw UsageError("--strategy must be bell or ybg");
  }

  const CircuitIR circuit = circuit_from_json(read_file(a.positional[0]));
  const TeleportSchedule schedule = compile(circuit, strategy);
  const StateVector input = basis_state(circuit.num_qubits, 0);

  ExecOptions options;
  options.eager = a.switches.count("eager") != 0;
  if (a.has("seed")) {
    options.seed =
        static_cast<std::uint64_t>(require_int(a.values.at("seed"), "--seed"));
  }
  if (a.has("outcomes")) {
    options.outcomes = parse_outcomes(a.values.at("outcomes"));
  }
  const ExecResult result = execute(schedule, input, options);

  bool branches_ok = true;
  BranchReport branch_report;
  const bool want_branches = a.switches.count("verify-branches") != 0;
  if (want_branches) {
    branch_report = verify_all_branches(circuit, strategy, input);
    branches_ok = branch_report.ok;
  }

  JsonWriter w;
  w.begin_object();
  w.key("circuit");
  w.value_raw(circuit_to_json(circuit));
  w.key("strategy");
  w.value_string(strategy_name);
  w.key("schedule");
  w.value_raw(schedule_to_json(schedule));
  w.key("run");
  w.begin_object();
  w.key("eager");
  w.value_bool(options.eager);
  w.key("seed");
  w.value_int(static_cast<long long>(options.seed));
  w.key("outcomes");
  w.begin_array();
  for (const auto& o : result.outcomes) {
    w.begin_array();
    w.value_int(o[0]);
    w.value_int(o[1]);
    w.end_array();
  }
  w.end_array();
  w.key("probabilities");
  w.begin_array();
  for (double p : result.probabilities) w.value_number(p);
  w.end_array();
  w.key("branch_probability");
  w.value_number(result.branch_probability);
  w.key("output");
  w.begin_array();
  for (int k = 0; k < result.output.amps.size(); ++k) {
    w.value_complex(result.output.amps(k));
  }
  w.end_array();
  w.end_object();
  if (want_branches) {
    w.key("branches");
    w.begin_object();
    w.key("count");
    w.value_int(branch_report.branches);
    w.key("max_state_error");
    w.value_number(branch_report.max_state_error);
    w.key("max_probability_error");
    w.value_number(branch_report.max_probability_error);
    w.key("max_mode_gap");
    w.value_number(branch_report.max_mode_gap);
    w.key("ok");
    w.value_bool(branch_report.ok);
    w.end_object();
  }
  w.end_object();
  deliver(w.str() + "\n", a, out);

  if (!branches_ok) {
    err << "branch verification failed\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// diagram

int cmd_diagram(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& /*err*/) {
  ArgMap a = parse_args(args, 1, {"in", "format", "out"}, {});
  if (a.positional.size() != 1) {
    throw UsageError("diagram needs exactly one action: "
                     "normalize, compile, or render");
  }
  const std::string action = a.positional[0];
  if (action != "normalize" && action != "compile" && action != "render") {
    throw UsageError("unknown diagram action '" + action + "'");
  }
  if (!a.has("in")) {
    throw UsageError("diagram needs --in FILE");
  }
  const DiagramExpr expr = diagram_from_json(read_file(a.values.at("in")));

  std::string text;
  if (action == "normalize") {
    const std::string format = a.get("format", "json");
    const DiagramExpr result = normalize(expr);
    if (format == "json") {
      text = diagram_to_json(result) + "\n";
    } else if (format == "text") {
      text = render_ascii(result);
    } else {
      throw UsageError("--format must be json or text for normalize");
    }
  } else if (action == "compile") {
    const std::string format = a.get("format", "json");
    const Matrix m = compile_diagram(expr);
    if (format == "json") {
      JsonWriter w;
      w.begin_object();
      w.key("rows");
      w.value_int(m.rows());
      w.key("cols");
      w.value_int(m.cols());
      w.key("entries");
      write_matrix(w, m);
      w.end_object();
      text = w.str() + "\n";
    } else if (format == "text") {
      for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
          if (c > 0) text += "  ";
          text += fmt_c(m(r, c));
        }
        text += "\n";
      }
    } else {
      throw UsageError("--format must be json or text for compile");
    }
  } else {
    const std::string format = a.get("format", "svg");
    if (format == "svg") {
      text = render_svg(expr);
    } else if (format == "text") {
      text = render_ascii(expr);
    } else {
      throw UsageError("--format must be svg or text for render");
    }
  }
  deliver(text, a, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    if (cmd == "verify") return cmd_verify(args, out, err);
    if (cmd == "tables") return cmd_tables(args, out, err);
    if (cmd == "compile-run") return cmd_compile_run(args, out, err);
    if (cmd == "diagram") return cmd_diagram(args, out, err);
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace tlqc
