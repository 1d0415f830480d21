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

#include "tlqc/compiler.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tlqc/bell.hpp"
#include "tlqc/gates.hpp"
#include "tlqc/jsonio.hpp"
#include "tlqc/resource_states.hpp"
#include "tlqc/yangbaxter.hpp"

namespace tlqc {
namespace {

constexpr int kMaxCircuitQubits = 4;
constexpr int kMaxLiveWires = 8;

const std::set<std::string>& one_qubit_gates() {
  static const std::set<std::string> names = {"H", "S", "T", "X", "Z"};
  return names;
}

const std::set<std::string>& two_qubit_gates() {
  static const std::set<std::string> names = {"CNOT", "CZ", "B"};
  return names;
}

std::string sign_label(int v) { return v > 0 ? "+1" : "-1"; }

std::string gate_label(const CircuitOp& op) {
  if (op.gate == "B") {
    return "B(" + sign_label(op.eps) + "," + sign_label(op.eta) + ")";
  }
  return op.gate;
}

// The braiding protocols measure against resources seeded from |1...1>.
StateVector braid_resource_single(const Matrix& u) {
  StateVector r = basis_state(2, 3);
  r = apply(make_b(1, 1), {1, 2}, r);
  return apply(u, {2}, r);
}

StateVector braid_resource_two(int eps, int eta, const Matrix& cu) {
  StateVector r = basis_state(4, 15);
  const Matrix b = make_b(eps, eta);
  r = apply(b, {1, 2}, r);
  r = apply(b, {3, 4}, r);
  return apply(cu, {2, 3}, r);
}

struct FrameState {
  std::vector<std::uint8_t> x, z;  // per circuit qubit, 1-based
  int phase_pow = 0;               // shared i^phase_pow

  explicit FrameState(int n)
      : x(static_cast<std::size_t>(n) + 1, 0),
        z(static_cast<std::size_t>(n) + 1, 0) {}

  PhasedPauli word(const std::vector<int>& qubits) const {
    PhasedPauli w = pauli_identity(static_cast<int>(qubits.size()));
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      w.x[k] = x[static_cast<std::size_t>(qubits[k])];
      w.z[k] = z[static_cast<std::size_t>(qubits[k])];
    }
    return w;
  }

  void store(const std::vector<int>& qubits, const PhasedPauli& w) {
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      x[static_cast<std::size_t>(qubits[k])] = w.x[k];
      z[static_cast<std::size_t>(qubits[k])] = w.z[k];
    }
    phase_pow = (phase_pow + w.phase_pow) % 4;
  }
};

int slot_of(const std::vector<int>& slots, int label) {
  const auto it = std::find(slots.begin(), slots.end(), label);
  if (it == slots.end()) {
    throw std::logic_error("schedule refers to a dead wire label");
  }
  return static_cast<int>(it - slots.begin()) + 1;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void emit_matrix(JsonWriter& w, const Matrix& m) {
  w.begin_array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    w.begin_array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) w.value_complex(m(r, c));
    w.end_array();
  }
  w.end_array();
}

}  // namespace

void validate_circuit(const CircuitIR& c) {
  if (c.num_qubits < 1 || c.num_qubits > kMaxCircuitQubits) {
    throw std::invalid_argument("circuit must act on 1..4 qubits");
  }
  for (const CircuitOp& op : c.ops) {
    const bool one = one_qubit_gates().count(op.gate) > 0;
    const bool two = two_qubit_gates().count(op.gate) > 0;
    if (!one && !two) throw std::invalid_argument("unknown gate: " + op.gate);
    const std::size_t arity = one ? 1 : 2;
    if (op.targets.size() != arity) {
      throw std::invalid_argument("gate " + op.gate + " takes " +
                                  std::to_string(arity) + " target(s)");
    }
    for (int t : op.targets) {
      if (t < 1 || t > c.num_qubits) {
        throw std::invalid_argument("target out of range");
      }
    }
    if (arity == 2 && op.targets[0] == op.targets[1]) {
      throw std::invalid_argument("two-qubit gate targets must differ");
    }
    if ((op.eps != 1 && op.eps != -1) || (op.eta != 1 && op.eta != -1)) {
      throw std::invalid_argument("eps and eta must be +-1");
    }
  }
}

Matrix op_matrix(const CircuitOp& op) {
  if (op.gate == "B") return make_b(op.eps, op.eta);
  return gate_by_name(op.gate);
}

Matrix circuit_unitary(const CircuitIR& c) {
  validate_circuit(c);
  Matrix u = identity_matrix(Eigen::Index{1} << c.num_qubits);
  for (const CircuitOp& op : c.ops) {
    u = embed_on_qubits(op_matrix(op), op.targets, c.num_qubits) * u;
  }
  return u;
}

CircuitIR circuit_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit parse: ") + e.what());
  }
  CircuitIR c;
  try {
    c.num_qubits = j.at("num_qubits").get<int>();
    for (const auto& jo : j.at("ops")) {
      CircuitOp op;
      op.gate = jo.at("gate").get<std::string>();
      op.targets = jo.at("targets").get<std::vector<int>>();
      if (jo.contains("eps")) op.eps = jo.at("eps").get<int>();
      if (jo.contains("eta")) op.eta = jo.at("eta").get<int>();
      c.ops.push_back(std::move(op));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit fields: ") + e.what());
  }
  validate_circuit(c);
  return c;
}

std::string circuit_to_json(const CircuitIR& c) {
  JsonWriter w;
  w.begin_object();
  w.key("num_qubits");
  w.value_int(c.num_qubits);
  w.key("ops");
  w.begin_array();
  for (const CircuitOp& op : c.ops) {
    w.begin_object();
    w.key("gate");
    w.value_string(op.gate);
    w.key("targets");
    w.begin_array();
    for (int t : op.targets) w.value_int(t);
    w.end_array();
    if (op.gate == "B") {
      w.key("eps");
      w.value_int(op.eps);
      w.key("eta");
      w.value_int(op.eta);
    }
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

TeleportSchedule compile(const CircuitIR& c, Strategy strategy) {
  validate_circuit(c);
  TeleportSchedule sched;
  sched.strategy = strategy;
  sched.num_qubits = c.num_qubits;
  std::vector<int> wire(static_cast<std::size_t>(c.num_qubits) + 1);
  for (int q = 1; q <= c.num_qubits; ++q) {
    wire[static_cast<std::size_t>(q)] = q;
  }
  int next_label = c.num_qubits + 1;
  sched.peak_width = c.num_qubits;

  for (const CircuitOp& op : c.ops) {
    const Matrix u = op_matrix(op);
    const bool two = op.targets.size() == 2;
    const bool clifford = clifford_table(u).is_clifford;
    const int ancillas = two ? 4 : 2;
    sched.peak_width = std::max(sched.peak_width, c.num_qubits + ancillas);
    if (c.num_qubits + ancillas > kMaxLiveWires) {
      throw std::invalid_argument("schedule exceeds the live wire budget");
    }
    // The braid measurements reuse the B gate's own signs; every other gate
    // is driven by B(1, 1).
    const int beps = op.gate == "B" ? op.eps : 1;
    const int beta = op.gate == "B" ? op.eta : 1;

    ScheduleStep prep;
    prep.kind = StepKind::kPrepare;
    prep.gate_name = gate_label(op);
    prep.qubits = op.targets;
    prep.clifford = clifford;
    for (int k = 0; k < ancillas; ++k) prep.labels.push_back(next_label + k);
    next_label += ancillas;
    if (strategy == Strategy::kBell) {
      prep.resource = two ? psi_cu(u) : psi_u(u);
      prep.resource_name =
          (two ? "psi_cu(" : "psi_u(") + prep.gate_name + ")";
    } else {
      prep.resource =
          two ? braid_resource_two(beps, beta, u) : braid_resource_single(u);
      prep.resource_name =
          (two ? "braid_quad(" : "braid_pair(") + prep.gate_name + ")";
    }
    const std::vector<int> anc = prep.labels;
    sched.steps.push_back(std::move(prep));

    ScheduleStep corr;
    corr.kind = StepKind::kCorrect;
    corr.gate_name = gate_label(op);
    corr.qubits = op.targets;
    corr.gate = u;
    corr.clifford = clifford;

    auto push_measure = [&](int first_label, int second_label) {
      ScheduleStep m;
      m.kind = StepKind::kMeasure;
      m.gate_name = gate_label(op);
      m.qubits = op.targets;
      m.labels = {first_label, second_label};
      m.basis = strategy == Strategy::kBell ? "bell" : "product";
      m.eps = beps;
      m.eta = beta;
      corr.sources.push_back(static_cast<int>(sched.steps.size()));
      sched.steps.push_back(std::move(m));
      ++sched.measure_count;
    };

    if (two) {
      const int q1 = op.targets[0], q2 = op.targets[1];
      push_measure(wire[static_cast<std::size_t>(q1)], anc[0]);
      push_measure(anc[3], wire[static_cast<std::size_t>(q2)]);
      corr.labels = {anc[1], anc[2]};
      corr.table = strategy == Strategy::kBell
                       ? two_gate_teleport(u)
                       : ybg_gate_teleport_two(beps, beta, u, 1, 1, 1, 1);
      wire[static_cast<std::size_t>(q1)] = anc[1];
      wire[static_cast<std::size_t>(q2)] = anc[2];
    } else {
      const int q = op.targets[0];
      push_measure(wire[static_cast<std::size_t>(q)], anc[0]);
      corr.labels = {anc[1]};
      corr.table = strategy == Strategy::kBell
                       ? single_gate_teleport(u)
                       : ybg_gate_teleport_single(1, 1, u, 1, 1);
      wire[static_cast<std::size_t>(q)] = anc[1];
    }
    sched.steps.push_back(std::move(corr));
  }

  sched.output_labels.clear();
  for (int q = 1; q <= c.num_qubits; ++q) {
    sched.output_labels.push_back(wire[static_cast<std::size_t>(q)]);
  }
  return sched;
}

ExecResult execute(const TeleportSchedule& sched, const StateVector& input,
                   const ExecOptions& options) {
  if (input.num_qubits != sched.num_qubits) {
    throw std::invalid_argument("input width does not match the schedule");
  }
  if (!options.outcomes.empty() &&
      static_cast<int>(options.outcomes.size()) != sched.measure_count) {
    throw std::invalid_argument("need one outcome per measurement step");
  }

  ExecResult result;
  StateVector reg = input;
  std::vector<int> slots;
  for (int q = 1; q <= sched.num_qubits; ++q) slots.push_back(q);
  std::vector<int> wire(static_cast<std::size_t>(sched.num_qubits) + 1);
  for (int q = 1; q <= sched.num_qubits; ++q) {
    wire[static_cast<std::size_t>(q)] = q;
  }
  FrameState frame(sched.num_qubits);
  std::mt19937_64 rng(options.seed);
  // Outcome of each measurement step, indexed by schedule position.
  std::vector<std::array<int, 2>> outcome_by_step(sched.steps.size(),
                                                  {0, 0});

  auto flush_frame = [&](const std::vector<int>& qubits) {
    for (int q : qubits) {
      const auto uq = static_cast<std::size_t>(q);
      if (frame.x[uq] == 0 && frame.z[uq] == 0) continue;
      PhasedPauli w = pauli_identity(1);
      w.x[0] = frame.x[uq];
      w.z[0] = frame.z[uq];
      reg = apply(to_matrix(w), {slot_of(slots, wire[uq])}, reg);
      frame.x[uq] = frame.z[uq] = 0;
    }
  };

  for (std::size_t si = 0; si < sched.steps.size(); ++si) {
    const ScheduleStep& step = sched.steps[si];
    switch (step.kind) {
      case StepKind::kPrepare: {
        if (!options.eager && !step.clifford) flush_frame(step.qubits);
        reg = tensor(reg, step.resource);
        for (int lbl : step.labels) slots.push_back(lbl);
        break;
      }
      case StepKind::kMeasure: {
        const int sa = slot_of(slots, step.labels[0]);
        const int sb = slot_of(slots, step.labels[1]);
        StateVector pre = reg;
        if (step.basis == "product") {
          pre = apply(make_b(step.eps, step.eta), {sa, sb}, pre);
        }
        const double pre_norm2 = pre.amps.squaredNorm();
        std::array<StateVector, 4> branch;
        std::array<double, 4> prob{};
        for (int o = 0; o < 4; ++o) {
          const Vector phi = step.basis == "bell"
                                 ? bell_state(o >> 1, o & 1).amps
                                 : basis_state(2, static_cast<std::uint64_t>(
                                                      o))
                                       .amps;
          branch[static_cast<std::size_t>(o)] =
              partial_inner_pair(pre, sa, sb, phi);
          prob[static_cast<std::size_t>(o)] =
              branch[static_cast<std::size_t>(o)].amps.squaredNorm() /
              pre_norm2;
        }
        int chosen;
        const std::size_t mi = result.outcomes.size();
        if (!options.outcomes.empty()) {
          const auto& bits = options.outcomes[mi];
          if ((bits[0] & ~1) != 0 || (bits[1] & ~1) != 0) {
            throw std::invalid_argument("outcome bits must be 0 or 1");
          }
          chosen = 2 * bits[0] + bits[1];
        } else {
          const double u01 = uniform01(rng);
          double acc = 0.0;
          chosen = 3;
          for (int o = 0; o < 4; ++o) {
            acc += prob[static_cast<std::size_t>(o)];
            if (u01 < acc) {
              chosen = o;
              break;
            }
          }
        }
        reg = branch[static_cast<std::size_t>(chosen)];
        reg.amps *= 2.0;
        slots.erase(std::find(slots.begin(), slots.end(), step.labels[0]));
        slots.erase(std::find(slots.begin(), slots.end(), step.labels[1]));
        result.outcomes.push_back({chosen >> 1, chosen & 1});
        result.probabilities.push_back(prob[static_cast<std::size_t>(chosen)]);
        result.branch_probability *= prob[static_cast<std::size_t>(chosen)];
        outcome_by_step[si] = {chosen >> 1, chosen & 1};
        break;
      }
      case StepKind::kCorrect: {
        std::size_t idx = 0;
        for (int src : step.sources) {
          const auto& bits = outcome_by_step[static_cast<std::size_t>(src)];
          idx = 4 * idx + static_cast<std::size_t>(2 * bits[0] + bits[1]);
        }
        const CorrectionEntry& entry = step.table.entries[idx];
        std::vector<int> target_slots;
        for (int lbl : step.labels) {
          target_slots.push_back(slot_of(slots, lbl));
        }
        if (options.eager) {
          reg = apply(entry.correction, target_slots, reg);
        } else if (step.clifford) {
          // True state = frame * phys. The teleport replaced phys with
          // residual * u * phys, so the new frame is u F u^dag residual^dag.
          const ConjugationResult conj =
              conjugate_by(step.gate, frame.word(step.qubits));
          if (!conj.is_pauli || !entry.is_pauli) {
            throw std::logic_error("clifford step produced non-pauli frame");
          }
          frame.store(step.qubits,
                      multiply(conj.pauli, adjoint(entry.pauli)));
        } else {
          // The frame was flushed when this gate's resource was prepared.
          if (entry.is_pauli) {
            frame.store(step.qubits, adjoint(entry.pauli));
          } else {
            reg = apply(entry.correction, target_slots, reg);
          }
        }
        for (std::size_t k = 0; k < step.qubits.size(); ++k) {
          wire[static_cast<std::size_t>(step.qubits[k])] = step.labels[k];
        }
        break;
      }
    }
  }

  if (!options.eager) {
    PhasedPauli word = pauli_identity(sched.num_qubits);
    for (int s = 1; s <= sched.num_qubits; ++s) {
      // Which circuit qubit lives in this slot?
      int q = 0;
      for (int cand = 1; cand <= sched.num_qubits; ++cand) {
        if (wire[static_cast<std::size_t>(cand)] ==
            slots[static_cast<std::size_t>(s - 1)]) {
          q = cand;
          break;
        }
      }
      word.x[static_cast<std::size_t>(s - 1)] =
          frame.x[static_cast<std::size_t>(q)];
      word.z[static_cast<std::size_t>(s - 1)] =
          frame.z[static_cast<std::size_t>(q)];
    }
    word.phase_pow = frame.phase_pow;
    Vector amps = to_matrix(word) * reg.amps;
    reg.amps = std::move(amps);
  }

  std::vector<int> perm;
  for (int q = 1; q <= sched.num_qubits; ++q) {
    perm.push_back(slot_of(slots, wire[static_cast<std::size_t>(q)]));
  }
  result.output = permute_qubits(reg, perm);
  return result;
}

BranchReport verify_all_branches(const CircuitIR& c, Strategy strategy,
                                 const StateVector& input, double tol) {
  const TeleportSchedule sched = compile(c, strategy);
  const Vector expect = circuit_unitary(c) * input.amps;
  BranchReport report;
  const int m = sched.measure_count;
  const long total = 1L << (2 * m);
  report.branches = static_cast<int>(total);
  for (long code = 0; code < total; ++code) {
    ExecOptions opt;
    opt.outcomes.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const int bits = static_cast<int>(code >> (2 * (m - 1 - k))) & 3;
      opt.outcomes[static_cast<std::size_t>(k)] = {bits >> 1, bits & 1};
    }
    const ExecResult deferred = execute(sched, input, opt);
    ExecOptions eager = opt;
    eager.eager = true;
    const ExecResult eagerly = execute(sched, input, eager);
    const PhaseMatch pm =
        equal_up_to_global_phase(deferred.output.amps, expect, tol);
    report.max_state_error = std::max(report.max_state_error, pm.residual);
    report.max_mode_gap = std::max(
        report.max_mode_gap,
        max_abs_diff(deferred.output.amps, eagerly.output.amps));
    for (double p : deferred.probabilities) {
      report.max_probability_error =
          std::max(report.max_probability_error, std::abs(p - 0.25));
    }
  }
  report.ok = report.max_state_error <= tol &&
              report.max_probability_error <= 1e-9 &&
              report.max_mode_gap <= tol;
  return report;
}

std::string schedule_to_json(const TeleportSchedule& sched) {
  JsonWriter w;
  w.begin_object();
  w.key("strategy");
  w.value_string(sched.strategy == Strategy::kBell ? "bell" : "ybg");
  w.key("num_qubits");
  w.value_int(sched.num_qubits);
  w.key("measure_count");
  w.value_int(sched.measure_count);
  w.key("peak_width");
  w.value_int(sched.peak_width);
  w.key("output_labels");
  w.begin_array();
  for (int lbl : sched.output_labels) w.value_int(lbl);
  w.end_array();
  w.key("steps");
  w.begin_array();
  for (const ScheduleStep& step : sched.steps) {
    w.begin_object();
    w.key("kind");
    switch (step.kind) {
      case StepKind::kPrepare:
        w.value_string("prepare");
        break;
      case StepKind::kMeasure:
        w.value_string("measure");
        break;
      case StepKind::kCorrect:
        w.value_string("correct");
        break;
    }
    w.key("gate");
    w.value_string(step.gate_name);
    w.key("qubits");
    w.begin_array();
    for (int q : step.qubits) w.value_int(q);
    w.end_array();
    w.key("labels");
    w.begin_array();
    for (int lbl : step.labels) w.value_int(lbl);
    w.end_array();
    if (step.kind == StepKind::kPrepare) {
      w.key("resource");
      w.value_string(step.resource_name);
      w.key("amplitudes");
      w.begin_array();
      for (Eigen::Index i = 0; i < step.resource.amps.size(); ++i) {
        w.value_complex(step.resource.amps[i]);
      }
      w.end_array();
    }
    if (step.kind == StepKind::kMeasure) {
      w.key("basis");
      w.value_string(step.basis);
      if (step.basis == "product") {
        w.key("eps");
        w.value_int(step.eps);
        w.key("eta");
        w.value_int(step.eta);
      }
    }
    if (step.kind == StepKind::kCorrect) {
      w.key("sources");
      w.begin_array();
      for (int s : step.sources) w.value_int(s);
      w.end_array();
      w.key("clifford");
      w.value_bool(step.clifford);
      w.key("entries");
      w.begin_array();
      for (const CorrectionEntry& e : step.table.entries) {
        w.begin_object();
        w.key("outcome");
        w.begin_array();
        for (int b : e.outcome) w.value_int(b);
        w.end_array();
        if (e.is_pauli) {
          w.key("residual");
          w.value_string(render(e.pauli));
          w.key("correction");
          w.value_string(render(adjoint(e.pauli)));
        } else {
          w.key("residual_matrix");
          emit_matrix(w, e.residual_op);
          w.key("correction_matrix");
          emit_matrix(w, e.correction);
        }
        w.end_object();
      }
      w.end_array();
    }
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace tlqc
