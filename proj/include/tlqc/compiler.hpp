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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tlqc/numerics.hpp"
#include "tlqc/pauli.hpp"
#include "tlqc/teleport.hpp"

namespace tlqc {

// Gate circuits compiled to measurement-based teleportation schedules.
//
// A circuit acts on 1..4 qubits with gates from {H, S, T, X, Z, CNOT, CZ, B}.
// Every gate is consumed by one teleportation: an entangled resource is
// adjoined, the data wires are measured against it, and the table entry
// selected by the outcome undoes the branch residual. Wires are tracked by
// persistent integer labels so the schedule never renumbers earlier steps;
// circuit qubit q starts on label q and ancilla labels count upward from
// num_qubits + 1.

struct CircuitOp {
  std::string gate;          // H, S, T, X, Z, CNOT, CZ, B
  std::vector<int> targets;  // 1-based circuit qubits; 2q gates list (q1, q2)
  int eps = 1, eta = 1;      // sign pair of the B gate; ignored otherwise
};

struct CircuitIR {
  int num_qubits = 1;  // 1..4
  std::vector<CircuitOp> ops;
};

// Throws std::invalid_argument on malformed circuits: qubit counts outside
// 1..4, unknown gates, bad target arity, out-of-range or repeated targets,
// signs other than +-1.
void validate_circuit(const CircuitIR& c);

// Dense matrix of one gate (2x2 or 4x4) and of the whole circuit.
Matrix op_matrix(const CircuitOp& op);
Matrix circuit_unitary(const CircuitIR& c);

// JSON form: {"num_qubits": n, "ops": [{"gate": "H", "targets": [1]},
// {"gate": "B", "targets": [1, 2], "eps": 1, "eta": -1}, ...]}.
CircuitIR circuit_from_json(const std::string& text);
std::string circuit_to_json(const CircuitIR& c);

// kBell consumes Bell measurements against (1 (x) u)|Psi> resources; kYbg
// realizes each Bell measurement as a braiding operator followed by a
// product-basis readout, with resources prepared from |1...1>.
enum class Strategy { kBell, kYbg };

enum class StepKind { kPrepare, kMeasure, kCorrect };

struct ScheduleStep {
  StepKind kind = StepKind::kPrepare;
  std::string gate_name;     // circuit gate this step belongs to
  std::vector<int> qubits;   // circuit targets of that gate

  // kPrepare: adjoin `resource` on fresh wires `labels` (listed in order).
  // kMeasure: measure the wire pair `labels`; basis "bell" projects the Bell
  //   states, basis "product" applies B(eps, eta) to the pair and then
  //   projects the computational basis. Either way the outcome is two bits
  //   (i, j).
  // kCorrect: apply the `table` entry selected by the outcome bits of the
  //   measurement steps in `sources` (big-endian, first source highest) to
  //   the wires `labels`.
  std::vector<int> labels;
  StateVector resource;       // kPrepare
  std::string resource_name;  // kPrepare, for rendering
  std::string basis;          // kMeasure
  int eps = 1, eta = 1;       // kMeasure with basis "product"
  std::vector<int> sources;   // kCorrect: indices into schedule.steps
  CorrectionTable table;      // kCorrect
  Matrix gate;                // kCorrect: dense gate, drives frame updates
  bool clifford = true;       // kPrepare/kCorrect: gate maps words to words
};

struct TeleportSchedule {
  Strategy strategy = Strategy::kBell;
  int num_qubits = 1;
  std::vector<ScheduleStep> steps;
  std::vector<int> output_labels;  // label carrying circuit qubit q at q-1
  int peak_width = 0;              // most wires simultaneously live
  int measure_count = 0;
};

TeleportSchedule compile(const CircuitIR& c, Strategy strategy);

struct ExecOptions {
  // One (i, j) pair per measurement step. Empty selects seeded sampling from
  // the branch distribution.
  std::vector<std::array<int, 2>> outcomes;
  std::uint64_t seed = 1;
  // Apply corrections as dense gates when their step fires instead of
  // deferring words in the Pauli frame.
  bool eager = false;
};

struct ExecResult {
  std::vector<std::array<int, 2>> outcomes;  // per measurement step
  std::vector<double> probabilities;         // per measurement step
  double branch_probability = 1.0;           // product of the above
  StateVector output;  // corrections applied, wires in circuit order
};

// Runs the schedule on `input` (num_qubits wide, normalized). Non-Pauli
// corrections are always applied when their step fires; Pauli corrections of
// Clifford gates ride in the frame unless options.eager is set. Both modes
// produce identical outputs, not merely equal up to phase.
ExecResult execute(const TeleportSchedule& schedule, const StateVector& input,
                   const ExecOptions& options = {});

struct BranchReport {
  int branches = 0;
  double max_state_error = 0.0;  // vs circuit_unitary, up to global phase
  double max_probability_error = 0.0;  // per-measurement vs 1/4
  double max_mode_gap = 0.0;           // eager vs deferred output
  bool ok = false;
};

// Enumerates every outcome tuple and checks each branch reproduces the
// circuit unitary on `input` up to a global phase.
BranchReport verify_all_branches(const CircuitIR& c, Strategy strategy,
                                 const StateVector& input,
                                 double tol = kDefaultTol);

// Deterministic JSON rendering of a schedule: steps in order, correction
// entries ascending by outcome, Pauli entries as rendered words, others as
// dense matrices.
std::string schedule_to_json(const TeleportSchedule& schedule);

}  // namespace tlqc
