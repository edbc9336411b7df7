// Copyright 2026 The qdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "branch.h"
#include "qdb/bench.h"

namespace qdb {

namespace {

std::uint32_t max_qubit(const std::vector<Instruction>& list) {
  std::uint32_t top = 0;
  for (const Instruction& ins : list) {
    for (QubitId q : ins.qubits) top = std::max(top, q.index);
  }
  return top;
}

}  // namespace

IpeResult run_ipe(const std::function<Block(std::size_t)>& power,
                  const Block& prep, std::size_t num_system, std::size_t m,
                  std::size_t shots, std::uint64_t seed,
                  const LiftOptions& lift) {
  if (m < 1) throw ArgumentError("phase estimation needs m >= 1");
  const QubitId ctrl = qubit(static_cast<std::uint32_t>(num_system));

  // Each controlled power is lowered once and replayed on every branch.
  std::vector<std::vector<Instruction>> lists(m);
  std::uint32_t top = ctrl.index;
  for (std::size_t j = 0; j < m; ++j) {
    Block c("controlled_power");
    c.controlled({ctrl}, power(j));
    lists[j] = lower(c, lift);
    top = std::max(top, max_qubit(lists[j]));
  }
  // Chain ancillas from lowering, if any, sit above the control.
  std::vector<detail::Branch> branches;
  branches.push_back({QuantumState(top + 1), 1.0, 0});
  Executor(branches[0].state).run(prep);

  for (std::size_t k = 0; k < m; ++k) {
    const std::vector<Instruction>& list = lists[m - 1 - k];
    for (detail::Branch& b : branches) {
      apply_instruction(b.state, {gates::h(), {ctrl}});
      for (const Instruction& ins : list) apply_instruction(b.state, ins);
      if (k > 0 && b.bits != 0) {
        const double acc = static_cast<double>(b.bits) / std::ldexp(1.0, static_cast<int>(k));
        apply_instruction(b.state, {gates::p(-std::numbers::pi * acc), {ctrl}});
      }
      apply_instruction(b.state, {gates::h(), {ctrl}});
    }
    detail::measure_and_reset(branches, ctrl, k);
  }

  std::vector<double> phase(std::size_t{1} << m, 0.0);
  Qubits sys;
  for (std::size_t i = 0; i < num_system; ++i) {
    sys.push_back(qubit(static_cast<std::uint32_t>(i)));
  }
  std::vector<double> system(std::size_t{1} << num_system, 0.0);
  for (const detail::Branch& b : branches) {
    phase[b.bits] += b.weight;
    const Distribution d = b.state.probabilities(sys);
    for (std::size_t v = 0; v < d.size(); ++v) system[v] += b.weight * d.probs()[v];
  }
  IpeResult out;
  out.phase = detail::normalized(m, std::move(phase));
  out.system = detail::normalized(num_system, std::move(system));
  if (shots > 0) {
    Rng rng(seed);
    out.counts = detail::sample_counts(out.phase, shots, rng);
  }
  return out;
}

}  // namespace qdb
