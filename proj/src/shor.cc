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

#include <chrono>

#include "branch.h"
#include "qdb/bench.h"

namespace qdb {

std::vector<std::pair<std::int64_t, std::int64_t>> shor15_schedule(
    std::int64_t guess, std::size_t bits) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t a = ((guess % 15) + 15) % 15;
  for (std::size_t k = 0; k < bits; ++k) {
    out.emplace_back(a, mod_inverse(a, 15));
    a = a * a % 15;
  }
  return out;
}

namespace {

Qubits span_of(std::uint32_t from, std::uint32_t count) {
  Qubits qs;
  for (std::uint32_t i = 0; i < count; ++i) qs.push_back(qubit(from + i));
  return qs;
}

AssertReport dirty_report(const DirtyFree& d, Stage stage) {
  AssertReport r = assert_ancilla_zero(d.residual);
  r.stage = stage;
  r.location = d.location.empty() ? "scratch" : d.location;
  return r;
}

}  // namespace

BenchmarkResult run_shor15(const ShorConfig& cfg, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.bits < 1 || cfg.bits > 8) throw ArgumentError("shor15 needs 1..8 bits");
  const Mutations& mut = opts.mutations;
  const auto schedule = shor15_schedule(cfg.guess, cfg.bits);

  // c = q0, x = q1..q4, acc = q5..q9; scratch is allocated above.
  const QubitId c = qubit(0);
  const QuInt x(QuReg("x", span_of(1, 4)));
  const QuReg acc("acc", span_of(5, 5));
  const Qubits cq{c};

  BenchmarkResult res;
  res.name = "shor15";
  res.seed = opts.seed;

  std::vector<detail::Branch> branches;
  branches.push_back({QuantumState(10), 1.0, 0});
  Executor(branches[0].state).run(encode_classical(x.reg(), 1));

  if (opts.stages.pre) {
    AssertReport xr = assert_classical(branches[0].state, x.reg(), 1);
    xr.stage = Stage::kPre;
    xr.location = "shor15/init x";
    res.assert_reports.push_back(std::move(xr));
    AssertReport ar = assert_ancilla_zero(branches[0].state, acc.qubits());
    ar.stage = Stage::kPre;
    ar.location = "shor15/init acc";
    res.assert_reports.push_back(std::move(ar));
  }

  ExecOptions exec;
  exec.free_policy = FreePolicy::kUnsafe;
  exec.lift.abc = mut.abc;
  exec.throw_on_requirement = false;

  for (std::size_t k = 0; k < cfg.bits; ++k) {
    auto [a, a_inv] = schedule[k];
    if (k == 0 && mut.shor_inverse_k0) a_inv = *mut.shor_inverse_k0;
    res.schedule.emplace_back(a, a_inv);
    const ModulusContext ctx = ModulusContext::unchecked(15, a, a_inv);
    Block step("iteration " + std::to_string(k));
    step.h(c);
    step.call(c_ua(x, ctx, c, acc, mut.arith));
    step.h(c);

    std::vector<DirtyFree> dirty;
    for (detail::Branch& b : branches) {
      Executor ex(b.state, exec);
      ex.run(step);
      dirty.insert(dirty.end(), ex.dirty_frees().begin(), ex.dirty_frees().end());
      dirty.insert(dirty.end(), ex.requirement_failures().begin(),
                   ex.requirement_failures().end());
    }
    if (opts.stages.progress) {
      std::vector<double> w(std::size_t{1} << 5, 0.0);
      for (const detail::Branch& b : branches) {
        const Distribution d = read_int(b.state, acc);
        for (std::size_t v = 0; v < w.size(); ++v) w[v] += b.weight * d.probs()[v];
      }
      AssertReport pr = assert_ancilla_zero(detail::normalized(5, std::move(w)));
      pr.stage = Stage::kProgress;
      pr.location = "shor15/iteration " + std::to_string(k) + " acc";
      res.assert_reports.push_back(std::move(pr));
      // One report for the worst scratch free of this iteration.
      const DirtyFree* worst = nullptr;
      for (const DirtyFree& d : dirty) {
        if (!worst || d.residual[0] < worst->residual[0]) worst = &d;
      }
      if (worst) res.assert_reports.push_back(dirty_report(*worst, Stage::kProgress));
    }
    const std::size_t pos = mut.shor_lsb_first ? k : cfg.bits - 1 - k;
    detail::measure_and_reset(branches, c, pos);
  }

  const std::size_t m = cfg.bits;
  std::vector<double> joint(std::size_t{1} << (m + 5), 0.0);
  std::vector<double> ctrl(2, 0.0);
  for (const detail::Branch& b : branches) {
    const Distribution d = read_int(b.state, acc);
    for (std::size_t v = 0; v < d.size(); ++v) {
      joint[(v << m) | b.bits] += b.weight * d.probs()[v];
    }
    const Distribution cd = b.state.probabilities(cq);
    ctrl[0] += b.weight * cd[0];
    ctrl[1] += b.weight * cd[1];
  }
  const Distribution jd = detail::normalized(m + 5, std::move(joint));
  std::vector<double> out(std::size_t{1} << m, 0.0), anc(32, 0.0);
  for (std::size_t v = 0; v < jd.size(); ++v) {
    out[v & ((std::size_t{1} << m) - 1)] += jd.probs()[v];
    anc[v >> m] += jd.probs()[v];
  }
  res.output_distribution = Distribution(m, std::move(out));
  res.ancilla_distribution = Distribution(5, std::move(anc));
  res.joint_distribution = jd;

  if (opts.stages.post) {
    AssertReport ar = assert_ancilla_zero(res.ancilla_distribution);
    ar.location = "shor15/final acc";
    res.assert_reports.push_back(std::move(ar));
    AssertReport cr;
    cr.kind = AssertKind::kClassical;
    cr.stage = Stage::kPost;
    cr.location = "shor15/final control";
    cr.threshold = 1e-9;
    cr.observed = detail::normalized(1, std::move(ctrl));
    cr.deviation = 1.0 - (*cr.observed)[0];
    cr.passed = cr.deviation <= cr.threshold;
    if (cr.passed) cr.deviation = 0.0;
    cr.message = "control returned to |0>";
    res.assert_reports.push_back(std::move(cr));
  }

  if (opts.shots > 0) {
    Rng rng(opts.seed);
    res.counts = detail::sample_counts(res.output_distribution, opts.shots, rng);
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace qdb
