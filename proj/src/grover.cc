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
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#include "branch.h"
#include "qdb/bench.h"

namespace qdb {

namespace {

Qubits span_of(std::uint32_t from, std::size_t count) {
  Qubits qs;
  for (std::size_t i = 0; i < count; ++i) {
    qs.push_back(qubit(from + static_cast<std::uint32_t>(i)));
  }
  return qs;
}

}  // namespace

Block make_bitmask_oracle(std::size_t n, std::uint64_t marked) {
  if (n < 1) throw ArgumentError("oracle needs at least one qubit");
  if (marked >= (std::uint64_t{1} << n)) {
    throw ArgumentError("marked value out of range");
  }
  const Qubits q = span_of(0, n);
  Block flips("select");
  for (std::size_t i = 0; i < n; ++i) {
    if (!((marked >> i) & 1)) flips.x(q[i]);
  }
  Block mcz("mcz");
  if (n == 1) {
    mcz.z(q[0]);
  } else {
    Block z;
    z.z(q[n - 1]);
    mcz.controlled(Qubits(q.begin(), q.end() - 1), std::move(z));
  }
  Block out("oracle(" + std::to_string(marked) + ")");
  if (flips.empty()) {
    out.append(mcz);
  } else {
    out.compute_uncompute(std::move(flips), std::move(mcz));
  }
  return out;
}

int grover_default_iterations(std::size_t n, std::size_t marked_count) {
  const double ratio = std::ldexp(1.0, static_cast<int>(n)) /
                       static_cast<double>(marked_count);
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

Block grover_prepare(std::size_t n, const Mutations& mut) {
  Block prep("prepare");
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 && mut.grover_skip_prep_h0) continue;
    prep.h(qubit(static_cast<std::uint32_t>(i)));
  }
  return prep;
}

Block grover_diffusion(std::size_t n, const Qubits& anc, const Mutations& mut) {
  const Qubits q = span_of(0, n);
  if (n >= 3 && anc.size() < n - 2) {
    throw ArgumentError("diffusion needs n-2 chain ancillas");
  }
  Block hl("h-layer"), xl("x-layer");
  for (QubitId v : q) hl.h(v);
  for (QubitId v : q) xl.x(v);

  // Phase flip on |1...1>: Toffoli chain into the ancillas, then cZ.
  Block flip("mcz");
  if (n == 1) {
    flip.z(q[0]);
  } else if (n == 2) {
    flip.cz(q[0], q[1]);
  } else {
    Block chain("chain");
    const QubitId second = mut.grover_chain_wrong_control ? q[2] : q[1];
    chain.toffoli(q[0], second, anc[0]);
    for (std::size_t j = 1; j + 2 < n; ++j) {
      chain.toffoli(anc[j - 1], q[j + 1], anc[j]);
    }
    Block cz("cz");
    cz.cz(anc[n - 3], q[n - 1]);
    flip.compute_uncompute(std::move(chain), std::move(cz));
  }

  Block out("diffusion");
  if (mut.grover_unmirrored_diffusion) {
    // Undo replays the layers in their original order.
    out.append(hl).append(xl).append(flip).append(hl).append(xl);
    return out;
  }
  Block layers("layers");
  layers.append(hl).append(xl);
  out.compute_uncompute(std::move(layers), std::move(flip));
  return out;
}

BenchmarkResult run_grover(const GroverConfig& cfg, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = cfg.n;
  if (n < 1 || n > 8) throw ArgumentError("grover supports 1..8 qubits");
  const std::uint64_t big_n = std::uint64_t{1} << n;
  const std::set<std::uint64_t> uniq(cfg.marked.begin(), cfg.marked.end());
  if (uniq.empty() || uniq.size() != cfg.marked.size() || uniq.size() >= big_n ||
      *uniq.rbegin() >= big_n) {
    throw ArgumentError("grover needs distinct marked values in [0, 2^n), fewer than 2^n");
  }
  const Mutations& mut = opts.mutations;
  const std::size_t big_m = uniq.size();
  const int iterations = mut.grover_iterations.value_or(
      cfg.iterations.value_or(grover_default_iterations(n, big_m)));
  if (iterations < 0) throw ArgumentError("iterations must be >= 0");

  const QuReg data("q", span_of(0, n));
  const std::size_t num_anc = n >= 3 ? n - 2 : 0;
  const Qubits anc = span_of(static_cast<std::uint32_t>(n), num_anc);
  std::optional<QuReg> anc_reg;
  if (num_anc > 0) anc_reg.emplace("anc", anc);

  const Block prep = grover_prepare(n, mut);
  Block round("grover iteration");
  for (std::uint64_t v : cfg.marked) round.call(make_bitmask_oracle(n, v));
  round.call(grover_diffusion(n, anc, mut));

  ExecOptions exec;
  exec.free_policy = FreePolicy::kUnsafe;
  exec.throw_on_requirement = false;

  BenchmarkResult res;
  res.name = "grover";
  res.seed = opts.seed;

  QuantumState s(n + num_anc);
  Executor(s, exec).run(prep);
  if (opts.stages.pre) {
    AssertReport u = assert_uniform(s, data);
    u.stage = Stage::kPre;
    u.location = "grover/prepare";
    res.assert_reports.push_back(std::move(u));
  }

  auto success = [&](const QuantumState& st) {
    const Distribution d = read_int(st, data);
    double p = 0.0;
    for (std::uint64_t v : uniq) p += d[v];
    return p;
  };
  std::vector<double> trajectory{success(s)};
  double worst_anc = 1.0;
  std::vector<DirtyFree> dirty;
  for (int k = 0; k < iterations; ++k) {
    Executor ex(s, exec);
    ex.run(round);
    dirty.insert(dirty.end(), ex.dirty_frees().begin(), ex.dirty_frees().end());
    if (opts.stages.progress) {
      trajectory.push_back(success(s));
      if (num_anc > 0) worst_anc = std::min(worst_anc, read_int(s, *anc_reg)[0]);
    }
  }

  if (opts.stages.progress) {
    // One extra round on a copy shows whether the peak was reached.
    QuantumState probe = s;
    Executor(probe, exec).run(round);
    trajectory.push_back(success(probe));
    const double theta = std::asin(std::sqrt(static_cast<double>(big_m) / big_n));
    std::vector<double> expected;
    for (std::size_t j = 0; j < trajectory.size(); ++j) {
      expected.push_back(std::pow(std::sin((2.0 * j + 1.0) * theta), 2));
    }
    AssertReport amp = check_progress_amplification(
        trajectory, expected, static_cast<std::size_t>(iterations));
    amp.location = "grover/amplification";
    res.assert_reports.push_back(std::move(amp));
    if (num_anc > 0) {
      std::vector<double> p(std::size_t{1} << num_anc, 0.0);
      p[0] = worst_anc;
      if (p.size() > 1) p[1] = 1.0 - worst_anc;
      AssertReport a = assert_ancilla_zero(Distribution(num_anc, std::move(p)));
      a.stage = Stage::kProgress;
      a.location = "grover/iteration ancillas";
      res.assert_reports.push_back(std::move(a));
    }
    for (const DirtyFree& d : dirty) {
      AssertReport a = assert_ancilla_zero(d.residual);
      a.stage = Stage::kProgress;
      a.location = d.location;
      res.assert_reports.push_back(std::move(a));
      break;  // first dirty free is enough evidence
    }
  }

  res.output_distribution = read_int(s, data);
  res.ancilla_distribution = num_anc > 0 ? read_int(s, *anc_reg) : Distribution();
  const double p_success = success(s);

  if (opts.stages.post) {
    AssertReport m = assert_output_mass(
        res.output_distribution, cfg.marked,
        1.0 - static_cast<double>(big_m) / big_n - 1e-9);
    m.stage = Stage::kPost;
    m.location = "grover/success";
    res.assert_reports.push_back(std::move(m));
    if (num_anc > 0) {
      AssertReport a = assert_ancilla_zero(res.ancilla_distribution);
      a.location = "grover/final ancillas";
      res.assert_reports.push_back(std::move(a));
    }
  }

  res.metrics["success_probability"] = p_success;
  res.metrics["iterations"] = iterations;
  if (opts.shots > 0) {
    Rng rng(opts.seed);
    res.counts = detail::sample_counts(res.output_distribution, opts.shots, rng);
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace qdb
