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

#include "qdb/assertions.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdb {

const char* to_string(AssertKind k) {
  switch (k) {
    case AssertKind::kClassical: return "classical";
    case AssertKind::kUniform: return "uniform";
    case AssertKind::kEntangled: return "entangled";
    case AssertKind::kAncillaZero: return "ancilla_zero";
    case AssertKind::kProgressTrotter: return "progress_trotter";
    case AssertKind::kProgressPrecision: return "progress_precision";
    case AssertKind::kProgressAmplification: return "progress_amplification";
    case AssertKind::kOutputMass: return "output_mass";
  }
  return "?";
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::kPre: return "pre";
    case Stage::kProgress: return "progress";
    case Stage::kPost: return "post";
  }
  return "?";
}

const char* to_string(AssertLevel l) {
  switch (l) {
    case AssertLevel::kOff: return "off";
    case AssertLevel::kPre: return "pre";
    case AssertLevel::kPost: return "post";
    case AssertLevel::kAll: return "all";
  }
  return "?";
}

AssertLevel parse_assert_level(const std::string& s) {
  if (s == "off") return AssertLevel::kOff;
  if (s == "pre") return AssertLevel::kPre;
  if (s == "post") return AssertLevel::kPost;
  if (s == "all") return AssertLevel::kAll;
  throw ArgumentError("unknown assert level '" + s + "'");
}

bool enables(AssertLevel level, Stage stage) {
  return StageSet::of(level).has(stage);
}

StageSet StageSet::of(AssertLevel level) {
  switch (level) {
    case AssertLevel::kOff: return {};
    case AssertLevel::kPre: return {true, false, false};
    case AssertLevel::kPost: return {false, false, true};
    case AssertLevel::kAll: return {true, true, true};
  }
  return {};
}

bool StageSet::has(Stage s) const {
  switch (s) {
    case Stage::kPre: return pre;
    case Stage::kProgress: return progress;
    case Stage::kPost: return post;
  }
  return false;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

AssertReport assert_classical(const QuantumState& state, const QuReg& reg,
                              std::uint64_t expected, double eps) {
  AssertReport r;
  r.kind = AssertKind::kClassical;
  r.location = reg.name();
  r.threshold = eps;
  r.observed = read_int(state, reg);
  const double p = (*r.observed)[expected];
  r.passed = p >= 1.0 - eps;
  r.deviation = r.passed ? 0.0 : 1.0 - p;
  r.values = {p};
  r.message = reg.name() + " = " + std::to_string(expected) +
              " with probability " + fmt(p);
  return r;
}

AssertReport assert_uniform(const QuantumState& state, const QuReg& reg,
                            double eps) {
  AssertReport r;
  r.kind = AssertKind::kUniform;
  r.location = reg.name();
  r.threshold = eps;
  r.observed = read_int(state, reg);
  const double target = 1.0 / static_cast<double>(r.observed->size());
  double worst = 0.0;
  for (double p : r.observed->probs()) worst = std::max(worst, std::abs(p - target));
  r.passed = worst <= eps;
  r.deviation = r.passed ? 0.0 : worst;
  r.values = {worst};
  r.message = reg.name() + " max deviation from uniform " + fmt(worst);
  return r;
}

AssertReport assert_entangled(const QuantumState& state,
                              const Qubits& partition, double purity_max) {
  AssertReport r;
  r.kind = AssertKind::kEntangled;
  r.threshold = purity_max;
  for (QubitId q : partition) {
    if (!r.location.empty()) r.location += ',';
    r.location += to_string(q);
  }
  const double purity = state.reduced_purity(partition);
  r.passed = purity <= purity_max;
  r.deviation = r.passed ? 0.0 : purity - purity_max;
  r.values = {purity};
  r.message = "reduced purity " + fmt(purity);
  return r;
}

AssertReport assert_ancilla_zero(const Distribution& observed, double eps) {
  AssertReport r;
  r.kind = AssertKind::kAncillaZero;
  r.threshold = eps;
  r.observed = observed;
  const double off = std::max(0.0, 1.0 - observed[0]);
  r.passed = off <= eps;
  r.deviation = r.passed ? 0.0 : off;
  r.values = {off};
  r.message = "P(nonzero) = " + fmt(off);
  return r;
}

AssertReport assert_ancilla_zero(const QuantumState& state,
                                 const Qubits& qubits, double eps) {
  AssertReport r = assert_ancilla_zero(state.probabilities(qubits), eps);
  for (QubitId q : qubits) {
    if (!r.location.empty()) r.location += ',';
    r.location += to_string(q);
  }
  return r;
}

AssertReport check_progress_trotter(
    const std::vector<std::pair<int, double>>& results, double tol) {
  if (results.size() < 2) {
    throw ArgumentError("Trotter progress check needs at least two step counts");
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].first != 2 * results[i - 1].first) {
      throw ArgumentError("Trotter step counts must double at each entry");
    }
  }
  AssertReport r;
  r.kind = AssertKind::kProgressTrotter;
  r.stage = Stage::kProgress;
  r.threshold = tol;
  std::vector<double> gaps;
  for (std::size_t i = 1; i < results.size(); ++i) {
    gaps.push_back(std::abs(results[i].second - results[i - 1].second));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    // Slack for roundoff in gaps that have already converged.
    if (gaps[i] > gaps[i - 1] + 1e-12) monotone = false;
  }
  const double last = gaps.back();
  r.passed = monotone && last <= tol;
  r.deviation = r.passed ? 0.0 : std::max(last - tol, monotone ? 0.0 : last);
  r.values = gaps;
  std::ostringstream os;
  os << "gaps";
  for (double g : gaps) os << ' ' << fmt(g);
  if (!monotone) os << " (not decreasing)";
  r.message = os.str();
  return r;
}

AssertReport check_progress_precision(const Distribution& low,
                                      const Distribution& high) {
  if (low.num_bits() == 0 || low.total() <= 0.0 || high.total() <= 0.0) {
    throw ArgumentError("precision check needs nonempty distributions");
  }
  if (high.num_bits() != low.num_bits() + 1) {
    throw ArgumentError("high-precision distribution must have one more bit");
  }
  AssertReport r;
  r.kind = AssertKind::kProgressPrecision;
  r.stage = Stage::kProgress;
  const std::uint64_t lo = low.mode();
  const std::uint64_t hi = high.mode();
  const std::uint64_t wrap = std::uint64_t{1} << low.num_bits();
  const std::uint64_t down = hi >> 1;
  const std::uint64_t up = ((hi + 1) >> 1) % wrap;
  r.passed = down == lo || up == lo;
  r.deviation = r.passed ? 0.0 : 1.0;
  r.values = {static_cast<double>(lo), static_cast<double>(hi)};
  r.observed = high;
  r.message = "low mode " + std::to_string(lo) + ", high mode " +
              std::to_string(hi);
  return r;
}

AssertReport check_progress_amplification(const std::vector<double>& observed,
                                          const std::vector<double>& expected,
                                          std::size_t peak, double eps) {
  if (observed.size() != peak + 2 || expected.size() != observed.size()) {
    throw ArgumentError("amplification check needs rounds 0..peak+1");
  }
  AssertReport r;
  r.kind = AssertKind::kProgressAmplification;
  r.stage = Stage::kProgress;
  r.threshold = eps;
  r.values = observed;
  double worst = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    worst = std::max(worst, std::abs(observed[k] - expected[k]));
  }
  double drop = 0.0;
  for (std::size_t k = 1; k <= peak; ++k) {
    drop = std::max(drop, observed[k - 1] - observed[k]);
  }
  const double overshoot = observed[peak + 1] - observed[peak];
  r.passed = worst <= eps && drop <= eps && overshoot <= eps;
  r.deviation = r.passed ? 0.0 : std::max({worst, drop, overshoot});
  r.message = "max trajectory error " + fmt(worst) + ", max drop " +
              fmt(drop) + ", gain after peak " + fmt(overshoot);
  return r;
}

AssertReport assert_output_mass(const Distribution& observed,
                                const std::vector<std::uint64_t>& accepted,
                                double min_mass) {
  AssertReport r;
  r.kind = AssertKind::kOutputMass;
  r.threshold = min_mass;
  r.observed = observed;
  double mass = 0.0;
  for (std::uint64_t v : accepted) mass += observed[v];
  r.passed = mass >= min_mass;
  r.deviation = r.passed ? 0.0 : min_mass - mass;
  r.values = {mass};
  r.message = "accepted mass " + fmt(mass) + " (need " + fmt(min_mass) + ")";
  return r;
}

bool any_failed(const std::vector<AssertReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const AssertReport& r) { return !r.passed; });
}

}  // namespace qdb
