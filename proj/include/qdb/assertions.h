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

// Runtime checks over simulated states. Checks never throw on failure; they
// return a report and leave the state untouched.

#ifndef QDB_ASSERTIONS_H_
#define QDB_ASSERTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdb/qdata.h"
#include "qdb/statevec.h"

namespace qdb {

enum class AssertKind {
  kClassical,
  kUniform,
  kEntangled,
  kAncillaZero,
  kProgressTrotter,
  kProgressPrecision,
  // Success probability trajectory of amplitude amplification.
  kProgressAmplification,
  // Probability mass of an accepted output set.
  kOutputMass,
};

enum class Stage { kPre, kProgress, kPost };

enum class AssertLevel { kOff, kPre, kPost, kAll };

const char* to_string(AssertKind k);
const char* to_string(Stage s);
const char* to_string(AssertLevel l);
AssertLevel parse_assert_level(const std::string& s);

// Which stages a level enables: off = none, pre = pre, post = post,
// all = pre + progress + post.
bool enables(AssertLevel level, Stage stage);

struct StageSet {
  bool pre = false;
  bool progress = false;
  bool post = false;

  static StageSet of(AssertLevel level);
  bool has(Stage s) const;
};

struct AssertReport {
  AssertKind kind = AssertKind::kClassical;
  Stage stage = Stage::kPost;
  bool passed = true;
  std::string location;
  std::string message;
  double threshold = 0.0;
  // Size of the violation: failure probability for state checks, distance
  // past the threshold for scalar checks. Zero when passed.
  double deviation = 0.0;
  std::optional<Distribution> observed;
  std::vector<double> values;  // scalar observations, kind-specific
};

AssertReport assert_classical(const QuantumState& state, const QuReg& reg,
                              std::uint64_t expected, double eps = 1e-9);
AssertReport assert_uniform(const QuantumState& state, const QuReg& reg,
                            double eps = 1e-9);
AssertReport assert_entangled(const QuantumState& state,
                              const Qubits& partition,
                              double purity_max = 1.0 - 1e-6);
AssertReport assert_ancilla_zero(const QuantumState& state,
                                 const Qubits& qubits, double eps = 1e-9);
// Same threshold rule applied to an already-computed distribution.
AssertReport assert_ancilla_zero(const Distribution& observed,
                                 double eps = 1e-9);

// `results` holds (r, E(r)) with r doubling at each step.
AssertReport check_progress_trotter(
    const std::vector<std::pair<int, double>>& results, double tol);

// Passes when the mode of `high` rounds (down, or half up) to the mode of
// `low`.
AssertReport check_progress_precision(const Distribution& low,
                                      const Distribution& high);

// `observed[k]` is the success probability after k rounds, for k up to one
// past the chosen round count `peak`. Passes when each entry matches
// `expected` within eps, the trajectory is non-decreasing up to `peak`, and
// the extra round does not increase it further.
AssertReport check_progress_amplification(const std::vector<double>& observed,
                                          const std::vector<double>& expected,
                                          std::size_t peak, double eps = 1e-9);

// Passes when the mass of `accepted` values in `observed` is >= min_mass.
AssertReport assert_output_mass(const Distribution& observed,
                                const std::vector<std::uint64_t>& accepted,
                                double min_mass);

bool any_failed(const std::vector<AssertReport>& reports);

}  // namespace qdb

#endif  // QDB_ASSERTIONS_H_
