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

#ifndef QDB_BUGLAB_H_
#define QDB_BUGLAB_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdb/bench.h"

namespace qdb {

enum class BenchmarkId { kH2, kShor15, kGrover };

const char* to_string(BenchmarkId b);
// Throws ArgumentError.
BenchmarkId parse_benchmark(const std::string& s);
const std::vector<BenchmarkId>& all_benchmarks();

struct BenchmarkConfig {
  BenchmarkId id = BenchmarkId::kShor15;
  H2Config h2;
  ShorConfig shor;
  GroverConfig grover;

  // Defaults for `id`; loads the shipped hamiltonian for h2.
  static BenchmarkConfig defaults(BenchmarkId id);
};

BenchmarkResult run_benchmark(const BenchmarkConfig& cfg,
                              const RunOptions& opts);

enum class TaxonomyClass {
  kClassicalInput,
  kInitialValue,
  kWrongOperation,
  kWrongIndexing,
  kWrongEncoding,
  kBadDeallocation,
  kInsufficientProgress,
};

// Where in a program the bug sits (matrix columns).
enum class BugLocation {
  kClassicalParams,
  kQubitAlloc,
  kBasic,
  kIterate,
  kMirror,
  kRecurse,
  kDealloc,
};

// Matrix rows. The first four are constructive language features, the last
// three are runtime assertion stages.
enum class Defense {
  kUnitTesting,
  kDataTypes,
  kReverseComp,
  kControlledOps,
  kPreconditions,
  kProgress,
  kPostconditions,
};

enum class Verdict { kDetected, kMissed, kNotApplicable };

const char* to_string(TaxonomyClass c);
const char* to_string(BugLocation l);
const char* to_string(Defense d);
const char* to_string(Verdict v);
const std::vector<TaxonomyClass>& all_taxonomy_classes();
const std::vector<BugLocation>& all_locations();
const std::vector<Defense>& all_defenses();
bool is_constructive(Defense d);

struct UnitCheck {
  bool mismatch = false;
  std::string evidence;
};

struct BugSpec {
  std::string id;
  TaxonomyClass taxonomy = TaxonomyClass::kClassicalInput;
  BugLocation location = BugLocation::kClassicalParams;
  BenchmarkId benchmark = BenchmarkId::kShor15;
  std::string subroutine;
  std::string mutation;
  // Member of the seven-bug evaluation suite.
  bool in_suite = false;
  // Constructive defenses whose interface cannot express this mutation,
  // with the reason.
  std::map<Defense, std::string> prevented_by;

  // Empty string when applicable to cfg, else the reason.
  std::string (*check)(const BenchmarkConfig& cfg) = nullptr;
  void (*apply)(const BenchmarkConfig& cfg, Mutations& m) = nullptr;
  // Subroutine-level oracle comparison; null when no isolated unit exists.
  UnitCheck (*unit_test)() = nullptr;
};

// Stable order; ids are unique.
const std::vector<BugSpec>& bug_catalog();
std::vector<BugSpec> bug_suite();
// Throws ArgumentError for unknown ids.
const BugSpec& find_bug(const std::string& id);

struct Program {
  BugSpec bug;
  BenchmarkConfig config;
  Mutations mutations;
  std::string site;  // benchmark/subroutine: mutation

  BenchmarkResult run(RunOptions opts) const;
};

// Throws ValidationError if the bug does not apply to `cfg`.
Program inject(const BenchmarkConfig& cfg, const BugSpec& bug);

struct CellEvidence {
  std::string bug_id;
  Defense defense = Defense::kUnitTesting;
  BugLocation location = BugLocation::kClassicalParams;
  Verdict verdict = Verdict::kMissed;
  std::string evidence;
};

struct CoverageMatrix {
  std::map<std::pair<Defense, BugLocation>, Verdict> cells;
  std::vector<CellEvidence> evidence;
  // Unmutated benchmark runs whose checks failed.
  std::vector<std::string> false_positives;
  std::vector<std::uint64_t> seeds;

  Verdict at(Defense d, BugLocation l) const;
};

// Failing report probability at or above this counts as a detection.
inline constexpr double kDetectionThreshold = 1e-6;

CoverageMatrix evaluate_matrix(const std::vector<BugSpec>& bugs,
                               const std::vector<Defense>& defenses,
                               const std::vector<std::uint64_t>& seeds);

}  // namespace qdb

#endif  // QDB_BUGLAB_H_
