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

// JSON and plain-text rendering of runs, bug catalogs and coverage matrices.

#ifndef QDB_REPORT_H_
#define QDB_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdb/buglab.h"

namespace qdb {

inline constexpr int kSchemaVersion = 1;

// Distribution entries below this probability are omitted from reports.
inline constexpr double kSupportCutoff = 1e-12;

using Json = nlohmann::ordered_json;

struct RunRecord {
  BenchmarkConfig config;
  std::optional<std::string> bug_id;
  std::string bug_site;
  AssertLevel level = AssertLevel::kOff;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  // h2 only.
  std::string hamiltonian_file;
  BenchmarkResult result;
};

// 0 when every report passed, 2 otherwise.
int exit_code(const BenchmarkResult& r);

Json to_json(const Distribution& d);
Json to_json(const AssertReport& r);
Json to_json(const RunRecord& run);
std::string to_table(const RunRecord& run);

Json to_json(const BugSpec& b);
// Looks the id up in the shipped catalog and checks every recorded field.
// Throws ArgumentError on mismatch.
BugSpec bug_from_json(const Json& j);
Json catalog_json(const std::vector<BugSpec>& bugs);
std::string catalog_table(const std::vector<BugSpec>& bugs);

Json benchmarks_json();
std::string benchmarks_table();

Json to_json(const CoverageMatrix& m);
std::string matrix_table(const CoverageMatrix& m);

}  // namespace qdb

#endif  // QDB_REPORT_H_
