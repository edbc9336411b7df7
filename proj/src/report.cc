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

#include "qdb/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qdb {

int exit_code(const BenchmarkResult& r) { return any_failed(r.assert_reports) ? 2 : 0; }

Json to_json(const Distribution& d) {
  Json support = Json::array();
  for (const auto& [v, p] : d.support(kSupportCutoff)) {
    support.push_back({{"value", v}, {"probability", p}});
  }
  return {{"num_bits", d.num_bits()}, {"support", std::move(support)}};
}

Json to_json(const AssertReport& r) {
  Json j = {{"kind", to_string(r.kind)},
            {"stage", to_string(r.stage)},
            {"passed", r.passed},
            {"location", r.location},
            {"message", r.message},
            {"threshold", r.threshold},
            {"deviation", r.deviation}};
  if (!r.values.empty()) j["values"] = r.values;
  if (r.observed) j["observed"] = to_json(*r.observed);
  return j;
}

namespace {

std::string assignment_name(const ElectronAssignment& a) {
  for (const auto& [name, e] : ElectronAssignment::all()) {
    if (e.occupation == a.occupation) return name;
  }
  return a.bits();
}

Json config_json(const RunRecord& run) {
  const BenchmarkConfig& c = run.config;
  Json j;
  switch (c.id) {
    case BenchmarkId::kH2:
      j["hamiltonian_file"] = run.hamiltonian_file;
      j["num_terms"] = c.h2.hamiltonian.terms.size();
      j["assignment"] = assignment_name(c.h2.assignment);
      j["occupation"] = c.h2.assignment.bits();
      j["t"] = c.h2.t;
      j["r"] = c.h2.r;
      j["m"] = c.h2.m;
      break;
    case BenchmarkId::kShor15:
      j["modulus"] = 15;
      j["guess"] = c.shor.guess;
      j["bits"] = c.shor.bits;
      break;
    case BenchmarkId::kGrover:
      j["n"] = c.grover.n;
      j["marked"] = c.grover.marked;
      j["iterations"] = c.grover.iterations.value_or(
          grover_default_iterations(c.grover.n, c.grover.marked.size()));
      break;
  }
  j["bug"] = run.bug_id ? Json(*run.bug_id) : Json(nullptr);
  if (run.bug_id) j["mutation_site"] = run.bug_site;
  j["assert_level"] = to_string(run.level);
  j["shots"] = run.shots;
  return j;
}

Json exit_json(const BenchmarkResult& r) {
  std::size_t failed = 0;
  for (const AssertReport& a : r.assert_reports) failed += a.passed ? 0 : 1;
  const int code = exit_code(r);
  return {{"exit_code", code},
          {"failed_assertions", failed},
          {"meaning", code == 0 ? "run complete, all assertions passed"
                                : "run complete, at least one assertion failed"}};
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

Json to_json(const RunRecord& run) {
  const BenchmarkResult& r = run.result;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["benchmark"] = to_string(run.config.id);
  j["seed"] = run.seed;
  j["config"] = config_json(run);
  j["output_distribution"] = to_json(r.output_distribution);
  j["ancilla_distribution"] = to_json(r.ancilla_distribution);
  Json reports = Json::array();
  for (const AssertReport& a : r.assert_reports) reports.push_back(to_json(a));
  j["assert_reports"] = std::move(reports);
  j["exit_semantics"] = exit_json(r);
  if (r.joint_distribution) j["joint_distribution"] = to_json(*r.joint_distribution);
  if (r.energy_estimate) j["energy_estimate"] = *r.energy_estimate;
  if (!r.counts.empty()) {
    Json counts = Json::array();
    for (std::size_t v = 0; v < r.counts.size(); ++v) {
      if (r.counts[v] > 0) counts.push_back({{"value", v}, {"count", r.counts[v]}});
    }
    j["counts"] = std::move(counts);
  }
  if (!r.schedule.empty()) {
    Json sched = Json::array();
    for (const auto& [a, a_inv] : r.schedule) sched.push_back({{"a", a}, {"a_inv", a_inv}});
    j["schedule"] = std::move(sched);
  }
  if (!r.metrics.empty()) j["metrics"] = r.metrics;
  j["wall_time"] = r.wall_time;
  return j;
}

std::string to_table(const RunRecord& run) {
  const BenchmarkResult& r = run.result;
  std::ostringstream os;
  os << "benchmark  " << to_string(run.config.id) << "\n"
     << "seed       " << run.seed << "\n"
     << "shots      " << run.shots << "\n"
     << "level      " << to_string(run.level) << "\n"
     << "bug        " << (run.bug_id ? *run.bug_id + " (" + run.bug_site + ")" : "none")
     << "\n";
  if (r.energy_estimate) os << "energy     " << fixed(*r.energy_estimate) << " Ha\n";
  for (const auto& [k, v] : r.metrics) os << k << "  " << v << "\n";
  if (!r.schedule.empty()) {
    os << "schedule  ";
    for (const auto& [a, a_inv] : r.schedule) os << " (" << a << ", " << a_inv << ")";
    os << "\n";
  }
  os << "\noutput (" << r.output_distribution.num_bits() << " bits)\n";
  os << "  value  probability\n";
  for (const auto& [v, p] : r.output_distribution.support(kSupportCutoff)) {
    os << "  " << std::setw(5) << v << "  " << fixed(p, 9) << "\n";
  }
  if (r.ancilla_distribution.num_bits() > 0) {
    os << "\nancilla (" << r.ancilla_distribution.num_bits() << " bits)\n";
    os << "  value  probability\n";
    for (const auto& [v, p] : r.ancilla_distribution.support(kSupportCutoff)) {
      os << "  " << std::setw(5) << v << "  " << fixed(p, 9) << "\n";
    }
  }
  if (!r.counts.empty()) {
    os << "\ncounts\n";
    for (std::size_t v = 0; v < r.counts.size(); ++v) {
      if (r.counts[v] > 0) os << "  " << std::setw(5) << v << "  " << r.counts[v] << "\n";
    }
  }
  os << "\nassertions\n";
  if (r.assert_reports.empty()) os << "  (none at this level)\n";
  for (const AssertReport& a : r.assert_reports) {
    os << "  " << (a.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(10)
       << to_string(a.stage) << std::setw(22) << to_string(a.kind) << std::right
       << a.location << ": " << a.message << "\n";
  }
  os << "\nexit " << exit_code(r) << "\n";
  return os.str();
}

Json to_json(const BugSpec& b) {
  Json prevented = Json::object();
  for (const auto& [d, why] : b.prevented_by) prevented[to_string(d)] = why;
  return {{"id", b.id},
          {"taxonomy", to_string(b.taxonomy)},
          {"location", to_string(b.location)},
          {"benchmark", to_string(b.benchmark)},
          {"subroutine", b.subroutine},
          {"mutation", b.mutation},
          {"in_suite", b.in_suite},
          {"unit_test", b.unit_test != nullptr},
          {"prevented_by", std::move(prevented)}};
}

BugSpec bug_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
    throw ArgumentError("bug entry needs a string id");
  }
  const BugSpec& b = find_bug(j["id"].get<std::string>());
  if (to_json(b) != j) throw ArgumentError("bug entry " + b.id + " differs from the catalog");
  return b;
}

Json catalog_json(const std::vector<BugSpec>& bugs) {
  Json arr = Json::array();
  for (const BugSpec& b : bugs) arr.push_back(to_json(b));
  return {{"schema_version", kSchemaVersion}, {"bugs", std::move(arr)}};
}

std::string catalog_table(const std::vector<BugSpec>& bugs) {
  std::ostringstream os;
  os << std::left << std::setw(30) << "id" << std::setw(24) << "taxonomy" << std::setw(18)
     << "location" << std::setw(6) << "suite" << "target: mutation\n";
  for (const BugSpec& b : bugs) {
    os << std::setw(30) << b.id << std::setw(24) << to_string(b.taxonomy) << std::setw(18)
       << to_string(b.location) << std::setw(6) << (b.in_suite ? "yes" : "")
       << to_string(b.benchmark) << "/" << b.subroutine << ": " << b.mutation << "\n";
  }
  return os.str();
}

namespace {

const char* benchmark_blurb(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::kH2: return "H2 ground and excited energies by iterative phase estimation";
    case BenchmarkId::kShor15: return "order finding for N = 15 with Fourier-space modular arithmetic";
    case BenchmarkId::kGrover: return "amplitude amplification over bitmask oracles";
  }
  return "";
}

}  // namespace

Json benchmarks_json() {
  Json arr = Json::array();
  for (BenchmarkId id : all_benchmarks()) {
    arr.push_back({{"name", to_string(id)}, {"description", benchmark_blurb(id)}});
  }
  return {{"schema_version", kSchemaVersion}, {"benchmarks", std::move(arr)}};
}

std::string benchmarks_table() {
  std::ostringstream os;
  for (BenchmarkId id : all_benchmarks()) {
    os << std::left << std::setw(8) << to_string(id) << benchmark_blurb(id) << "\n";
  }
  return os.str();
}

Json to_json(const CoverageMatrix& m) {
  std::vector<Defense> rows;
  std::vector<BugLocation> cols;
  for (Defense d : all_defenses()) {
    for (BugLocation l : all_locations()) {
      if (m.cells.count({d, l})) {
        if (std::find(rows.begin(), rows.end(), d) == rows.end()) rows.push_back(d);
        if (std::find(cols.begin(), cols.end(), l) == cols.end()) cols.push_back(l);
      }
    }
  }
  Json cells = Json::array();
  for (Defense d : all_defenses()) {
    for (BugLocation l : all_locations()) {
      const auto it = m.cells.find({d, l});
      if (it == m.cells.end()) continue;
      cells.push_back({{"defense", to_string(d)},
                       {"location", to_string(l)},
                       {"verdict", to_string(it->second)}});
    }
  }
  Json ev = Json::array();
  for (const CellEvidence& e : m.evidence) {
    ev.push_back({{"bug", e.bug_id},
                  {"defense", to_string(e.defense)},
                  {"location", to_string(e.location)},
                  {"verdict", to_string(e.verdict)},
                  {"evidence", e.evidence}});
  }
  Json jr = Json::array(), jc = Json::array();
  for (Defense d : rows) jr.push_back(to_string(d));
  for (BugLocation l : cols) jc.push_back(to_string(l));
  return {{"schema_version", kSchemaVersion},
          {"seeds", m.seeds},
          {"defenses", std::move(jr)},
          {"locations", std::move(jc)},
          {"detection_threshold", kDetectionThreshold},
          {"cells", std::move(cells)},
          {"evidence", std::move(ev)},
          {"false_positives", m.false_positives}};
}

std::string matrix_table(const CoverageMatrix& m) {
  std::ostringstream os;
  std::ostringstream head;
  head << std::left << std::setw(16) << "";
  for (BugLocation l : all_locations()) head << std::setw(18) << to_string(l);
  std::string h = head.str();
  h.erase(h.find_last_not_of(' ') + 1);
  os << h << "\n";
  for (Defense d : all_defenses()) {
    bool any = false;
    for (BugLocation l : all_locations()) any = any || m.cells.count({d, l});
    if (!any) continue;
    std::string line;
    std::ostringstream row;
    row << std::left << std::setw(16) << to_string(d);
    for (BugLocation l : all_locations()) {
      const auto it = m.cells.find({d, l});
      const char* mark = "";
      if (it != m.cells.end()) {
        switch (it->second) {
          case Verdict::kDetected: mark = "detected"; break;
          case Verdict::kMissed: mark = "-"; break;
          case Verdict::kNotApplicable: mark = "n/a"; break;
        }
      }
      row << std::setw(18) << mark;
    }
    line = row.str();
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  os << "\nfalse positives: " << m.false_positives.size() << "\n";
  for (const std::string& f : m.false_positives) os << "  " << f << "\n";
  return os.str();
}

}  // namespace qdb
