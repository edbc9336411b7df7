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

#include "qdb/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "qdb/report.h"

namespace qdb {

namespace {

struct Emitter {
  std::string format;
  std::string output;
};

std::string default_format() {
  const char* env = std::getenv("QDB_FORMAT");
  return env && *env ? std::string(env) : std::string("json");
}

void validate_format(const std::string& f) {
  if (f != "json" && f != "table") {
    throw ArgumentError("unknown format '" + f + "' (expected json or table)");
  }
}

void emit(const Emitter& e, const std::string& text, std::ostream& out) {
  if (e.output.empty() || e.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(e.output, std::ios::binary);
  if (!f) throw ArgumentError("cannot open output file '" + e.output + "'");
  f << text;
  if (!f) throw ArgumentError("failed writing output file '" + e.output + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct RunArgs {
  std::string benchmark;
  std::string bug;
  std::string level = "off";
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  std::string hamiltonian;
  // grover
  std::size_t n = 3;
  std::vector<std::uint64_t> marked;
  int iterations = 0;
  // shor15
  std::int64_t guess = 7;
  std::size_t bits = 3;
  // h2
  std::string assignment = "G";
  double t = 1.0;
  int r = 8;
  std::size_t m = 8;
};

// Rejects options that belong to another benchmark.
void check_scope(const CLI::App& cmd, BenchmarkId id) {
  const std::vector<std::pair<BenchmarkId, std::vector<std::string>>> scoped = {
      {BenchmarkId::kGrover, {"--n", "--marked", "--iterations"}},
      {BenchmarkId::kShor15, {"--guess", "--bits"}},
      {BenchmarkId::kH2, {"--hamiltonian", "--assignment", "--t", "--r", "--m"}},
  };
  for (const auto& [owner, names] : scoped) {
    if (owner == id) continue;
    for (const std::string& name : names) {
      if (cmd.count(name) > 0) {
        throw ArgumentError("option " + name + " is for " + to_string(owner) + ", not " +
                            to_string(id));
      }
    }
  }
}

int do_run(const CLI::App& cmd, const RunArgs& a, const Emitter& e, std::ostream& out) {
  const BenchmarkId id = parse_benchmark(a.benchmark);
  check_scope(cmd, id);
  RunRecord rec;
  rec.config.id = id;
  switch (id) {
    case BenchmarkId::kH2: {
      rec.hamiltonian_file = a.hamiltonian.empty() ? default_hamiltonian_path() : a.hamiltonian;
      try {
        rec.config.h2.hamiltonian = load_hamiltonian(rec.hamiltonian_file);
      } catch (const ParseError& ex) {
        throw ArgumentError(rec.hamiltonian_file + ": " + ex.what());
      }
      rec.config.h2.assignment = ElectronAssignment::parse(a.assignment);
      rec.config.h2.t = a.t;
      rec.config.h2.r = a.r;
      rec.config.h2.m = a.m;
      break;
    }
    case BenchmarkId::kShor15:
      rec.config.shor.guess = a.guess;
      rec.config.shor.bits = a.bits;
      break;
    case BenchmarkId::kGrover:
      rec.config.grover.n = a.n;
      if (cmd.count("--marked") > 0) rec.config.grover.marked = a.marked;
      if (cmd.count("--iterations") > 0) rec.config.grover.iterations = a.iterations;
      break;
  }
  rec.level = parse_assert_level(a.level);
  rec.shots = a.shots;
  rec.seed = a.seed;

  RunOptions opts;
  opts.stages = StageSet::of(rec.level);
  opts.shots = a.shots;
  opts.seed = a.seed;
  if (!a.bug.empty()) {
    const Program prog = inject(rec.config, find_bug(a.bug));
    rec.bug_id = a.bug;
    rec.bug_site = prog.site;
    rec.result = prog.run(opts);
  } else {
    rec.result = run_benchmark(rec.config, opts);
  }
  emit(e, e.format == "json" ? dump(to_json(rec)) : to_table(rec), out);
  return exit_code(rec.result);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qdb: simulate, assert and debug small quantum programs"};
  app.require_subcommand(1);
  Emitter e;
  e.format = default_format();

  RunArgs ra;
  CLI::App* run = app.add_subcommand("run", "run a benchmark");
  run->add_option("benchmark", ra.benchmark, "h2, shor15 or grover")->required();
  run->add_option("--bug", ra.bug, "bug id from list-bugs");
  run->add_option("--assert-level", ra.level, "off, pre, post or all")
      ->check(CLI::IsMember({"off", "pre", "post", "all"}));
  run->add_option("--shots", ra.shots, "0 = exact distributions");
  run->add_option("--seed", ra.seed, "seed for all sampling");
  run->add_option("--hamiltonian", ra.hamiltonian, "h2: hamiltonian file");
  run->add_option("--assignment", ra.assignment, "h2: G, E1a, E1b, E2a, E2b, E3 or 4 bits");
  run->add_option("--t", ra.t, "h2: evolution time");
  run->add_option("--r", ra.r, "h2: trotter steps");
  run->add_option("--m", ra.m, "h2: phase bits");
  run->add_option("--n", ra.n, "grover: qubits");
  run->add_option("--marked", ra.marked, "grover: marked values")->delimiter(',');
  run->add_option("--iterations", ra.iterations, "grover: rounds");
  run->add_option("--guess", ra.guess, "shor15: base");
  run->add_option("--bits", ra.bits, "shor15: output bits");

  CLI::App* list_bugs = app.add_subcommand("list-bugs", "print the bug catalog");
  CLI::App* list_benchmarks = app.add_subcommand("list-benchmarks", "print the benchmarks");

  bool all_bugs = false;
  std::vector<std::uint64_t> seeds{0};
  CLI::App* matrix = app.add_subcommand("matrix", "evaluate the defense matrix");
  matrix->add_flag("--all", all_bugs, "use the full catalog instead of the suite");
  matrix->add_option("--seeds", seeds, "seeds per cell")->delimiter(',');

  for (CLI::App* sub : {run, list_bugs, list_benchmarks, matrix}) {
    sub->add_option("--format", e.format, "json or table");
    sub->add_option("--output", e.output, "output path, default stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }

  try {
    validate_format(e.format);
    if (*run) return do_run(*run, ra, e, out);
    if (*list_bugs) {
      const auto& cat = bug_catalog();
      std::vector<BugSpec> bugs(cat.begin(), cat.end());
      emit(e, e.format == "json" ? dump(catalog_json(bugs)) : catalog_table(bugs), out);
      return 0;
    }
    if (*list_benchmarks) {
      emit(e, e.format == "json" ? dump(benchmarks_json()) : benchmarks_table(), out);
      return 0;
    }
    if (*matrix) {
      std::vector<BugSpec> bugs;
      if (all_bugs) {
        bugs.assign(bug_catalog().begin(), bug_catalog().end());
      } else {
        bugs = bug_suite();
      }
      const CoverageMatrix m = evaluate_matrix(bugs, all_defenses(), seeds);
      emit(e, e.format == "json" ? dump(to_json(m)) : matrix_table(m), out);
      return m.false_positives.empty() ? 0 : 2;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace qdb
