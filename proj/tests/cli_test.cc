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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "qdb/report.h"

namespace qdb {
namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli_main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json json_of(const CliRun& r) { return Json::parse(r.out); }

Json without_wall_time(Json j) {
  j.erase("wall_time");
  return j;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("QDB_FORMAT"); }
  void TearDown() override { unsetenv("QDB_FORMAT"); }
};

TEST_F(CliTest, shor_with_all_checks_passes) {
  const CliRun r = cli({"run", "shor15", "--assert-level", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = json_of(r);
  for (const char* key : {"schema_version", "benchmark", "seed", "config", "output_distribution",
                          "ancilla_distribution", "assert_reports", "exit_semantics"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  const Json& support = j["output_distribution"]["support"];
  ASSERT_EQ(support.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(support[i]["value"], 2 * i);
    EXPECT_NEAR(support[i]["probability"].get<double>(), 0.25, 1e-9);
  }
  EXPECT_FALSE(j["assert_reports"].empty());
  EXPECT_EQ(j["exit_semantics"]["exit_code"], 0);
}

TEST_F(CliTest, wrong_inverse_fails_the_postcondition) {
  const CliRun r =
      cli({"run", "shor15", "--bug", "shor.wrong-inverse-k0", "--assert-level", "post"});
  ASSERT_EQ(r.code, 2) << r.err;
  const Json j = json_of(r);
  bool found = false;
  for (const Json& a : j["assert_reports"]) {
    if (a["kind"] == "ancilla_zero" && !a["passed"].get<bool>()) {
      found = true;
      EXPECT_NEAR(a["deviation"].get<double>(), 0.5, 1e-9);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["config"]["bug"], "shor.wrong-inverse-k0");
  EXPECT_EQ(j["exit_semantics"]["exit_code"], 2);
}

TEST_F(CliTest, grover_without_rounds_is_uniform) {
  const CliRun r = cli({"run", "grover", "--n", "3", "--marked", "5", "--iterations", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json support = json_of(r)["output_distribution"]["support"];
  ASSERT_EQ(support.size(), 8u);
  for (const Json& e : support) EXPECT_NEAR(e["probability"].get<double>(), 0.125, 1e-12);
}

TEST_F(CliTest, grover_accepts_several_marked_values) {
  const CliRun r = cli({"run", "grover", "--n", "4", "--marked", "3,9", "--assert-level", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["config"]["marked"], Json::array({3, 9}));
}

TEST_F(CliTest, same_seed_gives_identical_json) {
  const std::vector<std::vector<std::string>> runs = {
      {"run", "shor15", "--shots", "500", "--seed", "42", "--assert-level", "all"},
      {"run", "grover", "--shots", "300", "--seed", "7", "--bug", "grover.too-few-iterations"},
      {"run", "h2", "--shots", "200", "--seed", "9", "--assert-level", "all"},
      {"run", "shor15", "--bug", "shor.skip-uncompute", "--assert-level", "all"},
  };
  for (const auto& args : runs) {
    const CliRun a = cli(args), b = cli(args);
    ASSERT_EQ(a.code, b.code);
    EXPECT_EQ(without_wall_time(json_of(a)).dump(), without_wall_time(json_of(b)).dump())
        << args[1];
  }
}

TEST_F(CliTest, seeds_change_samples_but_not_exact_distributions) {
  const Json a = json_of(cli({"run", "shor15", "--shots", "500", "--seed", "1"}));
  const Json b = json_of(cli({"run", "shor15", "--shots", "500", "--seed", "2"}));
  EXPECT_NE(a["counts"], b["counts"]);
  EXPECT_EQ(a["output_distribution"], b["output_distribution"]);
  Json x = without_wall_time(json_of(cli({"run", "grover", "--seed", "1"})));
  Json y = without_wall_time(json_of(cli({"run", "grover", "--seed", "99"})));
  x.erase("seed");
  y.erase("seed");
  EXPECT_EQ(x, y);
}

TEST_F(CliTest, sampled_counts_sum_to_shots) {
  const Json j = json_of(cli({"run", "grover", "--shots", "1000", "--seed", "5"}));
  std::uint64_t total = 0;
  for (const Json& c : j["counts"]) total += c["count"].get<std::uint64_t>();
  EXPECT_EQ(total, 1000u);
}

TEST_F(CliTest, unknown_bug_is_a_usage_error) {
  const CliRun r = cli({"run", "shor15", "--bug", "shor.no-such-bug"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("shor.no-such-bug"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, bad_hamiltonian_names_line_and_token) {
  const std::string path = ::testing::TempDir() + "qdb_bad.ham";
  {
    std::ofstream f(path);
    f << "# test\nqubits: 4\n-0.8 IIII\n0.17 ZQZI\n";
  }
  const CliRun r = cli({"run", "h2", "--hamiltonian", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("ZQZI"), std::string::npos) << r.err;
  std::remove(path.c_str());
  EXPECT_EQ(cli({"run", "h2", "--hamiltonian", "/nonexistent/h.ham"}).code, 1);
}

TEST_F(CliTest, config_errors_exit_one) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"run"}).code, 1);
  EXPECT_EQ(cli({"run", "qaoa"}).code, 1);
  EXPECT_EQ(cli({"run", "shor15", "--n", "3"}).code, 1);
  EXPECT_EQ(cli({"run", "grover", "--guess", "7"}).code, 1);
  EXPECT_EQ(cli({"run", "grover", "--bug", "shor.skip-uncompute"}).code, 1);
  EXPECT_EQ(cli({"run", "grover", "--n", "3", "--marked", "8"}).code, 1);
  EXPECT_EQ(cli({"run", "shor15", "--assert-level", "most"}).code, 1);
  EXPECT_EQ(cli({"run", "shor15", "--shots", "-1"}).code, 1);
  EXPECT_EQ(cli({"run", "shor15", "--format", "xml"}).code, 1);
  EXPECT_EQ(cli({"run", "h2", "--assignment", "E9"}).code, 1);
  EXPECT_EQ(cli({"run", "h2", "--m", "0"}).code, 1);
  EXPECT_EQ(cli({"run", "shor15", "--guess", "5"}).code, 1);
}

TEST_F(CliTest, help_exits_zero) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("run"), std::string::npos);
}

TEST_F(CliTest, env_sets_the_default_format) {
  setenv("QDB_FORMAT", "table", 1);
  const CliRun r = cli({"run", "shor15"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("benchmark", 0), 0u) << r.out;
  EXPECT_EQ(json_of(cli({"run", "shor15", "--format", "json"}))["benchmark"], "shor15");
  setenv("QDB_FORMAT", "yaml", 1);
  EXPECT_EQ(cli({"run", "shor15"}).code, 1);
}

TEST_F(CliTest, output_file_receives_the_report) {
  const std::string path = ::testing::TempDir() + "qdb_out.json";
  const CliRun r = cli({"run", "grover", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  ASSERT_TRUE(f);
  EXPECT_EQ(Json::parse(f)["benchmark"], "grover");
  std::remove(path.c_str());
}

TEST_F(CliTest, catalog_listing) {
  const CliRun r = cli({"list-bugs", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = json_of(r);
  std::set<std::string> ids, classes;
  for (const Json& b : j["bugs"]) {
    ids.insert(b["id"].get<std::string>());
    classes.insert(b["taxonomy"].get<std::string>());
    EXPECT_NO_THROW(bug_from_json(b));
  }
  EXPECT_GE(j["bugs"].size(), 7u);
  EXPECT_EQ(ids.size(), j["bugs"].size());
  EXPECT_EQ(classes.size(), 7u);
  // Table output lists the same ids in the same order.
  const CliRun t = cli({"list-bugs", "--format", "table"});
  std::size_t pos = 0;
  for (const Json& b : j["bugs"]) {
    const std::size_t at = t.out.find(b["id"].get<std::string>(), pos);
    ASSERT_NE(at, std::string::npos);
    pos = at;
  }
  EXPECT_EQ(cli({"list-bugs"}).out, r.out);
}

TEST_F(CliTest, benchmark_listing) {
  const Json j = json_of(cli({"list-benchmarks", "--format", "json"}));
  ASSERT_EQ(j["benchmarks"].size(), 3u);
  EXPECT_EQ(j["benchmarks"][0]["name"], "h2");
  EXPECT_EQ(j["benchmarks"][1]["name"], "shor15");
  EXPECT_EQ(j["benchmarks"][2]["name"], "grover");
}

TEST_F(CliTest, table_run_lists_assertions) {
  const CliRun r = cli({"run", "shor15", "--bug", "shor.wrong-inverse-k0", "--assert-level",
                        "post", "--format", "table"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("a_inv: 13->12"), std::string::npos);
}

}  // namespace
}  // namespace qdb
