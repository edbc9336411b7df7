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

#include "qdb/buglab.h"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>

#include "oracles.h"
#include "qdb/report.h"

namespace qdb {
namespace {

using oracle::kPi;

TEST(Catalog, ids_are_unique_and_resolvable) {
  std::set<std::string> ids;
  for (const BugSpec& b : bug_catalog()) {
    EXPECT_TRUE(ids.insert(b.id).second) << b.id;
    EXPECT_EQ(&find_bug(b.id), &b);
    EXPECT_NE(b.apply, nullptr) << b.id;
    EXPECT_FALSE(b.mutation.empty()) << b.id;
  }
  EXPECT_THROW(find_bug("no.such-bug"), ArgumentError);
}

TEST(Catalog, suite_has_one_bug_per_class_and_location) {
  const std::vector<BugSpec> suite = bug_suite();
  ASSERT_EQ(suite.size(), 7u);
  std::set<TaxonomyClass> classes;
  std::set<BugLocation> locations;
  for (const BugSpec& b : suite) {
    classes.insert(b.taxonomy);
    locations.insert(b.location);
  }
  EXPECT_EQ(classes.size(), all_taxonomy_classes().size());
  EXPECT_EQ(locations.size(), all_locations().size());
}

TEST(Catalog, every_bug_applies_to_its_default_benchmark) {
  for (const BugSpec& b : bug_catalog()) {
    const BenchmarkConfig cfg = BenchmarkConfig::defaults(b.benchmark);
    const Program p = inject(cfg, b);
    EXPECT_TRUE(p.mutations.any()) << b.id;
    EXPECT_NE(p.site.find(b.mutation), std::string::npos) << b.id;
    EXPECT_NE(p.site.find(to_string(b.benchmark)), std::string::npos) << b.id;
  }
}

TEST(Inject, rejects_inapplicable_mutations) {
  const BenchmarkConfig grover = BenchmarkConfig::defaults(BenchmarkId::kGrover);
  EXPECT_THROW(inject(grover, find_bug("shor.skip-uncompute")), ValidationError);
  BenchmarkConfig small = grover;
  small.grover.n = 2;
  EXPECT_THROW(inject(small, find_bug("grover.chain-wrong-control")), ValidationError);
  BenchmarkConfig none = grover;
  none.grover.iterations = 0;
  EXPECT_THROW(inject(none, find_bug("grover.too-few-iterations")), ValidationError);
  BenchmarkConfig h2 = BenchmarkConfig::defaults(BenchmarkId::kH2);
  h2.h2.r = 1;
  EXPECT_THROW(inject(h2, find_bug("h2.too-few-trotter-steps")), ValidationError);
}

TEST(Inject, wrong_inverse_reproduces_the_buggy_shor_table) {
  const Program p = inject(BenchmarkConfig::defaults(BenchmarkId::kShor15),
                           find_bug("shor.wrong-inverse-k0"));
  ASSERT_EQ(p.mutations.shor_inverse_k0, 12);
  const BenchmarkResult r = p.run({});
  ASSERT_TRUE(r.joint_distribution);
  double nonzero = 0.0;
  for (std::uint64_t anc = 0; anc < 32; ++anc) {
    for (std::uint64_t out = 0; out < 8; ++out) {
      double want = 0.0;
      if (anc == 0 && out % 2 == 0) want = 1.0 / 8;
      if (anc == 2 || anc == 7 || anc == 8 || anc == 13) want = 1.0 / 64;
      EXPECT_NEAR((*r.joint_distribution)[(anc << 3) | out], want, 1e-9);
      if (anc != 0) nonzero += (*r.joint_distribution)[(anc << 3) | out];
    }
  }
  EXPECT_NEAR(nonzero, 0.5, 1e-9);
}

TEST(Inject, wrong_assignment_moves_the_energy_to_the_doubly_excited_state) {
  const BenchmarkConfig cfg = BenchmarkConfig::defaults(BenchmarkId::kH2);
  const BenchmarkResult bug = inject(cfg, find_bug("h2.wrong-assignment")).run({});
  BenchmarkConfig e3 = cfg;
  e3.h2.assignment = ElectronAssignment::parse("E3");
  const BenchmarkResult ref = run_benchmark(e3, {});
  EXPECT_DOUBLE_EQ(*bug.energy_estimate, *ref.energy_estimate);
  EXPECT_GT(*bug.energy_estimate, *run_benchmark(cfg, {}).energy_estimate);
}

TEST(Inject, too_few_iterations_lowers_success_to_the_closed_form) {
  const Program p = inject(BenchmarkConfig::defaults(BenchmarkId::kGrover),
                           find_bug("grover.too-few-iterations"));
  ASSERT_EQ(p.mutations.grover_iterations, 1);
  const BenchmarkResult r = p.run({});
  const double theta = std::asin(std::sqrt(1.0 / 8.0));
  EXPECT_NEAR(r.output_distribution[5], std::pow(std::sin(3 * theta), 2), 1e-9);
  EXPECT_NEAR(r.output_distribution[5], 0.78125, 1e-9);
}

TEST(UnitDefense, flipped_crz_is_detected_and_correct_variants_pass) {
  const BugSpec& b = find_bug("shor.flipped-angle-crz");
  ASSERT_NE(b.unit_test, nullptr);
  EXPECT_TRUE(b.unit_test().mismatch);
  // The same oracle accepts the correct variants.
  for (AbcVariant v : {AbcVariant::kOmitA, AbcVariant::kOmitC}) {
    oracle::Mat want = oracle::Mat::Identity(4, 4);
    want(3, 3) = std::polar(1.0, kPi / 2);
    EXPECT_LT(oracle::diff(oracle::from(unitary_of(decompose_cRz(kPi / 2, qubit(0), qubit(1), v), 2)), want),
              1e-12);
  }
}

TEST(UnitDefense, classical_input_is_not_caught_by_subroutine_tests) {
  EXPECT_FALSE(find_bug("shor.wrong-inverse-k0").unit_test().mismatch);
  EXPECT_FALSE(find_bug("h2.coefficient-sign").unit_test().mismatch);
}

TEST(UnitDefense, mutated_subroutines_are_caught) {
  for (const char* id : {"grover.missing-hadamard", "grover.too-few-iterations",
                         "shor.mirror-iqft-swapped", "grover.chain-wrong-control",
                         "shor.skip-uncompute", "shor.adder-loop-bound", "h2.y-basis-as-x",
                         "h2.too-few-trotter-steps", "grover.unmirrored-diffusion"}) {
    const BugSpec& b = find_bug(id);
    ASSERT_NE(b.unit_test, nullptr) << id;
    const UnitCheck u = b.unit_test();
    EXPECT_TRUE(u.mismatch) << id << ": " << u.evidence;
  }
}

std::vector<Defense> detective() {
  return {Defense::kPreconditions, Defense::kProgress, Defense::kPostconditions};
}

TEST(Matrix, documented_cells) {
  const CoverageMatrix m = evaluate_matrix(
      {find_bug("shor.skip-uncompute"), find_bug("shor.wrong-inverse-k0"),
       find_bug("shor.flipped-angle-crz")},
      all_defenses(), {0});
  EXPECT_EQ(m.at(Defense::kPostconditions, BugLocation::kDealloc), Verdict::kDetected);
  EXPECT_NE(m.at(Defense::kPreconditions, BugLocation::kClassicalParams), Verdict::kDetected);
  EXPECT_EQ(m.at(Defense::kUnitTesting, BugLocation::kBasic), Verdict::kDetected);
  EXPECT_TRUE(m.false_positives.empty());
  EXPECT_EQ(m.evidence.size(), 3 * all_defenses().size());
}

TEST(Matrix, constructive_rows_record_prevention) {
  const CoverageMatrix m =
      evaluate_matrix({find_bug("shor.wrong-inverse-k0")}, {Defense::kDataTypes}, {0});
  ASSERT_EQ(m.evidence.size(), 1u);
  EXPECT_EQ(m.evidence[0].verdict, Verdict::kNotApplicable);
  EXPECT_NE(m.evidence[0].evidence.find("ModulusContext"), std::string::npos);
}

TEST(Matrix, verdicts_are_deterministic_across_runs_and_seeds) {
  const std::vector<BugSpec> bugs = {find_bug("grover.missing-hadamard"),
                                     find_bug("shor.mirror-iqft-swapped")};
  const CoverageMatrix a = evaluate_matrix(bugs, detective(), {3, 11});
  const CoverageMatrix b = evaluate_matrix(bugs, detective(), {3, 11});
  EXPECT_EQ(a.cells, b.cells);
  ASSERT_EQ(a.evidence.size(), b.evidence.size());
  for (std::size_t i = 0; i < a.evidence.size(); ++i) {
    EXPECT_EQ(a.evidence[i].evidence, b.evidence[i].evidence);
    EXPECT_EQ(a.evidence[i].evidence.find("seed-dependent"), std::string::npos);
  }
}

TEST(Matrix, empty_suites_are_rejected) {
  EXPECT_THROW(evaluate_matrix({}, all_defenses(), {0}), ArgumentError);
  EXPECT_THROW(evaluate_matrix(bug_suite(), {}, {0}), ArgumentError);
}

TEST(Matrix, unmutated_benchmarks_pass_every_stage) {
  for (BenchmarkId id : all_benchmarks()) {
    RunOptions o;
    o.stages = StageSet::of(AssertLevel::kAll);
    const BenchmarkResult r = run_benchmark(BenchmarkConfig::defaults(id), o);
    EXPECT_FALSE(r.assert_reports.empty()) << to_string(id);
    for (const AssertReport& a : r.assert_reports) {
      EXPECT_TRUE(a.passed) << to_string(id) << " " << a.location << ": " << a.message;
    }
  }
}

TEST(Matrix, suite_matches_the_golden_fixture) {
  std::ifstream f(std::string(QDB_TEST_DIR) + "/golden/defense_matrix_suite.json");
  ASSERT_TRUE(f);
  const Json golden = Json::parse(f);
  const CoverageMatrix m = evaluate_matrix(bug_suite(), all_defenses(), {0});
  EXPECT_TRUE(m.false_positives.empty());
  const Json got = to_json(m);
  EXPECT_EQ(got["defenses"], golden["defenses"]);
  EXPECT_EQ(got["locations"], golden["locations"]);
  EXPECT_EQ(got["cells"], golden["cells"]);
  // Every implemented pair has a cell.
  EXPECT_EQ(m.cells.size(), all_defenses().size() * all_locations().size());
}

TEST(Report, catalog_round_trips) {
  const auto& cat = bug_catalog();
  const Json j = catalog_json({cat.begin(), cat.end()});
  const Json parsed = Json::parse(j.dump());
  ASSERT_EQ(parsed["bugs"].size(), cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(bug_from_json(parsed["bugs"][i]).id, cat[i].id);
  }
  Json tampered = parsed["bugs"][0];
  tampered["taxonomy"] = "wrong_operation";
  EXPECT_THROW(bug_from_json(tampered), ArgumentError);
  EXPECT_THROW(bug_from_json(Json::object()), ArgumentError);
}

TEST(Report, distributions_keep_only_the_support) {
  const Json j = to_json(Distribution(2, {0.5, 0.0, 1e-20, 0.5}));
  EXPECT_EQ(j["num_bits"], 2);
  ASSERT_EQ(j["support"].size(), 2u);
  EXPECT_EQ(j["support"][1]["value"], 3);
  EXPECT_DOUBLE_EQ(j["support"][1]["probability"].get<double>(), 0.5);
}

}  // namespace
}  // namespace qdb
