#include <gtest/gtest.h>

#include "thetakit/suites.hpp"

using namespace thetakit;

namespace {

CheckRecord record(const char* id, long long instances, long long failures = 0, long long capped = 0) {
  CheckRecord c;
  c.id = id;
  c.instances = instances;
  c.failures = failures;
  c.capped = capped;
  return c;
}

}  // namespace

TEST(RunSuite, Examples) {
  EXPECT_EQ(run_suite("digraph_lemma", 7).status(), "pass");
  EXPECT_EQ(run_suite("sigma_inequalities", 7).status(), "pass");
  EXPECT_THROW(run_suite("unknown", 7), InvalidInput);
}

TEST(RunSuite, NamesCoverCriteria) {
  EXPECT_EQ(suite_names().size(), 11u);
  EXPECT_EQ(suite_names().front(), "treewidth_facts");
}

TEST(RunSuite, SameSeedSameReport) {
  for (const char* name : {"digraph_fanout", "extraction_soundness", "roundtrip_io"}) {
    const auto a = run_suite(name, 42).to_json(false).dump();
    const auto b = run_suite(name, 42).to_json(false).dump();
    EXPECT_EQ(a, b) << name;
  }
}

TEST(RunSuite, SeedChangesInputs) {
  const auto a = run_suite("roundtrip_io", 1);
  const auto b = run_suite("roundtrip_io", 2);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  EXPECT_NE(a.checks[0].digest, b.checks[0].digest);
  EXPECT_EQ(a.checks[0].digest.size(), 16u);
}

TEST(Report, SchemaAndStatus) {
  Report r;
  r.suite = "x";
  r.checks.push_back(record("a", 3));
  EXPECT_EQ(r.status(), "pass");
  EXPECT_EQ(r.exit_code(), 0);

  r.checks.push_back(record("b", 1, 0, 1));
  EXPECT_EQ(r.status(), "partial");
  EXPECT_EQ(r.exit_code(), 3);

  r.checks.push_back(record("c", 1, 1));
  EXPECT_EQ(r.exit_code(), 1);

  const auto j = r.to_json();
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][1]["status"], "partial");
  EXPECT_TRUE(j.contains("runtime_ms"));
  EXPECT_FALSE(r.to_json(false).contains("runtime_ms"));
}

TEST(Report, OverBudgetFails) {
  Report r;
  r.checks.push_back(record("a", 1));
  r.budget_ms = 10;
  r.runtime_ms = 11;
  EXPECT_FALSE(r.within_budget());
  EXPECT_EQ(r.status(), "fail");
}
