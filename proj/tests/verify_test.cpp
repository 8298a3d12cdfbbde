#include <gtest/gtest.h>

#include "nestgen/errors.hpp"
#include "nestgen/verify.hpp"

using namespace nestgen;

namespace {

VerifyOptions small(int n) {
  VerifyOptions o;
  o.max_n = n;
  return o;
}

}  // namespace

TEST(Verify, SuiteNames) {
  for (Suite s : {Suite::Tables, Suite::CrossMethods, Suite::Baxter, Suite::Egf,
                  Suite::Formula, Suite::All}) {
    EXPECT_EQ(parse_suite(to_string(s)), s);
  }
  EXPECT_FALSE(parse_suite("tables").has_value());
}

TEST(Verify, EverySuitePassesAtSmallSize) {
  for (Suite s : {Suite::Tables, Suite::CrossMethods, Suite::Baxter, Suite::Egf,
                  Suite::Formula}) {
    auto report = run_suite(s, small(6));
    EXPECT_TRUE(report.passed()) << to_string(s);
    EXPECT_FALSE(report.checks.empty());
    for (const auto& c : report.checks) {
      if (s != Suite::Formula) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.detail;
      EXPECT_GE(c.runtime_ms, 0);
    }
  }
}

TEST(Verify, AllIsUnion) {
  std::size_t parts = 0;
  for (Suite s : {Suite::Tables, Suite::CrossMethods, Suite::Baxter, Suite::Egf,
                  Suite::Formula}) {
    parts += run_suite(s, small(4)).checks.size();
  }
  EXPECT_EQ(run_suite(Suite::All, small(4)).checks.size(), parts);
}

TEST(Verify, ExperimentalMismatchDoesNotFail) {
  VerificationReport r;
  r.checks.push_back({"a", "1", "2", CheckStatus::ExperimentalMismatch, "", 0});
  EXPECT_TRUE(r.passed());
  r.checks.push_back({"b", "1", "2", CheckStatus::Fail, "", 0});
  EXPECT_FALSE(r.passed());
}

TEST(Verify, Json) {
  auto j = to_json(run_suite(Suite::Egf, small(5)));
  EXPECT_EQ(j["suite"], "egf");
  EXPECT_EQ(j["overall"], "pass");
  EXPECT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
}

TEST(Verify, LabelBudget) {
  VerifyOptions o;
  o.max_labels = 3;
  EXPECT_THROW(run_suite(Suite::Tables, o), ResourceExceeded);
}
