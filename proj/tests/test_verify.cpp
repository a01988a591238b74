#include <gtest/gtest.h>

#include "sustar/verify/runner.hpp"

using namespace sustar;
using namespace sustar::verify;

namespace {

SuiteConfig config(std::vector<std::string> suites, std::string backend = "", int trials = 20, int dim = 4) {
  SuiteConfig c;
  c.suites = std::move(suites);
  c.backend = std::move(backend);
  c.trials = trials;
  c.dim = dim;
  c.seed = 42;
  return c;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::PostconditionFailed;
}

}  // namespace

TEST(Runner, RegistryIsSortedAndComplete) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 24u);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

TEST(Runner, UnknownSuite) {
  EXPECT_EQ(kind_of([] { run_suites(config({"no-such-suite"})); }), ErrorKind::UnknownSuite);
}

TEST(Runner, ExplicitUnsupportedBackend) {
  EXPECT_EQ(kind_of([] { run_suites(config({"sqrt"}, "ptlg")); }), ErrorKind::NotApplicable);
}

TEST(Runner, BadConfig) {
  EXPECT_EQ(kind_of([] { run_suites(config({"sqrt"}, "", 0)); }), ErrorKind::ParseError);
}

TEST(Runner, ArchimedeanProbeIsExpectedToFailOnNonArchimedeanFixture) {
  const auto rep = run_suites(config({"archimedean"}, "ptlg"));
  int probed = 0;
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.ok()) << c.name;
    if (c.xfail) {
      probed += c.trials;
      EXPECT_EQ(c.status(), "xfail");
      EXPECT_EQ(c.failures, c.trials);
    }
  }
  EXPECT_EQ(probed, 4);  // one trial per epsilon
}

TEST(Runner, ReportsAreDeterministic) {
  const auto cfg = config({"ordersquare", "veewedge-rules", "downarrow"}, "", 10);
  auto a = to_json(run_suites(cfg)), b = to_json(run_suites(cfg));
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Runner, SeedChangesSamples) {
  auto cfg = config({"cstar-laws"}, "matrix", 10);
  const auto a = to_json(run_suites(cfg));
  cfg.seed = 43;
  const auto b = to_json(run_suites(cfg));
  EXPECT_NE(a["checks"].dump(), b["checks"].dump());
}

TEST(Suites, OrdersquareSeed7) {
  auto cfg = config({"ordersquare"}, "", 100);
  cfg.seed = 7;
  const auto rep = run_suites(cfg);
  EXPECT_EQ(rep.failed(), 0);
  EXPECT_FALSE(rep.checks.empty());
}

TEST(Suites, SuEquivalenceDim6) {
  const auto rep = run_suites(config({"su-equivalence"}, "", 20, 6));
  EXPECT_EQ(rep.checks.size(), 6u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok()) << c.name << " " << c.first_error;
}

TEST(Suites, ChecksCarryBackendPrefixAndAnchor) {
  const auto rep = run_suites(config({"sqrt"}, "function", 5));
  for (const auto& c : rep.checks) {
    EXPECT_EQ(c.name.rfind("function/", 0), 0u) << c.name;
    EXPECT_FALSE(c.anchor.empty()) << c.name;
  }
}

TEST(Suites, EverySuitePassesAtLowTrialCount) {
  const auto rep = run_suites(config({"all"}, "", 8));
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok()) << c.suite << "/" << c.name << " " << c.first_error;
}
