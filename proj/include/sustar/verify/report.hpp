#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sustar/core/errors.hpp"
#include "sustar/io/json.hpp"

namespace sustar::verify {

struct SuiteConfig {
  std::vector<std::string> suites;  // empty or "all" = every suite
  std::string backend;              // empty = each suite's default backends
  int dim = 4;
  int trials = 100;
  std::uint64_t seed = 0;
  std::optional<double> tol;  // overrides tol_pos, tol_eq and tol_comm

  TolerancePolicy policy() const {
    TolerancePolicy p;
    if (tol) p.tol_pos = p.tol_eq = p.tol_comm = *tol;
    return p;
  }

  void validate() const {
    if (trials < 1) throw Error(ErrorKind::ParseError, "trials must be >= 1");
    if (dim < 1) throw Error(ErrorKind::EmptyDomain, "dim must be >= 1");
    if (tol && !(*tol > 0.0)) throw Error(ErrorKind::ParseError, "tolerance must be positive");
  }
};

/// One property check. For an expected failure (xfail) the property is meant to fail on
/// every trial; observing that counts as success.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string anchor;  // verbatim statement the check probes
  int trials = 0;
  int failures = 0;
  int skipped = 0;  // boundary-band cases excluded from the verdict
  double worst_defect = 0.0;
  bool xfail = false;
  std::string first_error;
  double elapsed = 0.0;  // seconds; reported separately from the deterministic part

  std::string status() const {
    if (xfail) return failures == trials && trials > 0 ? "xfail" : "XPASS";
    return failures == 0 ? "pass" : "FAIL";
  }
  bool ok() const { return xfail ? (failures == trials && trials > 0) : failures == 0; }
};

struct Trial {
  bool ok = true;
  double defect = 0.0;
  bool skip = false;
  static Trial skipped() { return {true, 0.0, true}; }
};

/// Accumulates trials of one check; exceptions thrown by a trial count as failures.
class Check {
 public:
  explicit Check(CheckResult& r) : r_(r) {}

  template <class F>
  Check& trial(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Trial t;
    try {
      t = body();
    } catch (const Error& e) {
      t = {false, 0.0, false};
      if (r_.first_error.empty()) r_.first_error = e.what();
    }
    r_.elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (t.skip) {
      ++r_.skipped;
      return *this;
    }
    ++r_.trials;
    if (!t.ok) ++r_.failures;
    if (std::isfinite(t.defect)) r_.worst_defect = std::max(r_.worst_defect, t.defect);
    else r_.worst_defect = t.defect;
    return *this;
  }

  /// Folds in a batch evaluated elsewhere.
  Check& record(int trials, int failures, double worst, const std::string& error = {}) {
    r_.trials += trials;
    r_.failures += failures;
    r_.worst_defect = std::max(r_.worst_defect, worst);
    if (r_.first_error.empty()) r_.first_error = error;
    return *this;
  }

  Check& expect(bool ok, double defect = 0.0) {
    return trial([&] { return Trial{ok, defect}; });
  }

 private:
  CheckResult& r_;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  void sort() {
    std::sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
      return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
    });
  }
  int failed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok(); }));
  }
  bool passed() const { return failed() == 0; }
};

/// Deterministic part under "checks"/"summary"; wall-clock times live under "timing".
inline io::Json to_json(const SuiteReport& rep) {
  io::Json cfg{{"suites", rep.config.suites},
               {"backend", rep.config.backend.empty() ? "default" : rep.config.backend},
               {"dim", rep.config.dim},
               {"trials", rep.config.trials},
               {"seed", rep.config.seed}};
  if (rep.config.tol) cfg["tol"] = *rep.config.tol;
  io::Json checks = io::Json::array();
  io::Json timing = io::Json::object();
  for (const auto& c : rep.checks) {
    io::Json j{{"suite", c.suite},
               {"check", c.name},
               {"anchor", c.anchor},
               {"status", c.status()},
               {"trials", c.trials},
               {"failures", c.failures},
               {"skipped", c.skipped},
               {"worst_defect", c.worst_defect},
               {"xfail", c.xfail}};
    if (!c.first_error.empty()) j["first_error"] = c.first_error;
    checks.push_back(std::move(j));
    timing[c.suite + "/" + c.name] = c.elapsed;
  }
  return io::Json{{"config", std::move(cfg)},
                  {"checks", std::move(checks)},
                  {"summary", {{"checks", rep.checks.size()}, {"failed", rep.failed()}, {"passed", rep.passed()}}},
                  {"timing", std::move(timing)}};
}

/// One summary line per check.
inline std::string summary_line(const CheckResult& c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-6s %4d/%-4d worst %.3e", c.status().c_str(), c.trials - c.failures, c.trials,
                c.worst_defect);
  return std::string(buf) + "  " + c.suite + "/" + c.name + "  \"" + c.anchor + "\"";
}

}  // namespace sustar::verify
