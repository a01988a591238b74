#pragma once

#include <deque>
#include <map>
#include <string>

#include "sustar/verify/report.hpp"
#include "sustar/verify/sampling.hpp"

namespace sustar::verify {

/// Collects the checks of one suite run on one backend. Check names are prefixed by
/// the backend, so running a suite on several backends keeps the names distinct.
class SuiteContext {
 public:
  SuiteContext(const SuiteConfig& config, std::string suite, std::string backend)
      : config_(config), suite_(std::move(suite)), backend_(std::move(backend)),
        rng_(derive_seed(config.seed, suite_ + "/" + backend_)) {}

  const SuiteConfig& config() const { return config_; }
  const std::string& backend() const { return backend_; }
  Rng& rng() { return rng_; }
  int trials() const { return config_.trials; }
  /// A reduced trial count for expensive checks, at least 1.
  int trials(int divisor) const { return std::max(1, config_.trials / divisor); }
  TolerancePolicy policy() const { return config_.policy(); }

  Check check(const std::string& name, const std::string& anchor, bool xfail = false) {
    const std::string full = backend_ + "/" + name;
    auto it = index_.find(full);
    if (it == index_.end()) {
      CheckResult r;
      r.suite = suite_;
      r.name = full;
      r.anchor = anchor;
      r.xfail = xfail;
      results_.push_back(std::move(r));
      it = index_.emplace(full, results_.size() - 1).first;
    }
    return Check(results_[it->second]);
  }

  void flush_into(SuiteReport& report) {
    for (auto& r : results_) report.checks.push_back(std::move(r));
    results_.clear();
    index_.clear();
  }

 private:
  const SuiteConfig& config_;
  std::string suite_;
  std::string backend_;
  Rng rng_;
  std::deque<CheckResult> results_;
  std::map<std::string, std::size_t> index_;
};

/// Relative defect |x - y| / scale.
template <StarAlgebra A>
double rel_diff(const A& alg, const element_t<A>& x, const element_t<A>& y, double scale) {
  return alg.size(alg.sub(x, y)) / std::max(1.0, scale);
}

/// Runs body(alg, sampler) on the backend named `backend` at the configured size.
template <class F>
void with_backend(const std::string& backend, const SuiteConfig& cfg, F&& body) {
  if (backend == "matrix") {
    const MatrixAlgebra alg(cfg.dim, cfg.policy());
    body(alg, Sampler<MatrixAlgebra>{alg});
  } else if (backend == "function") {
    const FunctionAlgebra alg(default_points(cfg.dim), cfg.policy());
    body(alg, Sampler<FunctionAlgebra>{alg});
  } else {
    throw Error(ErrorKind::NotApplicable, "backend " + backend + " is not available for this suite");
  }
}

}  // namespace sustar::verify
