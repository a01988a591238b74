#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "sustar/core/algebra.hpp"
#include "sustar/core/errors.hpp"

namespace sustar {

/// sum_j c_j T_j(y), y = (2t - lo - hi) / (hi - lo), on [lo, hi].
class ChebyshevSeries {
 public:
  ChebyshevSeries(double lo, double hi, std::vector<double> coeffs)
      : lo_(lo), hi_(hi), coeffs_(std::move(coeffs)) {}

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double operator()(double t) const {
    const double y = (2.0 * t - lo_ - hi_) / (hi_ - lo_);
    double b1 = 0.0, b2 = 0.0;
    for (int k = degree(); k >= 1; --k) {
      const double b0 = coeffs_[k] + 2.0 * y * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return coeffs_[0] + y * b1 - b2;
  }

  /// Clenshaw recurrence in the algebra; one multiplication per degree.
  template <StarAlgebra A>
  element_t<A> evaluate(const A& alg, const element_t<A>& x) const {
    const auto one = alg.one();
    const double w = hi_ - lo_;
    const auto y = alg.sub(alg.scale(Scalar{2.0 / w}, x), alg.scale(Scalar{(lo_ + hi_) / w}, one));
    const auto two_y = alg.scale(Scalar{2.0}, y);
    auto b1 = alg.zero();
    auto b2 = alg.zero();
    for (int k = degree(); k >= 1; --k) {
      auto b0 = alg.add(alg.sub(alg.mul(two_y, b1), b2), alg.scale(Scalar{coeffs_[k]}, one));
      b2 = std::move(b1);
      b1 = std::move(b0);
    }
    return alg.add(alg.sub(alg.mul(y, b1), b2), alg.scale(Scalar{coeffs_[0]}, one));
  }

 private:
  double lo_;
  double hi_;
  std::vector<double> coeffs_;
};

/// Interpolant of f at `nodes` Chebyshev points of the first kind on [lo, hi].
template <class F>
ChebyshevSeries chebyshev_interpolant(F&& f, double lo, double hi, int nodes) {
  std::vector<double> values(nodes), xs(nodes);
  for (int k = 0; k < nodes; ++k) {
    xs[k] = std::cos(std::numbers::pi * (k + 0.5) / nodes);
    values[k] = f(0.5 * (lo + hi) + 0.5 * (hi - lo) * xs[k]);
  }
  std::vector<double> coeffs(nodes, 0.0);
  // c_j = (2/N) sum_k f(x_k) T_j(x_k), with T_j evaluated by the three-term recurrence.
  for (int k = 0; k < nodes; ++k) {
    double t_prev = 1.0, t_cur = xs[k];
    coeffs[0] += values[k];
    if (nodes > 1) coeffs[1] += values[k] * t_cur;
    for (int j = 2; j < nodes; ++j) {
      const double t_next = 2.0 * xs[k] * t_cur - t_prev;
      coeffs[j] += values[k] * t_next;
      t_prev = t_cur;
      t_cur = t_next;
    }
  }
  for (double& c : coeffs) c *= 2.0 / nodes;
  coeffs[0] *= 0.5;
  return ChebyshevSeries(lo, hi, std::move(coeffs));
}

/// Max |f - series| over the extrema of T_{4d} plus a geometric grid towards lo,
/// where the square-root singularity concentrates the error.
template <class F>
double chebyshev_sup_error(const ChebyshevSeries& s, F&& f) {
  const double lo = s.lo(), hi = s.hi();
  const int m = 4 * std::max(1, s.degree()) + 1;
  double err = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(std::numbers::pi * k / m);
    err = std::max(err, std::abs(f(t) - s(t)));
  }
  for (int k = 1; k <= 80; ++k) {
    const double t = lo + (hi - lo) * std::ldexp(1.0, -k);
    err = std::max(err, std::abs(f(t) - s(t)));
  }
  return err;
}

/// Polynomial approximant of sqrt on [0, 1] with verified sup error <= 2^-level.
/// Node counts start at 8 and double until the verification passes. Cached, so
/// repeated square roots reuse the same approximants.
inline const ChebyshevSeries& sqrt_unit_approximant(int level, int max_nodes) {
  static std::mutex mutex;
  static std::map<int, ChebyshevSeries> cache;
  static std::map<int, int> refused;  // node cap -> lowest level it was not enough for
  std::lock_guard lock(mutex);
  if (auto it = cache.find(level); it != cache.end()) return it->second;
  const auto too_costly = [&] {
    return Error(ErrorKind::NoConvergence, "sqrt approximant of level " + std::to_string(level) +
                                               " needs more than " + std::to_string(max_nodes) + " nodes");
  };
  // Finer levels need at least as many nodes, so a refusal covers every level above it.
  for (const auto& [cap, lowest] : refused)
    if (cap >= max_nodes && level >= lowest) throw too_costly();

  const double target = std::ldexp(1.0, -level);
  auto root = [](double t) { return std::sqrt(std::max(0.0, t)); };
  for (int nodes = 8; nodes <= max_nodes; nodes *= 2) {
    ChebyshevSeries s = chebyshev_interpolant(root, 0.0, 1.0, nodes);
    if (chebyshev_sup_error(s, root) <= target) return cache.emplace(level, std::move(s)).first->second;
  }
  if (auto it = refused.find(max_nodes); it == refused.end() || level < it->second) refused[max_nodes] = level;
  throw too_costly();
}

}  // namespace sustar
