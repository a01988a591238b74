#pragma once

#include <algorithm>

#include "sustar/core/order.hpp"

namespace sustar {

inline constexpr double kSeminormCap = 18446744073709551616.0;  // 2^64

/// inf { lambda > 0 : a* a <= lambda^2 1 }, computed from the positivity oracle
/// alone: exponential bracketing then bisection to relative width tol_eq.
/// The returned lambda is always an accepted one, so a* a <= lambda^2 1 holds.
template <OrderedStarAlgebra A>
ExtendedNorm uniform_seminorm_generic(const A& alg, const element_t<A>& a, double cap = kSeminormCap) {
  const auto& tol = alg.tolerance();
  const auto one = alg.one();
  const auto gram = alg.mul(alg.star(a), a);
  auto accepts = [&](double lambda) {
    return alg.is_positive(alg.sub(alg.scale(Scalar{lambda * lambda}, one), gram));
  };

  if (accepts(0.0)) return ExtendedNorm{0.0};

  double lo = 0.0;
  double hi = 1.0;
  if (accepts(1.0)) {
    constexpr double kFloor = 5.421010862427522e-20;  // 2^-64
    lo = 0.5;
    while (accepts(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < kFloor) return ExtendedNorm{hi};
    }
  } else {
    while (!accepts(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > cap) return ExtendedNorm::infinity();
    }
  }
  for (int step = 0; step < 60 && hi - lo > tol.tol_eq * hi; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (accepts(mid))
      hi = mid;
    else
      lo = mid;
  }
  return ExtendedNorm{hi};
}

/// Uniform seminorm, using the backend fast path when one exists.
template <OrderedStarAlgebra A>
ExtendedNorm uniform_seminorm(const A& alg, const element_t<A>& a) {
  if constexpr (HasFastSeminorm<A>)
    return alg.fast_seminorm(a);
  else
    return uniform_seminorm_generic(alg, a);
}

template <OrderedStarAlgebra A>
bool is_uniformly_bounded(const A& alg, const element_t<A>& a) {
  return uniform_seminorm(alg, a).is_finite();
}

/// d(a, b) = min(|a - b|, 1); snapped to 0 below tol_eq.
template <OrderedStarAlgebra A>
double uniform_metric(const A& alg, const element_t<A>& a, const element_t<A>& b) {
  const ExtendedNorm n = uniform_seminorm(alg, alg.sub(a, b));
  if (!n.is_finite()) return 1.0;
  if (n.value() <= alg.tolerance().tol_eq) return 0.0;
  return std::min(n.value(), 1.0);
}

}  // namespace sustar
