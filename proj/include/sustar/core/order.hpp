#pragma once

#include <cmath>

#include "sustar/core/hermitian.hpp"

namespace sustar {

/// a <= b iff b - a lies in the positive cone.
template <OrderedStarAlgebra A>
bool order_leq(const A& alg, const element_t<A>& a, const element_t<A>& b) {
  require_hermitian(alg, a, "order_leq: left operand");
  require_hermitian(alg, b, "order_leq: right operand");
  return alg.is_positive(alg.sub(b, a));
}

template <OrderedStarAlgebra A>
bool is_positive_element(const A& alg, const element_t<A>& a) {
  require_hermitian(alg, a, "positivity test");
  return alg.is_positive(a);
}

struct Coercivity {
  bool coercive = false;
  double epsilon = 0.0;  // largest accepted eps on the bisection grid: eps * 1 <= a
};

/// Searches for eps > 0 with a >= eps * 1. Witnesses below 100 * tol_pos * scale(a)
/// are indistinguishable from the positivity slack and count as not coercive.
template <OrderedStarAlgebra A>
Coercivity is_coercive(const A& alg, const element_t<A>& a) {
  require_hermitian(alg, a, "is_coercive");
  const auto& tol = alg.tolerance();
  const auto one = alg.one();
  auto accepts = [&](double eps) { return alg.is_positive(alg.sub(a, alg.scale(Scalar{eps}, one))); };

  if (!accepts(0.0)) return {};
  double lo = 0.0;
  double hi = scale_of(alg, a);
  constexpr double kCap = 18446744073709551616.0;  // 2^64
  while (accepts(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kCap) return {true, lo};
  }
  for (int step = 0; step < 60 && hi - lo > tol.tol_eq * hi; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (accepts(mid))
      lo = mid;
    else
      hi = mid;
  }
  const double threshold = 100.0 * tol.tol_pos * scale_of(alg, a);
  return {lo > threshold, lo};
}

}  // namespace sustar
