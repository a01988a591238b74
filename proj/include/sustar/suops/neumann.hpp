#pragma once

#include <cmath>
#include <limits>

#include "sustar/suops/sqrt.hpp"

namespace sustar {

template <class E>
struct InverseReport {
  E result;
  int iterations = 0;
  double defect = 0.0;   // |a result - 1|
  double epsilon = 0.0;  // coercivity witness used for the convergence guard
};

/// Inverse of a bounded Hermitian a >= eps 1 by the Neumann series
/// a^{-1} = |a|^{-1} sum_j X^j, X = 1 - a/|a|, summed in doubling blocks
/// S_{k+1} = S_k (1 + R_k) with the residual R_k = 1 - a S_k recomputed each step,
/// so that S_k is the partial sum of the first 2^k terms.
/// The defect is reported, not enforced.
template <OrderedStarAlgebra A>
InverseReport<element_t<A>> neumann_series_inverse(const A& alg, const element_t<A>& a, double eps) {
  const auto& tol = alg.tolerance();
  const double norm = detail::bounded_norm(alg, a);
  if (!(eps > 0.0) || norm <= 0.0) throw Error(ErrorKind::NotCoercive, "Neumann series needs a coercive element");
  const auto one = alg.one();

  const auto x = alg.sub(one, alg.scale(Scalar{1.0 / norm}, a));
  const double contraction = uniform_seminorm(alg, x).value();
  // eps is only known up to the positivity slack that accepted a - eps 1.
  const double eps_lower = eps - tol.tol_pos * (1.0 + norm);
  if (contraction > 1.0 - eps_lower / norm + tol.tol_eq)
    throw Error(ErrorKind::NotCoercive, "Neumann guard failed: |1 - a/|a|| = " + std::to_string(contraction));

  InverseReport<element_t<A>> report;
  report.epsilon = eps;
  auto s = alg.scale(Scalar{1.0 / norm}, one);
  auto best = s;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < tol.max_iter; ++k) {
    const auto r = alg.sub(one, alg.mul(a, s));
    const double rn = alg.size(r);
    report.iterations = k + 1;
    if (rn < best_residual) {
      best_residual = rn;
      best = s;
    } else if (rn < 0.5) {
      break;  // rounding floor reached
    }
    if (rn <= 16.0 * std::numeric_limits<double>::epsilon()) break;
    s = alg.add(s, alg.mul(s, r));
  }
  report.result = re_part(alg, best);
  report.defect = alg.size(alg.sub(alg.mul(a, report.result), one));
  return report;
}

/// Square root of a positive element through inverses of a + 1/n; see sqrt_general_with.
template <OrderedStarAlgebra A>
SqrtReport<element_t<A>> sqrt_general(const A& alg, const element_t<A>& a) {
  return sqrt_general_with(alg, a, [&](const element_t<A>& shifted, double eps) {
    return neumann_series_inverse(alg, shifted, eps).result;
  });
}

}  // namespace sustar
