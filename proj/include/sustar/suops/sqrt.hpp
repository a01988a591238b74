#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "sustar/core/seminorm.hpp"
#include "sustar/suops/chebyshev.hpp"

namespace sustar {

/// One polynomial approximant p_n with a + q_n(a) = p_n(a)^2.
struct ApproximantRecord {
  int n = 0;
  int degree = 0;
  double shift = 0.0;      // 1 / (4 n (sqrt(u) + 1))
  double residual = 0.0;   // |q_n(a)|
  bool p_positive = false;  // 0 <= p_n(a)
  bool q_lower = false;     // 0 <= q_n(a)
  bool q_upper = false;     // q_n(a) <= (1/n + slack) 1
};

template <class E>
struct SqrtReport {
  E result;
  int iterations = 0;
  double residual = 0.0;          // |result^2 - a|
  double commutant_defect = 0.0;  // |result a - a result|
  std::vector<ApproximantRecord> approximants;
  std::vector<E> approximant_values;  // p_n(a), kept only on request
  int refinement_steps = 0;
  double cauchy_defect = 0.0;  // general route only: |b_n - b_{n/2}| at the accepted n
  long long final_index = 0;   // general route only: accepted n
};

struct SqrtOptions {
  // Approximants p_n are emitted for n = 1, 2, 4, ..., max_approximant_index.
  int max_approximant_index = 64;
  int max_nodes = 1 << 12;  // degree cap 4095
  double q_bound_slack = 1e-8;
  bool keep_approximants = false;
};

namespace detail {

template <OrderedStarAlgebra A>
double bounded_norm(const A& alg, const element_t<A>& a) {
  const ExtendedNorm n = uniform_seminorm(alg, a);
  if (!n.is_finite()) throw Error(ErrorKind::NotBounded, "element is not uniformly bounded");
  return n.value();
}

/// Coupled Newton-Schulz iteration Y -> sqrt(x), Z -> x^{-1/2} for 0 <= x <= (1 - 1/u) 1.
/// Every iterate is a real polynomial in x.
template <StarAlgebra A>
element_t<A> newton_schulz_sqrt(const A& alg, const element_t<A>& x, int max_iter, int& steps) {
  const auto one = alg.one();
  const auto three = alg.scale(Scalar{3.0}, one);
  auto y = x;
  auto z = one;
  steps = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  double last_diff = std::numeric_limits<double>::infinity();
  for (; steps < max_iter; ++steps) {
    const auto t = alg.scale(Scalar{0.5}, alg.sub(three, alg.mul(z, y)));
    auto y_next = alg.mul(y, t);
    z = alg.mul(t, z);
    const double diff = alg.size(alg.sub(y_next, y));
    const double floor = std::max(1.0, alg.size(y_next));
    y = std::move(y_next);
    // Converged, or stalled at the rounding floor (no further contraction). Small
    // spectral components grow only linearly (x1.5 per step) at first, so a step that
    // fails to contract is taken as a stall only once it is near rounding level.
    if (diff <= 8.0 * eps * floor || (diff <= 1e4 * eps * floor && diff >= 0.5 * last_diff)) {
      ++steps;
      return y;
    }
    last_diff = diff;
  }
  throw Error(ErrorKind::NoConvergence, "square-root refinement did not settle within max_iter");
}

}  // namespace detail

/// Square root of a bounded positive element.
///
/// With u = |a| + 1, the approximants p_n = p_n' + 1/(4n(sqrt(u)+1)) are built from
/// a verified polynomial approximation p_n' of sqrt on [0, u]; each satisfies
/// 0 <= p_n(a), 0 <= q_n(a) <= 1/n where q_n(a) = p_n(a)^2 - a. Their limit is
/// assembled by an inverse-free Newton-Schulz iteration in the polynomial algebra
/// generated by a, and checked against the last approximant: 0 <= p_N(a) - sqrt(a) <= 2 shift_N.
template <OrderedStarAlgebra A>
SqrtReport<element_t<A>> sqrt_bounded(const A& alg, const element_t<A>& a, const SqrtOptions& opts = {}) {
  require_hermitian(alg, a, "sqrt_bounded");
  if (!alg.is_positive(a)) throw Error(ErrorKind::NotPositive, "sqrt_bounded needs a positive element");
  const auto& tol = alg.tolerance();
  const double norm = detail::bounded_norm(alg, a);
  const double u = norm + 1.0;
  const double root_u = std::sqrt(u);
  const auto one = alg.one();
  const auto x = alg.scale(Scalar{1.0 / u}, a);  // spectrum in [0, 1)

  SqrtReport<element_t<A>> report;
  element_t<A> last_approximant = alg.zero();
  double last_shift = 0.0;

  for (int n = 1; n <= opts.max_approximant_index; n *= 2) {
    const double shift = 1.0 / (4.0 * n * (root_u + 1.0));
    // |sqrt(t) - p'(t)| <= shift on [0, u] follows from error <= shift / sqrt(u) on [0, 1].
    const int level = static_cast<int>(std::ceil(std::log2(root_u / shift)));
    const ChebyshevSeries* approx = nullptr;
    try {
      approx = &sqrt_unit_approximant(level, opts.max_nodes);
    } catch (const Error&) {
      break;  // degree cap reached; the limit assembly below takes over
    }
    auto p = alg.add(alg.scale(Scalar{root_u}, approx->evaluate(alg, x)), alg.scale(Scalar{shift}, one));
    p = re_part(alg, p);
    const auto q = alg.sub(alg.mul(p, p), a);

    ApproximantRecord rec;
    rec.n = n;
    rec.degree = approx->degree();
    rec.shift = shift;
    rec.residual = alg.size(q);
    rec.p_positive = alg.is_positive(p);
    rec.q_lower = alg.is_positive(q);
    rec.q_upper = alg.is_positive(alg.sub(alg.scale(Scalar{1.0 / n + opts.q_bound_slack}, one), q));
    report.approximants.push_back(rec);
    if (opts.keep_approximants) report.approximant_values.push_back(p);
    ++report.iterations;

    last_approximant = std::move(p);
    last_shift = shift;
    if (rec.residual <= tol.tol_eq * scale_of(alg, a)) {
      report.result = last_approximant;
      break;
    }
  }

  if (report.approximants.empty() || report.approximants.back().residual > tol.tol_eq * scale_of(alg, a)) {
    int steps = 0;
    auto y = detail::newton_schulz_sqrt(alg, x, tol.max_iter, steps);
    report.refinement_steps = steps;
    report.iterations += steps;
    report.result = re_part(alg, alg.scale(Scalar{root_u}, y));

    if (!report.approximants.empty()) {
      const auto gap = alg.sub(last_approximant, report.result);
      const bool lower = alg.is_positive(gap);
      const bool upper = alg.is_positive(alg.sub(alg.scale(Scalar{2.0 * last_shift}, one), gap));
      if (!lower || !upper)
        throw Error(ErrorKind::NoConvergence, "square-root limit leaves the bracket of its last approximant");
    }
  }

  report.residual = alg.size(alg.sub(alg.mul(report.result, report.result), a));
  report.commutant_defect = commutator_defect(alg, report.result, a);
  if (report.residual > tol.tol_eq * scale_of(alg, a))
    throw Error(ErrorKind::NoConvergence, "square-root residual " + std::to_string(report.residual) +
                                              " above tolerance");
  if (!alg.is_positive(report.result))
    throw Error(ErrorKind::PostconditionFailed, "computed square root is not positive");
  return report;
}

/// Square root of a positive element through b_n = (a + 1/n) sqrt((a + 1/n)^{-1}),
/// where b_n^2 = a + 1/n exactly. Square-level closeness 1/n forces root-level
/// closeness sqrt(1/n), so the doubling sequence is stopped at the first n with
/// 1/n <= tol_eq * scale(a) whose Cauchy step is within sqrt(tol_eq * scale(a)).
template <OrderedStarAlgebra A, class InverseFn>
SqrtReport<element_t<A>> sqrt_general_with(const A& alg, const element_t<A>& a, InverseFn&& invert) {
  require_hermitian(alg, a, "sqrt_general");
  if (!alg.is_positive(a)) throw Error(ErrorKind::NotPositive, "sqrt_general needs a positive element");
  const auto& tol = alg.tolerance();
  const double s = scale_of(alg, a);
  const auto one = alg.one();
  SqrtOptions inner;
  inner.max_approximant_index = 0;

  SqrtReport<element_t<A>> report;
  element_t<A> previous = alg.zero();
  bool have_previous = false;
  long long n = 1;
  for (int k = 0; k < tol.max_iter && k < 62; ++k, n *= 2) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const auto shifted = alg.add(a, alg.scale(Scalar{inv_n}, one));
    const auto inverse = invert(shifted, inv_n);
    const auto root = sqrt_bounded(alg, inverse, inner);
    auto b = re_part(alg, alg.mul(shifted, root.result));
    report.iterations += 1;
    report.refinement_steps += root.refinement_steps;
    if (have_previous) {
      report.cauchy_defect = alg.size(alg.sub(b, previous));
      if (inv_n <= tol.tol_eq * s && report.cauchy_defect <= std::sqrt(tol.tol_eq * s)) {
        report.result = std::move(b);
        report.final_index = n;
        report.residual = alg.size(alg.sub(alg.mul(report.result, report.result), a));
        report.commutant_defect = commutator_defect(alg, report.result, a);
        if (!alg.is_positive(report.result))
          throw Error(ErrorKind::PostconditionFailed, "computed square root is not positive");
        return report;
      }
    }
    previous = std::move(b);
    have_previous = true;
  }
  throw Error(ErrorKind::NoConvergence, "sqrt_general: Cauchy criterion not met within max_iter doublings");
}

}  // namespace sustar
