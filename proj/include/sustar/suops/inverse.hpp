#pragma once

#include <cmath>
#include <string>

#include "sustar/suops/lattice.hpp"

namespace sustar {

enum class InversePath {
  Automatic,   // Neumann series when bounded, otherwise the wedge limit
  Neumann,
  WedgeLimit,  // a^{-1} = lim (a ^ n1)^{-1}
};

/// Inverse of a coercive Hermitian element.
///
/// Neumann path: series in 1 - a/|a|, see neumann_series_inverse.
/// Wedge path: c_n = (a ^ n1)^{-1} for n = 1, 2, 4, ...; each a ^ n1 is bounded and
/// coercive, and (a ^ m1)^{-1} <= (a ^ n1)^{-1} <= (a ^ m1)^{-1} + 1/n for n <= m,
/// so the doubling sequence is stopped once |c_n - c_2n| <= tol_eq * scale.
/// Either way the result obeys |a^{-1}| <= 1/eps for the coercivity witness eps.
template <OrderedStarAlgebra A>
InverseReport<element_t<A>> inverse_coercive(const A& alg, const element_t<A>& a,
                                             InversePath path = InversePath::Automatic) {
  require_hermitian(alg, a, "inverse_coercive");
  const Coercivity coercivity = is_coercive(alg, a);
  if (!coercivity.coercive) throw Error(ErrorKind::NotCoercive, "inverse_coercive needs a >= eps 1 with eps > 0");
  const double eps = coercivity.epsilon;
  const auto& tol = alg.tolerance();
  const auto one = alg.one();

  if (path == InversePath::Automatic) path = is_uniformly_bounded(alg, a) ? InversePath::Neumann : InversePath::WedgeLimit;

  InverseReport<element_t<A>> report;
  if (path == InversePath::Neumann) {
    report = neumann_series_inverse(alg, a, eps);
  } else {
    LatticeOptions lat;
    lat.probe_samples = 0;
    element_t<A> previous = alg.zero();
    bool converged = false;
    double n = 1.0;
    for (int k = 0; k < tol.max_iter && k < 62; ++k, n *= 2.0) {
      const auto truncated = wedge(alg, a, unit_multiple(alg, n), lat);
      const Coercivity tc = is_coercive(alg, truncated);
      if (!tc.coercive) throw Error(ErrorKind::NoConvergence, "a ^ n1 lost coercivity");
      auto c = neumann_series_inverse(alg, truncated, tc.epsilon).result;
      report.iterations += 1;
      if (k > 0 && alg.size(alg.sub(c, previous)) <= tol.tol_eq * scale_of(alg, c)) {
        report.result = std::move(c);
        converged = true;
        break;
      }
      previous = std::move(c);
    }
    if (!converged) throw Error(ErrorKind::NoConvergence, "(a ^ n1)^{-1} did not settle within max_iter doublings");
    report.epsilon = eps;
  }

  report.defect = alg.size(alg.sub(alg.mul(a, report.result), one));
  if (report.defect > tol.tol_eq * scale_of(alg, a))
    throw Error(ErrorKind::NoConvergence, "inverse defect " + std::to_string(report.defect) + " above tolerance");

  // |a^{-1}| <= 1/eps, with eps widened by the positivity slack that accepted it.
  const double eps_lower = eps - tol.tol_pos * (1.0 + scale_of(alg, a));
  const double bound = 1.0 / eps_lower + tol.tol_eq * scale_of(alg, report.result);
  if (eps_lower <= 0.0 || uniform_seminorm(alg, report.result).value() > bound)
    throw Error(ErrorKind::PostconditionFailed, "inverse exceeds the 1/eps bound");
  return report;
}

template <class E>
struct ShiftedInverses {
  E plus;   // (a + i1)^{-1}
  E minus;  // (a - i1)^{-1}
  double defect_plus = 0.0;
  double defect_minus = 0.0;
  int iterations = 0;
};

/// (a +- i1)^{-1} = (1 + a^2)^{-1} (a -+ i1).
template <OrderedStarAlgebra A>
ShiftedInverses<element_t<A>> invert_shifted(const A& alg, const element_t<A>& a) {
  require_hermitian(alg, a, "invert_shifted");
  const auto one = alg.one();
  const auto i_one = alg.scale(kI, one);
  const auto inv = inverse_coercive(alg, alg.add(one, alg.mul(a, a)));
  ShiftedInverses<element_t<A>> out;
  out.iterations = inv.iterations;
  out.plus = alg.mul(inv.result, alg.sub(a, i_one));
  out.minus = alg.mul(inv.result, alg.add(a, i_one));
  out.defect_plus = alg.size(alg.sub(alg.mul(alg.add(a, i_one), out.plus), one));
  out.defect_minus = alg.size(alg.sub(alg.mul(alg.sub(a, i_one), out.minus), one));
  const double limit = alg.tolerance().tol_eq * scale_of(alg, a) * scale_of(alg, a);
  if (out.defect_plus > limit || out.defect_minus > limit)
    throw Error(ErrorKind::NoConvergence, "shifted inverse defect above tolerance");
  return out;
}

}  // namespace sustar
