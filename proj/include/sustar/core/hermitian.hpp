#pragma once

#include <algorithm>

#include "sustar/core/algebra.hpp"
#include "sustar/core/errors.hpp"

namespace sustar {

/// max(1, |a|) with the backend's fast norm; relative tolerances scale with this.
template <StarAlgebra A>
double scale_of(const A& alg, const element_t<A>& a) {
  return std::max(1.0, static_cast<double>(alg.size(a)));
}

/// Re(a) = (a + a*) / 2.
template <StarAlgebra A>
element_t<A> re_part(const A& alg, const element_t<A>& a) {
  return alg.scale(Scalar{0.5}, alg.add(a, alg.star(a)));
}

/// Im(a) = (a - a*) / (2i), so that a = Re(a) + i Im(a).
template <StarAlgebra A>
element_t<A> im_part(const A& alg, const element_t<A>& a) {
  return alg.scale(Scalar{0.0, -0.5}, alg.sub(a, alg.star(a)));
}

template <StarAlgebra A>
bool is_hermitian(const A& alg, const element_t<A>& a) {
  const auto& tol = alg.tolerance();
  return alg.size(alg.sub(a, alg.star(a))) <= tol.tol_eq * scale_of(alg, a);
}

template <StarAlgebra A>
double commutator_defect(const A& alg, const element_t<A>& a, const element_t<A>& b) {
  return alg.size(alg.sub(alg.mul(a, b), alg.mul(b, a)));
}

template <StarAlgebra A>
bool commutes(const A& alg, const element_t<A>& a, const element_t<A>& b) {
  const auto& tol = alg.tolerance();
  return commutator_defect(alg, a, b) <= tol.tol_comm * scale_of(alg, a) * scale_of(alg, b);
}

/// |a - b| measured with the backend's fast norm, relative to the larger operand.
template <StarAlgebra A>
bool approx_equal(const A& alg, const element_t<A>& a, const element_t<A>& b, double rel_tol) {
  const double s = std::max(scale_of(alg, a), scale_of(alg, b));
  return alg.size(alg.sub(a, b)) <= rel_tol * s;
}

template <StarAlgebra A>
void require_hermitian(const A& alg, const element_t<A>& a, const char* what) {
  if (!is_hermitian(alg, a)) throw Error(ErrorKind::NonHermitianInput, what);
}

/// lambda * 1
template <StarAlgebra A>
element_t<A> unit_multiple(const A& alg, double lambda) {
  return alg.scale(Scalar{lambda}, alg.one());
}

}  // namespace sustar
