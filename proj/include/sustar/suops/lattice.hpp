#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sustar/suops/neumann.hpp"

namespace sustar {

/// Square-root options for derived operations (|a|, a_+-, vee, wedge): only the cheap
/// low-index approximants are emitted; they still bracket the assembled limit.
inline SqrtOptions derived_sqrt_options() {
  SqrtOptions o;
  o.max_approximant_index = 4;
  return o;
}

template <class A>
void require_radical(const char* op) {
  if constexpr (!backend_traits<A>::radical)
    throw Error(ErrorKind::NotApplicable, std::string(op) + " presupposes a radical algebra");
}

/// |a| = sqrt(a^2), through the bounded construction when a is bounded.
template <OrderedStarAlgebra A>
SqrtReport<element_t<A>> abs_report(const A& alg, const element_t<A>& a, const SqrtOptions& opts = derived_sqrt_options()) {
  require_radical<A>("abs");
  require_hermitian(alg, a, "abs");
  const auto square = alg.mul(a, a);
  if (is_uniformly_bounded(alg, square)) return sqrt_bounded(alg, square, opts);
  return sqrt_general(alg, square);
}

template <OrderedStarAlgebra A>
element_t<A> abs_value(const A& alg, const element_t<A>& a, const SqrtOptions& opts = derived_sqrt_options()) {
  return abs_report(alg, a, opts).result;
}

template <class E>
struct PosNegParts {
  E pos;
  E neg;
  double product_defect = 0.0;  // |a_+ a_-|
};

/// a_+ = (|a| + a)/2, a_- = (|a| - a)/2.
template <OrderedStarAlgebra A>
PosNegParts<element_t<A>> pos_neg_parts(const A& alg, const element_t<A>& a, const SqrtOptions& opts = derived_sqrt_options()) {
  const auto mod = abs_value(alg, a, opts);
  PosNegParts<element_t<A>> out;
  out.pos = alg.scale(Scalar{0.5}, alg.add(mod, a));
  out.neg = alg.scale(Scalar{0.5}, alg.sub(mod, a));
  out.product_defect = alg.size(alg.mul(out.pos, out.neg));
  return out;
}

template <OrderedStarAlgebra A>
element_t<A> pos_part(const A& alg, const element_t<A>& a) {
  return pos_neg_parts(alg, a).pos;
}

template <OrderedStarAlgebra A>
element_t<A> neg_part(const A& alg, const element_t<A>& a) {
  return pos_neg_parts(alg, a).neg;
}

struct LatticeOptions {
  std::size_t probe_samples = 20;  // 0 disables the bicommutant probe
  std::uint64_t probe_seed = 0x5eedULL;
  SqrtOptions sqrt = derived_sqrt_options();
};

template <class E>
struct LatticeReport {
  E result;
  bool order_ok = false;          // 2x >= a + b (vee) or 2x <= a + b (wedge)
  double algebraic_defect = 0.0;  // |x^2 + ab - x(a + b)|
  double bicommutant_defect = 0.0;  // worst relative commutator with sampled elements of {a,b}'
  std::size_t probes = 0;
};

/// Elements of {a, b}' used to probe membership in {a, b}'': monomials in a, b and,
/// when the backend can sample it, random elements of the commutant itself.
template <StarAlgebra A>
std::vector<element_t<A>> commutant_probe_set(const A& alg, const element_t<A>& a, const element_t<A>& b,
                                              std::size_t count, Rng& rng) {
  std::vector<element_t<A>> probes{alg.one(), a, b, alg.mul(a, b), alg.mul(a, a), alg.mul(b, b),
                                   alg.mul(alg.mul(a, a), b), alg.mul(a, alg.mul(b, b))};
  if (probes.size() > count) probes.resize(count);
  if constexpr (HasCommutantSampler<A>) {
    if (count > probes.size()) {
      const std::vector<element_t<A>> gens{a, b};
      for (auto& s : alg.commutant_samples(gens, count - probes.size(), rng)) probes.push_back(std::move(s));
    }
  }
  return probes;
}

namespace detail {

template <OrderedStarAlgebra A>
LatticeReport<element_t<A>> lattice_op(const A& alg, const element_t<A>& a, const element_t<A>& b, bool sup,
                                       const LatticeOptions& opts) {
  require_radical<A>(sup ? "vee" : "wedge");
  require_hermitian(alg, a, sup ? "vee: left operand" : "wedge: left operand");
  require_hermitian(alg, b, sup ? "vee: right operand" : "wedge: right operand");
  if (!commutes(alg, a, b)) throw Error(ErrorKind::NonCommuting, "lattice operations need commuting operands");

  const auto& tol = alg.tolerance();
  const auto sum = alg.add(a, b);
  const auto mod = abs_value(alg, alg.sub(a, b), opts.sqrt);
  LatticeReport<element_t<A>> rep;
  rep.result = re_part(alg, alg.scale(Scalar{0.5}, sup ? alg.add(sum, mod) : alg.sub(sum, mod)));

  const auto twice = alg.scale(Scalar{2.0}, rep.result);
  rep.order_ok = alg.is_positive(sup ? alg.sub(twice, sum) : alg.sub(sum, twice));
  const auto& x = rep.result;
  rep.algebraic_defect = alg.size(alg.sub(alg.add(alg.mul(x, x), alg.mul(a, b)), alg.mul(x, sum)));

  const double s = std::max(scale_of(alg, a), scale_of(alg, b));
  if (!rep.order_ok || rep.algebraic_defect > 10.0 * tol.tol_eq * s * s)
    throw Error(ErrorKind::PostconditionFailed, std::string(sup ? "vee" : "wedge") +
                                                    ": defining equations violated, algebraic defect " +
                                                    std::to_string(rep.algebraic_defect));

  if (opts.probe_samples > 0) {
    Rng rng(opts.probe_seed);
    const auto probes = commutant_probe_set(alg, a, b, opts.probe_samples, rng);
    rep.probes = probes.size();
    for (const auto& p : probes) {
      const double d = commutator_defect(alg, x, p) / (scale_of(alg, x) * scale_of(alg, p));
      rep.bicommutant_defect = std::max(rep.bicommutant_defect, d);
    }
    if (rep.bicommutant_defect > tol.tol_comm * 100.0)
      throw Error(ErrorKind::PostconditionFailed, "lattice result fails the bicommutant probe");
  }
  return rep;
}

}  // namespace detail

/// a v b = (a + b + |a - b|)/2 for commuting Hermitian a, b; checked against
/// 2(a v b) >= a + b and (a v b)^2 + ab = (a v b)(a + b).
template <OrderedStarAlgebra A>
LatticeReport<element_t<A>> vee_report(const A& alg, const element_t<A>& a, const element_t<A>& b,
                                       const LatticeOptions& opts = {}) {
  return detail::lattice_op(alg, a, b, true, opts);
}

template <OrderedStarAlgebra A>
LatticeReport<element_t<A>> wedge_report(const A& alg, const element_t<A>& a, const element_t<A>& b,
                                         const LatticeOptions& opts = {}) {
  return detail::lattice_op(alg, a, b, false, opts);
}

template <OrderedStarAlgebra A>
element_t<A> vee(const A& alg, const element_t<A>& a, const element_t<A>& b, const LatticeOptions& opts = {}) {
  return vee_report(alg, a, b, opts).result;
}

template <OrderedStarAlgebra A>
element_t<A> wedge(const A& alg, const element_t<A>& a, const element_t<A>& b, const LatticeOptions& opts = {}) {
  return wedge_report(alg, a, b, opts).result;
}

}  // namespace sustar
