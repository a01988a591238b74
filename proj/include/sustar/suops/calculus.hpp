#pragma once

#include <span>
#include <vector>

#include "sustar/core/order.hpp"
#include "sustar/suops/real_polynomial.hpp"

namespace sustar {

namespace detail {

using TermList = std::vector<std::pair<const std::vector<unsigned>*, double>>;

// Horner in variable `var`, with coefficients that are polynomials in the later variables.
template <StarAlgebra A>
element_t<A> horner(const A& alg, const TermList& terms, std::size_t var, std::span<const element_t<A>> tuple) {
  if (var == tuple.size()) {
    double c = 0.0;
    for (const auto& [e, coeff] : terms) c += coeff;
    return alg.scale(Scalar{c}, alg.one());
  }
  unsigned top = 0;
  for (const auto& [e, coeff] : terms) top = std::max(top, (*e)[var]);
  std::vector<TermList> buckets(top + 1);
  for (const auto& t : terms) buckets[(*t.first)[var]].push_back(t);

  auto acc = buckets[top].empty() ? alg.zero() : horner(alg, buckets[top], var + 1, tuple);
  for (int j = static_cast<int>(top) - 1; j >= 0; --j) {
    acc = alg.mul(tuple[var], acc);
    if (!buckets[j].empty()) acc = alg.add(acc, horner(alg, buckets[j], var + 1, tuple));
  }
  return acc;
}

}  // namespace detail

template <StarAlgebra A>
void require_pairwise_commuting(const A& alg, std::span<const element_t<A>> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (!commutes(alg, tuple[i], tuple[j]))
        throw Error(ErrorKind::NonCommutingTuple, "tuple entries " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " do not commute");
}

/// q(a_1, ..., a_N) for pairwise commuting Hermitian a_i.
template <StarAlgebra A>
element_t<A> polynomial_calculus(const A& alg, const RealPolynomial& q, std::span<const element_t<A>> tuple) {
  if (tuple.size() != q.nvars)
    throw Error(ErrorKind::BackendMismatch, "polynomial has " + std::to_string(q.nvars) + " variables, tuple has " +
                                                std::to_string(tuple.size()) + " entries");
  for (const auto& a : tuple) require_hermitian(alg, a, "polynomial_calculus tuple entry");
  require_pairwise_commuting(alg, tuple);
  if (q.terms.empty()) return alg.zero();
  detail::TermList terms;
  for (const auto& [e, c] : q.terms) terms.emplace_back(&e, c);
  return detail::horner(alg, terms, 0, tuple);
}

template <class E>
struct CalculusPositivity {
  E value;                          // q(a_1, ..., a_N)
  bool constraints_positive = false;  // p_m(a) >= 0 for every constraint
  std::size_t samples_in_set = 0;     // sample points with p_m >= 0 for all m
  bool q_nonnegative_on_set = false;  // q >= 0 on those sample points
  bool positive = false;              // positivity oracle on q(a)
};

/// If p_m(a) >= 0 for all m and q >= 0 on the set {p_m >= 0}, then q(a) >= 0.
/// The set is represented by the supplied sample points that satisfy all constraints.
template <OrderedStarAlgebra A>
CalculusPositivity<element_t<A>> calculus_positivity(const A& alg, const RealPolynomial& q,
                                                     std::span<const RealPolynomial> constraints,
                                                     std::span<const element_t<A>> tuple,
                                                     std::span<const std::vector<double>> samples) {
  CalculusPositivity<element_t<A>> out;
  out.value = polynomial_calculus(alg, q, tuple);
  out.constraints_positive = true;
  for (const auto& p : constraints)
    out.constraints_positive = out.constraints_positive && alg.is_positive(polynomial_calculus(alg, p, tuple));

  const double slack = alg.tolerance().tol_pos;
  out.q_nonnegative_on_set = true;
  for (const auto& s : samples) {
    bool inside = true;
    for (const auto& p : constraints) inside = inside && p.evaluate(s) >= 0.0;
    if (!inside) continue;
    ++out.samples_in_set;
    if (q.evaluate(s) < -slack) out.q_nonnegative_on_set = false;
  }
  out.positive = alg.is_positive(out.value);
  return out;
}

}  // namespace sustar
