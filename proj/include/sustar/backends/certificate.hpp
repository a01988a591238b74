#pragma once

#include <vector>

#include "sustar/core/hermitian.hpp"

namespace sustar {

/// One summand a* g a of an algebraic positivity certificate; g is a Hermitian
/// generator or the unit.
template <class E>
struct CertificateTerm {
  E weight;
  E factor;
};

template <class E>
using GenPosCertificate = std::vector<CertificateTerm<E>>;

template <StarAlgebra A>
element_t<A> certificate_sum(const A& alg, const GenPosCertificate<element_t<A>>& cert) {
  auto sum = alg.zero();
  for (const auto& term : cert)
    sum = alg.add(sum, alg.mul(alg.star(term.factor), alg.mul(term.weight, term.factor)));
  return sum;
}

/// Recomputes sum a_n* g_n a_n and compares it with the target within tol_eq * scale.
/// Terms from a differently shaped algebra raise BackendMismatch.
template <StarAlgebra A>
bool verify_genpos_certificate(const A& alg, const element_t<A>& target, const GenPosCertificate<element_t<A>>& cert) {
  require_hermitian(alg, target, "certificate target");
  for (const auto& term : cert) require_hermitian(alg, term.weight, "certificate weight");
  const auto sum = certificate_sum(alg, cert);
  return approx_equal(alg, sum, target, alg.tolerance().tol_eq);
}

}  // namespace sustar
