#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "sustar/core/algebra.hpp"

namespace sustar {

/// M(a, b) = [[a, b], [0, a]].
struct UpperTriangularElement {
  Scalar a{};
  Scalar b{};

  friend bool operator==(const UpperTriangularElement&, const UpperTriangularElement&) = default;
};

/// The commutative algebra {M(a, b)} with entrywise conjugation and its algebraic
/// order: Hermitian M(a, b) is positive iff a > 0, or a = b = 0. Not Archimedean,
/// and M(0, 1) is a non-zero Hermitian nilpotent.
class UpperTriangularFixture {
 public:
  using element_type = UpperTriangularElement;

  explicit UpperTriangularFixture(TolerancePolicy tol = {}, double tol_strict = 1e-12)
      : tol_(tol), tol_strict_(tol_strict) {}

  const TolerancePolicy& tolerance() const { return tol_; }
  double tol_strict() const { return tol_strict_; }

  static element_type make(Scalar a, Scalar b) { return {a, b}; }

  element_type one() const { return {1.0, 0.0}; }
  element_type zero() const { return {}; }
  element_type add(const element_type& x, const element_type& y) const { return {x.a + y.a, x.b + y.b}; }
  element_type sub(const element_type& x, const element_type& y) const { return {x.a - y.a, x.b - y.b}; }
  element_type mul(const element_type& x, const element_type& y) const {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  element_type scale(Scalar s, const element_type& x) const { return {s * x.a, s * x.b}; }
  element_type star(const element_type& x) const { return {std::conj(x.a), std::conj(x.b)}; }

  /// Payload norm max(|a|, |b|). The uniform seminorm only sees |a|.
  double size(const element_type& x) const { return std::max(std::abs(x.a), std::abs(x.b)); }

  bool is_positive(const element_type& h) const {
    if (std::abs(h.a.imag()) > tol_.tol_eq || std::abs(h.b.imag()) > tol_.tol_eq) return false;
    if (h.a.real() > tol_strict_) return true;
    return std::abs(h.a.real()) <= tol_.tol_eq && std::abs(h.b.real()) <= tol_.tol_eq;
  }

  std::vector<element_type> commutant_samples(std::span<const element_type>, std::size_t count, Rng& rng) const {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<element_type> out;
    for (std::size_t s = 0; s < count; ++s)
      out.push_back({Scalar(normal(rng), normal(rng)), Scalar(normal(rng), normal(rng))});
    return out;
  }

  static Eigen::Matrix2cd to_matrix(const element_type& x) {
    Eigen::Matrix2cd m;
    m << x.a, x.b, 0.0, x.a;
    return m;
  }

 private:
  TolerancePolicy tol_;
  double tol_strict_;
};

}  // namespace sustar
