#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sustar/core/algebra.hpp"
#include "sustar/core/errors.hpp"
#include "sustar/core/seminorm.hpp"

namespace sustar {

/// C^X for a finite ordered point set X, with pointwise operations and the
/// pointwise order. Commutative; a Phi*-algebra.
class FunctionAlgebra {
 public:
  using element_type = Eigen::VectorXcd;

  explicit FunctionAlgebra(std::vector<double> points, TolerancePolicy tol = {})
      : points_(std::move(points)), tol_(tol) {
    if (points_.empty()) throw Error(ErrorKind::EmptyDomain, "function algebra needs a non-empty point set");
  }

  const std::vector<double>& points() const { return points_; }
  Eigen::Index n() const { return static_cast<Eigen::Index>(points_.size()); }
  const TolerancePolicy& tolerance() const { return tol_; }

  element_type one() const { return element_type::Ones(n()); }
  element_type zero() const { return element_type::Zero(n()); }
  element_type add(const element_type& x, const element_type& y) const {
    check(x), check(y);
    return x + y;
  }
  element_type sub(const element_type& x, const element_type& y) const {
    check(x), check(y);
    return x - y;
  }
  element_type mul(const element_type& x, const element_type& y) const {
    check(x), check(y);
    return x.cwiseProduct(y);
  }
  element_type scale(Scalar s, const element_type& x) const {
    check(x);
    return s * x;
  }
  element_type star(const element_type& x) const {
    check(x);
    return x.conjugate();
  }
  double size(const element_type& x) const {
    check(x);
    return x.cwiseAbs().maxCoeff();
  }

  bool is_positive(const element_type& h) const {
    check(h);
    const double slack = tol_.tol_pos * (1.0 + h.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < h.size(); ++i)
      if (std::abs(h(i).imag()) > slack || h(i).real() < -slack) return false;
    return true;
  }

  ExtendedNorm fast_seminorm(const element_type& x) const {
    const double s = size(x);
    if (s > kSeminormCap) return ExtendedNorm::infinity();
    return ExtendedNorm{s};
  }

  // Everything commutes, so the commutant is the whole algebra.
  std::vector<element_type> commutant_samples(std::span<const element_type>, std::size_t count, Rng& rng) const {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<element_type> out;
    for (std::size_t s = 0; s < count; ++s) {
      element_type v(n());
      for (Eigen::Index i = 0; i < n(); ++i) v(i) = Scalar(normal(rng), normal(rng));
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void check(const element_type& x) const {
    if (x.size() != n())
      throw Error(ErrorKind::BackendMismatch, "function with " + std::to_string(x.size()) +
                                                  " values used on a " + std::to_string(n()) + "-point set");
  }

  std::vector<double> points_;
  TolerancePolicy tol_;
};

template <>
struct backend_traits<FunctionAlgebra> {
  static constexpr bool radical = true;
};

inline FunctionAlgebra make_function_algebra(std::vector<double> points, TolerancePolicy tol = {}) {
  return FunctionAlgebra(std::move(points), tol);
}

}  // namespace sustar
