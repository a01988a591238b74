#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "sustar/core/algebra.hpp"
#include "sustar/core/errors.hpp"

namespace sustar {

/// Functions on 2m equally spaced points of the unit circle with the twisted
/// involution f* = conj o f o tau, tau(z) = -z. The grid is closed under tau, so
/// the involution needs no interpolation. There is no positivity oracle: in this
/// algebra -1 = id* id is a sum of squares.
class TwistedCircle {
 public:
  using element_type = Eigen::VectorXcd;

  explicit TwistedCircle(int half_points, TolerancePolicy tol = {}) : m_(half_points), tol_(tol) {
    if (half_points < 1) throw Error(ErrorKind::EmptyDomain, "twisted circle needs at least 2 grid points");
  }

  Eigen::Index n() const { return 2 * m_; }
  int half_points() const { return m_; }
  const TolerancePolicy& tolerance() const { return tol_; }

  Scalar grid_point(Eigen::Index k) const {
    return std::polar(1.0, std::numbers::pi * static_cast<double>(k) / m_);
  }
  /// Index of tau(z_k) = -z_k.
  Eigen::Index antipode(Eigen::Index k) const { return (k + m_) % n(); }

  element_type identity() const {
    element_type v(n());
    for (Eigen::Index k = 0; k < n(); ++k) v(k) = grid_point(k);
    return v;
  }

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
    element_type out(n());
    for (Eigen::Index k = 0; k < n(); ++k) out(k) = std::conj(x(antipode(k)));
    return out;
  }
  double size(const element_type& x) const {
    check(x);
    return x.cwiseAbs().maxCoeff();
  }

 private:
  void check(const element_type& x) const {
    if (x.size() != n())
      throw Error(ErrorKind::BackendMismatch, "grid function of length " + std::to_string(x.size()) +
                                                  " on a " + std::to_string(n()) + "-point grid");
  }

  int m_;
  TolerancePolicy tol_;
};

}  // namespace sustar
