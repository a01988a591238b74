#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "sustar/core/algebra.hpp"
#include "sustar/core/errors.hpp"
#include "sustar/core/seminorm.hpp"

namespace sustar {

using Exponents = std::vector<unsigned>;

/// Complex polynomial in a fixed number of commuting variables.
struct Polynomial {
  std::map<Exponents, Scalar> terms;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// C[x_1..x_N] with the quasi-order p <= q iff p(s) <= q(s) on a finite sample set S.
/// Antisymmetry only holds when S is rich enough; a single sample collapses the order.
class PolynomialAlgebra {
 public:
  using element_type = Polynomial;

  PolynomialAlgebra(std::size_t nvars, std::vector<std::vector<double>> samples, TolerancePolicy tol = {})
      : nvars_(nvars), samples_(std::move(samples)), tol_(tol) {
    if (samples_.empty()) throw Error(ErrorKind::EmptyDomain, "polynomial algebra needs at least one sample");
    for (const auto& s : samples_)
      if (s.size() != nvars_) throw Error(ErrorKind::BackendMismatch, "sample dimension differs from nvars");
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::vector<double>>& samples() const { return samples_; }
  const TolerancePolicy& tolerance() const { return tol_; }

  Polynomial constant(Scalar c) const {
    Polynomial p;
    if (c != Scalar{}) p.terms[Exponents(nvars_, 0u)] = c;
    return p;
  }
  Polynomial variable(std::size_t i) const {
    if (i >= nvars_) throw Error(ErrorKind::BackendMismatch, "variable index out of range");
    Exponents e(nvars_, 0u);
    e[i] = 1;
    Polynomial p;
    p.terms[e] = 1.0;
    return p;
  }

  Polynomial one() const { return constant(1.0); }
  Polynomial zero() const { return {}; }

  Polynomial add(const Polynomial& x, const Polynomial& y) const { return combine(x, y, 1.0); }
  Polynomial sub(const Polynomial& x, const Polynomial& y) const { return combine(x, y, -1.0); }

  Polynomial mul(const Polynomial& x, const Polynomial& y) const {
    check(x), check(y);
    Polynomial out;
    for (const auto& [ex, cx] : x.terms)
      for (const auto& [ey, cy] : y.terms) {
        Exponents e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = ex[i] + ey[i];
        out.terms[e] += cx * cy;
      }
    prune(out);
    return out;
  }

  Polynomial scale(Scalar s, const Polynomial& x) const {
    check(x);
    Polynomial out = x;
    for (auto& [e, c] : out.terms) c *= s;
    prune(out);
    return out;
  }

  Polynomial star(const Polynomial& x) const {
    check(x);
    Polynomial out = x;
    for (auto& [e, c] : out.terms) c = std::conj(c);
    return out;
  }

  Scalar evaluate(const Polynomial& p, const std::vector<double>& point) const {
    check(p);
    Scalar acc{};
    for (const auto& [e, c] : p.terms) {
      double mono = 1.0;
      for (std::size_t i = 0; i < nvars_; ++i) mono *= std::pow(point[i], static_cast<double>(e[i]));
      acc += c * mono;
    }
    return acc;
  }

  /// sup over S of |p(s)|.
  double size(const Polynomial& p) const {
    double m = 0.0;
    for (const auto& s : samples_) m = std::max(m, std::abs(evaluate(p, s)));
    return m;
  }

  bool is_positive(const Polynomial& h) const {
    const double slack = tol_.tol_pos * (1.0 + size(h));
    for (const auto& s : samples_) {
      const Scalar v = evaluate(h, s);
      if (std::abs(v.imag()) > slack || v.real() < -slack) return false;
    }
    return true;
  }

  ExtendedNorm fast_seminorm(const Polynomial& p) const {
    const double s = size(p);
    if (!(s <= kSeminormCap)) return ExtendedNorm::infinity();
    return ExtendedNorm{s};
  }

 private:
  Polynomial combine(const Polynomial& x, const Polynomial& y, double sign) const {
    check(x), check(y);
    Polynomial out = x;
    for (const auto& [e, c] : y.terms) out.terms[e] += sign * c;
    prune(out);
    return out;
  }

  static void prune(Polynomial& p) {
    std::erase_if(p.terms, [](const auto& kv) { return kv.second == Scalar{}; });
  }

  void check(const Polynomial& p) const {
    for (const auto& [e, c] : p.terms)
      if (e.size() != nvars_)
        throw Error(ErrorKind::BackendMismatch, "polynomial term with " + std::to_string(e.size()) +
                                                    " exponents in a " + std::to_string(nvars_) +
                                                    "-variable algebra");
  }

  std::size_t nvars_;
  std::vector<std::vector<double>> samples_;
  TolerancePolicy tol_;
};

inline PolynomialAlgebra make_polynomial_algebra(std::size_t nvars, std::vector<std::vector<double>> samples,
                                                 TolerancePolicy tol = {}) {
  return PolynomialAlgebra(nvars, std::move(samples), tol);
}

}  // namespace sustar
