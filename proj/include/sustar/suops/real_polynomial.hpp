#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "sustar/core/algebra.hpp"
#include "sustar/core/errors.hpp"

namespace sustar {

/// Real polynomial in nvars commuting variables, stored as exponent -> coefficient.
struct RealPolynomial {
  std::size_t nvars = 1;
  std::map<std::vector<unsigned>, double> terms;

  static RealPolynomial constant(std::size_t nvars, double c) {
    RealPolynomial p{nvars, {}};
    if (c != 0.0) p.terms[std::vector<unsigned>(nvars, 0u)] = c;
    return p;
  }

  static RealPolynomial variable(std::size_t nvars, std::size_t i) {
    RealPolynomial p{nvars, {}};
    std::vector<unsigned> e(nvars, 0u);
    e.at(i) = 1;
    p.terms[e] = 1.0;
    return p;
  }

  /// c[0] + c[1] x + c[2] x^2 + ...
  static RealPolynomial univariate(std::span<const double> coeffs) {
    RealPolynomial p{1, {}};
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0.0) p.terms[{static_cast<unsigned>(k)}] = coeffs[k];
    return p;
  }

  static RealPolynomial monomial(std::vector<unsigned> exps, double c = 1.0) {
    RealPolynomial p{exps.size(), {}};
    if (c != 0.0) p.terms[std::move(exps)] = c;
    return p;
  }

  double evaluate(std::span<const double> point) const {
    if (point.size() != nvars) throw Error(ErrorKind::BackendMismatch, "point dimension differs from nvars");
    double acc = 0.0;
    for (const auto& [e, c] : terms) {
      double mono = c;
      for (std::size_t i = 0; i < nvars; ++i) mono *= std::pow(point[i], static_cast<double>(e[i]));
      acc += mono;
    }
    return acc;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms) {
      unsigned s = 0;
      for (unsigned k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  friend RealPolynomial operator+(RealPolynomial x, const RealPolynomial& y) {
    check_same(x, y);
    for (const auto& [e, c] : y.terms) x.terms[e] += c;
    x.prune();
    return x;
  }

  friend RealPolynomial operator-(RealPolynomial x, const RealPolynomial& y) {
    check_same(x, y);
    for (const auto& [e, c] : y.terms) x.terms[e] -= c;
    x.prune();
    return x;
  }

  friend RealPolynomial operator*(const RealPolynomial& x, const RealPolynomial& y) {
    check_same(x, y);
    RealPolynomial out{x.nvars, {}};
    for (const auto& [ex, cx] : x.terms)
      for (const auto& [ey, cy] : y.terms) {
        std::vector<unsigned> e(x.nvars);
        for (std::size_t i = 0; i < x.nvars; ++i) e[i] = ex[i] + ey[i];
        out.terms[e] += cx * cy;
      }
    out.prune();
    return out;
  }

  friend RealPolynomial operator*(double s, RealPolynomial x) {
    for (auto& [e, c] : x.terms) c *= s;
    x.prune();
    return x;
  }

 private:
  void prune() {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0.0; });
  }
  static void check_same(const RealPolynomial& x, const RealPolynomial& y) {
    if (x.nvars != y.nvars) throw Error(ErrorKind::BackendMismatch, "polynomials in different variable counts");
  }
};

}  // namespace sustar
