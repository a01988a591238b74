#pragma once

#include <Eigen/Cholesky>
#include <array>
#include <cmath>
#include <limits>

#include "sustar/backends/certificate.hpp"
#include "sustar/backends/polynomial_algebra.hpp"
#include "sustar/backends/twisted_circle.hpp"
#include "sustar/backends/upper_triangular.hpp"
#include "sustar/core/order.hpp"
#include "sustar/suops/lattice.hpp"
#include "sustar/verify/context.hpp"

namespace sustar::verify {

namespace anchors {
inline constexpr const char* admissible_cone = "λa + μb ∈ 𝒜⁺_H";
inline constexpr const char* ostar_order = "usual order of Hermitian operators";
inline constexpr const char* poly_order = "S-pointwise order";
inline constexpr const char* cstar = "is a C*-norm on 𝒜^bd";
inline constexpr const char* seminorm_def = "inf {λ ∈ ]0,∞[ : a*a ≲ λ²𝟙}";
inline constexpr const char* seminorm_min = "a*a ≲ ‖a‖∞²𝟙";
inline constexpr const char* ordersquare = "a² ≲ λ²𝟙 if and only if";
inline constexpr const char* radical_square = "b² ≤ a² is equivalent to −a ≤ b ≤ a";
inline constexpr const char* noncommuting = "which do not fulfil a² ≤ b²";
inline constexpr const char* radical_products = "commute, then ab ≥ 0";
inline constexpr const char* radical_def = "such that a is coercive and ab ≥ 0, then b ≥ 0";
inline constexpr const char* archimedean_ptlg = "not Archimedean because M₍₀,₁₎ ≤ ε M₍₁,₀₎";
inline constexpr const char* archimedean = "v ≤ εw for all ε > 0 forces v ≤ 0";
inline constexpr const char* nonilpotent = "nilpotent, then a = 0";
inline constexpr const char* ptlg_nilpotent = "non-zero Hermitian element that squares to 0";
inline constexpr const char* ptlg_order = "M₍a,b₎ : a,b ∈ ℝ with a>0 or a=b=0";
inline constexpr const char* csersatz = "a*b + b*a ≲ χ⁻²a*a + χ²b*b";
inline constexpr const char* csersatz2 = "a*c b + b*c a ≤ a*d a + b*d b";
inline constexpr const char* negative_unit = "−𝟙_S = (id_S)* id_S";
inline constexpr const char* twisted_star = "f* := conj ∘ f ∘ τ";
}  // namespace anchors

/// Positivity oracle vs. an independent Cholesky test, and the cone axioms on samples.
inline void suite_order_axioms(SuiteContext& ctx) {
  if (ctx.backend() == "polynomial") {
    // One sample point collapses the quasi-order: x <= 0 and 0 <= x.
    const PolynomialAlgebra collapsed(1, {{0.0}}, ctx.policy());
    const Polynomial x = collapsed.variable(0);
    ctx.check("single-sample-collapse", anchors::poly_order)
        .expect(order_leq(collapsed, x, collapsed.zero()) && order_leq(collapsed, collapsed.zero(), x));
    std::vector<std::vector<double>> grid;
    for (int k = -10; k <= 10; ++k) grid.push_back({0.2 * k});
    const PolynomialAlgebra alg(1, grid, ctx.policy());
    auto& rng = ctx.rng();
    for (int t = 0; t < ctx.trials(); ++t) {
      Polynomial p = alg.zero();
      for (unsigned d = 0; d <= 3; ++d) p.terms[{d}] = standard_normal(rng);
      const Polynomial sq = alg.mul(alg.star(p), p);
      ctx.check("squares-positive", anchors::poly_order).expect(alg.is_positive(sq));
      double lo = std::numeric_limits<double>::infinity();
      for (const auto& s : grid) lo = std::min(lo, alg.evaluate(p, s).real());
      ctx.check("pointwise-agreement", anchors::poly_order).trial([&] {
        if (std::abs(lo) <= 1e-8 * (1.0 + alg.size(p))) return Trial::skipped();
        return Trial{alg.is_positive(p) == (lo > 0.0), 0.0};
      });
    }
    return;
  }
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    ctx.check("unit-positive", anchors::admissible_cone).expect(alg.is_positive(alg.one()));
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = smp.positive(rng);
      const auto b = smp.positive(rng);
      const auto d = smp.element(rng);
      const double lambda = uniform(rng, 0.0, 3.0), mu = uniform(rng, 0.0, 3.0);
      ctx.check("cone-combination", anchors::admissible_cone)
          .expect(alg.is_positive(alg.add(alg.scale(Scalar{lambda}, a), alg.scale(Scalar{mu}, b))));
      ctx.check("conjugation", anchors::admissible_cone)
          .expect(alg.is_positive(alg.mul(alg.star(d), alg.mul(a, d))));

      // Independent PSD test: Cholesky of h + delta 1 with a relative shift just
      // beyond the oracle slack; cases inside the slack band are skipped.
      auto h = smp.hermitian(rng);
      h = alg.add(h, alg.scale(Scalar{uniform(rng, -0.2, 1.0)}, alg.one()));
      ctx.check("oracle-vs-cholesky", anchors::ostar_order).trial([&] {
        const double lo = min_eigenvalue(h);
        const double band = 1e-8 * scale_of(alg, h);
        if (std::abs(lo) <= band) return Trial::skipped();
        bool chol_psd;
        if constexpr (std::is_same_v<std::decay_t<decltype(h)>, Matrix>) {
          Eigen::LLT<Matrix> llt(h + band * Matrix::Identity(h.rows(), h.cols()));
          chol_psd = llt.info() == Eigen::Success;
        } else {
          chol_psd = (h.real().array() + band).minCoeff() > 0.0;
        }
        return Trial{alg.is_positive(h) == chol_psd, 0.0};
      });
    }
  });
}

inline void suite_cstar_laws(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const double tol = 10.0 * alg.tolerance().tol_eq;
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = alg.scale(Scalar{std::exp(uniform(rng, -2.0, 2.0))}, smp.element(rng));
      const auto b = alg.scale(Scalar{std::exp(uniform(rng, -2.0, 2.0))}, smp.element(rng));
      const double na = uniform_seminorm(alg, a).value();
      const double nb = uniform_seminorm(alg, b).value();
      const double s = std::max(1.0, na) * std::max(1.0, nb);

      ctx.check("triangle", anchors::cstar).trial([&] {
        const double d = (uniform_seminorm(alg, alg.add(a, b)).value() - na - nb) / s;
        return Trial{d <= tol, std::max(0.0, d)};
      });
      ctx.check("submultiplicative", anchors::cstar).trial([&] {
        const double d = (uniform_seminorm(alg, alg.mul(a, b)).value() - na * nb) / s;
        return Trial{d <= tol, std::max(0.0, d)};
      });
      ctx.check("cstar-identity", anchors::cstar).trial([&] {
        const double d = std::abs(uniform_seminorm(alg, alg.mul(alg.star(a), a)).value() - na * na) /
                         std::max(1.0, na * na);
        return Trial{d <= 1e-6, d};
      });
      ctx.check("star-isometry", anchors::cstar).trial([&] {
        const double d = std::abs(uniform_seminorm(alg, alg.star(a)).value() - na) / std::max(1.0, na);
        return Trial{d <= tol, d};
      });
      ctx.check("bisection-vs-singular-values", anchors::seminorm_def).trial([&] {
        const double d = std::abs(uniform_seminorm_generic(alg, a).value() - singular_norm(a)) / std::max(1.0, na);
        return Trial{d <= 1e-4, d};
      });
      ctx.check("fast-path-agreement", anchors::seminorm_def).trial([&] {
        const double d = std::abs(uniform_seminorm_generic(alg, a).value() - na) / std::max(1.0, na);
        return Trial{d <= 10.0 * alg.tolerance().tol_eq, d};
      });
      ctx.check("infimum-attained", anchors::seminorm_min).trial([&] {
        const auto bound = alg.scale(Scalar{na * na}, alg.one());
        const auto h = re_part(alg, a);
        const double nh = uniform_seminorm(alg, h).value();
        const auto hb = alg.scale(Scalar{nh}, alg.one());
        const bool ok = order_leq(alg, alg.mul(alg.star(a), a), bound) && order_leq(alg, h, hb) &&
                        order_leq(alg, alg.scale(Scalar{-1.0}, h), hb);
        return Trial{ok, 0.0};
      });
    }
  });
}

inline void suite_ordersquare(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const std::array<double, 6> rel{0.5, 0.9, 0.999, 1.001, 1.1, 2.0};
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = alg.scale(Scalar{std::exp(uniform(rng, -1.0, 1.5))}, smp.hermitian(rng));
      const double na = uniform_seminorm(alg, a).value();
      for (double r : rel) {
        const double lambda = r * na;
        ctx.check("equivalence", anchors::ordersquare).trial([&] {
          if (std::abs(lambda - na) <= 1e-8 * scale_of(alg, a)) return Trial::skipped();
          const bool lhs = order_leq(alg, alg.mul(a, a), alg.scale(Scalar{lambda * lambda}, alg.one()));
          const bool rhs = order_leq(alg, alg.scale(Scalar{-lambda}, alg.one()), a) &&
                           order_leq(alg, a, alg.scale(Scalar{lambda}, alg.one()));
          return Trial{lhs == rhs, 0.0};
        });
      }
    }
  });
}

inline void suite_radical_square(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    for (int t = 0; t < ctx.trials(); ++t) {
      const RealVector da = random_spectrum(n, 0.0, 2.0, rng);
      RealVector db = random_spectrum(n, -2.0, 2.0, rng);
      if (t % 2 == 0)  // half the pairs satisfy -a <= b <= a
        for (int i = 0; i < n; ++i) db(i) = da(i) * uniform(rng, -1.0, 1.0);
      const auto [a, b] = smp.commuting(da, db, rng);
      const double band = (db.cwiseAbs() - da).cwiseAbs().minCoeff();
      ctx.check("equivalence", anchors::radical_square).trial([&] {
        if (band <= 1e-8 * std::max(1.0, da.maxCoeff())) return Trial::skipped();
        const bool squares = order_leq(alg, alg.mul(b, b), alg.mul(a, a));
        const bool between = order_leq(alg, alg.scale(Scalar{-1.0}, a), b) && order_leq(alg, b, a);
        return Trial{squares == between, 0.0};
      });
    }
    if constexpr (std::is_same_v<std::decay_t<decltype(alg)>, MatrixAlgebra>) {
      if (alg.dim() == 2) return;
      const MatrixAlgebra two(2, alg.tolerance());
      Matrix a(2, 2), b(2, 2);
      a << 2, 2, 2, 2;
      b << 6, 0, 0, 3;
      ctx.check("noncommuting-counterexample", anchors::noncommuting)
          .expect(order_leq(two, a, b) && !order_leq(two, Matrix(a * a), Matrix(b * b)) && !commutes(two, a, b));
    }
  });
}

inline void suite_radical_products(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto [a, b] = smp.commuting(random_spectrum(n, 0.0, 3.0, rng), random_spectrum(n, 0.0, 3.0, rng), rng);
      ctx.check("product-positive", anchors::radical_products).expect(alg.is_positive(re_part(alg, alg.mul(a, b))));

      const RealVector dc = random_spectrum(n, 0.1, 3.0, rng);
      RealVector dh = random_spectrum(n, -1.0, 2.0, rng);
      const auto [c, h] = smp.commuting(dc, dh, rng);
      ctx.check("radical", anchors::radical_def).trial([&] {
        if (dh.cwiseAbs().minCoeff() <= 1e-8) return Trial::skipped();
        const bool premise = alg.is_positive(re_part(alg, alg.mul(c, h)));
        return Trial{!premise || alg.is_positive(h), 0.0};
      });
    }
  });
}

inline const std::array<double, 4> kEpsilonGrid{1.0, 1e-3, 1e-6, 1e-9};

inline void suite_archimedean(SuiteContext& ctx) {
  if (ctx.backend() == "ptlg") {
    const UpperTriangularFixture alg(ctx.policy());
    const auto v = UpperTriangularFixture::make(0.0, 1.0);
    const auto w = UpperTriangularFixture::make(1.0, 0.0);
    // The probe "some eps in the grid has v not <= eps w" is designed to fail here.
    for (double eps : kEpsilonGrid)
      ctx.check("archimedean-probe", anchors::archimedean_ptlg, true)
          .expect(!order_leq(alg, v, alg.scale(Scalar{eps}, w)));
    ctx.check("nilpotent-not-below-zero", anchors::archimedean_ptlg).expect(!order_leq(alg, v, alg.zero()));
    return;
  }
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    for (int t = 0; t < ctx.trials(); ++t) {
      auto v = smp.hermitian(rng);
      v = alg.add(v, alg.scale(Scalar{0.1 + min_eigenvalue(alg.scale(Scalar{-1.0}, v))}, alg.one())); // max eig = 0.1
      const auto w = smp.positive(rng);
      ctx.check("archimedean-probe", anchors::archimedean).trial([&] {
        if (order_leq(alg, v, alg.zero())) return Trial::skipped();
        bool escapes = false;
        for (double eps : kEpsilonGrid) escapes = escapes || !order_leq(alg, v, alg.scale(Scalar{eps}, w));
        return Trial{escapes, 0.0};
      });
    }
  });
}

inline void suite_nilpotent(SuiteContext& ctx) {
  if (ctx.backend() == "ptlg") {
    const UpperTriangularFixture alg(ctx.policy());
    const auto m = UpperTriangularFixture::make(0.0, 1.0);
    const auto sq = alg.mul(m, m);
    ctx.check("square-is-zero", anchors::ptlg_nilpotent).expect(sq.a == Scalar{} && sq.b == Scalar{}, alg.size(sq));
    ctx.check("seminorm-zero", anchors::ptlg_nilpotent)
        .trial([&] {
          const double n = uniform_seminorm_generic(alg, m).value();
          return Trial{n == 0.0 && !(m == alg.zero()), n};
        });
    return;
  }
  if (ctx.backend() != "matrix") throw Error(ErrorKind::NotApplicable, "nilpotent suite runs on matrix or ptlg");
  const MatrixAlgebra alg(ctx.config().dim, ctx.policy());
  auto& rng = ctx.rng();
  const double tol = alg.tolerance().tol_eq;
  for (int t = 0; t < ctx.trials(); ++t) {
    const Matrix a = std::pow(10.0, -uniform(rng, 0.0, 6.0)) * random_hermitian(alg.dim(), rng);
    ctx.check("hermitian-nilpotent-vanishes", anchors::nonilpotent).trial([&] {
      Matrix power = a;
      double worst = 0.0;
      bool ok = true;
      for (int k = 1; k <= alg.dim(); ++k, power = power * a) {
        if (uniform_seminorm(alg, power).value() > tol) continue;
        const double bound = std::pow(tol, 1.0 / k) * scale_of(alg, a);
        const double na = uniform_seminorm(alg, a).value();
        worst = std::max(worst, na / bound);
        ok = ok && na <= bound * (1.0 + 1e-9);
      }
      return Trial{ok, worst};
    });
  }
}

inline void suite_csersatz(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = smp.element(rng);
      const auto b = smp.element(rng);
      const auto lhs = alg.add(alg.mul(alg.star(a), b), alg.mul(alg.star(b), a));
      for (double chi : {0.5, 1.0, 2.0}) {
        ctx.check("csersatz", anchors::csersatz).trial([&] {
          const auto rhs = alg.add(alg.scale(Scalar{1.0 / (chi * chi)}, alg.mul(alg.star(a), a)),
                                   alg.scale(Scalar{chi * chi}, alg.mul(alg.star(b), b)));
          return Trial{order_leq(alg, lhs, rhs), std::max(0.0, -min_eigenvalue(alg.sub(rhs, lhs)))};
        });
      }
      const auto c = smp.hermitian(rng);
      const auto r = smp.element(rng);
      ctx.check("csersatz2", anchors::csersatz2).trial([&] {
        const auto d = alg.add(abs_value(alg, c), alg.mul(alg.star(r), r));
        const auto l2 = alg.add(alg.mul(alg.star(a), alg.mul(c, b)), alg.mul(alg.star(b), alg.mul(c, a)));
        const auto r2 = alg.add(alg.mul(alg.star(a), alg.mul(d, a)), alg.mul(alg.star(b), alg.mul(d, b)));
        return Trial{order_leq(alg, l2, r2), std::max(0.0, -min_eigenvalue(alg.sub(r2, l2)))};
      });
    }
  });
}

/// The two pathological fixtures: the twisted circle (no order) and the upper
/// triangular algebra (order with a non-zero nilpotent).
inline void suite_fixtures(SuiteContext& ctx) {
  auto& rng = ctx.rng();
  const TwistedCircle circle(std::max(2, ctx.config().dim), ctx.policy());
  const auto id = circle.identity();
  const GenPosCertificate<Eigen::VectorXcd> cert{{circle.one(), id}};
  const auto minus_one = circle.scale(Scalar{-1.0}, circle.one());
  ctx.check("twisted-circle/negative-unit-certificate", anchors::negative_unit)
      .expect(verify_genpos_certificate(circle, minus_one, cert),
              circle.size(circle.sub(certificate_sum(circle, cert), minus_one)));
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::VectorXcd f = random_complex_vector(static_cast<int>(circle.n()), rng);
    const Eigen::VectorXcd g = random_complex_vector(static_cast<int>(circle.n()), rng);
    const Scalar z{standard_normal(rng), standard_normal(rng)};
    ctx.check("twisted-circle/star-involution", anchors::twisted_star).trial([&] {
      const double d1 = circle.size(circle.sub(circle.star(circle.star(f)), f));
      const double d2 = circle.size(circle.sub(circle.star(circle.mul(f, g)), circle.mul(circle.star(g), circle.star(f))));
      const double d3 = circle.size(circle.sub(circle.star(circle.scale(z, f)), circle.scale(std::conj(z), circle.star(f))));
      const double d = std::max({d1, d2, d3});
      return Trial{d <= 1e-14 * (1.0 + circle.size(f) * circle.size(g) * std::abs(z)), d};
    });
  }

  const UpperTriangularFixture ptlg(ctx.policy());
  const auto m01 = UpperTriangularFixture::make(0.0, 1.0);
  const auto sq = ptlg.mul(m01, m01);
  ctx.check("ptlg/nilpotent-square", anchors::ptlg_nilpotent).expect(sq == ptlg.zero(), ptlg.size(sq));
  ctx.check("ptlg/positivity-rule", anchors::ptlg_order)
      .expect(ptlg.is_positive(UpperTriangularFixture::make(1.0, 5.0)) &&
              ptlg.is_positive(UpperTriangularFixture::make(0.0, 0.0)) &&
              !ptlg.is_positive(UpperTriangularFixture::make(0.0, 1.0)) &&
              !ptlg.is_positive(UpperTriangularFixture::make(-1.0, 0.0)));
  ctx.check("ptlg/abs-refused", anchors::ptlg_nilpotent).trial([&] {
    try {
      abs_value(ptlg, m01);
    } catch (const Error& e) {
      return Trial{e.kind() == ErrorKind::NotApplicable, 0.0};
    }
    return Trial{false, 0.0};
  });
}

}  // namespace sustar::verify
