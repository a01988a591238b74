#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include "sustar/backends/certificate.hpp"
#include "sustar/suops/calculus.hpp"
#include "sustar/suops/capabilities.hpp"
#include "sustar/verify/context.hpp"

namespace sustar::verify {

namespace anchors {
inline constexpr const char* approx_p = "0 ≤ pₙ(a)";
inline constexpr const char* approx_q = "0 ≤ qₙ(a) ≤ 𝟙/n";
inline constexpr const char* sqrt_def = "unique element √a ∈ {a}″ ∩ 𝒜_H⁺";
inline constexpr const char* sqrt_limit = "√â exists and √â = lim";
inline constexpr const char* sqrt_general = "or a + 𝟙/n invertible for all n ∈ ℕ, then √a exists";
inline constexpr const char* abs_sqrt = "|a| exists and is given by |a| = √(a²)";
inline constexpr const char* inverse_bound = "‖a⁻¹‖∞ ≤ ε⁻¹";
inline constexpr const char* neumann = "constructed explicitly e.g. using a Neumann series";
inline constexpr const char* inv_limit = "a⁻¹ = lim (a ∧ n𝟙)⁻¹";
inline constexpr const char* shifted = "a + i𝟙 and a − i𝟙 ... are invertible";
inline constexpr const char* inverse_ordering = "then a⁻¹ ≥ b⁻¹";
inline constexpr const char* supinf = "x is the supremum of a and b in {a,b}′ ∩ 𝒜_H";
inline constexpr const char* vw_order = "2(a∨b) ≥ a+b";
inline constexpr const char* vw_alg = "(a∨b)² + ab = (a∨b)(a+b)";
inline constexpr const char* vw_rules = "(a∨b) + (a∧b) = a+b";
inline constexpr const char* abs_formula = "a ∨ b = (a+b+|a−b|)/2";
inline constexpr const char* phi_algebra = "its real unital subalgebra 𝒜_H is a Φ-algebra";
inline constexpr const char* posneg_def = "a₊ := ½(|a|+a)";
inline constexpr const char* posneg = "a₋a₊ = a₊a₋ = 0";
inline constexpr const char* weak_unit = "a ≤ (a∧λ𝟙) + a²/(4λ)";
inline constexpr const char* morph_abs = "|Ψ(a)| = Ψ(|a|)";
inline constexpr const char* morph_sqrt = "Ψ(√a) = √(Ψ(a))";
inline constexpr const char* open_mapping = "automatically an order embedding";
inline constexpr const char* gen_order = "order generated by G";
inline constexpr const char* su = "All coercive elements in 𝒜_H are invertible";
inline constexpr const char* polycalc = "is positive with respect to the S-pointwise order";
}  // namespace anchors

template <class A>
inline constexpr bool is_matrix_backend = std::is_same_v<std::decay_t<A>, MatrixAlgebra>;

/// Hermitian element with a spectrum in [lo, hi], in the sampler's random basis.
template <class S>
auto spectral_sample(const S& smp, double lo, double hi, Rng& rng) {
  return smp.from_spectrum(random_spectrum(smp.dim(), lo, hi, rng), rng);
}

inline void suite_approximate_sqrt(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    SqrtOptions opts;
    opts.max_approximant_index = 64;
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = alg.scale(Scalar{std::exp(uniform(rng, -2.0, 2.0))}, smp.positive(rng));
      SqrtReport<std::decay_t<decltype(a)>> rep;
      ctx.check("emits-approximants", anchors::approx_q).trial([&] {
        rep = sqrt_bounded(alg, a, opts);
        return Trial{!rep.approximants.empty(), 0.0};
      });
      for (const auto& rec : rep.approximants) {
        ctx.check("p-nonnegative", anchors::approx_p).expect(rec.p_positive);
        ctx.check("q-nonnegative", anchors::approx_q).expect(rec.q_lower);
        ctx.check("q-below-unit-over-n", anchors::approx_q).expect(rec.q_upper, rec.residual * rec.n);
      }
    }
  });
}

inline void suite_sqrt(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    auto root = [](double x) { return std::sqrt(std::max(0.0, x)); };
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = smp.positive(rng);
      const double s = scale_of(alg, a);
      const auto oracle = spectral_apply(a, root);
      ctx.check("bounded-residual", anchors::sqrt_limit).trial([&] {
        const auto rep = sqrt_bounded(alg, a);
        return Trial{rep.residual <= 1e-8 * s, rep.residual / s};
      });
      ctx.check("bounded-vs-spectral", anchors::sqrt_def).trial([&] {
        const auto rep = sqrt_bounded(alg, a);
        const double d = alg.size(alg.sub(rep.result, oracle));
        const bool ok = d <= 1e-6 && is_hermitian(alg, rep.result) && alg.is_positive(rep.result) &&
                        rep.commutant_defect <= 1e-8 * s * s;
        return Trial{ok, d};
      });
      const auto h = smp.hermitian(rng);
      ctx.check("abs-vs-spectral", anchors::abs_sqrt).trial([&] {
        const double d = alg.size(alg.sub(abs_value(alg, h), spectral_apply(h, [](double x) { return std::abs(x); })));
        return Trial{d <= 1e-6, d};
      });
    }
    for (int t = 0; t < ctx.trials(5); ++t) {
      const auto a = smp.positive(rng);
      ctx.check("general-vs-spectral", anchors::sqrt_general).trial([&] {
        const auto rep = sqrt_general(alg, a);
        const double d = alg.size(alg.sub(rep.result, spectral_apply(a, root)));
        const double db = alg.size(alg.sub(rep.result, sqrt_bounded(alg, a).result));
        return Trial{d <= 1e-6 && db <= 1e-6, std::max(d, db)};
      });
    }
  });
}

inline void suite_inverse(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = smp.coercive(rng, uniform(rng, 0.05, 1.0));
      const Coercivity c = is_coercive(alg, a);
      InverseReport<std::decay_t<decltype(a)>> rep;
      ctx.check("defect", anchors::neumann).trial([&] {
        rep = inverse_coercive(alg, a, InversePath::Neumann);
        const double d = alg.size(alg.sub(alg.mul(a, rep.result), alg.one()));
        return Trial{d <= 1e-8, d};
      });
      ctx.check("norm-below-inverse-witness", anchors::inverse_bound).trial([&] {
        const double n = uniform_seminorm(alg, rep.result).value();
        return Trial{c.coercive && n <= 1.0 / c.epsilon + 1e-6, std::max(0.0, n - 1.0 / c.epsilon)};
      });
      ctx.check("vs-linear-solve", anchors::neumann).trial([&] {
        const double d = alg.size(alg.sub(rep.result, solve_inverse(a)));
        return Trial{d <= 1e-6, d};
      });
    }
    for (int t = 0; t < ctx.trials(10); ++t) {
      const auto a = smp.coercive(rng, uniform(rng, 0.1, 1.0));
      ctx.check("wedge-limit-path", anchors::inv_limit).trial([&] {
        const auto rep = inverse_coercive(alg, a, InversePath::WedgeLimit);
        const double d = alg.size(alg.sub(rep.result, solve_inverse(a)));
        return Trial{d <= 1e-6 && rep.defect <= 1e-8, d};
      });
    }
    for (int t = 0; t < ctx.trials(2); ++t) {
      const auto h = smp.hermitian(rng);
      ctx.check("shifted-inverses", anchors::shifted).trial([&] {
        const auto rep = invert_shifted(alg, h);
        const auto one = alg.one();
        const auto ione = alg.scale(kI, one);
        const double d = std::max(alg.size(alg.sub(alg.mul(alg.add(h, ione), rep.plus), one)),
                                  alg.size(alg.sub(alg.mul(alg.sub(h, ione), rep.minus), one)));
        return Trial{d <= 1e-8, d};
      });
    }
  });
}

inline void suite_inverse_ordering(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    for (int t = 0; t < ctx.trials(); ++t) {
      const RealVector da = random_spectrum(n, 0.1, 2.0, rng);
      const RealVector db = da + random_spectrum(n, 0.0, 1.0, rng);
      const auto [a, b] = smp.commuting(da, db, rng);
      ctx.check("commuting-positive", anchors::inverse_ordering).trial([&] {
        const auto ia = inverse_coercive(alg, a).result;
        const auto ib = inverse_coercive(alg, b).result;
        const auto gap = re_part(alg, alg.sub(ia, ib));
        return Trial{order_leq(alg, alg.zero(), gap), std::max(0.0, -min_eigenvalue(gap))};
      });
    }
  });
}

inline void suite_supinf(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    for (int t = 0; t < ctx.trials(10); ++t) {
      const auto [a, b] = smp.commuting(random_spectrum(n, -2.0, 2.0, rng), random_spectrum(n, -2.0, 2.0, rng), rng);
      std::decay_t<decltype(a)> x;
      ctx.check("upper-bound", anchors::supinf).trial([&] {
        x = vee(alg, a, b);
        return Trial{order_leq(alg, a, x) && order_leq(alg, b, x), 0.0};
      });
      const std::vector<std::decay_t<decltype(a)>> gens{a, b};
      for (const auto& c : smp.commuting_hermitians(gens, 50, rng)) {
        // Smallest shift putting y = c + t 1 above a and b, plus a random margin.
        const double shift = std::max(-min_eigenvalue(alg.sub(c, a)), -min_eigenvalue(alg.sub(c, b))) +
                             (rng() % 2 ? 0.0 : uniform(rng, 0.0, 0.5));
        const auto y = alg.add(c, alg.scale(Scalar{shift}, alg.one()));
        ctx.check("least-upper-bound", anchors::supinf).trial([&] {
          const auto gap = alg.sub(y, x);
          return Trial{order_leq(alg, x, y), std::max(0.0, -min_eigenvalue(gap))};
        });
      }
    }
  });
}

inline void suite_veewedge_rules(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    LatticeOptions lat;
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto basis = smp.basis(rng);
      const RealVector da = random_spectrum(n, -2.0, 2.0, rng);
      const RealVector db = random_spectrum(n, -2.0, 2.0, rng);
      const RealVector dc = random_spectrum(n, -1.0, 1.0, rng);
      const auto a = basis(da), b = basis(db), c = basis(dc);
      const double s = std::max(scale_of(alg, a), scale_of(alg, b));
      using E = std::decay_t<decltype(a)>;
      LatticeReport<E> v, w;
      ctx.check("defining-equations", anchors::vw_alg).trial([&] {
        v = vee_report(alg, a, b, lat);
        w = wedge_report(alg, a, b, lat);
        const double d = std::max(v.algebraic_defect, w.algebraic_defect) / (s * s);
        return Trial{v.order_ok && w.order_ok && d <= 1e-8, d};
      });
      ctx.check("sum", anchors::vw_rules).trial([&] {
        const double d = rel_diff(alg, alg.add(v.result, w.result), alg.add(a, b), s);
        return Trial{d <= 1e-8, d};
      });
      ctx.check("product", anchors::vw_rules).trial([&] {
        const double d = rel_diff(alg, alg.mul(v.result, w.result), alg.mul(a, b), s * s);
        return Trial{d <= 1e-8, d};
      });
      ctx.check("negation", anchors::vw_rules).trial([&] {
        const auto lhs = wedge(alg, alg.scale(Scalar{-1.0}, a), alg.scale(Scalar{-1.0}, b));
        const double d = rel_diff(alg, lhs, alg.scale(Scalar{-1.0}, v.result), s);
        return Trial{d <= 1e-8, d};
      });
      ctx.check("positive-homogeneity", anchors::vw_rules).trial([&] {
        const double lambda = uniform(rng, 0.0, 5.0);
        const auto lhs = vee(alg, alg.scale(Scalar{lambda}, a), alg.scale(Scalar{lambda}, b));
        const double d = rel_diff(alg, lhs, alg.scale(Scalar{lambda}, v.result), lambda * s);
        return Trial{d <= 1e-8, d};
      });
      ctx.check("translation", anchors::vw_rules).trial([&] {
        const auto lhs = vee(alg, alg.add(a, c), alg.add(b, c));
        const double d = rel_diff(alg, lhs, alg.add(v.result, c), s + 1.0);
        return Trial{d <= 1e-8, d};
      });
      ctx.check("abs-formula", anchors::abs_formula).trial([&] {
        const auto mod = spectral_apply(alg.sub(a, b), [](double x) { return std::abs(x); });
        const auto expected = alg.scale(Scalar{0.5}, alg.add(alg.add(a, b), mod));
        const double d = rel_diff(alg, v.result, expected, s);
        return Trial{d <= 1e-6, d};
      });
      ctx.check("pointwise-max-min", anchors::phi_algebra).trial([&] {
        const double d = std::max(alg.size(alg.sub(v.result, basis(da.cwiseMax(db)))),
                                  alg.size(alg.sub(w.result, basis(da.cwiseMin(db)))));
        // Exact lattice on the function backend; the matrix backend carries basis rounding.
        return Trial{d <= (is_matrix_backend<decltype(alg)> ? 1e-8 * s : 1e-12), d};
      });
    }
  });
}

inline void suite_posnegpart(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = alg.scale(Scalar{std::exp(uniform(rng, -1.0, 1.5))}, smp.hermitian(rng));
      const double s = scale_of(alg, a);
      PosNegParts<std::decay_t<decltype(a)>> p;
      ctx.check("parts-positive", anchors::posneg_def).trial([&] {
        p = pos_neg_parts(alg, a);
        return Trial{alg.is_positive(p.pos) && alg.is_positive(p.neg), 0.0};
      });
      ctx.check("difference", anchors::posneg_def).trial([&] {
        const double d = rel_diff(alg, alg.sub(p.pos, p.neg), a, s);
        return Trial{d <= 1e-8, d};
      });
      ctx.check("orthogonal", anchors::posneg).trial([&] {
        const double d = std::max(alg.size(alg.mul(p.pos, p.neg)), alg.size(alg.mul(p.neg, p.pos))) / s;
        return Trial{d <= 1e-8, d};
      });
      ctx.check("vs-spectral", anchors::posneg_def).trial([&] {
        const double d = alg.size(alg.sub(p.pos, spectral_apply(a, [](double x) { return std::max(x, 0.0); }))) / s;
        return Trial{d <= 1e-6, d};
      });
    }
  });
}

inline void suite_weak_order_unit(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto a = alg.scale(Scalar{std::exp(uniform(rng, -1.0, 2.0))}, smp.hermitian(rng));
      for (double lambda : {1.0, 2.0, 10.0}) {
        ctx.check("bound", anchors::weak_unit).trial([&] {
          const auto cap = wedge(alg, a, alg.scale(Scalar{lambda}, alg.one()));
          const auto rhs = alg.add(cap, alg.scale(Scalar{1.0 / (4.0 * lambda)}, alg.mul(a, a)));
          return Trial{order_leq(alg, a, re_part(alg, rhs)), std::max(0.0, -min_eigenvalue(alg.sub(rhs, a)))};
        });
      }
    }
  });
}

namespace detail {

/// Records |Psi(f(x)) - f(Psi(x))| for abs, sqrt and vee under a morphism Psi.
template <class Src, class Dst, class Psi>
void morphism_checks(SuiteContext& ctx, const std::string& tag, const Src& src, const Dst& dst, Psi&& psi,
                     const element_t<Src>& h, const element_t<Src>& p, const element_t<Src>& a,
                     const element_t<Src>& b) {
  ctx.check(tag + "/abs", anchors::morph_abs).trial([&] {
    const double d = dst.size(dst.sub(psi(abs_value(src, h)), abs_value(dst, psi(h))));
    return Trial{d <= 1e-6 * scale_of(src, h), d};
  });
  ctx.check(tag + "/sqrt", anchors::morph_sqrt).trial([&] {
    const double d = dst.size(dst.sub(psi(sqrt_bounded(src, p).result), sqrt_bounded(dst, psi(p)).result));
    return Trial{d <= 1e-6 * scale_of(src, p), d};
  });
  ctx.check(tag + "/vee", anchors::morph_abs).trial([&] {
    const double d = dst.size(dst.sub(psi(vee(src, a, b)), vee(dst, psi(a), psi(b))));
    return Trial{d <= 1e-6 * std::max(scale_of(src, a), scale_of(src, b)), d};
  });
}

}  // namespace detail

/// Matrix backend: unitary conjugation. Function backend: restriction to a subset of
/// points, and the diagonal embedding into matrices.
inline void suite_morphisms(SuiteContext& ctx) {
  auto& rng = ctx.rng();
  const int n = ctx.config().dim;
  if (ctx.backend() == "matrix") {
    const MatrixAlgebra alg(n, ctx.policy());
    const Sampler<MatrixAlgebra> smp{alg};
    for (int t = 0; t < ctx.trials(); ++t) {
      const Matrix u = random_unitary(n, rng);
      auto psi = [&](const Matrix& x) -> Matrix { return u * x * u.adjoint(); };
      const auto [a, b] = smp.commuting(random_spectrum(n, -2.0, 2.0, rng), random_spectrum(n, -2.0, 2.0, rng), rng);
      detail::morphism_checks(ctx, "unitary", alg, alg, psi, smp.hermitian(rng), smp.positive(rng), a, b);
      const Matrix h = alg.add(smp.hermitian(rng), alg.scale(Scalar{uniform(rng, 0.0, 3.0)}, alg.one()));
      ctx.check("unitary/order-embedding", anchors::open_mapping).trial([&] {
        if (std::abs(min_eigenvalue(h)) <= 1e-8 * scale_of(alg, h)) return Trial::skipped();
        return Trial{!alg.is_positive(psi(h)) || alg.is_positive(h), 0.0};
      });
    }
    return;
  }
  if (ctx.backend() != "function") throw Error(ErrorKind::NotApplicable, "morphisms run on matrix or function");
  const std::vector<double> pts = default_points(n);
  const FunctionAlgebra alg(pts, ctx.policy());
  const Sampler<FunctionAlgebra> smp{alg};
  const int m = std::max(1, n - 1);
  const FunctionAlgebra sub(std::vector<double>(pts.begin(), pts.begin() + m), ctx.policy());
  const MatrixAlgebra mat(n, ctx.policy());
  auto restrict_to = [&](const ComplexVector& f) -> ComplexVector { return f.head(m); };
  auto embed = [&](const ComplexVector& f) -> Matrix { return f.asDiagonal(); };
  for (int t = 0; t < ctx.trials(); ++t) {
    const ComplexVector h = smp.hermitian(rng), p = smp.positive(rng), a = smp.hermitian(rng), b = smp.hermitian(rng);
    detail::morphism_checks(ctx, "restriction", alg, sub, restrict_to, h, p, a, b);
    detail::morphism_checks(ctx, "diagonal-embedding", alg, mat, embed, h, p, a, b);
    const ComplexVector g = (smp.hermitian(rng).real().array() + uniform(rng, 0.0, 3.0)).matrix().cast<Scalar>();
    ctx.check("diagonal-embedding/order-embedding", anchors::open_mapping).trial([&] {
      if (std::abs(min_eigenvalue(g)) <= 1e-8 * scale_of(alg, g)) return Trial::skipped();
      return Trial{!mat.is_positive(embed(g)) || alg.is_positive(g), 0.0};
    });
  }
}

/// On matrices the PSD order is the order generated by the unit: every positive a has
/// the certificate [(1, sqrt a)], and every certificate sum is PSD.
inline void suite_unique_order(SuiteContext& ctx) {
  if (ctx.backend() != "matrix") throw Error(ErrorKind::NotApplicable, "unique-order runs on the matrix backend");
  const MatrixAlgebra alg(ctx.config().dim, ctx.policy());
  const Sampler<MatrixAlgebra> smp{alg};
  auto& rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Matrix a = smp.positive(rng);
    ctx.check("positive-has-certificate", anchors::gen_order).trial([&] {
      const GenPosCertificate<Matrix> cert{{alg.one(), sqrt_bounded(alg, a).result}};
      return Trial{verify_genpos_certificate(alg, a, cert), rel_diff(alg, certificate_sum(alg, cert), a, scale_of(alg, a))};
    });
    GenPosCertificate<Matrix> cert;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) cert.push_back({alg.one(), smp.element(rng)});
    ctx.check("certificate-sum-positive", anchors::gen_order).expect(alg.is_positive(certificate_sum(alg, cert)));
  }
}

inline void suite_su_equivalence(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    for (int t = 0; t < ctx.trials(); ++t) {
      using E = std::decay_t<decltype(alg.one())>;
      SuInstance<E> in;
      in.hermitian = smp.hermitian(rng);
      in.coercive = smp.coercive(rng, uniform(rng, 0.05, 1.0));
      in.positive = smp.positive(rng);
      std::tie(in.left, in.right) = smp.commuting(random_spectrum(n, -2.0, 2.0, rng), random_spectrum(n, -2.0, 2.0, rng), rng);
      const auto outcomes = su_capabilities(alg, in);
      for (const auto& o : outcomes)
        ctx.check(o.name, anchors::su).trial([&] {
          if (!o.error.empty()) throw Error(ErrorKind::PostconditionFailed, o.error);
          return Trial{o.ok, o.defect};
        });
    }
  });
}

inline void suite_polycalc(SuiteContext& ctx) {
  with_backend(ctx.backend(), ctx.config(), [&](const auto& alg, auto smp) {
    auto& rng = ctx.rng();
    const int n = smp.dim();
    // q = x1 x2^2 on the slice {x1 >= 0}.
    const RealPolynomial q = RealPolynomial::monomial({1, 2});
    const std::vector<RealPolynomial> constraints{RealPolynomial::variable(2, 0)};
    for (int t = 0; t < ctx.trials(); ++t) {
      const auto basis = smp.basis(rng);
      const RealVector d1 = random_spectrum(n, 0.0, 2.0, rng);
      const RealVector d2 = random_spectrum(n, -2.0, 2.0, rng);
      using E = std::decay_t<decltype(alg.one())>;
      const std::vector<E> tuple{basis(d1), basis(d2)};
      std::vector<std::vector<double>> samples;
      for (int i = 0; i < n; ++i) samples.push_back({d1(i), d2(i)});
      for (int i = 0; i < 20; ++i) samples.push_back({uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)});
      ctx.check("positivity-transfer", anchors::polycalc).trial([&] {
        const auto r = calculus_positivity(alg, q, std::span<const RealPolynomial>(constraints), std::span<const E>(tuple),
                                           std::span<const std::vector<double>>(samples));
        return Trial{r.constraints_positive && r.q_nonnegative_on_set && r.positive, 0.0};
      });

      RealPolynomial rq{2, {}};
      for (unsigned i = 0; i <= 2; ++i)
        for (unsigned k = 0; i + k <= 3; ++k) rq.terms[{i, k}] = standard_normal(rng);
      ctx.check("pointwise-oracle", anchors::polycalc).trial([&] {
        const auto value = polynomial_calculus(alg, rq, std::span<const E>(tuple));
        RealVector expected(n);
        for (int i = 0; i < n; ++i) expected(i) = rq.evaluate(std::vector<double>{d1(i), d2(i)});
        const double d = rel_diff(alg, value, basis(expected), scale_of(alg, value));
        return Trial{d <= 1e-8, d};
      });
    }
  });
}

}  // namespace sustar::verify
