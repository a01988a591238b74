#pragma once

#include <cmath>

#include "sustar/dominated/dominant.hpp"
#include "sustar/verify/context.hpp"

namespace sustar::verify {

namespace anchors {
inline constexpr const char* dominant_set = "q*q is coercive and λq ∈ Q";
inline constexpr const char* dominant_normal = "normal and pairwise commuting elements";
inline constexpr const char* dominant_bound_anchor = "q*q + r*r ≲ λ² q*r*r q";
inline constexpr const char* ostar_sup = "sup_{ξ∈D, ‖ξ‖=1} ‖a(ξ)‖";
inline constexpr const char* graph_product = "⟨ξ,η⟩_a := ⟨ξ, a(η)⟩";
inline constexpr const char* downarrow_def = "a*a ≲ q*q and a a* ≲ q*q";
inline constexpr const char* domalgebra = "Q↓ is a unital *-subalgebra";
inline constexpr const char* susconstruct = "if and only if all q ∈ Q are invertible";
inline constexpr const char* cofinal = "cofinal in the set of all seminorms";
inline constexpr const char* sus_family = "Q := {λqⁿ : λ∈[1,∞), n∈ℕ₀}";
}  // namespace anchors

namespace detail {

inline void require_tower_backend(const SuiteContext& ctx) {
  if (ctx.backend() != "tower") throw Error(ErrorKind::NotApplicable, "dominated suites run on the tower backend");
}

/// |a| estimated as the best |a xi| over random unit vectors, each refined by power steps on a*a.
inline double refined_sampled_norm(const Matrix& a, int vectors, int steps, Rng& rng) {
  const Matrix gram = a.adjoint() * a;
  double best = 0.0;
  for (int v = 0; v < vectors; ++v) {
    ComplexVector xi = random_complex_vector(static_cast<int>(a.cols()), rng);
    xi.normalize();
    for (int k = 0; k < steps; ++k) {
      const ComplexVector next = gram * xi;
      if (next.norm() == 0.0) break;
      xi = next.normalized();
    }
    best = std::max(best, (a * xi).norm());
  }
  return best;
}

/// Block-diagonal matrix whose k-th 2x2 Hermitian block has norm k * factor_k, factor_k in [lo, 1].
inline Matrix paired_block_member(int blocks, double lo, Rng& rng) {
  Matrix out = Matrix::Zero(2 * blocks, 2 * blocks);
  for (int k = 0; k < blocks; ++k) {
    Matrix b = random_hermitian(2, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> es(b, Eigen::EigenvaluesOnly);
    b *= (k + 1) * uniform(rng, lo, 1.0) / es.eigenvalues().cwiseAbs().maxCoeff();
    out.block(2 * k, 2 * k, 2, 2) = b;
  }
  return out;
}

}  // namespace detail

inline void suite_dominant(SuiteContext& ctx) {
  detail::require_tower_backend(ctx);
  auto& rng = ctx.rng();
  const TruncationTower tower(HamiltonianSpec::demo(), ctx.policy());
  const auto spec = hamiltonian_dominant_set(tower);

  const auto demo = validate_dominant_set(tower, spec);
  ctx.check("hamiltonian-valid", anchors::dominant_set).expect(demo.valid && std::abs(demo.epsilon - 1.0) <= 1e-6);
  ctx.check("unit-valid", anchors::dominant_set).expect(validate_dominant_set(tower, dominant_set_from(tower, tower.top().one())).valid);
  {
    const MatrixAlgebra four(4, ctx.policy());
    ctx.check("diagonal-valid", anchors::dominant_set).expect(validate_dominant_set(four, diag({1, 2, 3, 4})).valid);
    const MatrixAlgebra two(2, ctx.policy());
    Matrix nil(2, 2);
    nil << 0, 1, 0, 0;
    const auto r1 = validate_dominant_set(two, nil);
    ctx.check("rejects-non-normal", anchors::dominant_normal).expect(!r1.valid && r1.failure == ErrorKind::NotNormal);
    const auto r2 = validate_dominant_set(two, diag({0, 1}));
    ctx.check("rejects-non-coercive", anchors::dominant_set).expect(!r2.valid && r2.failure == ErrorKind::NotCoercive);
  }

  const int n = ctx.config().dim;
  const MatrixAlgebra alg(n, ctx.policy());
  for (int t = 0; t < ctx.trials(2); ++t) {
    RealVector dq = random_spectrum(n, 0.3, 3.0, rng), dr = random_spectrum(n, 0.3, 3.0, rng);
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) dq(i) = -dq(i);
      if (rng() % 2) dr(i) = -dr(i);
    }
    auto pair = commuting_pair_from(dq, dr, rng);
    ctx.check("domination-bound", anchors::dominant_bound_anchor).trial([&] {
      const auto b = dominant_bound(alg, pair.a, pair.b);
      return Trial{b.holds && b.product_coercive, b.lambda};
    });
  }

  for (int t = 0; t < ctx.trials(5); ++t) {
    const Matrix a = random_complex_matrix(tower.top_dim(), rng);
    ctx.check("sampled-sup-norm", anchors::ostar_sup).trial([&] {
      const double exact = uniform_seminorm(tower.top(), a).value();
      const double sampled = detail::refined_sampled_norm(a, 200, 30, rng);
      const double d = std::abs(exact - sampled) / std::max(1.0, exact);
      const double ds = std::abs(exact - singular_norm(a)) / std::max(1.0, exact);
      return Trial{d <= 1e-4 && ds <= 10.0 * ctx.policy().tol_eq, d};
    });
  }

  const MatrixAlgebra& top = tower.top();
  for (int t = 0; t < ctx.trials(); ++t) {
    const ComplexVector xi = random_complex_vector(top.dim(), rng);
    const Matrix p = random_psd(top.dim(), rng);
    ctx.check("graph-seminorm", anchors::graph_product).trial([&] {
      const double d1 = std::abs(graph_seminorm(top, xi, top.one()) - xi.norm()) / std::max(1.0, xi.norm());
      const double direct = std::sqrt(std::max(0.0, (xi.adjoint() * p * xi)(0, 0).real()));
      const double d2 = std::abs(graph_seminorm(top, xi, p) - direct) / std::max(1.0, direct);
      return Trial{d1 <= 1e-10 && d2 <= 1e-10, std::max(d1, d2)};
    });
  }
  ctx.check("graph-seminorm-eigenvector", anchors::graph_product).trial([&] {
    const Matrix& q = spec.generator.back();
    double worst = 0.0;
    for (int i = 0; i < top.dim(); ++i) {
      const ComplexVector e = ComplexVector::Unit(top.dim(), i);
      worst = std::max(worst, std::abs(graph_seminorm(top, e, top.mul(top.star(q), q)) - std::abs(q(i, i))));
    }
    return Trial{worst <= 1e-10, worst};
  });
}

inline void suite_downarrow(SuiteContext& ctx) {
  detail::require_tower_backend(ctx);
  auto& rng = ctx.rng();
  const TruncationTower tower(HamiltonianSpec::demo(), ctx.policy());
  const auto spec = hamiltonian_dominant_set(tower);
  const int blocks = tower.top_dim() / 2;

  const auto unit = in_downarrow(tower, spec, tower.one());
  ctx.check("unit-member", anchors::sus_family).expect(unit.member && unit.n == 0 && unit.lambda == 1.0);

  for (int t = 0; t < ctx.trials(10); ++t) {
    const TowerElement a = tower.restrict(detail::paired_block_member(blocks, 0.5, rng));
    ctx.check("block-diagonal-witness", anchors::downarrow_def).trial([&] {
      const auto m = in_downarrow(tower, spec, a);
      return Trial{m.member && m.n == 1 && m.lambda == 1.0 && is_witness(tower, spec, a, 1, 1.0), m.lambda};
    });
    ctx.check("star-symmetric", anchors::downarrow_def).trial([&] {
      const auto star = tower.map(a, [](const MatrixAlgebra& alg, const Matrix& x) { return alg.star(x); });
      const auto m = in_downarrow(tower, spec, a);
      const auto ms = in_downarrow(tower, spec, star);
      return Trial{m.member == ms.member && m.n == ms.n && m.lambda == ms.lambda, 0.0};
    });
    ctx.check("witness-monotone", anchors::downarrow_def).trial([&] {
      const auto m = in_downarrow(tower, spec, a);
      bool ok = m.member;
      for (int dn = 0; ok && dn <= 2; ++dn)
        for (double f : {1.0, 1.5, 4.0}) ok = ok && is_witness(tower, spec, a, m.n + dn, m.lambda * f);
      return Trial{ok, 0.0};
    });
  }

  {
    HamiltonianSpec distinct;
    for (int i = 1; i <= 16; ++i) distinct.eigenvalues.push_back(i);
    distinct.dims = {4, 8, 16};
    const TruncationTower plain(distinct, ctx.policy());
    Matrix shift = Matrix::Zero(16, 16);
    for (int i = 0; i + 1 < 16; ++i) shift(i, i + 1) = 1.0;
    const auto m = in_downarrow(plain, hamiltonian_dominant_set(plain), plain.restrict(shift));
    ctx.check("off-diagonal-shift-rejected", anchors::downarrow_def).expect(!m.member && m.failed_clause == "commutant");
  }
  {
    // h^30 outgrows every lambda (q*q)^n within the caps.
    Matrix fast = Matrix::Zero(tower.top_dim(), tower.top_dim());
    for (int i = 0; i < tower.top_dim(); ++i) fast(i, i) = std::pow(tower.spec().eigenvalues[i], 30);
    const auto m = in_downarrow(tower, spec, tower.restrict(fast));
    ctx.check("caps-binding-rejected", anchors::downarrow_def).expect(!m.member && m.failed_clause == "domination");
  }

  const auto probe = downarrow_subalgebra_probe(tower, spec, rng(), ctx.trials(10));
  ctx.check("sample-members", anchors::domalgebra).record(probe.samples + probe.rejected_samples, probe.rejected_samples, 0.0);
  for (const auto& c : probe.checks)
    ctx.check("closure/" + c.name, anchors::domalgebra).record(c.trials, c.failures, c.max_lambda);
}

inline void suite_susconstruct(SuiteContext& ctx) {
  detail::require_tower_backend(ctx);
  auto& rng = ctx.rng();
  const TruncationTower tower(HamiltonianSpec::demo(), ctx.policy());
  const auto spec = hamiltonian_dominant_set(tower);
  const int members = std::min(ctx.trials(), 50);

  auto record = [&](const std::string& prefix, const SusconstructReport& r) {
    ctx.check(prefix + "members", anchors::susconstruct).record(r.members + r.rejected_samples, r.rejected_samples, 0.0);
    for (std::size_t c = 0; c < kCapabilityNames.size(); ++c)
      ctx.check(prefix + "capability/" + kCapabilityNames[c], anchors::susconstruct)
          .record(r.members, r.capability_failures[c], r.capability_worst[c], r.first_error[c]);
    ctx.check(prefix + "cofinality", anchors::cofinal)
        .record(r.cofinality_trials, r.cofinality_failures, r.cofinality_worst_ratio);
  };

  ctx.check("hamiltonian", anchors::susconstruct).trial([&] {
    record("", susconstruct_probe(tower, spec, rng(), members));
    return Trial{true, 0.0};
  });
  ctx.check("unit-generator", anchors::susconstruct).trial([&] {
    const auto r = susconstruct_probe(tower, dominant_set_from(tower, tower.top().one()), rng(), std::min(members, 5), 5);
    return Trial{r.passed(), 0.0};
  });
  ctx.check("non-invertible-generator-refused", anchors::susconstruct).trial([&] {
    RealVector d = RealVector::LinSpaced(tower.top_dim(), 0.0, 1.0);
    try {
      susconstruct_probe(tower, dominant_set_from(tower, diag(d)), rng(), 1, 1);
    } catch (const Error& e) {
      return Trial{e.kind() == ErrorKind::GeneratorNotInvertible, 0.0};
    }
    return Trial{false, 0.0};
  });
}

}  // namespace sustar::verify
