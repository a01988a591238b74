#include <gtest/gtest.h>

#include "eigen_oracle.hpp"
#include "sustar/backends/function_algebra.hpp"
#include "sustar/backends/random.hpp"
#include "sustar/backends/upper_triangular.hpp"
#include "sustar/suops/calculus.hpp"
#include "sustar/suops/capabilities.hpp"

using namespace sustar;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::PostconditionFailed;
}

double dist(const Matrix& a, const Matrix& b) { return oracle::spectral_norm(a - b); }

}  // namespace

TEST(Chebyshev, InterpolatesPolynomialsExactly) {
  const auto s = chebyshev_interpolant([](double t) { return 1.0 + t * t * t; }, -1.0, 2.0, 8);
  for (double t : {-1.0, 0.0, 0.7, 2.0}) EXPECT_NEAR(s(t), 1.0 + t * t * t, 1e-12);
}

TEST(Chebyshev, SqrtApproximantMeetsLevel) {
  for (int level = 1; level <= 8; ++level) {
    const auto& s = sqrt_unit_approximant(level, 1 << 12);
    EXPECT_LE(chebyshev_sup_error(s, [](double t) { return std::sqrt(std::max(0.0, t)); }), std::ldexp(1.0, -level));
  }
}

TEST(SqrtBounded, Unit) {
  const MatrixAlgebra alg(3);
  EXPECT_LE(dist(sqrt_bounded(alg, alg.one()).result, alg.one()), 1e-10);
}

TEST(SqrtBounded, Diagonal) {
  const MatrixAlgebra alg(2);
  EXPECT_LE(dist(sqrt_bounded(alg, diag({4, 9})).result, diag({2, 3})), 1e-8);
}

TEST(SqrtBounded, TwoByTwoAgainstLapack) {
  const MatrixAlgebra alg(2);
  Matrix a(2, 2);
  a << 2, 1, 1, 2;
  const auto r = sqrt_bounded(alg, a);
  EXPECT_LE(dist(r.result, oracle::sqrt_psd(a)), 1e-6);
  const auto es = oracle::eigh(a);
  EXPECT_NEAR(es.values(0), 1.0, 1e-12);
  EXPECT_NEAR(es.values(1), 3.0, 1e-12);
}

TEST(SqrtBounded, ApproximantBounds) {
  Rng rng(5);
  SqrtOptions opts;
  opts.keep_approximants = true;
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + t % 6;
    const MatrixAlgebra alg(n);
    const Matrix a = random_psd(n, rng);
    const auto r = sqrt_bounded(alg, a, opts);
    ASSERT_EQ(r.approximants.size(), r.approximant_values.size());
    for (std::size_t k = 0; k < r.approximants.size(); ++k) {
      const auto& rec = r.approximants[k];
      const Matrix& p = r.approximant_values[k];
      const Matrix q = p * p - a;
      EXPECT_TRUE(rec.p_positive && rec.q_lower && rec.q_upper) << "n = " << rec.n;
      EXPECT_GE(oracle::min_eigenvalue(p), -1e-10 * std::max(1.0, oracle::spectral_norm(p)));
      EXPECT_GE(oracle::min_eigenvalue(q), -1e-10 * (1.0 + oracle::spectral_norm(q)));
      EXPECT_LE(oracle::max_eigenvalue(q), 1.0 / rec.n + 1e-8);
    }
  }
}

TEST(SqrtBounded, RandomAgainstLapack) {
  Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 8;
    const MatrixAlgebra alg(n);
    const Matrix a = random_psd(n, rng);
    const auto r = sqrt_bounded(alg, a);
    EXPECT_LE(r.residual, 1e-8 * scale_of(alg, a));
    EXPECT_LE(dist(r.result, oracle::sqrt_psd(a)), 1e-6);
    EXPECT_LE(r.commutant_defect, 1e-8 * scale_of(alg, a) * scale_of(alg, a));
  }
}

TEST(SqrtBounded, RejectsNonPositive) {
  const MatrixAlgebra alg(2);
  EXPECT_EQ(kind_of([&] { sqrt_bounded(alg, diag({1, -1})); }), ErrorKind::NotPositive);
}

TEST(SqrtBounded, FunctionBackend) {
  const FunctionAlgebra alg({0.0, 1.0, 2.0});
  ComplexVector f(3);
  f << 0.0, 4.0, 2.25;
  const auto r = sqrt_bounded(alg, f);
  EXPECT_NEAR(r.result(1).real(), 2.0, 1e-8);
  EXPECT_NEAR(r.result(2).real(), 1.5, 1e-8);
}

TEST(SqrtGeneral, Unit) {
  const MatrixAlgebra alg(2);
  EXPECT_LE(dist(sqrt_general(alg, alg.one()).result, alg.one()), 1e-8);
}

TEST(SqrtGeneral, SingularProjection) {
  // Not coercive; the shifted sequence converges at root level sqrt(1/n).
  const MatrixAlgebra alg(2);
  const auto r = sqrt_general(alg, diag({0, 1}));
  EXPECT_LE(dist(r.result, diag({0, 1})), 1e-4);
}

TEST(SqrtGeneral, RandomPsdAgreesWithBoundedAndLapack) {
  Rng rng(7);
  const MatrixAlgebra alg(6);
  for (int t = 0; t < 5; ++t) {
    const Matrix a = random_coercive(6, 0.05, rng);
    const Matrix r = sqrt_general(alg, a).result;
    EXPECT_LE(dist(r, oracle::sqrt_psd(a)), 1e-6);
    EXPECT_LE(dist(r, sqrt_bounded(alg, a).result), 1e-6);
  }
}

TEST(Abs, Examples) {
  const MatrixAlgebra alg(2);
  EXPECT_LE(dist(abs_value(alg, diag({2, -3})), diag({2, 3})), 1e-8);
  Matrix s(2, 2);
  s << 0, 1, 1, 0;  // s* = s, s^2 = 1
  EXPECT_LE(dist(abs_value(alg, s), alg.one()), 1e-8);
}

TEST(Abs, RandomAgainstLapack) {
  Rng rng(8);
  const MatrixAlgebra alg(5);
  for (int t = 0; t < 30; ++t) {
    const Matrix h = random_hermitian(5, rng);
    EXPECT_LE(dist(abs_value(alg, h), oracle::abs_herm(h)), 1e-6);
  }
}

TEST(Abs, RefusedOnNonRadicalFixture) {
  const UpperTriangularFixture alg;
  EXPECT_EQ(kind_of([&] { abs_value(alg, UpperTriangularFixture::make(1.0, 0.0)); }), ErrorKind::NotApplicable);
}

TEST(PosNeg, Examples) {
  const MatrixAlgebra alg(2);
  const auto p = pos_neg_parts(alg, diag({2, -3}));
  EXPECT_LE(dist(p.pos, diag({2, 0})), 1e-8);
  EXPECT_LE(dist(p.neg, diag({0, 3})), 1e-8);
  const auto q = pos_neg_parts(alg, diag({1, 4}));
  EXPECT_LE(dist(q.pos, diag({1, 4})), 1e-8);
  EXPECT_LE(oracle::spectral_norm(q.neg), 1e-8);
}

TEST(PosNeg, OrthogonalOnRandomInputs) {
  Rng rng(9);
  const MatrixAlgebra alg(5);
  for (int t = 0; t < 30; ++t) {
    const Matrix h = random_hermitian(5, rng);
    const auto p = pos_neg_parts(alg, h);
    EXPECT_LE(oracle::spectral_norm(p.pos * p.neg), 1e-8 * scale_of(alg, h));
    EXPECT_LE(dist(p.pos - p.neg, h), 1e-8 * scale_of(alg, h));
    EXPECT_TRUE(oracle::is_psd(p.pos, 1e-10) && oracle::is_psd(p.neg, 1e-10));
  }
}

TEST(Lattice, DiagonalExample) {
  const MatrixAlgebra alg(2);
  EXPECT_LE(dist(vee(alg, diag({1, 5}), diag({3, 2})), diag({3, 5})), 1e-8);
  EXPECT_LE(dist(wedge(alg, diag({1, 5}), diag({3, 2})), diag({1, 2})), 1e-8);
}

TEST(Lattice, Idempotent) {
  Rng rng(10);
  const MatrixAlgebra alg(4);
  const Matrix a = random_hermitian(4, rng);
  EXPECT_LE(dist(vee(alg, a, a), a), 1e-8);
  EXPECT_LE(dist(wedge(alg, a, a), a), 1e-8);
}

TEST(Lattice, NonCommutingRejected) {
  const MatrixAlgebra alg(2);
  Matrix a(2, 2);
  a << 2, 2, 2, 2;
  EXPECT_EQ(kind_of([&] { vee(alg, a, diag({6, 3})); }), ErrorKind::NonCommuting);
}

TEST(Lattice, FunctionBackendIsPointwiseMax) {
  Rng rng(11);
  const FunctionAlgebra alg({0, 1, 2, 3, 4, 5});
  for (int t = 0; t < 100; ++t) {
    const ComplexVector f = random_real_vector(6, rng).cast<Scalar>(), g = random_real_vector(6, rng).cast<Scalar>();
    const ComplexVector v = vee(alg, f, g), w = wedge(alg, f, g);
    EXPECT_LE((v.real() - f.real().cwiseMax(g.real())).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((w.real() - f.real().cwiseMin(g.real())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Lattice, DefiningEquationsAndProbe) {
  Rng rng(12);
  const MatrixAlgebra alg(5);
  for (int t = 0; t < 20; ++t) {
    const auto p = commuting_pair_from(random_real_vector(5, rng), random_real_vector(5, rng), rng);
    const auto r = vee_report(alg, p.a, p.b);
    EXPECT_TRUE(r.order_ok);
    EXPECT_LE(r.algebraic_defect, 1e-8);
    EXPECT_EQ(r.probes, 20u);
    EXPECT_LE(r.bicommutant_defect, 1e-8);
    EXPECT_LE(dist(r.result, p.unitary * p.diag_a.cwiseMax(p.diag_b).cast<Scalar>().asDiagonal() * p.unitary.adjoint()),
              1e-8);
  }
}

TEST(Inverse, Examples) {
  const MatrixAlgebra alg(2);
  EXPECT_LE(dist(inverse_coercive(alg, alg.one()).result, alg.one()), 1e-10);
  EXPECT_LE(dist(inverse_coercive(alg, diag({2, 4})).result, diag({0.5, 0.25})), 1e-10);
}

TEST(Inverse, RandomAgainstLinearSolve) {
  Rng rng(13);
  const MatrixAlgebra alg(6);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_coercive(6, uniform(rng, 0.05, 1.0), rng);
    const auto r = inverse_coercive(alg, a);
    EXPECT_LE(oracle::spectral_norm(a * r.result - alg.one()), 1e-8);
    EXPECT_LE(dist(r.result, oracle::solve_inverse(a)), 1e-6);
    EXPECT_LE(oracle::spectral_norm(r.result), 1.0 / oracle::min_eigenvalue(a) + 1e-6);
  }
}

TEST(Inverse, WedgeLimitPath) {
  Rng rng(14);
  const MatrixAlgebra alg(4);
  const Matrix a = random_coercive(4, 0.2, rng);
  const auto r = inverse_coercive(alg, a, InversePath::WedgeLimit);
  EXPECT_LE(dist(r.result, oracle::solve_inverse(a)), 1e-6);
}

TEST(Inverse, NotCoercive) {
  const MatrixAlgebra alg(2);
  EXPECT_EQ(kind_of([&] { inverse_coercive(alg, diag({0, 1})); }), ErrorKind::NotCoercive);
}

TEST(InvertShifted, Examples) {
  const MatrixAlgebra alg(2);
  const auto z = invert_shifted(alg, alg.zero());
  EXPECT_LE(dist(z.plus, alg.scale(Scalar(0, -1), alg.one())), 1e-10);
  EXPECT_LE(dist(z.minus, alg.scale(Scalar(0, 1), alg.one())), 1e-10);
  const auto u = invert_shifted(alg, alg.one());
  EXPECT_LE(dist(u.plus, alg.scale(Scalar(0.5, -0.5), alg.one())), 1e-10);
  EXPECT_LE(dist(u.minus, alg.scale(Scalar(0.5, 0.5), alg.one())), 1e-10);
}

TEST(InvertShifted, RandomResiduals) {
  Rng rng(15);
  const MatrixAlgebra alg(5);
  const Matrix one = alg.one();
  for (int t = 0; t < 20; ++t) {
    const Matrix h = random_hermitian(5, rng);
    const auto r = invert_shifted(alg, h);
    const Scalar i(0, 1);
    EXPECT_LE(oracle::spectral_norm((h + i * one) * r.plus - one), 1e-8);
    EXPECT_LE(oracle::spectral_norm((h - i * one) * r.minus - one), 1e-8);
  }
}

TEST(Calculus, ConstantAndSquare) {
  Rng rng(16);
  const MatrixAlgebra alg(3);
  const Matrix a = random_hermitian(3, rng);
  const std::vector<Matrix> tuple{a};
  EXPECT_LE(dist(polynomial_calculus(alg, RealPolynomial::constant(1, 1.0), std::span<const Matrix>(tuple)), alg.one()),
            1e-14);
  const Matrix sq = polynomial_calculus(alg, RealPolynomial::monomial({2}), std::span<const Matrix>(tuple));
  EXPECT_LE(dist(sq, a * a), 1e-12);
  EXPECT_TRUE(alg.is_positive(sq));
}

TEST(Calculus, PositivityOnSlice) {
  const MatrixAlgebra alg(3);
  const std::vector<Matrix> tuple{diag({0.5, 1.0, 2.0}), diag({-1.0, 3.0, 0.0})};
  const RealPolynomial q = RealPolynomial::monomial({1, 2});
  const std::vector<RealPolynomial> constraints{RealPolynomial::variable(2, 0)};
  const std::vector<std::vector<double>> samples{{0.5, -1.0}, {1.0, 3.0}, {2.0, 0.0}, {-1.0, 1.0}};
  const auto r = calculus_positivity(alg, q, std::span<const RealPolynomial>(constraints),
                                     std::span<const Matrix>(tuple), std::span<const std::vector<double>>(samples));
  EXPECT_TRUE(r.constraints_positive);
  EXPECT_EQ(r.samples_in_set, 3u);
  EXPECT_TRUE(r.q_nonnegative_on_set);
  EXPECT_TRUE(r.positive);
  EXPECT_LE(dist(r.value, diag({0.5, 9.0, 0.0})), 1e-14);
}

TEST(Calculus, NonCommutingTuple) {
  const MatrixAlgebra alg(2);
  Matrix a(2, 2);
  a << 2, 2, 2, 2;
  const std::vector<Matrix> tuple{a, diag({6, 3})};
  EXPECT_EQ(kind_of([&] { polynomial_calculus(alg, RealPolynomial::monomial({1, 1}), std::span<const Matrix>(tuple)); }),
            ErrorKind::NonCommutingTuple);
}

TEST(Capabilities, AllSixOnRandomInstances) {
  Rng rng(17);
  const MatrixAlgebra alg(6);
  for (int t = 0; t < 5; ++t) {
    SuInstance<Matrix> in;
    in.hermitian = random_hermitian(6, rng);
    in.coercive = random_coercive(6, 0.1, rng);
    in.positive = random_psd(6, rng);
    const auto p = commuting_pair_from(random_real_vector(6, rng), random_real_vector(6, rng), rng);
    in.left = p.a;
    in.right = p.b;
    for (const auto& o : su_capabilities(alg, in)) EXPECT_TRUE(o.ok) << o.name << " " << o.error;
  }
}
