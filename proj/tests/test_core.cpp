#include <gtest/gtest.h>

#include "eigen_oracle.hpp"
#include "sustar/backends/function_algebra.hpp"
#include "sustar/backends/polynomial_algebra.hpp"
#include "sustar/backends/random.hpp"
#include "sustar/backends/upper_triangular.hpp"
#include "sustar/core/seminorm.hpp"

using namespace sustar;

namespace {

Matrix mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(Hermitian, UnitIsCentral) {
  const MatrixAlgebra alg(3);
  Rng rng(1);
  EXPECT_TRUE(commutes(alg, alg.one(), random_complex_matrix(3, rng)));
}

TEST(Hermitian, DiagonalsCommute) {
  const MatrixAlgebra alg(2);
  EXPECT_TRUE(commutes(alg, diag({1, 2}), diag({3, 4})));
}

TEST(Hermitian, StandardNonCommutingPair) {
  const MatrixAlgebra alg(2);
  EXPECT_FALSE(commutes(alg, mat2(2, 2, 2, 2), mat2(6, 0, 0, 3)));
}

TEST(Hermitian, ToleranceIsRelative) {
  const MatrixAlgebra alg(2);
  Matrix h = diag({1e6, 2e6});
  h(0, 1) = 1e-6;  // |h - h*| = 1e-6 <= tol_eq * 2e6
  EXPECT_TRUE(is_hermitian(alg, h));
  h(0, 1) = 1.0;
  EXPECT_FALSE(is_hermitian(alg, h));
}

TEST(Order, ZeroBelowUnit) {
  const MatrixAlgebra alg(3);
  EXPECT_TRUE(order_leq(alg, alg.zero(), alg.one()));
  EXPECT_FALSE(order_leq(alg, alg.one(), alg.zero()));
}

TEST(Order, OrderDoesNotSurviveSquaring) {
  const MatrixAlgebra alg(2);
  const Matrix a = mat2(2, 2, 2, 2), b = mat2(6, 0, 0, 3);
  EXPECT_TRUE(order_leq(alg, a, b));
  EXPECT_FALSE(order_leq(alg, Matrix(a * a), Matrix(b * b)));
}

TEST(Order, FunctionBackendPointwise) {
  const FunctionAlgebra alg({0.0, 1.0});
  ComplexVector f(2), g(2);
  f << 1.0, 2.0;
  g << 2.0, 2.0;
  EXPECT_TRUE(order_leq(alg, f, g));
  EXPECT_FALSE(order_leq(alg, g, f));
}

TEST(Order, RejectsNonHermitian) {
  const MatrixAlgebra alg(2);
  try {
    order_leq(alg, mat2(0, 1, 0, 0), alg.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHermitianInput);
  }
}

TEST(Seminorm, Unit) {
  const MatrixAlgebra alg(3);
  EXPECT_DOUBLE_EQ(uniform_seminorm(alg, alg.one()).value(), 1.0);
  EXPECT_NEAR(uniform_seminorm_generic(alg, alg.one()).value(), 1.0, 1e-9);
}

TEST(Seminorm, DiagonalTakesLargestModulus) {
  const MatrixAlgebra alg(2);
  const Matrix a = diag({2, -3});
  EXPECT_NEAR(uniform_seminorm_generic(alg, a).value(), oracle::spectral_norm(a), 1e-9);
  EXPECT_NEAR(uniform_seminorm(alg, a).value(), 3.0, 1e-12);
}

TEST(Seminorm, NilpotentShift) {
  const MatrixAlgebra alg(2);
  const Matrix a = mat2(0, 1, 0, 0);
  EXPECT_NEAR(uniform_seminorm_generic(alg, a).value(), 1.0, 1e-9);
  EXPECT_NEAR(uniform_seminorm(alg, a).value(), 1.0, 1e-12);
}

TEST(Seminorm, VanishesOnNilpotentFixture) {
  const UpperTriangularFixture alg;
  const auto m = UpperTriangularFixture::make(0.0, 1.0);
  EXPECT_FALSE(m == alg.zero());
  EXPECT_EQ(uniform_seminorm(alg, m).value(), 0.0);
}

TEST(Seminorm, GenericMatchesSingularValues) {
  Rng rng(11);
  for (int n = 1; n <= 8; ++n) {
    const MatrixAlgebra alg(n);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = std::exp(uniform(rng, -3.0, 3.0)) * random_complex_matrix(n, rng);
      const double exact = oracle::spectral_norm(a);
      EXPECT_NEAR(uniform_seminorm_generic(alg, a).value(), exact, 1e-4 * std::max(1.0, exact));
      EXPECT_NEAR(uniform_seminorm(alg, a).value(), exact, 1e-9 * std::max(1.0, exact));
    }
  }
}

TEST(Seminorm, AcceptedBoundHolds) {
  Rng rng(12);
  const MatrixAlgebra alg(5);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_complex_matrix(5, rng);
    const double n = uniform_seminorm_generic(alg, a).value();
    EXPECT_TRUE(order_leq(alg, Matrix(a.adjoint() * a), alg.scale(Scalar{n * n}, alg.one())));
  }
}

TEST(Seminorm, PolynomialUnboundedPastCap) {
  const PolynomialAlgebra alg(1, {{0.0}, {1.0}, {1e30}});
  EXPECT_FALSE(is_uniformly_bounded(alg, alg.variable(0)));
  EXPECT_FALSE(uniform_seminorm_generic(alg, alg.variable(0)).is_finite());
}

TEST(Seminorm, PolynomialConstant) {
  const PolynomialAlgebra alg(1, {{-1.0}, {0.0}, {2.0}});
  const Polynomial five = alg.constant(5.0);
  EXPECT_TRUE(is_uniformly_bounded(alg, five));
  EXPECT_NEAR(uniform_seminorm_generic(alg, five).value(), 5.0, 1e-8);
}

TEST(Seminorm, MatricesAreBounded) {
  Rng rng(13);
  const MatrixAlgebra alg(4);
  EXPECT_TRUE(is_uniformly_bounded(alg, random_complex_matrix(4, rng)));
}

TEST(Metric, Examples) {
  const MatrixAlgebra alg(2);
  Rng rng(14);
  const Matrix a = random_complex_matrix(2, rng);
  EXPECT_EQ(uniform_metric(alg, a, a), 0.0);
  EXPECT_EQ(uniform_metric(alg, alg.zero(), alg.scale(Scalar{3.0}, alg.one())), 1.0);
  EXPECT_NEAR(uniform_metric(alg, diag({0.1, 0.0}), alg.zero()), 0.1, 1e-12);
}

TEST(Metric, TranslationInvariant) {
  const MatrixAlgebra alg(3);
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = 0.2 * random_complex_matrix(3, rng), b = 0.2 * random_complex_matrix(3, rng);
    const Matrix c = random_complex_matrix(3, rng);
    EXPECT_NEAR(uniform_metric(alg, a, b), uniform_metric(alg, Matrix(a + c), Matrix(b + c)), 1e-12);
  }
}

TEST(Coercive, Examples) {
  const MatrixAlgebra alg(2);
  const Coercivity one = is_coercive(alg, alg.one());
  EXPECT_TRUE(one.coercive);
  EXPECT_NEAR(one.epsilon, 1.0, 1e-8);
  const Coercivity d = is_coercive(alg, diag({2, 5}));
  EXPECT_TRUE(d.coercive);
  EXPECT_NEAR(d.epsilon, oracle::min_eigenvalue(diag({2, 5})), 1e-8);
  EXPECT_FALSE(is_coercive(alg, diag({0, 1})).coercive);
}

TEST(Coercive, WitnessIsAccepted) {
  Rng rng(16);
  const MatrixAlgebra alg(6);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_coercive(6, uniform(rng, 0.01, 2.0), rng);
    const Coercivity c = is_coercive(alg, a);
    ASSERT_TRUE(c.coercive);
    EXPECT_TRUE(order_leq(alg, alg.scale(Scalar{c.epsilon}, alg.one()), a));
    EXPECT_NEAR(c.epsilon, oracle::min_eigenvalue(a), 1e-6 * std::max(1.0, oracle::spectral_norm(a)));
  }
}
