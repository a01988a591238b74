#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sustar/backends/function_algebra.hpp"
#include "sustar/backends/random.hpp"

// Seeded element factories per backend, plus a spectral oracle (Hermitian
// eigendecomposition) that the suites compare the constructive operations against.

namespace sustar::verify {

/// f(h) through the eigendecomposition of the Hermitian part of h.
inline Matrix spectral_apply(const Matrix& h, const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  const RealVector mapped = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * mapped.cast<Scalar>().asDiagonal() * es.eigenvectors().adjoint();
}

inline double min_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline ComplexVector spectral_apply(const ComplexVector& h, const std::function<double(double)>& f) {
  return h.real().unaryExpr(f).cast<Scalar>();
}

inline double min_eigenvalue(const ComplexVector& h) { return h.real().minCoeff(); }

/// Inverse by LU solve / pointwise reciprocal.
inline Matrix solve_inverse(const Matrix& a) { return a.partialPivLu().inverse(); }
inline ComplexVector solve_inverse(const ComplexVector& a) { return a.cwiseInverse(); }

/// Largest singular value, computed by SVD (independent of the eigen-based size()).
inline double singular_norm(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> svd(x);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}
inline double singular_norm(const ComplexVector& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

template <class A>
struct Sampler;

template <>
struct Sampler<MatrixAlgebra> {
  const MatrixAlgebra& alg;
  static constexpr const char* name = "matrix";

  int dim() const { return alg.dim(); }
  Matrix element(Rng& rng) const { return random_complex_matrix(dim(), rng); }
  Matrix hermitian(Rng& rng) const { return random_hermitian(dim(), rng); }
  Matrix positive(Rng& rng) const { return random_psd(dim(), rng); }
  Matrix coercive(Rng& rng, double eps) const { return random_coercive(dim(), eps, rng); }
  Matrix from_spectrum(const RealVector& d, Rng& rng) const { return conjugate_diagonal(random_unitary(dim(), rng), d); }

  /// Maps spectra to Hermitian elements diagonal in one shared random basis.
  struct Basis {
    Matrix u;
    Matrix operator()(const RealVector& d) const { return conjugate_diagonal(u, d); }
  };
  Basis basis(Rng& rng) const { return {random_unitary(dim(), rng)}; }

  /// Hermitian a, b with a shared random eigenbasis and the given spectra.
  std::pair<Matrix, Matrix> commuting(const RealVector& da, const RealVector& db, Rng& rng) const {
    auto p = commuting_pair_from(da, db, rng);
    return {std::move(p.a), std::move(p.b)};
  }
  /// Hermitian elements of {gens}', normalized to norm <= 1.
  std::vector<Matrix> commuting_hermitians(std::span<const Matrix> gens, std::size_t count, Rng& rng) const {
    std::vector<Matrix> out;
    for (const Matrix& x : alg.commutant_samples(gens, count, rng))
      out.push_back(0.5 * (x + x.adjoint()) / std::max(1.0, alg.size(x)));
    return out;
  }
};

template <>
struct Sampler<FunctionAlgebra> {
  const FunctionAlgebra& alg;
  static constexpr const char* name = "function";

  int dim() const { return static_cast<int>(alg.n()); }
  ComplexVector element(Rng& rng) const { return random_complex_vector(dim(), rng) / std::sqrt(2.0); }
  ComplexVector hermitian(Rng& rng) const { return random_real_vector(dim(), rng).cast<Scalar>(); }
  ComplexVector positive(Rng& rng) const { return random_real_vector(dim(), rng).cwiseAbs2().cast<Scalar>(); }
  ComplexVector coercive(Rng& rng, double eps) const {
    return (random_real_vector(dim(), rng).cwiseAbs2().array() + eps).matrix().cast<Scalar>();
  }
  ComplexVector from_spectrum(const RealVector& d, Rng&) const { return d.cast<Scalar>(); }
  struct Basis {
    ComplexVector operator()(const RealVector& d) const { return d.cast<Scalar>(); }
  };
  Basis basis(Rng&) const { return {}; }
  std::pair<ComplexVector, ComplexVector> commuting(const RealVector& da, const RealVector& db, Rng&) const {
    return {da.cast<Scalar>(), db.cast<Scalar>()};
  }
  std::vector<ComplexVector> commuting_hermitians(std::span<const ComplexVector>, std::size_t count, Rng& rng) const {
    std::vector<ComplexVector> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(hermitian(rng));
    return out;
  }
};

/// Random spectrum in [lo, hi].
inline RealVector random_spectrum(int n, double lo, double hi, Rng& rng) {
  RealVector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(rng, lo, hi);
  return v;
}

inline std::vector<double> default_points(int n) {
  std::vector<double> pts;
  for (int i = 0; i < n; ++i) pts.push_back(static_cast<double>(i));
  return pts;
}

}  // namespace sustar::verify
