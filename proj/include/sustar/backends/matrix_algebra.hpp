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

using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Dense complex n x n matrices with the usual order of Hermitian operators.
class MatrixAlgebra {
 public:
  using element_type = Matrix;

  explicit MatrixAlgebra(int dim, TolerancePolicy tol = {}) : dim_(dim), tol_(tol) {
    if (dim < 1) throw Error(ErrorKind::EmptyDomain, "matrix algebra needs dim >= 1");
  }

  int dim() const { return dim_; }
  const TolerancePolicy& tolerance() const { return tol_; }
  void set_tolerance(const TolerancePolicy& tol) { tol_ = tol; }

  Matrix one() const { return Matrix::Identity(dim_, dim_); }
  Matrix zero() const { return Matrix::Zero(dim_, dim_); }

  Matrix add(const Matrix& x, const Matrix& y) const {
    check(x), check(y);
    return x + y;
  }
  Matrix sub(const Matrix& x, const Matrix& y) const {
    check(x), check(y);
    return x - y;
  }
  Matrix mul(const Matrix& x, const Matrix& y) const {
    check(x), check(y);
    return x * y;
  }
  Matrix scale(Scalar s, const Matrix& x) const {
    check(x);
    return s * x;
  }
  Matrix star(const Matrix& x) const {
    check(x);
    return x.adjoint();
  }

  /// Spectral norm.
  double size(const Matrix& x) const {
    check(x);
    const Matrix gram = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }

  /// min spec(h) >= -tol_pos * (1 + |h|), evaluated on the Hermitian part of h.
  bool is_positive(const Matrix& h) const {
    check(h);
    const Matrix herm = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    const RealVector& ev = es.eigenvalues();
    const double norm = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
    return ev.minCoeff() >= -tol_.tol_pos * (1.0 + norm);
  }

  ExtendedNorm fast_seminorm(const Matrix& x) const {
    const double s = size(x);
    if (s > kSeminormCap) return ExtendedNorm::infinity();
    return ExtendedNorm{s};
  }

  /// Basis of the commutant {gens}': the null space of X -> ([g, X])_g, read off from
  /// an SVD of the stacked Kronecker operator.
  std::vector<Matrix> commutant_basis(std::span<const Matrix> gens) const {
    const Eigen::Index n = dim_;
    const Eigen::Index nn = n * n;
    if (gens.empty()) {
      std::vector<Matrix> all;
      for (Eigen::Index c = 0; c < nn; ++c) {
        Matrix e = zero();
        e(c % n, c / n) = 1.0;
        all.push_back(e);
      }
      return all;
    }
    Matrix op = Matrix::Zero(static_cast<Eigen::Index>(gens.size()) * nn, nn);
    Eigen::Index row = 0;
    for (const Matrix& g : gens) {
      check(g);
      // vec(gX - Xg) = (I (x) g - g^T (x) I) vec(X), column-major vec.
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index k = 0; k < n; ++k) {
            op(row + j * n + i, j * n + k) += g(i, k);
            op(row + j * n + i, k * n + i) -= g(k, j);
          }
      row += nn;
    }
    Eigen::BDCSVD<Matrix> svd(op, Eigen::ComputeFullV);
    const RealVector& sv = svd.singularValues();
    const double cutoff = 1e-9 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    std::vector<Matrix> basis;
    for (Eigen::Index c = 0; c < nn; ++c)
      if (c >= sv.size() || sv(c) <= cutoff) {
        const ComplexVector v = svd.matrixV().col(c);
        basis.push_back(Eigen::Map<const Matrix>(v.data(), n, n));
      }
    return basis;
  }

  /// Random elements of the commutant {gens}' (Gaussian combinations of its basis).
  std::vector<Matrix> commutant_samples(std::span<const Matrix> gens, std::size_t count, Rng& rng) const {
    return combine_basis(commutant_basis(gens), count, rng);
  }

  std::vector<Matrix> combine_basis(const std::vector<Matrix>& basis, std::size_t count, Rng& rng) const {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Matrix> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
      Matrix x = zero();
      for (const Matrix& b : basis) x += Scalar(normal(rng), normal(rng)) * b;
      out.push_back(basis.empty() ? one() : x);
    }
    return out;
  }

 private:
  void check(const Matrix& x) const {
    if (x.rows() != dim_ || x.cols() != dim_)
      throw Error(ErrorKind::BackendMismatch, "matrix of shape " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()) + " used in dim " +
                                                  std::to_string(dim_) + " algebra");
  }

  int dim_;
  TolerancePolicy tol_;
};

template <>
struct backend_traits<MatrixAlgebra> {
  static constexpr bool radical = true;
};

inline MatrixAlgebra make_matrix_algebra(int dim, TolerancePolicy tol = {}) { return MatrixAlgebra(dim, tol); }

inline Matrix diag(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<Scalar>().asDiagonal();
}

inline Matrix diag(const RealVector& values) { return values.cast<Scalar>().asDiagonal(); }

}  // namespace sustar
