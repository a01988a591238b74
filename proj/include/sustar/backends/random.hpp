#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

#include "sustar/backends/matrix_algebra.hpp"

namespace sustar {

/// Seed derived from a base seed and a label, so that independent streams do not
/// depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull ^ seed;  // FNV-1a over the label
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline double standard_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

inline double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

/// Complex Gaussian entries with variance 1/dim, so that |g| stays O(1).
inline Matrix random_complex_matrix(int dim, Rng& rng) {
  const double s = 1.0 / std::sqrt(2.0 * dim);
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = Scalar(s * standard_normal(rng), s * standard_normal(rng));
  return g;
}

inline RealVector random_real_vector(int n, Rng& rng) {
  RealVector v(n);
  for (int i = 0; i < n; ++i) v(i) = standard_normal(rng);
  return v;
}

inline ComplexVector random_complex_vector(int n, Rng& rng) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Scalar(standard_normal(rng), standard_normal(rng));
  return v;
}

inline Matrix random_hermitian(int dim, Rng& rng) {
  const Matrix g = random_complex_matrix(dim, rng);
  return 0.5 * (g + g.adjoint());
}

inline Matrix random_psd(int dim, Rng& rng) {
  const Matrix g = random_complex_matrix(dim, rng);
  return g.adjoint() * g;
}

inline Matrix random_coercive(int dim, double eps, Rng& rng) {
  return random_psd(dim, rng) + eps * Matrix::Identity(dim, dim);
}

/// Haar-distributed unitary from the QR factorization of a complex Gaussian matrix.
inline Matrix random_unitary(int dim, Rng& rng) {
  const Matrix g = random_complex_matrix(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

/// u diag(values) u*
inline Matrix conjugate_diagonal(const Matrix& u, const RealVector& values) {
  return u * values.cast<Scalar>().asDiagonal() * u.adjoint();
}

struct CommutingPair {
  Matrix a;
  Matrix b;
  Matrix unitary;
  RealVector diag_a;
  RealVector diag_b;
};

/// Two Hermitian matrices sharing a random eigenbasis, hence commuting.
inline CommutingPair commuting_pair_from(const RealVector& da, const RealVector& db, Rng& rng) {
  const Matrix u = random_unitary(static_cast<int>(da.size()), rng);
  return {conjugate_diagonal(u, da), conjugate_diagonal(u, db), u, da, db};
}

inline std::pair<Matrix, Matrix> simultaneously_diagonal_pair(int dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorKind::EmptyDomain, "simultaneously_diagonal_pair needs dim >= 1");
  Rng rng(seed);
  const RealVector da = random_real_vector(dim, rng);
  const RealVector db = random_real_vector(dim, rng);
  auto pair = commuting_pair_from(da, db, rng);
  return {std::move(pair.a), std::move(pair.b)};
}

}  // namespace sustar
