#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sustar/backends/matrix_algebra.hpp"

namespace sustar {

/// A coercive Hamiltonian h given by the leading part of its spectrum, together with
/// the truncation dimensions at which it is realized.
struct HamiltonianSpec {
  std::vector<double> eigenvalues;  // nondecreasing, positive; length = largest dim
  std::vector<int> dims;            // strictly increasing

  double epsilon() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }

  void validate() const {
    if (eigenvalues.empty() || dims.empty()) throw Error(ErrorKind::EmptyDomain, "Hamiltonian spec needs eigenvalues and dims");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
      if (!(eigenvalues[i] > 0.0)) throw Error(ErrorKind::NotCoercive, "Hamiltonian eigenvalues must be positive");
      if (i > 0 && eigenvalues[i] < eigenvalues[i - 1])
        throw Error(ErrorKind::ParseError, "Hamiltonian eigenvalues must be nondecreasing");
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] < 1) throw Error(ErrorKind::EmptyDomain, "truncation dims must be >= 1");
      if (i > 0 && dims[i] <= dims[i - 1]) throw Error(ErrorKind::ParseError, "truncation dims must increase");
    }
    if (static_cast<std::size_t>(dims.back()) > eigenvalues.size())
      throw Error(ErrorKind::ParseError, "largest truncation dim exceeds the spectrum prefix");
  }

  /// h = diag(1,1,2,2,...,k,k): each eigenvalue twice, so that the commutant is
  /// block diagonal with 2x2 blocks instead of merely diagonal.
  static HamiltonianSpec paired(int levels, std::vector<int> dims) {
    HamiltonianSpec s;
    for (int k = 1; k <= levels; ++k) s.eigenvalues.insert(s.eigenvalues.end(), {double(k), double(k)});
    s.dims = std::move(dims);
    return s;
  }

  static HamiltonianSpec demo() { return paired(8, {4, 8, 16}); }
};

/// Operators on the tower are given by their principal corners, one per dim.
using TowerElement = std::vector<Matrix>;

/// Finite stand-in for the domain of smooth vectors of h: the matrix algebras of the
/// leading principal corners, with h restricted to each.
class TruncationTower {
 public:
  explicit TruncationTower(HamiltonianSpec spec, TolerancePolicy tol = {}) : spec_(std::move(spec)) {
    spec_.validate();
    for (int d : spec_.dims) algebras_.emplace_back(d, tol);
    const Eigen::Map<const RealVector> ev(spec_.eigenvalues.data(), static_cast<Eigen::Index>(spec_.eigenvalues.size()));
    hamiltonian_ = restrict(diag(RealVector(ev.head(spec_.dims.back()))));
  }

  const HamiltonianSpec& spec() const { return spec_; }
  std::size_t levels() const { return algebras_.size(); }
  int dim(std::size_t level) const { return spec_.dims[level]; }
  int top_dim() const { return spec_.dims.back(); }
  const MatrixAlgebra& algebra(std::size_t level) const { return algebras_[level]; }
  const MatrixAlgebra& top() const { return algebras_.back(); }
  const TowerElement& hamiltonian() const { return hamiltonian_; }

  /// Principal corners of a top-dimensional matrix.
  TowerElement restrict(const Matrix& full) const {
    if (full.rows() != top_dim() || full.cols() != top_dim())
      throw Error(ErrorKind::BackendMismatch, "tower element must have the largest truncation dim");
    TowerElement out;
    out.reserve(levels());
    for (int d : spec_.dims) out.push_back(full.topLeftCorner(d, d));
    return out;
  }

  TowerElement one() const {
    TowerElement out;
    for (const auto& alg : algebras_) out.push_back(alg.one());
    return out;
  }

  void check(const TowerElement& a) const {
    if (a.size() != levels()) throw Error(ErrorKind::BackendMismatch, "tower element has the wrong number of levels");
  }

  template <class F>
  TowerElement map(const TowerElement& a, F&& f) const {
    check(a);
    TowerElement out;
    for (std::size_t l = 0; l < levels(); ++l) out.push_back(f(algebras_[l], a[l]));
    return out;
  }

  template <class F>
  TowerElement zip(const TowerElement& a, const TowerElement& b, F&& f) const {
    check(a), check(b);
    TowerElement out;
    for (std::size_t l = 0; l < levels(); ++l) out.push_back(f(algebras_[l], a[l], b[l]));
    return out;
  }

 private:
  HamiltonianSpec spec_;
  std::vector<MatrixAlgebra> algebras_;
  TowerElement hamiltonian_;
};

}  // namespace sustar
