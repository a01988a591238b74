#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sustar/backends/random.hpp"
#include "sustar/dominated/tower.hpp"
#include "sustar/suops/capabilities.hpp"

namespace sustar {

/// Q = {lambda q^n : lambda >= 1, n >= 0} for a normal generator q with coercive q*q.
/// The caps bound the witness search in in_downarrow.
struct DominantSetSpec {
  TowerElement generator;
  int n_max = 8;
  double lambda_max = 1048576.0;  // 2^20
};

inline DominantSetSpec hamiltonian_dominant_set(const TruncationTower& tower) { return {tower.hamiltonian()}; }

inline DominantSetSpec dominant_set_from(const TruncationTower& tower, const Matrix& generator) {
  return {tower.restrict(generator)};
}

struct DominantSetCheck {
  bool valid = false;
  std::optional<ErrorKind> failure;  // NotNormal or NotCoercive
  int dim = 0;                       // first offending dim
  double normal_defect = 0.0;        // worst |q*q - qq*|
  double epsilon = 0.0;              // smallest coercivity witness of q*q
  std::string diagnostic;
};

/// Checks one realization: q normal and q*q coercive. 1 in Q and closure under
/// products and scaling by lambda >= 1 hold by the form of Q.
inline DominantSetCheck validate_dominant_set(const MatrixAlgebra& alg, const Matrix& q) {
  DominantSetCheck out;
  out.dim = alg.dim();
  const Matrix qsq = alg.mul(alg.star(q), q);
  out.normal_defect = alg.size(alg.sub(qsq, alg.mul(q, alg.star(q))));
  if (out.normal_defect > alg.tolerance().tol_eq * scale_of(alg, qsq)) {
    out.failure = ErrorKind::NotNormal;
    out.diagnostic = "generator is not normal at dim " + std::to_string(alg.dim());
    return out;
  }
  const Coercivity c = is_coercive(alg, qsq);
  out.epsilon = c.epsilon;
  if (!c.coercive) {
    out.failure = ErrorKind::NotCoercive;
    out.diagnostic = "q*q is not coercive at dim " + std::to_string(alg.dim());
    return out;
  }
  out.valid = true;
  return out;
}

inline DominantSetCheck validate_dominant_set(const TruncationTower& tower, const DominantSetSpec& spec) {
  tower.check(spec.generator);
  DominantSetCheck merged;
  merged.valid = true;
  merged.epsilon = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < tower.levels(); ++l) {
    DominantSetCheck c = validate_dominant_set(tower.algebra(l), spec.generator[l]);
    merged.normal_defect = std::max(merged.normal_defect, c.normal_defect);
    if (!c.valid) return c;
    merged.epsilon = std::min(merged.epsilon, c.epsilon);
  }
  merged.dim = tower.top_dim();
  return merged;
}

inline void require_dominant_set(const TruncationTower& tower, const DominantSetSpec& spec) {
  const DominantSetCheck c = validate_dominant_set(tower, spec);
  if (!c.valid) throw Error(*c.failure, c.diagnostic);
}

namespace detail {

// (q*q)^n at every level, n = 0..n_max.
inline std::vector<TowerElement> gram_powers(const TruncationTower& tower, const DominantSetSpec& spec) {
  std::vector<TowerElement> powers{tower.one()};
  const TowerElement gram =
      tower.map(spec.generator, [](const MatrixAlgebra& alg, const Matrix& q) { return alg.mul(alg.star(q), q); });
  for (int n = 1; n <= spec.n_max; ++n)
    powers.push_back(tower.zip(powers.back(), gram, [](const MatrixAlgebra& alg, const Matrix& x, const Matrix& g) {
      return alg.mul(x, g);
    }));
  return powers;
}

}  // namespace detail

struct Membership {
  bool member = false;
  int n = 0;
  double lambda = 0.0;
  std::string failed_clause;  // "", "commutant" or "domination"
  std::string diagnostic;
};

/// a in Q-downarrow on the tower: a commutes with q (and q*) at every dim, and one
/// witness (n, lambda) gives a*a <= lambda^2 (q*q)^n and aa* <= lambda^2 (q*q)^n at
/// every dim simultaneously. Among admissible witnesses the smallest lambda is
/// reported, ties broken by the smallest n.
inline Membership in_downarrow(const TruncationTower& tower, const DominantSetSpec& spec, const TowerElement& a) {
  tower.check(a);
  tower.check(spec.generator);
  Membership out;
  for (std::size_t l = 0; l < tower.levels(); ++l) {
    const auto& alg = tower.algebra(l);
    const Matrix& q = spec.generator[l];
    if (!commutes(alg, a[l], q) || !commutes(alg, a[l], alg.star(q))) {
      out.failed_clause = "commutant";
      out.diagnostic = "a does not commute with the generator at dim " + std::to_string(tower.dim(l));
      return out;
    }
  }

  const auto powers = detail::gram_powers(tower, spec);
  TowerElement lhs_left, lhs_right;
  for (std::size_t l = 0; l < tower.levels(); ++l) {
    const auto& alg = tower.algebra(l);
    lhs_left.push_back(alg.mul(alg.star(a[l]), a[l]));
    lhs_right.push_back(alg.mul(a[l], alg.star(a[l])));
  }
  auto accepts = [&](int n, double lambda) {
    for (std::size_t l = 0; l < tower.levels(); ++l) {
      const auto& alg = tower.algebra(l);
      const Matrix bound = alg.scale(Scalar{lambda * lambda}, powers[n][l]);
      if (!order_leq(alg, lhs_left[l], bound) || !order_leq(alg, lhs_right[l], bound)) return false;
    }
    return true;
  };

  const double tol = tower.top().tolerance().tol_eq;
  std::optional<std::pair<int, double>> best;
  for (int n = 0; n <= spec.n_max; ++n) {
    // Only a strictly smaller lambda can displace the current best witness.
    if (best && (best->second == 1.0 || !accepts(n, best->second * (1.0 - 1e-9)))) continue;
    double hi = 1.0;
    double lo = 0.0;
    if (!accepts(n, hi)) {
      while (!accepts(n, hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 2.0 * spec.lambda_max) break;
      }
      if (hi > 2.0 * spec.lambda_max) continue;
      for (int step = 0; step < 60 && hi - lo > tol * hi; ++step) {
        const double mid = 0.5 * (lo + hi);
        (accepts(n, mid) ? hi : lo) = mid;
      }
      if (hi > spec.lambda_max) continue;
    }
    if (!best || hi < best->second * (1.0 - 1e-9)) best = {n, hi};
  }
  if (!best) {
    out.failed_clause = "domination";
    out.diagnostic = "no uniform witness with n <= " + std::to_string(spec.n_max) + " and lambda <= " +
                     std::to_string(spec.lambda_max) + " (caps binding)";
    return out;
  }
  out.member = true;
  out.n = best->first;
  out.lambda = best->second;
  return out;
}

/// Does (n, lambda) witness membership of a (order inequalities only)?
inline bool is_witness(const TruncationTower& tower, const DominantSetSpec& spec, const TowerElement& a, int n,
                       double lambda) {
  for (std::size_t l = 0; l < tower.levels(); ++l) {
    const auto& alg = tower.algebra(l);
    Matrix bound = alg.one();
    const Matrix gram = alg.mul(alg.star(spec.generator[l]), spec.generator[l]);
    for (int k = 0; k < n; ++k) bound = alg.mul(bound, gram);
    bound = alg.scale(Scalar{lambda * lambda}, bound);
    if (!order_leq(alg, alg.mul(alg.star(a[l]), a[l]), bound) || !order_leq(alg, alg.mul(a[l], alg.star(a[l])), bound))
      return false;
  }
  return true;
}

/// |xi|_a = <xi, a xi>^{1/2} for positive a.
inline double graph_seminorm(const MatrixAlgebra& alg, const ComplexVector& xi, const Matrix& a) {
  if (xi.size() != alg.dim()) throw Error(ErrorKind::BackendMismatch, "vector length does not match the algebra dim");
  if (!is_hermitian(alg, a) || !alg.is_positive(a)) throw Error(ErrorKind::NotPositive, "graph seminorm needs a >= 0");
  return std::sqrt(std::max(0.0, xi.dot(a * xi).real()));
}

/// Table of |xi_i|_{a_j}.
inline Eigen::MatrixXd graph_seminorm_table(const MatrixAlgebra& alg, const std::vector<ComplexVector>& vectors,
                                            const std::vector<Matrix>& elements) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = graph_seminorm(alg, vectors[i], elements[j]);
  return out;
}

/// sup |a xi| over `count` random unit vectors; approaches the uniform seminorm from below.
inline double sampled_operator_norm(const Matrix& a, std::size_t count, Rng& rng) {
  double best = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    ComplexVector xi = random_complex_vector(static_cast<int>(a.cols()), rng);
    xi.normalize();
    best = std::max(best, (a * xi).norm());
  }
  return best;
}

struct DominantBound {
  double epsilon = 0.0;  // min(coercivity of q*q, of r*r, 2)
  double lambda = 0.0;   // sqrt(2 / epsilon)
  bool holds = false;    // q*q + r*r <= lambda^2 q*r*r q
  bool product_coercive = false;
};

/// For commuting q, r with coercive q*q, r*r: q*q + r*r <= (2/eps) q*r*rq.
inline DominantBound dominant_bound(const MatrixAlgebra& alg, const Matrix& q, const Matrix& r) {
  if (!commutes(alg, q, r)) throw Error(ErrorKind::NonCommuting, "dominant bound needs commuting q, r");
  const Matrix qq = alg.mul(alg.star(q), q);
  const Matrix rr = alg.mul(alg.star(r), r);
  const Coercivity cq = is_coercive(alg, qq), cr = is_coercive(alg, rr);
  if (!cq.coercive || !cr.coercive) throw Error(ErrorKind::NotCoercive, "dominant bound needs coercive q*q and r*r");
  DominantBound out;
  out.epsilon = std::min({cq.epsilon, cr.epsilon, 2.0});
  out.lambda = std::sqrt(2.0 / out.epsilon);
  const Matrix prod = alg.mul(alg.mul(alg.star(q), rr), q);
  out.holds = order_leq(alg, alg.add(qq, rr), alg.scale(Scalar{out.lambda * out.lambda}, prod));
  out.product_coercive = is_coercive(alg, re_part(alg, prod)).coercive;
  return out;
}

/// Draws random elements of {q, q*}' at the top dim, normalized to |x| = 1 and
/// multiplied by q^power; on the demo Hamiltonian these are block diagonal with k-th
/// block of norm <= k^power.
class CommutantMemberSampler {
 public:
  CommutantMemberSampler(const TruncationTower& tower, const DominantSetSpec& spec) : tower_(tower), spec_(spec) {
    const auto& alg = tower.top();
    const std::array<Matrix, 2> gens{spec.generator.back(), alg.star(spec.generator.back())};
    basis_ = alg.commutant_basis(gens);
  }

  TowerElement operator()(int power, Rng& rng) const {
    const auto& alg = tower_.top();
    Matrix x = alg.combine_basis(basis_, 1, rng).front();
    x /= std::max(alg.size(x), 1e-300);
    for (int k = 0; k < power; ++k) x = alg.mul(x, spec_.generator.back());
    return tower_.restrict(x);
  }

 private:
  const TruncationTower& tower_;
  const DominantSetSpec& spec_;
  std::vector<Matrix> basis_;
};

struct ClosureCheck {
  std::string name;  // "sum", "product", "star", "scalar", "generator", "unit"
  int trials = 0;
  int failures = 0;
  int max_n = 0;
  double max_lambda = 0.0;
};

struct DownarrowProbeReport {
  int samples = 0;
  int rejected_samples = 0;  // candidates that were not members themselves
  std::vector<ClosureCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClosureCheck& c) { return c.failures == 0; });
  }
};

/// Q-downarrow is a unital *-subalgebra containing Q: for sampled members a, b the
/// elements a + b, ab, a*, alpha a are members again (with possibly larger witnesses).
inline DownarrowProbeReport downarrow_subalgebra_probe(const TruncationTower& tower, const DominantSetSpec& spec,
                                                       std::uint64_t seed, int samples = 10) {
  require_dominant_set(tower, spec);
  Rng rng(seed);
  DownarrowProbeReport report;
  std::array<ClosureCheck, 6> checks{{{"generator"}, {"product"}, {"scalar"}, {"star"}, {"sum"}, {"unit"}}};
  auto record = [&](ClosureCheck& c, const TowerElement& x) {
    const Membership m = in_downarrow(tower, spec, x);
    ++c.trials;
    if (!m.member) {
      ++c.failures;
      return;
    }
    c.max_n = std::max(c.max_n, m.n);
    c.max_lambda = std::max(c.max_lambda, m.lambda);
  };

  record(checks[5], tower.one());
  record(checks[0], spec.generator);
  const CommutantMemberSampler draw(tower, spec);
  std::uniform_int_distribution<int> power(0, 1);
  for (int s = 0; s < samples; ++s) {
    const TowerElement a = draw(power(rng), rng);
    const TowerElement b = draw(power(rng), rng);
    if (!in_downarrow(tower, spec, a).member || !in_downarrow(tower, spec, b).member) {
      ++report.rejected_samples;
      continue;
    }
    ++report.samples;
    const Scalar alpha{standard_normal(rng), standard_normal(rng)};
    record(checks[4], tower.zip(a, b, [](const MatrixAlgebra& alg, const Matrix& x, const Matrix& y) { return alg.add(x, y); }));
    record(checks[1], tower.zip(a, b, [](const MatrixAlgebra& alg, const Matrix& x, const Matrix& y) { return alg.mul(x, y); }));
    record(checks[3], tower.map(a, [](const MatrixAlgebra& alg, const Matrix& x) { return alg.star(x); }));
    record(checks[2], tower.map(a, [&](const MatrixAlgebra& alg, const Matrix& x) { return alg.scale(alpha, x); }));
  }
  report.checks.assign(checks.begin(), checks.end());
  return report;
}

struct SusconstructReport {
  int members = 0;
  int rejected_samples = 0;
  std::array<int, 6> capability_failures{};
  std::array<double, 6> capability_worst{};
  std::array<std::string, 6> first_error{};
  int cofinality_trials = 0;
  int cofinality_failures = 0;
  double cofinality_worst_ratio = 0.0;  // max |xi|_{a*a} / (lambda |xi|_{(q*q)^n})
  bool passed() const {
    return members > 0 && cofinality_failures == 0 &&
           std::all_of(capability_failures.begin(), capability_failures.end(), [](int f) { return f == 0; });
  }
};

/// Runs the six capabilities on sampled members at the largest dim, and checks in
/// sampled form that the graph seminorms of (q*q)^n dominate those of positive members:
/// |xi|_{a*a} <= lambda |xi|_{(q*q)^n} for the membership witness (n, lambda).
inline SusconstructReport susconstruct_probe(const TruncationTower& tower, const DominantSetSpec& spec,
                                             std::uint64_t seed, int members = 50, int vectors_per_member = 20) {
  tower.check(spec.generator);
  for (std::size_t l = 0; l < tower.levels(); ++l) {
    const auto& alg = tower.algebra(l);
    const Matrix& q = spec.generator[l];
    if (!is_coercive(alg, re_part(alg, alg.mul(alg.star(q), q))).coercive)
      throw Error(ErrorKind::GeneratorNotInvertible,
                  "generator is not invertible at dim " + std::to_string(tower.dim(l)));
  }
  require_dominant_set(tower, spec);

  Rng rng(seed);
  const auto& alg = tower.top();
  const Matrix& q = spec.generator.back();
  const Matrix gram = alg.mul(alg.star(q), q);
  const CommutantMemberSampler draw(tower, spec);
  std::uniform_int_distribution<int> power(0, 1);
  SusconstructReport report;
  int attempts = 0;
  while (report.members < members && attempts < 4 * members) {
    ++attempts;
    const TowerElement a = draw(power(rng), rng);
    const Membership m = in_downarrow(tower, spec, a);
    if (!m.member) {
      ++report.rejected_samples;
      continue;
    }
    ++report.members;
    const Matrix& top = a.back();
    const Matrix h = re_part(alg, top);
    SuInstance<Matrix> in;
    in.hermitian = h;
    in.positive = alg.mul(alg.star(top), top);
    in.coercive = alg.add(alg.one(), in.positive);
    in.left = h;
    in.right = alg.sub(alg.scale(Scalar{1.0 / scale_of(alg, h)}, alg.mul(h, h)), re_part(alg, q));
    const auto outcomes = su_capabilities(alg, in);
    for (std::size_t c = 0; c < outcomes.size(); ++c) {
      if (!outcomes[c].ok) {
        ++report.capability_failures[c];
        if (report.first_error[c].empty())
          report.first_error[c] = outcomes[c].error.empty() ? "defect " + std::to_string(outcomes[c].defect)
                                                            : outcomes[c].error;
      }
      if (outcomes[c].error.empty())
        report.capability_worst[c] = std::max(report.capability_worst[c], outcomes[c].defect);
    }

    Matrix dominating = alg.one();
    for (int k = 0; k < m.n; ++k) dominating = alg.mul(dominating, gram);
    for (int v = 0; v < vectors_per_member; ++v) {
      const ComplexVector xi = random_complex_vector(alg.dim(), rng);
      const double lhs = graph_seminorm(alg, xi, in.positive);
      const double rhs = m.lambda * graph_seminorm(alg, xi, dominating);
      ++report.cofinality_trials;
      const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
      report.cofinality_worst_ratio = std::max(report.cofinality_worst_ratio, ratio);
      if (lhs > rhs * (1.0 + 1e-8) + 1e-12) ++report.cofinality_failures;
    }
  }
  return report;
}

}  // namespace sustar
