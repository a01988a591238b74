#pragma once

#include <complex>
#include <concepts>
#include <random>
#include <span>
#include <vector>

#include "sustar/core/extended_norm.hpp"
#include "sustar/core/tolerance.hpp"

namespace sustar {

using Scalar = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr Scalar kI{0.0, 1.0};

// A unital *-algebra backend. Elements are plain values; the algebra object
// carries the shape information (dimension, point set, samples) and rejects
// elements that belong to a differently shaped instance.
//
// size(x) is a cheap finite norm on the payload. For the Archimedean backends
// it coincides with the uniform seminorm; it is what tolerances scale with.
template <class A>
concept StarAlgebra = requires(const A& alg, const typename A::element_type& x,
                               const typename A::element_type& y, Scalar s) {
  typename A::element_type;
  { alg.one() } -> std::same_as<typename A::element_type>;
  { alg.zero() } -> std::same_as<typename A::element_type>;
  { alg.add(x, y) } -> std::same_as<typename A::element_type>;
  { alg.sub(x, y) } -> std::same_as<typename A::element_type>;
  { alg.mul(x, y) } -> std::same_as<typename A::element_type>;
  { alg.scale(s, x) } -> std::same_as<typename A::element_type>;
  { alg.star(x) } -> std::same_as<typename A::element_type>;
  { alg.size(x) } -> std::convertible_to<double>;
  { alg.tolerance() } -> std::convertible_to<const TolerancePolicy&>;
};

// Adds a positivity oracle on Hermitian elements (the cone A_H^+).
template <class A>
concept OrderedStarAlgebra = StarAlgebra<A> && requires(const A& alg, const typename A::element_type& h) {
  { alg.is_positive(h) } -> std::same_as<bool>;
};

// Backends that can compute the uniform seminorm directly (largest singular value,
// sup over points, ...). Must agree with the generic bisection.
template <class A>
concept HasFastSeminorm = OrderedStarAlgebra<A> && requires(const A& alg, const typename A::element_type& x) {
  { alg.fast_seminorm(x) } -> std::same_as<ExtendedNorm>;
};

// Backends that can draw random elements of the commutant of a finite set.
template <class A>
concept HasCommutantSampler =
    StarAlgebra<A> && requires(const A& alg, std::span<const typename A::element_type> gens, Rng& rng) {
      { alg.commutant_samples(gens, std::size_t{}, rng) } -> std::same_as<std::vector<typename A::element_type>>;
    };

/// Per-backend facts the constructive operations depend on.
template <class A>
struct backend_traits {
  // Square roots, absolute values and lattice operations are only defined
  // (unique) in radical algebras.
  static constexpr bool radical = false;
};

template <class A>
using element_t = typename A::element_type;

}  // namespace sustar
