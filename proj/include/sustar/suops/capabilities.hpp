#pragma once

#include <array>
#include <string>

#include "sustar/suops/inverse.hpp"

namespace sustar {

/// Inputs for one round of the six equivalent capabilities.
template <class E>
struct SuInstance {
  E hermitian;  // (1) shifted inverses, (4) absolute value
  E coercive;   // (2) inverse, (6) wedge with 1
  E positive;   // (3) square root via inverses
  E left;       // (5) commuting pair
  E right;
};

struct CapabilityOutcome {
  std::string name;
  bool ok = false;
  double defect = 0.0;
  std::string error;
};

inline constexpr std::array<const char*, 6> kCapabilityNames = {
    "shifted-inverse", "coercive-inverse", "square-root", "absolute-value", "vee-wedge", "wedge-unit"};

/// Runs (1) invert_shifted, (2) inverse_coercive, (3) sqrt_general, (4) abs,
/// (5) vee/wedge of a commuting pair, (6) wedge(c, 1) for coercive c.
/// Defects are measured against the defining identities, relative to scale.
template <OrderedStarAlgebra A>
std::array<CapabilityOutcome, 6> su_capabilities(const A& alg, const SuInstance<element_t<A>>& in,
                                                 double threshold = 1e-8) {
  std::array<CapabilityOutcome, 6> out;
  LatticeOptions lat;
  lat.probe_samples = 0;
  auto run = [&](std::size_t idx, auto&& body) {
    out[idx].name = kCapabilityNames[idx];
    try {
      out[idx].defect = body();
      out[idx].ok = out[idx].defect <= threshold;
    } catch (const Error& e) {
      out[idx].ok = false;
      out[idx].error = e.what();
    }
  };

  run(0, [&] {
    const auto r = invert_shifted(alg, in.hermitian);
    return std::max(r.defect_plus, r.defect_minus) / scale_of(alg, in.hermitian);
  });
  run(1, [&] { return inverse_coercive(alg, in.coercive).defect; });
  run(2, [&] {
    const auto r = sqrt_general(alg, in.positive);
    if (!alg.is_positive(r.result)) return 1.0;
    return r.residual / scale_of(alg, in.positive);
  });
  run(3, [&] {
    const auto m = abs_value(alg, in.hermitian);
    const auto sq = alg.mul(in.hermitian, in.hermitian);
    if (!alg.is_positive(m)) return 1.0;
    return alg.size(alg.sub(alg.mul(m, m), sq)) / scale_of(alg, sq);
  });
  run(4, [&] {
    const auto v = vee_report(alg, in.left, in.right, lat);
    const auto w = wedge_report(alg, in.left, in.right, lat);
    const double s = std::max(scale_of(alg, in.left), scale_of(alg, in.right));
    return std::max(v.algebraic_defect, w.algebraic_defect) / (s * s);
  });
  run(5, [&] {
    const auto w = wedge_report(alg, in.coercive, alg.one(), lat);
    return w.algebraic_defect / scale_of(alg, in.coercive);
  });
  return out;
}

}  // namespace sustar
