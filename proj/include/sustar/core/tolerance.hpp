#pragma once

#include <limits>

namespace sustar {

/// Floating-point slack used wherever an exact order or identity is tested.
/// Positivity slack is relative: h is accepted iff min spec(h) >= -tol_pos * (1 + |h|).
struct TolerancePolicy {
  double tol_pos = 1e-10;
  double tol_eq = 1e-10;
  double tol_comm = 1e-10;
  int max_iter = 200;

  bool valid() const {
    return tol_pos > 0 && tol_eq >= 4 * std::numeric_limits<double>::epsilon() && tol_comm > 0 &&
           max_iter > 0;
  }
};

}  // namespace sustar
