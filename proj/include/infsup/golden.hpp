#pragma once

// Golden-section minimization on a bracket. No derivatives; for (quasi)convex
// objectives the returned point is the global minimum of the bracket.

#include <cmath>
#include <functional>

#include "infsup/common.hpp"

namespace infsup {

struct GoldenResult {
  double x = 0.0;        // abscissa of the best point seen
  double value = 0.0;    // objective there
  int iterations = 0;
  bool at_lower = false; // converged against the bracket's lower edge
  bool at_upper = false; // converged against the bracket's upper edge
};

// Minimize `fn` on [a, b]. Stops once the bracket width drops below
// rel_tol * max(|a|, |b|, 1) or max_iter iterations ran.
template <typename Fn>
GoldenResult golden_min(Fn&& fn, double a, double b, double rel_tol = 1e-10,
                        int max_iter = 200) {
  if (!(a < b)) throw ArgumentError("golden_min: empty bracket");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
  const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...
  const double span_scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  const double a0 = a, b0 = b;

  double h = b - a;
  double x1 = a + invphi2 * h;
  double x2 = a + invphi * h;
  double f1 = fn(x1);
  double f2 = fn(x2);
  int it = 0;
  while (h > rel_tol * span_scale && it < max_iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      h = b - a;
      x1 = a + invphi2 * h;
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      h = b - a;
      x2 = a + invphi * h;
      f2 = fn(x2);
    }
    ++it;
  }

  GoldenResult r;
  r.x = (f1 <= f2) ? x1 : x2;
  r.value = std::min(f1, f2);
  r.iterations = it;
  const double edge = std::max(1e-6 * (b0 - a0), 8.0 * rel_tol * span_scale);
  r.at_lower = (r.x - a0) <= edge;
  r.at_upper = (b0 - r.x) <= edge;
  return r;
}

}  // namespace infsup
