#pragma once

// Adaptive Simpson integration with a relative error target. Each recursion
// halves the panel and accepts once the Richardson estimate is below the
// locally apportioned tolerance.

#include <cmath>

#include "infsup/common.hpp"

namespace infsup {

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename Fn>
double adapt(Fn&& fn, double a, double fa, double b, double fb, double m,
             double fm, double whole, double eps, int depth,
             double* worst_err) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double err = (left + right - whole) / 15.0;
  if (depth <= 0) {
    const double rel = std::fabs(err) / std::max(std::fabs(left + right), 1e-300);
    if (rel > *worst_err) *worst_err = rel;
    return left + right + err;
  }
  if (std::fabs(err) <= eps) return left + right + err;
  return adapt(fn, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1,
               worst_err) +
         adapt(fn, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1,
               worst_err);
}

}  // namespace detail

// Integrate fn over [a, b]; throws NumericError (with the worst relative
// panel error achieved) if the depth budget runs out before `rel_tol`.
template <typename Fn>
double integrate(Fn&& fn, double a, double b, double rel_tol = 1e-10,
                 int max_depth = 48) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = fn(a);
  const double fb = fn(b);
  const double fm = fn(m);
  const double whole = detail::simpson(a, fa, b, fb, fm);
  // Absolute budget from a first-pass magnitude estimate; floors avoid a
  // zero target when the integral vanishes.
  const double scale = std::max({std::fabs(whole), (b - a) * std::fabs(fm),
                                 1e-12});
  double worst = 0.0;
  const double r = detail::adapt(fn, a, fa, b, fb, m, fm, whole,
                                 rel_tol * scale, max_depth, &worst);
  if (worst > 8.0 * rel_tol) {
    throw NumericError("integrate: tolerance not reached", worst);
  }
  return r;
}

}  // namespace infsup
