#pragma once

// Upper bounds for the inf-sup constant from a flat cut: when a hyperplane
// section Sigma of width L splits the domain into parts Omega_+ and Omega_-,
//   beta^2 <= c_d^2 * |Omega| L |Sigma| / (|Omega_+| |Omega_-|),
// and in the plane, with Sigma an interval (|Sigma| = L, c_2^2 = 8/3),
//   beta^2 <= (8/3) |Omega| / (|Omega_+| |Omega_-|) * L^2.
// A positive margin of a claimed lower bound over this value refutes the claim.

#include <cmath>
#include <optional>

#include "infsup/common.hpp"

namespace infsup {

struct CutSpec {
  double area_plus = 0.0;   // |Omega_+|
  double area_minus = 0.0;  // |Omega_-|
  double area_total = 0.0;  // |Omega| = |Omega_+| + |Omega_-|
  double width = 0.0;       // L, extent of the cut
  double sigma_measure = 0.0;  // |Sigma|; equals L for an interval cut in 2D
  int dim = 2;
  std::optional<double> c_d;  // required for dim > 2; built-in sqrt(8/3) in 2D

  static CutSpec plane(double area_plus, double area_minus, double width) {
    CutSpec c;
    c.area_plus = area_plus;
    c.area_minus = area_minus;
    c.area_total = area_plus + area_minus;
    c.width = width;
    c.sigma_measure = width;
    c.dim = 2;
    return c;
  }

  void validate() const {
    if (!(area_plus > 0.0) || !(area_minus > 0.0))
      throw ArgumentError("cut: both part measures must be positive");
    if (!(width > 0.0)) throw ArgumentError("cut: width must be positive");
    if (!(sigma_measure > 0.0))
      throw ArgumentError("cut: section measure must be positive");
    if (dim < 2) throw ArgumentError("cut: dimension must be at least 2");
    const double sum = area_plus + area_minus;
    if (std::fabs(area_total - sum) > 1e-9 * sum)
      throw ArgumentError("cut: total measure must equal the sum of the parts");
    if (dim == 2 && std::fabs(sigma_measure - width) > 1e-9 * width)
      throw ArgumentError("cut: a plane interval cut has |Sigma| = L");
  }
};

// Proven upper bound for beta. In the plane the constant sqrt(8/3) is built
// in; in higher dimension the caller must supply c_d.
inline double beta_upper(const CutSpec& cut) {
  cut.validate();
  if (cut.dim == 2) {
    return std::sqrt(8.0 / 3.0 * cut.area_total /
                     (cut.area_plus * cut.area_minus)) *
           cut.width;
  }
  if (!cut.c_d)
    throw ArgumentError("cut: c_d required for dimension > 2");
  return *cut.c_d * std::sqrt(cut.area_total * cut.width * cut.sigma_measure /
                              (cut.area_plus * cut.area_minus));
}

// Both arguments on the beta^2 scale. Positive: the claimed lower bound
// exceeds the proven upper bound, i.e. the claim is refuted.
inline double refutation_margin(double claimed_beta_sq_lower,
                                double proven_beta_sq_upper) {
  return claimed_beta_sq_lower - proven_beta_sq_upper;
}

}  // namespace infsup
