#pragma once

#include "swipt/specfun.hpp"

// Finite-sum / special-function evaluations of the probability kernels shared
// by the DF and AF analyses. All random variables are unit-mean Gamma sums:
// X ~ Gamma(na, 1/na), Y ~ Gamma(nb, 1/nb), Z ~ Gamma(mk, 1/mk).
namespace swipt::closed {

/// int_lo^hi x^(n-1) exp(-mu x - shift) dx for integer n >= 1 and any real mu.
/// hi may be +infinity when mu > 0.
double truncated_exp_moment(int n, double mu, double lo, double hi, double shift);

/// A closed-form value with the bookkeeping needed to judge its rounding error.
struct Conditioned {
  double value = 0.0;
  double abs_terms = 0.0;  // sum of |term| over the terms combined into value
  bool series_converged = true;

  /// Rounding error bound: the largest term magnitudes times a few ulps.
  double rounding_bound() const { return 1e-14 * abs_terms; }
};

/// P{A1 X >= u1, A2 Y >= u2, A1 X + A2 Y >= u3} for u3 >= u1 + u2.
Conditioned linear_rate_region(int na, int nb, double a1, double a2, double u1, double u2,
                               double u3);

/// P{X (a X + b Y) >= k}. The inner power series in mu = na - nb a / b is
/// truncated with `ctrl`.
Conditioned quadratic_region(int na, int nb, double a, double b, double k,
                             specfun::SeriesControl ctrl = {});

/// P{a X + b Y >= s + t / Z}.
Conditioned inverse_gain_region(int na, int nb, int mk, double a, double b, double s, double t);

/// P{Y >= f + h X + g / X} with X ~ Gamma(nx, 1/nx), Y ~ Gamma(ny, 1/ny), g > 0.
Conditioned hyperbolic_region(int nx, int ny, double f, double h, double g);

}  // namespace swipt::closed
