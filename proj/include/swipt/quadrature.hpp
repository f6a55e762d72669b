#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace swipt::quad {

struct QuadratureControl {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
  int dims = 1;  // 1..3, checked by integrate_region
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. b may be
/// +infinity, in which case x = a + t/(1-t) maps the range onto [0, 1).
/// Points in `breaks` strictly inside (a, b) seed the subdivision so kinks
/// never sit inside a panel.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breaks = {}, const QuadratureControl& ctrl = {});

/// Gamma(shape, scale) density with its distribution function.
struct GammaDensity {
  double shape = 1.0;
  double scale = 1.0;
  double pdf(double x) const;
  /// P{lo <= X <= hi}, computed from whichever tail keeps the difference accurate.
  double mass(double lo, double hi) const;
};

/// Gamma(n, 1/n): the sum of n unit-mean exponential powers scaled to unit mean.
GammaDensity unit_mean_gamma(int n);

/// One variable of an iterated integral. `bounds` and `breaks` receive the
/// values of the variables integrated further out, outermost first.
struct Dimension {
  GammaDensity density;
  std::function<std::pair<double, double>(std::span<const double>)> bounds;
  std::function<std::vector<double>(std::span<const double>)> breaks;
};

/// Probability mass of an iterated region under a product of independent
/// Gamma densities. The innermost variable is closed with the distribution
/// function; the others are integrated adaptively, inner tolerances one
/// tenth of the enclosing one.
QuadResult integrate_region(std::span<const Dimension> dims, const QuadratureControl& ctrl = {});

}  // namespace swipt::quad
