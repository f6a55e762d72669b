#pragma once

#include <functional>

namespace swipt::specfun {

/// Gamma function for s > 0. Integer arguments up to 170 are exact products.
double gamma_fn(double s);
double log_gamma(double s);

/// Regularized incomplete gammas P(s, x) and Q(s, x) = 1 - P(s, x).
double gamma_p(double s, double x);
double gamma_q(double s, double x);

/// Unregularized lower incomplete gamma  gamma(s, x) = int_0^x t^(s-1) e^-t dt.
double lower_inc_gamma(double s, double x);
/// Unregularized upper incomplete gamma  Gamma(s, x) = int_x^inf t^(s-1) e^-t dt.
double upper_inc_gamma(double s, double x);

/// Generalized exponential integral E_n(x) = int_1^inf e^(-x t) t^-n dt for
/// any integer n and x > 0 (x = 0 allowed when n > 1).
double expint_en(int n, double x);
/// e^x E_n(x), x > 0.
double expint_en_scaled(int n, double x);

/// Modified Bessel function of the second kind K_v(x), x > 0, any real v.
double bessel_k(double v, double x);
/// e^x K_v(x); stays representable when K_v underflows.
double bessel_k_scaled(double v, double x);
/// log K_v(x).
double log_bessel_k(double v, double x);

struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 500;
};

struct SeriesResult {
  double value = 0.0;
  bool converged = false;
  int terms = 0;
  double abs_sum = 0.0;  // sum of |term|, bounds the rounding error
};

/// Sums term(0) + term(1) + ... until two consecutive terms satisfy
/// |term| <= rel_tol * |partial|, or max_terms terms have been added.
SeriesResult sum_alternating(const std::function<double(int)>& term, SeriesControl ctrl = {});

double binomial(int n, int k);
double factorial(int n);

}  // namespace swipt::specfun
