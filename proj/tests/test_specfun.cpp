#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "swipt/quadrature.hpp"
#include "swipt/specfun.hpp"

using namespace swipt::specfun;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma function") {
  CHECK(gamma_fn(5.0) == 24.0);
  CHECK(gamma_fn(1.0) == 1.0);
  CHECK(rel_err(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel_err(gamma_fn(3.7), std::tgamma(3.7)) < 1e-13);
  CHECK(rel_err(log_gamma(60.5), std::lgamma(60.5)) < 1e-14);
  CHECK(factorial(10) == 3628800.0);
  CHECK(binomial(7, 3) == 35.0);
  CHECK(binomial(5, 0) == 1.0);
}

TEST_CASE("incomplete gammas sum to the complete gamma") {
  for (double s = 0.25; s <= 50.0; s *= 1.6) {
    for (double x : {0.0, 1e-6, 0.3, 1.0, 4.0, 17.0, 60.0, 100.0}) {
      const double total = lower_inc_gamma(s, x) + upper_inc_gamma(s, x);
      CHECK(rel_err(total, gamma_fn(s)) < 1e-12);
      CHECK(gamma_p(s, x) + gamma_q(s, x) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("incomplete gammas match their finite sums at integer order") {
  for (int s = 1; s <= 20; ++s) {
    for (double x : {0.05, 0.7, 2.5, 9.0, 31.0}) {
      double partial = 0.0, term = 1.0;
      for (int r = 0; r < s; ++r) {
        partial += term;
        term *= x / (r + 1);
      }
      const double upper = factorial(s - 1) * std::exp(-x) * partial;
      CHECK(rel_err(upper_inc_gamma(s, x), upper) < 1e-12);
      const double tail = std::exp(-x) * partial;
      if (tail < 0.9) {
        CHECK(rel_err(lower_inc_gamma(s, x), factorial(s - 1) * (1.0 - tail)) < 1e-12);
      } else {
        // 1 - tail cancels here; the remaining terms of the same series are exact.
        double rest = 0.0, t = term;
        for (int r = s; r < s + 200; ++r) {
          rest += t;
          t *= x / (r + 1);
        }
        CHECK(rel_err(lower_inc_gamma(s, x), factorial(s - 1) * std::exp(-x) * rest) < 1e-12);
      }
    }
  }
  CHECK(upper_inc_gamma(2.0, 3.0) == doctest::Approx(4.0 * std::exp(-3.0)).epsilon(1e-14));
  CHECK(lower_inc_gamma(3.0, 2.5) ==
        doctest::Approx(2.0 * (1.0 - std::exp(-2.5) * (1.0 + 2.5 + 2.5 * 2.5 / 2.0))).epsilon(1e-13));
}

TEST_CASE("exponential integrals") {
  CHECK(expint_en(1, 1.0) == doctest::Approx(0.21938393439552029).epsilon(1e-14));
  CHECK(expint_en(2, 0.0) == doctest::Approx(1.0));
  // E_0(x) = e^-x / x and E_-1(x) = e^-x (1 + x) / x^2.
  CHECK(expint_en(0, 2.0) == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-14));
  CHECK(expint_en(-1, 2.0) == doctest::Approx(std::exp(-2.0) * 3.0 / 4.0).epsilon(1e-14));
  CHECK(expint_en_scaled(3, 800.0) == doctest::Approx(1.0 / 803.0).epsilon(1e-5));
}

TEST_CASE("Bessel K special values") {
  for (double x : {0.01, 0.5, 2.0, 7.5, 40.0}) {
    const double k_half = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
    CHECK(rel_err(bessel_k(0.5, x), k_half) < 1e-12);
    CHECK(rel_err(bessel_k(-0.5, x), k_half) < 1e-12);
    CHECK(rel_err(bessel_k(-3.0, x), bessel_k(3.0, x)) < 1e-14);
    CHECK(rel_err(bessel_k_scaled(2.3, x), std::exp(x) * bessel_k(2.3, x)) < 1e-12);
    CHECK(rel_err(log_bessel_k(1.7, x), std::log(bessel_k(1.7, x))) < 1e-12);
  }
  CHECK(bessel_k(0.0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-13));
  CHECK(bessel_k(1.0, 1.0) == doctest::Approx(0.60190723019723457).epsilon(1e-13));
  CHECK(std::isfinite(log_bessel_k(2.0, 2000.0)));
}

TEST_CASE("K_v(x) equals its integral representation") {
  // K_v(x) = int_0^inf exp(-x cosh t) cosh(v t) dt; the integrand is below 1e-300 past t = 10.
  for (auto [v, x] : {std::pair{2.0, 1.5}, {0.3, 0.7}, {4.5, 3.0}}) {
    const auto r = swipt::quad::integrate(
        [=](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(v * t); }, 0.0, 10.0, {},
        {1e-15, 1e-13, 4000, 1});
    CHECK(rel_err(bessel_k(v, x), r.value) < 1e-10);
  }
}

TEST_CASE("inverse-exponential moment identity") {
  // int_0^inf x^(v-1) exp(-b/x - g x) dx = 2 (b/g)^(v/2) K_v(2 sqrt(b g))
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> uv(-3.0, 4.0), ub(0.05, 5.0), ug(0.05, 5.0);
  for (int i = 0; i < 10; ++i) {
    const double v = uv(gen), b = ub(gen), g = ug(gen);
    const double closed = 2.0 * std::pow(b / g, v / 2.0) * bessel_k(v, 2.0 * std::sqrt(b * g));
    const double peak = std::sqrt(b / g);
    const std::vector<double> breaks{peak};
    const auto r = swipt::quad::integrate(
        [=](double x) { return x <= 0.0 ? 0.0 : std::exp((v - 1.0) * std::log(x) - b / x - g * x); },
        0.0, std::numeric_limits<double>::infinity(), breaks, {1e-300, 1e-12, 4000, 1});
    CHECK(rel_err(r.value, closed) < 1e-8);
  }
}

TEST_CASE("power-exponential moment") {
  for (int n = 0; n <= 12; ++n) {
    for (double mu : {0.3, 1.0, 4.0}) {
      const auto r = swipt::quad::integrate(
          [=](double x) { return std::pow(x, n) * std::exp(-mu * x); }, 0.0,
          std::numeric_limits<double>::infinity(), {}, {1e-300, 1e-13, 4000, 1});
      CHECK(rel_err(r.value, factorial(n) * std::pow(mu, -n - 1)) < 1e-10);
    }
  }
}

TEST_CASE("K_v is positive and log-convex in the order") {
  for (double x : {0.1, 1.0, 5.0, 25.0}) {
    for (double v = -4.0; v <= 6.0; v += 0.25) {
      const double h = 0.25;
      CHECK(bessel_k(v, x) > 0.0);
      const double second = log_bessel_k(v + h, x) - 2.0 * log_bessel_k(v, x) + log_bessel_k(v - h, x);
      CHECK(second >= -1e-12);
    }
  }
}

TEST_CASE("series summation") {
  const auto exp_series = sum_alternating([](int l) { return std::pow(-1.0, l) / factorial(l); });
  CHECK(exp_series.converged);
  CHECK(exp_series.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(exp_series.abs_sum == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

  const auto zeros = sum_alternating([](int) { return 0.0; });
  CHECK(zeros.converged);
  CHECK(zeros.value == 0.0);
  CHECK(zeros.terms == 2);

  const auto harmonic = sum_alternating([](int l) { return 1.0 / (l + 1); }, {1e-12, 50});
  CHECK_FALSE(harmonic.converged);
  CHECK(harmonic.terms == 50);
}
