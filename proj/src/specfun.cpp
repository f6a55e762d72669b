#include "swipt/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swipt::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr double kEuler = 0.57721566490153286061;

void domain_check(bool ok, const char* fn, const char* what) {
  if (!ok) throw std::domain_error(std::string(fn) + ": " + what);
}

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
  double x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + i);
  return x;
}

bool is_small_integer(double s) { return s == std::floor(s) && s >= 1.0 && s <= 171.0; }

// Series for P(s, x), valid for x < s + 1.
double gamma_p_series(double s, double x) {
  double ap = s;
  double del = 1.0 / s;
  double sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
}

// Continued fraction for Q(s, x), valid for x >= s + 1.
double gamma_q_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return std::exp(-x + s * std::log(x) - log_gamma(s)) * h;
}

// Taylor coefficients of 1/Gamma(z) about 0: 1/Gamma(z) = sum_k c[k] z^k.
constexpr std::array<double, 29> kRecipGamma = {
    0.0,
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18};

// Temme's gamma1, gamma2 for |mu| <= 1/2, plus 1/Gamma(1 + mu), 1/Gamma(1 - mu).
struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
  // 1/Gamma(1 + mu) = sum_k c[k] mu^(k-1). gam2 is its even part and
  // gam1 = -(odd part) / mu, both summed directly so mu = 0 is fine.
  const double mu2 = mu * mu;
  double g1 = 0.0;
  double g2 = 0.0;
  double pw = 1.0;
  for (std::size_t k = 1; k < kRecipGamma.size(); k += 2) {
    g2 += kRecipGamma[k] * pw;
    if (k + 1 < kRecipGamma.size()) g1 -= kRecipGamma[k + 1] * pw;
    pw *= mu2;
  }
  return {g1, g2, g2 - mu * g1, g2 + mu * g1};
}

// e^x K_mu(x) and e^x K_{mu+1}(x) for |mu| <= 1/2.
void bessel_k_pair_scaled(double mu, double x, double& kmu, double& kmu1) {
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i < 10000; ++i) {
      ff = (i * ff + p + q) / (i * i - mu2);
      c *= d / i;
      p /= i - mu;
      q /= i + mu;
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - i * ff);
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    const double ex = std::exp(x);
    kmu = sum * ex;
    kmu1 = sum1 * 2.0 * xi * ex;
    return;
  }
  // Steed's method for Temme's second continued fraction.
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  kmu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
  kmu1 = kmu * (mu + x + 0.5 - h) * xi;
}

// e^x K_{n+1/2}(x) from the terminating series.
double bessel_k_half_scaled(int n, double x) {
  double sum = 0.0;
  double term = 1.0;  // (n+k)! / (k! (n-k)!) (2x)^-k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term *= static_cast<double>((n + k) * (n - k + 1)) / (k * 2.0 * x);
    sum += term;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) * sum;
}

}  // namespace

double factorial(int n) {
  domain_check(n >= 0, "factorial", "n must be >= 0");
  if (n > 170) return std::numeric_limits<double>::infinity();
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double log_gamma(double s) {
  domain_check(s > 0.0, "log_gamma", "argument must be > 0");
  if (is_small_integer(s) && s <= 30.0) return std::log(factorial(static_cast<int>(s) - 1));
  if (s < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * s)) - log_gamma(1.0 - s);
  }
  const double z = s - 1.0;
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double gamma_fn(double s) {
  domain_check(s > 0.0, "gamma_fn", "argument must be > 0");
  if (is_small_integer(s)) return factorial(static_cast<int>(s) - 1);
  if (s < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * s) * gamma_fn(1.0 - s));
  if (s > 20.0) return std::exp(log_gamma(s));
  const double z = s - 1.0;
  const double t = z + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

double gamma_p(double s, double x) {
  domain_check(s > 0.0, "gamma_p", "s must be > 0");
  domain_check(x >= 0.0, "gamma_p", "x must be >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return gamma_p_series(s, x);
  return 1.0 - gamma_q_fraction(s, x);
}

double gamma_q(double s, double x) {
  domain_check(s > 0.0, "gamma_q", "s must be > 0");
  domain_check(x >= 0.0, "gamma_q", "x must be >= 0");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_fraction(s, x);
}

double lower_inc_gamma(double s, double x) {
  domain_check(s > 0.0, "lower_inc_gamma", "s must be > 0");
  domain_check(x >= 0.0, "lower_inc_gamma", "x must be >= 0");
  return gamma_p(s, x) * gamma_fn(s);
}

double upper_inc_gamma(double s, double x) {
  domain_check(s > 0.0, "upper_inc_gamma", "s must be > 0");
  domain_check(x >= 0.0, "upper_inc_gamma", "x must be >= 0");
  return gamma_q(s, x) * gamma_fn(s);
}

namespace {

// e^x E_n(x).
double expint_scaled(int n, double x) {
  if (n < 0) {
    // E_{-k}(x) = k! e^-x sum_{j<=k} x^j / j! / x^(k+1)
    const int k = -n;
    double sum = 0.0;
    double term = 1.0;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) term *= x / j;
      sum += term;
    }
    return factorial(k) * sum / std::pow(x, k + 1);
  }
  if (n == 0) return 1.0 / x;
  const int nm1 = n - 1;
  if (x > 1.0) {
    double b = x + n;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
      const double a = -static_cast<double>(i) * (nm1 + i);
      b += 2.0;
      d = 1.0 / (a * d + b);
      c = b + a / c;
      const double del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
  }
  double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - kEuler;
  double fact = 1.0;
  for (int i = 1; i < 100000; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -kEuler;
      for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
      del = fact * (-std::log(x) + psi);
    }
    ans += del;
    if (std::abs(del) < std::abs(ans) * kEps) break;
  }
  return ans * std::exp(x);
}

}  // namespace

double expint_en(int n, double x) {
  domain_check(x >= 0.0, "expint_en", "x must be >= 0");
  if (x == 0.0) {
    domain_check(n > 1, "expint_en", "E_n(0) requires n > 1");
    return 1.0 / (n - 1);
  }
  return expint_scaled(n, x) * std::exp(-x);
}

double expint_en_scaled(int n, double x) {
  domain_check(x > 0.0, "expint_en_scaled", "x must be > 0");
  return expint_scaled(n, x);
}

double bessel_k_scaled(double v, double x) {
  domain_check(x > 0.0, "bessel_k", "x must be > 0");
  const double nu = std::abs(v);
  const double half = nu - 0.5;
  if (half >= 0.0 && half == std::floor(half) && half < 64.0) {
    return bessel_k_half_scaled(static_cast<int>(half), x);
  }
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  double kmu = 0.0;
  double kmu1 = 0.0;
  bessel_k_pair_scaled(mu, x, kmu, kmu1);
  const double xi2 = 2.0 / x;
  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * kmu1 + kmu;
    kmu = kmu1;
    kmu1 = next;
  }
  return kmu;
}

double bessel_k(double v, double x) { return bessel_k_scaled(v, x) * std::exp(-x); }

double log_bessel_k(double v, double x) { return std::log(bessel_k_scaled(v, x)) - x; }

SeriesResult sum_alternating(const std::function<double(int)>& term, SeriesControl ctrl) {
  if (!(ctrl.rel_tol > 0.0) || ctrl.max_terms < 1) {
    throw std::invalid_argument("sum_alternating: rel_tol must be > 0 and max_terms >= 1");
  }
  SeriesResult r;
  int small_run = 0;
  for (int i = 0; i < ctrl.max_terms; ++i) {
    const double t = term(i);
    r.value += t;
    r.abs_sum += std::abs(t);
    r.terms = i + 1;
    if (std::abs(t) <= ctrl.rel_tol * std::abs(r.value)) {
      if (++small_run == 2) {
        r.converged = true;
        return r;
      }
    } else {
      small_run = 0;
    }
  }
  return r;
}

}  // namespace swipt::specfun
