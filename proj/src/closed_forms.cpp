#include "swipt/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swipt::closed {

namespace {

using specfun::binomial;
using specfun::factorial;
using specfun::log_gamma;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unit-mean Gamma(n) tail P{X >= x}.
double unit_sf(int n, double x) { return x <= 0.0 ? 1.0 : specfun::gamma_q(n, n * x); }
double unit_cdf(int n, double x) { return x <= 0.0 ? 0.0 : specfun::gamma_p(n, n * x); }

// log of n^n / Gamma(n), the unit-mean Gamma(n) density constant.
double log_density_norm(int n) { return n * std::log(static_cast<double>(n)) - log_gamma(n); }

// x^e with the convention 0^0 = 1, in log form; returns -inf for 0^e, e > 0.
double log_pow(double x, double e) {
  if (e == 0.0) return 0.0;
  return e * std::log(x);
}

// Antiderivative of x^(n-1) e^(c x), c != 0, without the exponential:
// sum_k (-1)^k (n-1)!/(n-1-k)! x^(n-1-k) / c^(k+1).
double poly_exp_antiderivative(int n, double c, double x) {
  double sum = 0.0;
  double falling = 1.0;  // (n-1)!/(n-1-k)!
  for (int k = 0; k < n; ++k) {
    if (k > 0) falling *= (n - k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * falling * std::pow(x, n - 1 - k) / std::pow(c, k + 1);
  }
  return sum;
}

}  // namespace

double truncated_exp_moment(int n, double mu, double lo, double hi, double shift) {
  if (n < 1) throw std::domain_error("truncated_exp_moment: n must be >= 1");
  if (lo < 0.0) lo = 0.0;
  if (!(hi > lo)) return 0.0;
  if (std::isinf(hi) && !(mu > 0.0)) {
    throw std::domain_error("truncated_exp_moment: infinite range needs mu > 0");
  }
  if (mu == 0.0) return std::exp(-shift) * (std::pow(hi, n) - std::pow(lo, n)) / n;

  const double reach = std::abs(mu) * hi;
  const bool series = (mu < 0.0 && reach <= 50.0) || (mu > 0.0 && reach <= 1.0);
  if (series) {
    // e^(-mu x) expanded in powers of mu; positive terms when mu < 0.
    double sum = 0.0;
    double coef = 1.0;  // (-mu)^l / l!
    double ph = std::pow(hi, n);
    double pl = std::pow(lo, n);
    for (int l = 0; l < 2000; ++l) {
      if (l > 0) {
        coef *= -mu / l;
        ph *= hi;
        pl *= lo;
      }
      const double term = coef * (ph - pl) / (n + l);
      sum += term;
      if (l > reach && std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-shift) * sum;
  }
  if (mu > 0.0) {
    // Gamma(n) mu^-n P{mu lo <= G <= mu hi}, G ~ Gamma(n, 1).
    const double a = mu * lo;
    const double b = mu * hi;
    double mass;
    if (b <= n) {
      mass = specfun::gamma_p(n, b) - specfun::gamma_p(n, a);
    } else {
      mass = specfun::gamma_q(n, a) - (std::isinf(b) ? 0.0 : specfun::gamma_q(n, b));
    }
    return std::exp(log_gamma(n) - n * std::log(mu) - shift) * mass;
  }
  // mu < 0 with a long reach: closed antiderivative, exponents combined first.
  const double c = -mu;
  const double upper = std::exp(c * hi - shift) * poly_exp_antiderivative(n, c, hi);
  const double lower = std::exp(c * lo - shift) * poly_exp_antiderivative(n, c, lo);
  return upper - lower;
}

Conditioned linear_rate_region(int na, int nb, double a1, double a2, double u1, double u2,
                               double u3) {
  if (u1 <= 0.0 && u2 <= 0.0 && u3 <= 0.0) return {1.0, 1.0, true};
  if (u2 > 0.0 && a2 <= 0.0) return {0.0, 0.0, true};
  if (u1 > 0.0 && a1 <= 0.0) return {0.0, 0.0, true};
  if (a1 <= 0.0) {
    const double v = a2 > 0.0 ? unit_sf(nb, std::max(u2, u3) / a2) : 0.0;
    return {v, v, true};
  }
  if (a2 <= 0.0) {
    const double v = unit_sf(na, std::max(u1, u3) / a1);
    return {v, v, true};
  }
  const double xl = u1 / a1;
  const double xu = std::max(xl, (u3 - u2) / a1);
  const double yl = u2 / a2;

  Conditioned out;
  // x beyond xu: only the single-user condition on y binds.
  out.value = unit_sf(na, xu) * unit_sf(nb, yl);
  out.abs_terms = std::abs(out.value);

  // xl <= x < xu: the sum-rate condition binds, y >= (u3 - a1 x) / a2.
  const double mu = na - nb * a1 / a2;
  const double shift = nb * u3 / a2;
  const double lnorm = log_density_norm(na);
  for (int qa = 0; qa < nb; ++qa) {
    for (int q = 0; q <= qa; ++q) {
      const double lmag = qa * std::log(nb / a2) - log_gamma(qa + 1.0) +
                          std::log(binomial(qa, q)) + log_pow(u3, qa - q) + q * std::log(a1) +
                          lnorm;
      const double sign = (q % 2 == 0) ? 1.0 : -1.0;
      const double moment = truncated_exp_moment(na + q, mu, xl, xu, shift);
      const double term = sign * std::exp(lmag) * moment;
      out.value += term;
      out.abs_terms += std::abs(term);
    }
  }
  return out;
}

Conditioned quadratic_region(int na, int nb, double a, double b, double k,
                             specfun::SeriesControl ctrl) {
  if (k <= 0.0) return {1.0, 1.0, true};
  if (a <= 0.0 && b <= 0.0) return {0.0, 0.0, true};
  if (a <= 0.0) throw std::domain_error("quadratic_region: a must be > 0");
  const double x0 = std::sqrt(k / a);
  if (b <= 0.0) {
    const double v = unit_sf(na, x0);
    return {v, v, true};
  }
  const double beta = nb * k / b;
  const double z0 = beta / x0;
  const double mu = na - nb * a / b;
  const double mux = -mu * x0;  // expansion variable of exp(-mu x) at x0
  const double lnorm = log_density_norm(na);

  // Failure probability P{X (a X + b Y) < k}.
  double fail = unit_cdf(na, x0);
  double abs_terms = fail;
  bool converged = true;
  for (int p = 0; p < nb; ++p) {
    for (int r = 0; r <= p; ++r) {
      const int s = na + 2 * r - p;
      // int_0^x0 x^(s-1) e^(-beta/x - mu x) dx
      //   = x0^s e^(-z0) sum_l (-mu x0)^l / l! e^(z0) E_(s+l+1)(z0)
      const auto term = [&](int l) {
        double c;
        if (l == 0) {
          c = 1.0;
        } else if (mux == 0.0) {
          return 0.0;
        } else {
          c = std::exp(l * std::log(std::abs(mux)) - log_gamma(l + 1.0));
          if (mux < 0.0 && l % 2 == 1) c = -c;
        }
        return c * specfun::expint_en_scaled(s + l + 1, z0);
      };
      const specfun::SeriesResult ser = specfun::sum_alternating(term, ctrl);
      converged = converged && ser.converged;
      const double lcoef = p * std::log(static_cast<double>(nb)) - log_gamma(p + 1.0) +
                           std::log(binomial(p, r)) + (p - r) * std::log(k / b) +
                           r * std::log(a / b) + lnorm + s * std::log(x0) - z0;
      const double sign = (r % 2 == 0) ? 1.0 : -1.0;
      const double coef = sign * std::exp(lcoef);
      fail -= coef * ser.value;
      abs_terms += std::abs(coef) * ser.abs_sum;
    }
  }
  return {1.0 - fail, abs_terms, converged};
}

namespace {

// M(k, lambda) = E_Z[w^k e^(-lambda w)] with w = s + t / Z, Z ~ Gamma(mk, 1/mk).
double inverse_moment(int k, double lambda, int mk, double s, double t) {
  if (t <= 0.0) return std::exp(log_pow(s, k) - lambda * s);
  const double lz = log_density_norm(mk);
  const double arg = 2.0 * std::sqrt(lambda * t * mk);
  double sum = 0.0;
  for (int i = 0; i <= k; ++i) {
    if (s <= 0.0 && i != k) continue;
    // E[Z^-i e^(-lambda t / Z)] = norm * 2 (lambda t / mk)^((mk-i)/2) K_(mk-i)(arg)
    double lt = std::log(binomial(k, i)) + log_pow(s, k - i) + i * std::log(t) - lambda * s + lz;
    if (lambda > 0.0) {
      const double v = mk - i;
      lt += std::log(2.0) + 0.5 * v * std::log(lambda * t / mk) +
            std::log(specfun::bessel_k_scaled(v, arg)) - arg;
    } else {
      // lambda = 0: E[Z^-i] = mk^i Gamma(mk - i) / Gamma(mk), finite for i < mk.
      if (i >= mk) return kInf;
      lt += log_gamma(mk - i) - (mk - i) * std::log(static_cast<double>(mk));
    }
    sum += std::exp(lt);
  }
  return sum;
}

}  // namespace

Conditioned inverse_gain_region(int na, int nb, int mk, double a, double b, double s,
                                double t) {
  if (s <= 0.0 && t <= 0.0) return {1.0, 1.0, true};
  if (a <= 0.0 && b <= 0.0) return {0.0, 0.0, true};
  if (a <= 0.0 || b <= 0.0) throw std::domain_error("inverse_gain_region: need a, b > 0");
  const double mu = na - nb * a / b;
  if (std::abs(mu) < 1e-9 * na) return {0.0, kInf, true};

  Conditioned out;
  // P{X >= w / a}.
  const double la = na / a;
  for (int p = 0; p < na; ++p) {
    const double term =
        std::exp(p * std::log(la) - log_gamma(p + 1.0)) * inverse_moment(p, la, mk, s, t);
    out.value += term;
    out.abs_terms += term;
  }
  // x < w / a and y >= (w - a x) / b.
  const double lb = nb / b;
  const double lnorm = log_density_norm(na);
  double second = 0.0;
  double second_abs = 0.0;
  for (int p = 0; p < nb; ++p) {
    for (int r = 0; r <= p; ++r) {
      const int n = na + r;
      const double lcoef = p * std::log(lb) - log_gamma(p + 1.0) + std::log(binomial(p, r)) +
                           r * std::log(a) + log_gamma(n) - n * std::log(std::abs(mu));
      double coef = std::exp(lcoef);
      if (r % 2 == 1) coef = -coef;
      if (mu < 0.0 && n % 2 == 1) coef = -coef;
      const double lead = inverse_moment(p - r, lb, mk, s, t);
      double bracket = lead;
      double bracket_abs = lead;
      for (int j = 0; j < n; ++j) {
        const double w = std::exp(j * std::log(std::abs(mu) / a) - log_gamma(j + 1.0)) *
                         inverse_moment(p - r + j, la, mk, s, t);
        bracket -= (mu < 0.0 && j % 2 == 1) ? -w : w;
        bracket_abs += w;
      }
      second += coef * bracket;
      second_abs += std::abs(coef) * bracket_abs;
    }
  }
  const double norm = std::exp(lnorm);
  out.value += norm * second;
  out.abs_terms += norm * second_abs;
  return out;
}

Conditioned hyperbolic_region(int nx, int ny, double f, double h, double g) {
  if (!(g > 0.0)) throw std::domain_error("hyperbolic_region: g must be > 0");
  const double beta = ny * g;
  const double gamma = nx + ny * h;
  const double arg = 2.0 * std::sqrt(beta * gamma);
  const double lnorm = log_density_norm(nx);
  const double lk_base = std::log(2.0) - arg - ny * f;
  Conditioned out;
  for (int qa = 0; qa < ny; ++qa) {
    for (int q = 0; q <= qa; ++q) {
      for (int l = 0; l <= q; ++l) {
        if (f <= 0.0 && qa != q) continue;
        if (h <= 0.0 && q != l) continue;
        const double v = nx + q - 2 * l;
        const double lt = qa * std::log(static_cast<double>(ny)) - log_gamma(qa + 1.0) +
                          std::log(binomial(qa, q)) + std::log(binomial(q, l)) +
                          log_pow(f, qa - q) + log_pow(h, q - l) + l * std::log(g) + lnorm +
                          lk_base + 0.5 * v * std::log(beta / gamma) +
                          std::log(specfun::bessel_k_scaled(v, arg));
        const double term = std::exp(lt);
        out.value += term;
        out.abs_terms += term;
      }
    }
  }
  return out;
}

}  // namespace swipt::closed
