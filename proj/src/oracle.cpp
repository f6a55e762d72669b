#include "swipt/oracle.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <utility>
#include <vector>

namespace swipt::oracle {

namespace {

using quad::Dimension;
using quad::unit_mean_gamma;

constexpr double kInf = std::numeric_limits<double>::infinity();

OracleValue from(const quad::QuadResult& r) { return {r.value, r.error, r.converged}; }

// y >= (w - a x) / b for y, or the degenerate forms when a coefficient vanishes.
std::pair<double, double> linear_tail(double w, double a, double x, double b) {
  const double rest = w - a * x;
  if (rest <= 0.0) return {0.0, kInf};
  if (b <= 0.0) return {kInf, kInf};
  return {rest / b, kInf};
}

// Geometric ladder around a length scale. A transition far narrower than the
// unit interval of the mapped domain is otherwise invisible to the first
// Kronrod panel, which then reports a tiny error for a wrong value.
void add_ladder(std::vector<double>& out, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) return;
  for (double f = 1e-3; f <= 1e3; f *= 10.0) out.push_back(scale * f);
}

// Representative values of a unit-mean Gamma variable, from its lower tail
// out to its far upper tail.
constexpr double kBulk[] = {0.03, 0.1, 0.3, 1.0, 3.0, 10.0};

// Kinks of x -> P{b Y >= w - a x} for unit-mean Y: the edge x = w / a and the
// points where the Y threshold crosses the bulk of its distribution. When
// b << a that transition is a sliver just left of the edge.
std::vector<double> linear_breaks(double w, double a, double b) {
  std::vector<double> out{w / a};
  if (b > 0.0) {
    for (double y : kBulk) {
      const double x = (w - b * y) / a;
      if (x > 0.0) out.push_back(x);
    }
  }
  return out;
}

}  // namespace

quad::QuadratureControl default_control() {
  quad::QuadratureControl c;
  c.abs_tol = 1e-9;
  c.rel_tol = 1e-11;
  c.max_subdivisions = 4000;
  return c;
}

OracleValue linear_rate_region(int na, int nb, double a1, double a2, double u1, double u2,
                               double u3, const quad::QuadratureControl& ctrl) {
  if (u1 <= 0.0 && u2 <= 0.0 && u3 <= 0.0) return {1.0, 0.0, true};
  if ((u1 > 0.0 && a1 <= 0.0) || (u2 > 0.0 && a2 <= 0.0)) return {0.0, 0.0, true};
  if (a1 <= 0.0 && a2 <= 0.0) return {0.0, 0.0, true};
  const double xl = a1 > 0.0 ? u1 / a1 : 0.0;
  const double yl = a2 > 0.0 ? u2 / a2 : 0.0;
  std::vector<Dimension> dims(2);
  dims[0] = {unit_mean_gamma(na), [=](std::span<const double>) { return std::pair{xl, kInf}; },
             [=](std::span<const double>) {
               if (!(a1 > 0.0)) return std::vector<double>{};
               std::vector<double> b = linear_breaks(u3, a1, a2);
               b.push_back((u3 - u2) / a1);
               return b;
             }};
  dims[1] = {unit_mean_gamma(nb),
             [=](std::span<const double> o) {
               const auto [lo, hi] = linear_tail(u3, a1, o[0], a2);
               return std::pair{std::max(lo, yl), hi};
             },
             {}};
  return from(quad::integrate_region(dims, ctrl));
}

OracleValue quadratic_region(int na, int nb, double a, double b, double k,
                             const quad::QuadratureControl& ctrl) {
  if (k <= 0.0) return {1.0, 0.0, true};
  if (a <= 0.0 && b <= 0.0) return {0.0, 0.0, true};
  std::vector<Dimension> dims(2);
  std::vector<double> xb;
  if (a > 0.0) xb.push_back(std::sqrt(k / a));
  if (b > 0.0) add_ladder(xb, k / b);
  // x (a x + b y) = k at representative y.
  for (double y : kBulk) {
    const double x = a > 0.0 ? (std::sqrt(b * b * y * y + 4.0 * a * k) - b * y) / (2.0 * a)
                             : (b > 0.0 ? k / (b * y) : 0.0);
    if (x > 0.0 && std::isfinite(x)) xb.push_back(x);
  }
  dims[0] = {unit_mean_gamma(na), [](std::span<const double>) { return std::pair{0.0, kInf}; },
             [=](std::span<const double>) { return xb; }};
  dims[1] = {unit_mean_gamma(nb),
             [=](std::span<const double> o) {
               const double x = o[0];
               if (x <= 0.0) return std::pair{kInf, kInf};
               return linear_tail(k / x, a, x, b);
             },
             {}};
  return from(quad::integrate_region(dims, ctrl));
}

OracleValue inverse_gain_region(int na, int nb, int mk, double a, double b, double s, double t,
                                const quad::QuadratureControl& ctrl) {
  if (s <= 0.0 && t <= 0.0) return {1.0, 0.0, true};
  if (a <= 0.0 && b <= 0.0) return {0.0, 0.0, true};
  std::vector<Dimension> dims(3);
  // Success turns on where t / z falls to the scale of a X + b Y.
  std::vector<double> zb;
  const double gain = std::max(a, 0.0) + std::max(b, 0.0);
  if (t > 0.0) add_ladder(zb, t / gain);
  dims[0] = {unit_mean_gamma(mk), [](std::span<const double>) { return std::pair{0.0, kInf}; },
             [=](std::span<const double>) { return zb; }};
  dims[1] = {unit_mean_gamma(na), [](std::span<const double>) { return std::pair{0.0, kInf}; },
             [=](std::span<const double> o) {
               const double w = s + t / o[0];
               return a > 0.0 ? linear_breaks(w, a, b) : std::vector<double>{};
             }};
  dims[2] = {unit_mean_gamma(nb),
             [=](std::span<const double> o) {
               if (o[0] <= 0.0) return std::pair{kInf, kInf};
               return linear_tail(s + t / o[0], a, o[1], b);
             },
             {}};
  return from(quad::integrate_region(dims, ctrl));
}

OracleValue hyperbolic_region(int nx, int ny, double f, double h, double g,
                              const quad::QuadratureControl& ctrl) {
  if (f <= 0.0 && h <= 0.0 && g <= 0.0) return {1.0, 0.0, true};
  std::vector<Dimension> dims(2);
  // The bound is smallest near x = sqrt(g / h); seed a break there.
  std::vector<double> xb{(g > 0.0 && h > 0.0) ? std::sqrt(g / h) : 1.0};
  add_ladder(xb, g);
  if (h > 0.0) add_ladder(xb, 1.0 / h);
  // f + h x + g / x = y at representative y.
  for (double y : kBulk) {
    const double r = y - f;
    if (r <= 0.0) continue;
    if (h > 0.0) {
      const double disc = r * r - 4.0 * h * g;
      if (disc < 0.0) continue;
      xb.push_back((r - std::sqrt(disc)) / (2.0 * h));
      xb.push_back((r + std::sqrt(disc)) / (2.0 * h));
    } else if (g > 0.0) {
      xb.push_back(g / r);
    }
  }
  dims[0] = {unit_mean_gamma(nx), [](std::span<const double>) { return std::pair{0.0, kInf}; },
             [=](std::span<const double>) { return xb; }};
  dims[1] = {unit_mean_gamma(ny),
             [=](std::span<const double> o) {
               const double x = o[0];
               if (x <= 0.0 && g > 0.0) return std::pair{kInf, kInf};
               return std::pair{f + h * x + (g > 0.0 ? g / x : 0.0), kInf};
             },
             {}};
  return from(quad::integrate_region(dims, ctrl));
}

OracleValue q1(const SystemParams& p, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  return linear_rate_region(p.na, p.nb, c.a1_cap, c.a2_cap, th.u1, th.u2, th.u3, ctrl);
}

OracleValue q2(const SystemParams& p, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  return linear_rate_region(p.na, p.nb, c.b1_cap, c.b2_cap, th.u1, th.u2, th.u3, ctrl);
}

OracleValue bc_pu_df(const SystemParams& p, int side, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  if (side == 1) {
    // An unset k' means the SINR ceiling alpha/(1-alpha) sits below u1.
    if (!th.kp) return {0.0, 0.0, true};
    return quadratic_region(p.na, p.nb, c.a1, c.b1, *th.kp, ctrl);
  }
  if (!th.kpp) return {0.0, 0.0, true};
  return quadratic_region(p.nb, p.na, c.b1, c.a1, *th.kpp, ctrl);
}

OracleValue bc_su2_df(const SystemParams& p, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  return inverse_gain_region(p.na, p.nb, p.m_k, c.c * c.a1, c.c * c.b1, 0.0, th.u4, ctrl);
}

OracleValue bc_pu_af(const SystemParams& p, int side, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const AfCoefficients c = derive_af_coeffs(p);
  const double u1 = th.u1;
  const double cc = side == 1 ? c.c1 : c.c2;
  const double e = side == 1 ? c.e1 : c.e2;
  const double h = side == 1 ? c.h1 : c.h2;
  const double f = side == 1 ? c.f1 : c.f2;
  const double den = cc - e * u1;
  if (u1 <= 0.0) return {1.0, 0.0, true};
  if (den <= 0.0) return {0.0, 0.0, true};
  const int nx = side == 1 ? p.na : p.nb;
  const int ny = side == 1 ? p.nb : p.na;
  return hyperbolic_region(nx, ny, f * u1 / den, h * u1 / den, u1 / den, ctrl);
}

OracleValue su2_af(const SystemParams& p, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const AfCoefficients c = derive_af_coeffs(p);
  return inverse_gain_region(p.na, p.nb, p.m_k, c.u1c, c.v1c, th.u4 * c.u2c, th.u4, ctrl);
}

OracleValue spu_af(const SystemParams& p, const quad::QuadratureControl& ctrl) {
  const Thresholds th = derive_thresholds(p);
  const AfCoefficients c = derive_af_coeffs(p);
  if (!th.us) return {0.0, 0.0, true};
  const double us = *th.us;
  return inverse_gain_region(p.na, p.nb, p.m_k, c.s1, c.s2, us * c.u2c, us, ctrl);
}

std::map<std::string, OracleValue> oracle_suite(const SystemParams& p,
                                                const quad::QuadratureControl& ctrl) {
  using Job = std::function<OracleValue()>;
  const std::vector<std::pair<std::string, Job>> jobs = {
      {"q1", [&] { return q1(p, ctrl); }},
      {"q2", [&] { return q2(p, ctrl); }},
      {"bc_pu1", [&] { return bc_pu_df(p, 1, ctrl); }},
      {"bc_pu2", [&] { return bc_pu_df(p, 2, ctrl); }},
      {"bc_su2_df", [&] { return bc_su2_df(p, ctrl); }},
      {"af_bc_pu1", [&] { return bc_pu_af(p, 1, ctrl); }},
      {"af_bc_pu2", [&] { return bc_pu_af(p, 2, ctrl); }},
      {"su2_af", [&] { return su2_af(p, ctrl); }},
      {"spu_af", [&] { return spu_af(p, ctrl); }},
  };
  std::vector<std::future<OracleValue>> futures;
  futures.reserve(jobs.size());
  for (const auto& [name, job] : jobs) futures.push_back(std::async(std::launch::async, job));
  std::map<std::string, OracleValue> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) out[jobs[i].first] = futures[i].get();
  return out;
}

OracleOutage df_outage(const std::map<std::string, OracleValue>& s) {
  const auto& q1v = s.at("q1");
  const auto& q2v = s.at("q2");
  const auto& b1 = s.at("bc_pu1");
  const auto& b2 = s.at("bc_pu2");
  const auto& su = s.at("bc_su2_df");
  OracleOutage o;
  o.pu_outage = 1.0 - q1v.value * b1.value * b2.value;
  o.su_outage = 1.0 - q1v.value * q2v.value * su.value;
  o.converged = q1v.converged && q2v.converged && b1.converged && b2.converged && su.converged;
  return o;
}

OracleOutage af_outage(const std::map<std::string, OracleValue>& s) {
  const auto& b1 = s.at("af_bc_pu1");
  const auto& b2 = s.at("af_bc_pu2");
  const auto& su = s.at("su2_af");
  const auto& spu = s.at("spu_af");
  OracleOutage o;
  o.pu_outage = 1.0 - b1.value * b2.value;
  o.su_outage = 1.0 - su.value * spu.value;
  o.converged = b1.converged && b2.converged && su.converged && spu.converged;
  return o;
}

}  // namespace swipt::oracle
