#include "swipt/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swipt {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid SystemParams: ") + what);
}

void check_common(const SystemParams& p) {
  require(std::isfinite(p.pp1) && p.pp1 > 0.0, "pp1 must be > 0");
  require(std::isfinite(p.pp2) && p.pp2 > 0.0, "pp2 must be > 0");
  require(p.na >= 1, "na must be >= 1");
  require(p.nb >= 1, "nb must be >= 1");
  require(p.m_k >= 1, "m_k must be >= 1");
  require(p.d1 > 0.0 && p.d2 > 0.0 && p.d3 > 0.0 && p.d4 > 0.0 && p.d5 > 0.0 && p.l > 0.0,
          "distances must be > 0");
  require(p.m >= 2.0, "path-loss exponent m must be >= 2");
  require(p.eta > 0.0 && p.eta <= 1.0, "eta must lie in (0, 1]");
  require(p.sigma2 > 0.0, "sigma2 must be > 0");
  require(p.t > 0.0, "t must be > 0");
}

}  // namespace

void SystemParams::validate_limits() const {
  check_common(*this);
  require(rho >= 0.0 && rho < 1.0, "rho must lie in [0, 1)");
  require(alpha >= 0.0 && alpha < 1.0, "alpha must lie in [0, 1)");
  require(r_pu >= 0.0, "r_pu must be >= 0");
  require(r_su >= 0.0, "r_su must be >= 0");
}

void SystemParams::validate() const {
  check_common(*this);
  require(rho > 0.0 && rho < 1.0, "rho must lie in (0, 1)");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(r_pu > 0.0, "r_pu must be > 0");
  require(r_su > 0.0, "r_su must be > 0");
}

double SystemParams::harvested_energy(double x1, double y1) const {
  const double received = pp1 / (na * std::pow(d1, m)) * x1 + pp2 / (nb * std::pow(d2, m)) * y1;
  return eta * rho * received * t / 2.0;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

double db_over_noise_to_watts(double db, double sigma2_watts) {
  return sigma2_watts * std::pow(10.0, db / 10.0);
}

SystemParams& apply_midpoint_geometry(SystemParams& p) {
  p.d1 = p.d2 = p.d4 = p.d5 = p.l / 2.0;
  return p;
}

SystemParams reference_params(int na, int nb) {
  SystemParams p;
  p.pp1 = p.pp2 = dbm_to_watts(-23.0);
  p.sigma2 = dbm_to_watts(-100.0);
  p.na = na;
  p.nb = nb;
  p.l = 20.0;
  p.d3 = 10.0;
  p.m = 2.7;
  p.eta = 0.9;
  p.rho = 0.9;
  p.alpha = 0.81;
  p.r_pu = 0.2;
  p.r_su = 1.0;
  p.m_k = 1;
  p.t = 1.0;
  return apply_midpoint_geometry(p);
}

Thresholds derive_thresholds(const SystemParams& p) {
  Thresholds th;
  th.u1 = std::exp2(2.0 * p.r_pu) - 1.0;
  th.u2 = th.u1;
  th.u3 = std::exp2(4.0 * p.r_pu) - 1.0;
  th.u4 = std::exp2(2.0 * p.r_su) - 1.0;

  const double us_den = p.alpha - th.u1 * (1.0 - p.alpha);
  if (us_den > 0.0) th.us = th.u1 / us_den;

  const DfCoefficients df = derive_df_coeffs(p);
  const double kp_den = df.a1p - th.u1 * df.b1p;
  if (kp_den > 0.0) th.kp = th.u1 / kp_den;
  const double kpp_den = df.a2p - th.u1 * df.b2p;
  if (kpp_den > 0.0) th.kpp = th.u1 / kpp_den;
  return th;
}

DfCoefficients derive_df_coeffs(const SystemParams& p) {
  const double d1m = std::pow(p.d1, p.m);
  const double d2m = std::pow(p.d2, p.m);
  const double d4m = std::pow(p.d4, p.m);
  const double d5m = std::pow(p.d5, p.m);
  const double d3m = std::pow(p.d3, p.m);

  DfCoefficients c;
  c.a1_cap = (1.0 - p.rho) * p.pp1 / (p.na * d1m * p.sigma2);
  c.a2_cap = (1.0 - p.rho) * p.pp2 / (p.nb * d2m * p.sigma2);
  // Second-hop receiver SU2 sees the PUs over D4 / D5 with no splitting.
  c.b1_cap = p.pp1 / (p.na * d4m * p.sigma2);
  c.b2_cap = p.pp2 / (p.nb * d5m * p.sigma2);
  c.a1 = p.eta * p.rho * p.pp1 / (p.na * d1m * p.sigma2);
  c.b1 = p.eta * p.rho * p.pp2 / (p.nb * d2m * p.sigma2);
  c.a1p = p.alpha / d1m;
  c.a2p = p.alpha / d2m;
  c.b1p = (1.0 - p.alpha) / d1m;
  c.b2p = (1.0 - p.alpha) / d2m;
  c.c = (1.0 - p.alpha) / d3m;
  return c;
}

AfCoefficients derive_af_coeffs(const SystemParams& p) {
  const double d1m = std::pow(p.d1, p.m);
  const double d2m = std::pow(p.d2, p.m);
  const double d3m = std::pow(p.d3, p.m);
  const double er = p.eta * p.rho;
  const double s2 = p.sigma2;

  AfCoefficients c;
  c.c1 = er * p.pp2 * p.alpha / (p.nb * s2 * d1m * d2m);
  c.c2 = er * p.pp1 * p.alpha / (p.na * s2 * d1m * d2m);
  c.h1 = (1.0 - p.alpha) * er * p.pp1 / (p.na * s2 * d1m * d1m);
  c.h2 = (1.0 - p.alpha) * er * p.pp2 / (p.nb * s2 * d2m * d2m);
  c.e1 = (1.0 - p.alpha) * er * p.pp2 / (p.nb * s2 * d1m * d2m);
  c.e2 = (1.0 - p.alpha) * er * p.pp1 / (p.na * s2 * d1m * d2m);
  c.f1 = er * p.alpha / ((1.0 - p.rho) * d1m);
  c.f2 = er * p.alpha / ((1.0 - p.rho) * d2m);

  c.u1c = (1.0 - p.alpha) / (d3m * s2) * er * p.pp1 / (p.na * d1m);
  c.v1c = (1.0 - p.alpha) / (d3m * s2) * er * p.pp2 / (p.nb * d2m);
  c.u2c = p.alpha / (d3m * (1.0 - p.rho)) * er;
  c.u3c = p.alpha * er * p.pp1 / (d3m * d1m * s2 * p.na);
  c.v3c = p.alpha * er * p.pp2 / (d3m * d2m * s2 * p.nb);

  c.s1 = er * p.pp1 / (d3m * s2 * p.na * d1m);
  c.s2 = er * p.pp2 / (d3m * s2 * p.nb * d2m);
  return c;
}

}  // namespace swipt
