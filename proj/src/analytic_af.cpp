#include "swipt/analytic_af.hpp"

#include "analytic_common.hpp"

namespace swipt {

using detail::resolve;

std::vector<std::string> AfOutageBreakdown::flags() const {
  std::vector<std::string> out;
  const auto note = [&](const char* name, const Probability& pr) {
    if (pr.method != Method::closed_form) out.push_back(std::string(name) + ":" + std::string(to_string(pr.method)));
  };
  note("af_bc_pu1", p_bc_pu1);
  note("af_bc_pu2", p_bc_pu2);
  note("spu_af", p_spu);
  note("su2_af", p_su_given);
  return out;
}

Probability prob_bc_pu_af(const SystemParams& p, int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("prob_bc_pu_af: side must be 1 or 2");
  const std::string name = side == 1 ? "af_bc_pu1" : "af_bc_pu2";
  const Thresholds th = derive_thresholds(p);
  const AfCoefficients c = derive_af_coeffs(p);
  const double u1 = th.u1;
  const double den = side == 1 ? c.c1 - c.e1 * u1 : c.c2 - c.e2 * u1;
  if (u1 <= 0.0) return {1.0, Method::gated};
  if (den <= 0.0) return {0.0, Method::gated};
  const double f = (side == 1 ? c.f1 : c.f2) * u1 / den;
  const double h = (side == 1 ? c.h1 : c.h2) * u1 / den;
  const double g = u1 / den;
  const int nx = side == 1 ? p.na : p.nb;
  const int ny = side == 1 ? p.nb : p.na;
  return resolve(
      name, [&] { return closed::hyperbolic_region(nx, ny, f, h, g); },
      [&] { return oracle::bc_pu_af(p, side); });
}

Probability prob_su2_af(const SystemParams& p) {
  const Thresholds th = derive_thresholds(p);
  const AfCoefficients c = derive_af_coeffs(p);
  return resolve(
      "su2_af",
      [&] {
        return closed::inverse_gain_region(p.na, p.nb, p.m_k, c.u1c, c.v1c, th.u4 * c.u2c, th.u4);
      },
      [&] { return oracle::su2_af(p); });
}

Probability prob_spu_af(const SystemParams& p) {
  const Thresholds th = derive_thresholds(p);
  const AfCoefficients c = derive_af_coeffs(p);
  if (!th.us) return {0.0, Method::gated};
  const double us = *th.us;
  return resolve(
      "spu_af",
      [&] { return closed::inverse_gain_region(p.na, p.nb, p.m_k, c.s1, c.s2, us * c.u2c, us); },
      [&] { return oracle::spu_af(p); });
}

AfOutageBreakdown af_outage(const SystemParams& p) {
  AfOutageBreakdown b;
  b.p_bc_pu1 = detail::named("af_bc_pu1", [&] { return prob_bc_pu_af(p, 1); });
  b.p_bc_pu2 = detail::named("af_bc_pu2", [&] { return prob_bc_pu_af(p, 2); });
  b.p_spu = detail::named("spu_af", [&] { return prob_spu_af(p); });
  b.p_su_given = detail::named("su2_af", [&] { return prob_su2_af(p); });
  b.pu_outage = 1.0 - b.p_bc_pu1.value * b.p_bc_pu2.value;
  b.su_outage = 1.0 - b.p_su_given.value * b.p_spu.value;
  return b;
}

}  // namespace swipt
