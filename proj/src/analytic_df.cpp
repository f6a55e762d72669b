#include "swipt/analytic_df.hpp"

#include "analytic_common.hpp"

namespace swipt {

using detail::resolve;

std::vector<std::string> DfOutageBreakdown::flags() const {
  std::vector<std::string> out;
  const auto note = [&](const char* name, const Probability& pr) {
    if (pr.method != Method::closed_form) out.push_back(std::string(name) + ":" + std::string(to_string(pr.method)));
  };
  note("q1", p_q1);
  note("q2", p_q2);
  note("bc_pu1", p_bc_pu1);
  note("bc_pu2", p_bc_pu2);
  note("bc_su2_df", p_bc_su2);
  return out;
}

Probability prob_q1(const SystemParams& p) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  return resolve(
      "q1",
      [&] { return closed::linear_rate_region(p.na, p.nb, c.a1_cap, c.a2_cap, th.u1, th.u2, th.u3); },
      [&] { return oracle::q1(p); });
}

Probability prob_q2(const SystemParams& p) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  return resolve(
      "q2",
      [&] { return closed::linear_rate_region(p.na, p.nb, c.b1_cap, c.b2_cap, th.u1, th.u2, th.u3); },
      [&] { return oracle::q2(p); });
}

Probability prob_bc_pu(const SystemParams& p, int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("prob_bc_pu: side must be 1 or 2");
  const std::string name = side == 1 ? "bc_pu1" : "bc_pu2";
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  const std::optional<double>& k = side == 1 ? th.kp : th.kpp;
  // Without k the relay's SINR ceiling alpha/(1-alpha) never reaches u1.
  if (!k) return {0.0, Method::gated};
  return resolve(
      name,
      [&] {
        return side == 1 ? closed::quadratic_region(p.na, p.nb, c.a1, c.b1, *k)
                         : closed::quadratic_region(p.nb, p.na, c.b1, c.a1, *k);
      },
      [&] { return oracle::bc_pu_df(p, side); });
}

Probability prob_bc_su2_df(const SystemParams& p) {
  const Thresholds th = derive_thresholds(p);
  const DfCoefficients c = derive_df_coeffs(p);
  return resolve(
      "bc_su2_df",
      [&] {
        return closed::inverse_gain_region(p.na, p.nb, p.m_k, c.c * c.a1, c.c * c.b1, 0.0, th.u4);
      },
      [&] { return oracle::bc_su2_df(p); });
}

DfOutageBreakdown df_outage(const SystemParams& p) {
  DfOutageBreakdown b;
  b.p_q1 = detail::named("q1", [&] { return prob_q1(p); });
  b.p_q2 = detail::named("q2", [&] { return prob_q2(p); });
  b.p_bc_pu1 = detail::named("bc_pu1", [&] { return prob_bc_pu(p, 1); });
  b.p_bc_pu2 = detail::named("bc_pu2", [&] { return prob_bc_pu(p, 2); });
  b.p_bc_su2 = detail::named("bc_su2_df", [&] { return prob_bc_su2_df(p); });
  b.pu_outage = 1.0 - b.p_q1.value * b.p_bc_pu1.value * b.p_bc_pu2.value;
  b.su_outage = 1.0 - b.p_q1.value * b.p_q2.value * b.p_bc_su2.value;
  return b;
}

}  // namespace swipt
