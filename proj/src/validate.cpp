#include "swipt/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "swipt/analytic_af.hpp"
#include "swipt/analytic_df.hpp"
#include "swipt/oracle.hpp"

namespace swipt {

bool ValidationReport::all_pass() const {
  for (const auto& l : lines) {
    if (!l.pass) return false;
  }
  return true;
}

double mc_tolerance(double analytic, const McEstimate& mc) {
  double se = mc.std_error;
  if (se == 0.0 && mc.n > 0) {
    se = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(mc.n));
  }
  return kMcSigmas * se;
}

namespace {

ValidationLine compare(std::string component, std::string reference, double analytic,
                       double value, double tol, std::string note) {
  ValidationLine l;
  l.component = std::move(component);
  l.reference = std::move(reference);
  l.analytic = analytic;
  l.value = value;
  l.deviation = std::abs(analytic - value);
  l.tolerance = tol;
  l.pass = l.deviation <= tol;
  l.note = std::move(note);
  return l;
}

ValidationLine failed(std::string component, std::string reference, std::string why) {
  ValidationLine l;
  l.component = std::move(component);
  l.reference = std::move(reference);
  l.analytic = l.value = l.deviation = std::nan("");
  l.note = std::move(why);
  return l;
}

}  // namespace

ValidationReport validate(const SystemParams& p, std::uint64_t mc_samples, std::uint64_t seed,
                          const McOptions& opts) {
  ValidationReport rep;
  const auto suite = oracle::oracle_suite(p);

  const auto component = [&](const std::string& name, const std::function<Probability()>& f) {
    const oracle::OracleValue& o = suite.at(name);
    try {
      const Probability a = f();
      std::string note(to_string(a.method));
      if (!o.converged) note += "; oracle not converged";
      rep.lines.push_back(compare(name, "oracle", a.value, o.value,
                                  o.converged ? kOracleTolerance : 0.0, note));
    } catch (const std::exception& e) {
      rep.lines.push_back(failed(name, "oracle", e.what()));
    }
  };
  component("q1", [&] { return prob_q1(p); });
  component("q2", [&] { return prob_q2(p); });
  component("bc_pu1", [&] { return prob_bc_pu(p, 1); });
  component("bc_pu2", [&] { return prob_bc_pu(p, 2); });
  component("bc_su2_df", [&] { return prob_bc_su2_df(p); });
  component("af_bc_pu1", [&] { return prob_bc_pu_af(p, 1); });
  component("af_bc_pu2", [&] { return prob_bc_pu_af(p, 2); });
  component("su2_af", [&] { return prob_su2_af(p); });
  component("spu_af", [&] { return prob_spu_af(p); });

  for (RelayMode mode : {RelayMode::df, RelayMode::af}) {
    const std::string tag(to_string(mode));
    const oracle::OracleOutage o =
        mode == RelayMode::df ? oracle::df_outage(suite) : oracle::af_outage(suite);
    const McOutage mc = estimate_outage(p, mode, mc_samples, seed, opts);
    double pu = 0.0, su = 0.0;
    try {
      if (mode == RelayMode::df) {
        const auto b = df_outage(p);
        pu = b.pu_outage;
        su = b.su_outage;
      } else {
        const auto b = af_outage(p);
        pu = b.pu_outage;
        su = b.su_outage;
      }
    } catch (const std::exception& e) {
      for (const char* which : {" pu_outage", " su_outage"}) {
        rep.lines.push_back(failed(tag + which, "oracle", e.what()));
        rep.lines.push_back(failed(tag + which, "mc", e.what()));
      }
      continue;
    }
    // Outages compound component errors; the per-component bound still applies.
    rep.lines.push_back(compare(tag + " pu_outage", "oracle", pu, o.pu_outage, kOracleTolerance, ""));
    rep.lines.push_back(compare(tag + " su_outage", "oracle", su, o.su_outage, kOracleTolerance, ""));
    char note[96];
    std::snprintf(note, sizeof note, "se=%.3g n=%llu", mc.pu.std_error,
                  static_cast<unsigned long long>(mc.pu.n));
    rep.lines.push_back(compare(tag + " pu_outage", "mc", pu, mc.pu.p_hat, mc_tolerance(pu, mc.pu), note));
    std::snprintf(note, sizeof note, "se=%.3g n=%llu", mc.su.std_error,
                  static_cast<unsigned long long>(mc.su.n));
    rep.lines.push_back(compare(tag + " su_outage", "mc", su, mc.su.p_hat, mc_tolerance(su, mc.su), note));
  }
  return rep;
}

void write_report(std::ostream& out, const ValidationReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-16s %-7s %-14s %-14s %-10s %-10s %-5s %s\n", "component",
                "ref", "analytic", "reference", "|delta|", "tol", "ok", "note");
  out << buf;
  for (const auto& l : r.lines) {
    std::snprintf(buf, sizeof buf, "%-16s %-7s %-14.9g %-14.9g %-10.3g %-10.3g %-5s %s\n",
                  l.component.c_str(), l.reference.c_str(), l.analytic, l.value, l.deviation,
                  l.tolerance, l.pass ? "pass" : "FAIL", l.note.c_str());
    out << buf;
  }
  out << (r.all_pass() ? "all rows pass\n" : "some rows FAIL\n");
}

}  // namespace swipt
