#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "swipt/analytic_af.hpp"
#include "swipt/analytic_df.hpp"
#include "swipt/config.hpp"
#include "swipt/metrics.hpp"
#include "swipt/oracle.hpp"
#include "swipt/simulate.hpp"
#include "swipt/sweep.hpp"
#include "swipt/validate.hpp"

using namespace swipt;

namespace {

struct Common {
  std::string config;
  std::vector<std::string> sets;
  std::string mode = "both";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string coupling = "factorized";
  std::string normalization = "analysis";
  std::string xi = "approx";
};

Settings gather(const Common& c) {
  Settings s;
  if (!c.config.empty()) s = read_settings_file(c.config);
  for (const auto& kv : c.sets) {
    auto [k, v] = parse_assignment(kv);
    s.set(std::move(k), std::move(v));
  }
  return s;
}

SystemParams base_params(const Settings& s) {
  SystemParams p = reference_params(2, 1);
  apply_settings(p, s);
  p.validate_limits();
  return p;
}

std::vector<RelayMode> modes(const std::string& m) {
  if (m == "both") return {RelayMode::df, RelayMode::af};
  return {parse_relay_mode(m)};
}

McOptions mc_options(const Common& c) {
  McOptions o;
  o.workers = c.workers;
  o.coupling = parse_coupling(c.coupling);
  o.normalization = parse_normalization(c.normalization);
  o.xi_mode = parse_xi_mode(c.xi);
  return o;
}

void print_prob(const char* name, const Probability& pr) {
  std::printf("  %-12s %.12f  %s\n", name, pr.value, std::string(to_string(pr.method)).c_str());
}

int cmd_analytic(const Common& c) {
  const SystemParams p = base_params(gather(c));
  for (RelayMode m : modes(c.mode)) {
    if (m == RelayMode::df) {
      const DfOutageBreakdown b = df_outage(p);
      std::printf("DF\n");
      print_prob("q1", b.p_q1);
      print_prob("q2", b.p_q2);
      print_prob("bc_pu1", b.p_bc_pu1);
      print_prob("bc_pu2", b.p_bc_pu2);
      print_prob("bc_su2", b.p_bc_su2);
      const EfficiencyPoint e = efficiency(p, b.pu_outage, b.su_outage);
      std::printf("  pu_outage    %.12f\n  su_outage    %.12f\n  se %.9g  ee %.9g\n",
                  b.pu_outage, b.su_outage, e.se, e.ee);
    } else {
      const AfOutageBreakdown b = af_outage(p);
      std::printf("AF\n");
      print_prob("bc_pu1", b.p_bc_pu1);
      print_prob("bc_pu2", b.p_bc_pu2);
      print_prob("spu", b.p_spu);
      print_prob("su_given", b.p_su_given);
      const EfficiencyPoint e = efficiency(p, b.pu_outage, b.su_outage);
      std::printf("  pu_outage    %.12f\n  su_outage    %.12f\n  se %.9g  ee %.9g\n",
                  b.pu_outage, b.su_outage, e.se, e.ee);
    }
  }
  return 0;
}

int cmd_simulate(const Common& c) {
  const SystemParams p = base_params(gather(c));
  const McOptions o = mc_options(c);
  for (RelayMode m : modes(c.mode)) {
    const McOutage r = estimate_outage(p, m, c.samples, c.seed, o);
    std::printf("%s pu_outage %.9f se %.3g\n%s su_outage %.9f se %.3g\n",
                std::string(to_string(m)).c_str(), r.pu.p_hat, r.pu.std_error,
                std::string(to_string(m)).c_str(), r.su.p_hat, r.su.std_error);
  }
  std::printf("n %llu seed %llu coupling %s normalization %s xi %s\n",
              static_cast<unsigned long long>(c.samples), static_cast<unsigned long long>(c.seed),
              c.coupling.c_str(), c.normalization.c_str(), c.xi.c_str());
  return 0;
}

int cmd_oracle(const Common& c) {
  const SystemParams p = base_params(gather(c));
  const auto suite = oracle::oracle_suite(p);
  for (const auto& [name, v] : suite) {
    std::printf("  %-10s %.12f  err %.2g%s\n", name.c_str(), v.value, v.error,
                v.converged ? "" : "  NOT CONVERGED");
  }
  const auto df = oracle::df_outage(suite);
  const auto af = oracle::af_outage(suite);
  std::printf("DF pu_outage %.12f su_outage %.12f\nAF pu_outage %.12f su_outage %.12f\n",
              df.pu_outage, df.su_outage, af.pu_outage, af.su_outage);
  return df.converged && af.converged ? 0 : 1;
}

int cmd_validate(const Common& c) {
  const SystemParams p = base_params(gather(c));
  const ValidationReport r = validate(p, c.samples, c.seed, mc_options(c));
  write_report(std::cout, r);
  return r.all_pass() ? 0 : 1;
}

struct SweepArgs {
  std::string preset;
  std::string spec;
  std::string out;
  std::string svg;
  std::string plot = "outage";
  std::string methods;
  int threads = 0;
};

int cmd_sweep(const Common& c, const SweepArgs& a, const CLI::App& app) {
  Settings s = gather(c);
  SweepSpec spec;
  if (!a.preset.empty()) spec = preset(a.preset);
  if (!a.spec.empty()) {
    Settings file = read_settings_file(a.spec);
    file.merge(s);
    s = file;
  }
  apply_sweep_settings(spec, s);
  if (app.count("--samples")) spec.mc_samples = c.samples;
  if (app.count("--seed")) spec.seed = c.seed;
  if (app.count("--workers")) spec.mc_options.workers = c.workers;
  if (app.count("--coupling")) spec.mc_options.coupling = parse_coupling(c.coupling);
  if (app.count("--normalization")) {
    spec.mc_options.normalization = parse_normalization(c.normalization);
  }
  if (app.count("--xi")) spec.mc_options.xi_mode = parse_xi_mode(c.xi);
  if (app.count("--mode") && c.mode != "both") {
    spec.df = parse_relay_mode(c.mode) == RelayMode::df;
    spec.af = !spec.df;
  }
  if (!a.methods.empty()) {
    Settings m;
    m.set("methods", a.methods);
    apply_sweep_settings(spec, m);
  }
  const SystemParams base = base_params(s);
  const auto rows = run_sweep(spec, base, a.threads);
  if (a.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write '" + a.out + "'");
    write_csv(f, rows);
  }
  if (!a.svg.empty()) {
    std::ofstream f(a.svg);
    if (!f) throw std::runtime_error("cannot write '" + a.svg + "'");
    write_svg(f, rows, parse_plot_metric(a.plot));
  }
  int bad = 0;
  for (const auto& r : rows) bad += !r.error.empty();
  if (bad) std::fprintf(stderr, "%d sweep row(s) reported errors\n", bad);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outage, spectrum and energy efficiency of a SWIPT two-way relay link"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--config", c.config, "key=value parameter file")->check(CLI::ExistingFile);
  app.add_option("--set", c.sets, "override one key, e.g. --set alpha=0.5");
  app.add_option("--mode", c.mode, "DF, AF or both")->check(CLI::IsMember({"DF", "AF", "df", "af", "both"}));
  app.add_option("--samples", c.samples, "Monte Carlo samples");
  app.add_option("--seed", c.seed, "Monte Carlo master seed");
  app.add_option("--workers", c.workers, "Monte Carlo threads (0: all cores)");
  app.add_option("--coupling", c.coupling, "factorized or joint")
      ->check(CLI::IsMember({"factorized", "joint"}));
  app.add_option("--normalization", c.normalization, "analysis or per_antenna")
      ->check(CLI::IsMember({"analysis", "per_antenna"}));
  app.add_option("--xi", c.xi, "AF gain: approx or exact")->check(CLI::IsMember({"approx", "exact"}));

  auto* analytic = app.add_subcommand("analytic", "closed-form component and outage probabilities");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage estimates");
  auto* oracle_cmd = app.add_subcommand("oracle", "numerical integration of every component");
  auto* validate_cmd = app.add_subcommand("validate", "three-way agreement report");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  SweepArgs sa;
  auto* group = sweep->add_option_group("source");
  group->add_option("--preset", sa.preset, "alpha_df, alpha_af, rho or power");
  group->add_option("--spec", sa.spec, "sweep spec file (key=value)")->check(CLI::ExistingFile);
  group->require_option(1);
  sweep->add_option("--out", sa.out, "CSV output path (default stdout)");
  sweep->add_option("--svg", sa.svg, "SVG plot output path");
  sweep->add_option("--plot", sa.plot, "outage, se or ee")->check(CLI::IsMember({"outage", "se", "ee"}));
  sweep->add_option("--methods", sa.methods, "comma list of analytic, mc, oracle");
  sweep->add_option("--threads", sa.threads, "rows evaluated concurrently (0: all cores)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analytic) return cmd_analytic(c);
    if (*simulate) return cmd_simulate(c);
    if (*oracle_cmd) return cmd_oracle(c);
    if (*validate_cmd) return cmd_validate(c);
    if (*sweep) return cmd_sweep(c, sa, app);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
