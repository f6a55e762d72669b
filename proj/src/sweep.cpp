#include "swipt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swipt/analytic_af.hpp"
#include "swipt/analytic_df.hpp"
#include "swipt/metrics.hpp"
#include "swipt/oracle.hpp"

namespace swipt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

double snap(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::alpha:
      return "alpha";
    case SweepVariable::rho:
      return "rho";
    case SweepVariable::power_db:
      return "power_db";
    case SweepVariable::power_db_noise:
      return "power_db_noise";
    case SweepVariable::na:
      return "na";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view s) {
  for (SweepVariable v : {SweepVariable::alpha, SweepVariable::rho, SweepVariable::power_db,
                          SweepVariable::power_db_noise, SweepVariable::na}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown sweep variable '" + std::string(s) + "'");
}

void SweepSpec::validate() const {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("sweep grid must be sorted");
  }
  if (!df && !af) throw std::invalid_argument("sweep selects no relay mode");
  if (!analytic && !mc && !oracle) throw std::invalid_argument("sweep selects no method");
  if (mc && mc_samples < 1) throw std::invalid_argument("mc_samples must be >= 1");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> g;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid range must be start:step:stop");
    const double a = parse_double("grid", parts[0]);
    const double step = parse_double("grid", parts[1]);
    const double b = parse_double("grid", parts[2]);
    if (!(step > 0.0) || b < a) throw std::invalid_argument("grid range needs step > 0, stop >= start");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) g.push_back(snap(a + i * step));
    return g;
  }
  for (const auto& item : split(text, ',')) {
    if (!item.empty()) g.push_back(parse_double("grid", item));
  }
  return g;
}

void apply_sweep_settings(SweepSpec& spec, const Settings& s) {
  if (const auto* v = s.find("variable")) spec.variable = parse_sweep_variable(*v);
  if (const auto* v = s.find("grid")) spec.grid = parse_grid(*v);
  if (const auto* v = s.find("modes")) {
    spec.df = spec.af = false;
    for (const auto& m : split(*v, ',')) {
      if (parse_relay_mode(m) == RelayMode::df) spec.df = true;
      else spec.af = true;
    }
  }
  if (const auto* v = s.find("methods")) {
    spec.analytic = spec.mc = spec.oracle = false;
    for (const auto& m : split(*v, ',')) {
      if (m == "analytic") spec.analytic = true;
      else if (m == "mc") spec.mc = true;
      else if (m == "oracle") spec.oracle = true;
      else throw std::invalid_argument("unknown method '" + m + "'");
    }
  }
  if (const auto* v = s.find("mc_samples")) {
    const long long n = parse_int("mc_samples", *v);
    if (n < 1) throw std::invalid_argument("mc_samples must be >= 1");
    spec.mc_samples = static_cast<std::uint64_t>(n);
  }
  if (const auto* v = s.find("seed")) spec.seed = static_cast<std::uint64_t>(parse_int("seed", *v));
  if (const auto* v = s.find("coupling")) spec.mc_options.coupling = parse_coupling(*v);
  if (const auto* v = s.find("normalization")) {
    spec.mc_options.normalization = parse_normalization(*v);
  }
  if (const auto* v = s.find("xi_mode")) spec.mc_options.xi_mode = parse_xi_mode(*v);
  if (const auto* v = s.find("workers")) {
    spec.mc_options.workers = static_cast<int>(parse_int("workers", *v));
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"alpha_df", "alpha_af", "rho", "power"};
  return names;
}

SweepSpec preset(const std::string& name) {
  SweepSpec s;
  if (name == "alpha_df" || name == "alpha_af") {
    s.variable = SweepVariable::alpha;
    s.grid = parse_grid("0.05:0.02:0.95");
    s.df = name == "alpha_df";
    s.af = name == "alpha_af";
    s.analytic = true;
    s.mc = true;
  } else if (name == "rho") {
    s.variable = SweepVariable::rho;
    s.grid = parse_grid("0.05:0.05:0.95");
    s.analytic = true;
    s.mc = true;
  } else if (name == "power") {
    s.variable = SweepVariable::power_db;
    s.grid = parse_grid("-50:5:-15");
    s.analytic = true;
    s.mc = true;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return s;
}

SystemParams params_at(const SystemParams& base, SweepVariable v, double value) {
  SystemParams p = base;
  switch (v) {
    case SweepVariable::alpha:
      p.alpha = value;
      break;
    case SweepVariable::rho:
      p.rho = value;
      break;
    case SweepVariable::power_db:
      p.pp1 = p.pp2 = dbm_to_watts(value);
      break;
    case SweepVariable::power_db_noise:
      p.pp1 = p.pp2 = db_over_noise_to_watts(value, p.sigma2);
      break;
    case SweepVariable::na:
      if (value != std::floor(value)) throw std::invalid_argument("na grid values must be integers");
      p.na = static_cast<int>(value);
      break;
  }
  return p;
}

namespace {

std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

SweepRow evaluate_row(const SweepSpec& spec, const SystemParams& base, double value,
                      RelayMode mode, int mc_workers) {
  SweepRow r;
  r.variable = std::string(to_string(spec.variable));
  r.value = value;
  r.mode = std::string(to_string(mode));
  r.analytic_pu = r.analytic_su = kNaN;
  r.mc_pu = r.mc_pu_se = r.mc_su = r.mc_su_se = kNaN;
  r.oracle_pu = r.oracle_su = kNaN;
  r.se = r.ee = kNaN;
  std::vector<std::string> flags;
  std::vector<std::string> errors;

  SystemParams p;
  try {
    p = params_at(base, spec.variable, value);
    p.validate();
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }

  if (spec.analytic) {
    try {
      if (mode == RelayMode::df) {
        const DfOutageBreakdown b = df_outage(p);
        r.analytic_pu = b.pu_outage;
        r.analytic_su = b.su_outage;
        for (auto& f : b.flags()) flags.push_back(f);
      } else {
        const AfOutageBreakdown b = af_outage(p);
        r.analytic_pu = b.pu_outage;
        r.analytic_su = b.su_outage;
        for (auto& f : b.flags()) flags.push_back(f);
      }
    } catch (const std::exception& e) {
      errors.push_back(std::string("analytic ") + e.what());
    }
  }
  if (spec.mc) {
    try {
      McOptions o = spec.mc_options;
      o.workers = mc_workers;
      const McOutage m = estimate_outage(p, mode, spec.mc_samples, spec.seed, o);
      r.mc_pu = m.pu.p_hat;
      r.mc_pu_se = m.pu.std_error;
      r.mc_su = m.su.p_hat;
      r.mc_su_se = m.su.std_error;
    } catch (const std::exception& e) {
      errors.push_back(std::string("mc ") + e.what());
    }
  }
  if (spec.oracle) {
    try {
      const auto suite = oracle::oracle_suite(p);
      const oracle::OracleOutage o =
          mode == RelayMode::df ? oracle::df_outage(suite) : oracle::af_outage(suite);
      r.oracle_pu = o.pu_outage;
      r.oracle_su = o.su_outage;
      if (!o.converged) flags.push_back("oracle:not-converged");
    } catch (const std::exception& e) {
      errors.push_back(std::string("oracle ") + e.what());
    }
  }

  double pu = r.analytic_pu;
  double su = r.analytic_su;
  if (std::isnan(pu) || std::isnan(su)) {
    pu = r.mc_pu;
    su = r.mc_su;
  }
  if (std::isnan(pu) || std::isnan(su)) {
    pu = r.oracle_pu;
    su = r.oracle_su;
  }
  if (!std::isnan(pu) && !std::isnan(su)) {
    const EfficiencyPoint e = efficiency(p, pu, su);
    r.se = e.se;
    r.ee = e.ee;
  }
  r.flags = join(flags, ';');
  r.error = join(errors, ';');
  return r;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemParams& base, int threads) {
  spec.validate();
  std::vector<std::pair<double, RelayMode>> jobs;
  for (double v : spec.grid) {
    if (spec.df) jobs.emplace_back(v, RelayMode::df);
    if (spec.af) jobs.emplace_back(v, RelayMode::af);
  }
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned row_threads = threads > 0 ? static_cast<unsigned>(threads) : hw;
  row_threads = std::min<unsigned>(row_threads, static_cast<unsigned>(jobs.size()));
  const int mc_workers = spec.mc_options.workers > 0
                             ? spec.mc_options.workers
                             : static_cast<int>(std::max(1u, hw / row_threads));

  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = evaluate_row(spec, base, jobs[i].first, jobs[i].second, mc_workers);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < row_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace swipt
