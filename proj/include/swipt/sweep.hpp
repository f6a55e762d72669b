#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swipt/config.hpp"
#include "swipt/params.hpp"
#include "swipt/simulate.hpp"

namespace swipt {

enum class SweepVariable {
  alpha,
  rho,
  power_db,        // both PU powers, dBm
  power_db_noise,  // both PU powers, dB over sigma2
  na,
};

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view s);

struct SweepSpec {
  SweepVariable variable = SweepVariable::alpha;
  std::vector<double> grid;
  bool df = true;
  bool af = true;
  bool analytic = true;
  bool mc = false;
  bool oracle = false;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t seed = 1;
  McOptions mc_options;

  /// Throws std::invalid_argument if the grid is empty or unsorted or no
  /// mode / method is selected.
  void validate() const;
};

/// "a:step:b" (inclusive, rounded to the step) or a comma list.
std::vector<double> parse_grid(const std::string& text);

/// Reads the sweep keys of `s` over the defaults already in `spec`.
void apply_sweep_settings(SweepSpec& spec, const Settings& s);

/// Names of the built-in sweeps: alpha_df, alpha_af, rho, power.
const std::vector<std::string>& preset_names();
/// Throws std::invalid_argument for an unknown name.
SweepSpec preset(const std::string& name);

/// Missing values are NaN.
struct SweepRow {
  std::string variable;
  double value = 0.0;
  std::string mode;
  double analytic_pu = 0.0, analytic_su = 0.0;
  double mc_pu = 0.0, mc_pu_se = 0.0, mc_su = 0.0, mc_su_se = 0.0;
  double oracle_pu = 0.0, oracle_su = 0.0;
  double se = 0.0, ee = 0.0;
  std::string flags;  // ';'-separated evaluation notes
  std::string error;  // empty unless a method failed on this row
};

/// SystemParams at one grid value.
SystemParams params_at(const SystemParams& base, SweepVariable v, double value);

/// One row per grid value per mode, ordered by grid then DF before AF. Rows
/// are evaluated in parallel; content does not depend on the thread count.
/// se / ee come from the analytic outages when available, else MC, else oracle.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemParams& base,
                                int threads = 0);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Throws std::invalid_argument on a malformed file.
std::vector<SweepRow> read_csv(std::istream& in);
const std::vector<std::string>& csv_header();

enum class PlotMetric { outage, se, ee };
PlotMetric parse_plot_metric(std::string_view s);

/// Static SVG line plot of `metric` against the swept variable, one series
/// per mode / method (and per user for outages).
void write_svg(std::ostream& out, const std::vector<SweepRow>& rows, PlotMetric metric);

}  // namespace swipt
