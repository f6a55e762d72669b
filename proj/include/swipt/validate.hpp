#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swipt/params.hpp"
#include "swipt/simulate.hpp"

namespace swipt {

/// Absolute agreement required between a closed form and its oracle integral.
inline constexpr double kOracleTolerance = 1e-5;
/// Agreement required between an analytic outage and an MC estimate, in
/// standard errors.
inline constexpr double kMcSigmas = 4.0;

struct ValidationLine {
  std::string component;  // e.g. "q1" or "DF pu_outage"
  std::string reference;  // "oracle" or "mc"
  double analytic = 0.0;
  double value = 0.0;      // reference value
  double deviation = 0.0;  // |analytic - value|
  double tolerance = 0.0;  // absolute tolerance applied
  bool pass = false;
  std::string note;  // evaluation method or error text
};

struct ValidationReport {
  std::vector<ValidationLine> lines;
  bool all_pass() const;
};

/// Three-way agreement table for one parameter set: each success component
/// against its oracle integral, and both outages of both modes against the
/// oracle and against Monte Carlo.
ValidationReport validate(const SystemParams& p, std::uint64_t mc_samples, std::uint64_t seed,
                          const McOptions& opts = {});

/// MC tolerance in probability units: kMcSigmas standard errors of the
/// estimate, or of the analytic value when the estimate has zero variance.
double mc_tolerance(double analytic, const McEstimate& mc);

void write_report(std::ostream& out, const ValidationReport& r);

}  // namespace swipt
