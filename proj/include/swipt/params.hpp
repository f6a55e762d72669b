#pragma once

#include <optional>

namespace swipt {

/// Physical and system constants of the two-way relay spectrum-sharing link.
///
/// All powers are linear (watts). dBm / dB inputs are converted at the
/// boundary with `dbm_to_watts` and friends; nothing below this struct knows
/// about logarithmic units.
struct SystemParams {
  double pp1 = 0.0;     // PU1 transmit power [W]
  double pp2 = 0.0;     // PU2 transmit power [W]
  int na = 1;           // antennas at PU1
  int nb = 1;           // antennas at PU2
  double d1 = 10.0;     // PU1 - SU1 [m]
  double d2 = 10.0;     // PU2 - SU1 [m]
  double d3 = 10.0;     // SU1 - SU2 [m]
  double d4 = 10.0;     // PU1 - SU2 [m]
  double d5 = 10.0;     // PU2 - SU2 [m]
  double l = 20.0;      // PU1 - PU2 [m]
  double m = 2.7;       // path-loss exponent
  double eta = 0.9;     // energy-conversion efficiency
  double rho = 0.9;     // power-splitting factor (harvested fraction)
  double alpha = 0.81;  // power-sharing factor (PU relaying fraction)
  double sigma2 = 1e-13;  // noise power [W]
  double r_pu = 0.2;    // PU target rate [bps/Hz]
  double r_su = 1.0;    // SU target rate [bps/Hz]
  int m_k = 1;          // Nakagami shape of SU1 -> SU2
  double t = 1.0;       // block duration [s]; cancels in every rate

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
  /// As validate(), but also admits the closed limits rho = 0, alpha = 0 and
  /// zero target rates, where every formula still has a well-defined value.
  void validate_limits() const;

  /// Harvested energy over the MAC half-block for given channel power sums.
  double harvested_energy(double x1, double y1) const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
/// Power given as dB relative to the noise power.
double db_over_noise_to_watts(double db, double sigma2_watts);

/// Sets D1 = D2 = D4 = D5 = L/2.
SystemParams& apply_midpoint_geometry(SystemParams& p);

/// The reference operating point: -23 dBm PUs, -100 dBm noise, L = 20 m,
/// D3 = 10 m, m = 2.7, eta = rho = 0.9, alpha = 0.81, R_PU = 0.2, R_SU = 1.
SystemParams reference_params(int na = 2, int nb = 1);

struct Thresholds {
  double u1 = 0.0;
  double u2 = 0.0;
  double u3 = 0.0;
  double u4 = 0.0;
  std::optional<double> us;   // needs u1 < alpha / (1 - alpha)
  std::optional<double> kp;   // needs a1' - u1 b1' > 0
  std::optional<double> kpp;  // needs a2' - u1 b2' > 0
};

struct DfCoefficients {
  double a1_cap = 0.0;
  double a2_cap = 0.0;
  double b1_cap = 0.0;
  double b2_cap = 0.0;
  double a1 = 0.0;
  double b1 = 0.0;
  double a1p = 0.0;
  double a2p = 0.0;
  double b1p = 0.0;
  double b2p = 0.0;
  double c = 0.0;
};

struct AfCoefficients {
  double c1 = 0.0, c2 = 0.0;
  double h1 = 0.0, h2 = 0.0;
  double e1 = 0.0, e2 = 0.0;
  double f1 = 0.0, f2 = 0.0;
  double u1c = 0.0, v1c = 0.0, u2c = 0.0, u3c = 0.0, v3c = 0.0;
  double s1 = 0.0, s2 = 0.0;
};

Thresholds derive_thresholds(const SystemParams& p);
DfCoefficients derive_df_coeffs(const SystemParams& p);
AfCoefficients derive_af_coeffs(const SystemParams& p);

}  // namespace swipt
