#pragma once

#include <map>
#include <string>

#include "swipt/params.hpp"
#include "swipt/quadrature.hpp"

namespace swipt::oracle {

/// One success probability obtained by integrating its defining region.
struct OracleValue {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

quad::QuadratureControl default_control();

/// P{A1 X >= u1, A2 Y >= u2, A1 X + A2 Y >= u3} with unit-mean Gamma(na), Gamma(nb).
OracleValue linear_rate_region(int na, int nb, double a1, double a2, double u1, double u2,
                               double u3, const quad::QuadratureControl& ctrl);

/// P{X (a X + b Y) >= k}, X ~ Gamma(na), Y ~ Gamma(nb), unit mean.
OracleValue quadratic_region(int na, int nb, double a, double b, double k,
                             const quad::QuadratureControl& ctrl);

/// P{a X + b Y >= s + t / Z} with Z ~ Gamma(mk), all unit mean.
OracleValue inverse_gain_region(int na, int nb, int mk, double a, double b, double s, double t,
                                const quad::QuadratureControl& ctrl);

/// P{Y >= f + h X + g / X}, X ~ Gamma(nx), Y ~ Gamma(ny), unit mean.
OracleValue hyperbolic_region(int nx, int ny, double f, double h, double g,
                              const quad::QuadratureControl& ctrl);

OracleValue q1(const SystemParams& p, const quad::QuadratureControl& ctrl = default_control());
OracleValue q2(const SystemParams& p, const quad::QuadratureControl& ctrl = default_control());
OracleValue bc_pu_df(const SystemParams& p, int side,
                     const quad::QuadratureControl& ctrl = default_control());
OracleValue bc_su2_df(const SystemParams& p,
                      const quad::QuadratureControl& ctrl = default_control());
OracleValue bc_pu_af(const SystemParams& p, int side,
                     const quad::QuadratureControl& ctrl = default_control());
OracleValue su2_af(const SystemParams& p, const quad::QuadratureControl& ctrl = default_control());
OracleValue spu_af(const SystemParams& p, const quad::QuadratureControl& ctrl = default_control());

/// All nine success components keyed by name: q1, q2, bc_pu1, bc_pu2,
/// bc_su2_df, af_bc_pu1, af_bc_pu2, su2_af, spu_af. Entries run in parallel.
std::map<std::string, OracleValue> oracle_suite(
    const SystemParams& p, const quad::QuadratureControl& ctrl = default_control());

struct OracleOutage {
  double pu_outage = 1.0;
  double su_outage = 1.0;
  bool converged = true;
};

OracleOutage df_outage(const std::map<std::string, OracleValue>& suite);
OracleOutage af_outage(const std::map<std::string, OracleValue>& suite);

}  // namespace swipt::oracle
