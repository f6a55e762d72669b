#pragma once

#include "swipt/params.hpp"

namespace swipt {

struct EfficiencyPoint {
  double se = 0.0;  // spectrum efficiency [bps/Hz]
  double ee = 0.0;  // energy efficiency [bps/Hz/W]
  double pu_outage = 1.0;
  double su_outage = 1.0;
  double total_power = 0.0;  // pp1 + pp2 [W]
};

/// Each PU message is delivered once per two-slot round, the SU message once,
/// so se = (1 - P_pu) r_pu + (1 - P_su) r_su / 2. The relay is harvesting-powered
/// and does not enter the energy denominator.
EfficiencyPoint efficiency(const SystemParams& p, double pu_outage, double su_outage);

}  // namespace swipt
