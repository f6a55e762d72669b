#include "swipt/metrics.hpp"

#include <stdexcept>

namespace swipt {

EfficiencyPoint efficiency(const SystemParams& p, double pu_outage, double su_outage) {
  if (!(pu_outage >= 0.0 && pu_outage <= 1.0 && su_outage >= 0.0 && su_outage <= 1.0)) {
    throw std::invalid_argument("efficiency: outages must lie in [0, 1]");
  }
  EfficiencyPoint e;
  e.pu_outage = pu_outage;
  e.su_outage = su_outage;
  e.total_power = p.pp1 + p.pp2;
  e.se = 2.0 * (1.0 - pu_outage) * p.r_pu * 0.5 + (1.0 - su_outage) * p.r_su * 0.5;
  e.ee = e.se / e.total_power;
  return e;
}

}  // namespace swipt
