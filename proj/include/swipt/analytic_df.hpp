#pragma once

#include <string>
#include <vector>

#include "swipt/params.hpp"
#include "swipt/probability.hpp"

namespace swipt {

/// Component success probabilities of the decode-and-forward link and the
/// outages composed from them.
struct DfOutageBreakdown {
  Probability p_q1;      // both PU messages decoded at SU1 (MAC phase)
  Probability p_q2;      // both PU messages decoded at SU2 (MAC phase)
  Probability p_bc_pu1;  // PU1 decodes the relayed message
  Probability p_bc_pu2;  // PU2 decodes the relayed message
  Probability p_bc_su2;  // SU2 decodes its own message
  double pu_outage = 1.0;
  double su_outage = 1.0;

  /// Names of components that were not evaluated in closed form, tagged with
  /// their method, e.g. "bc_su2_df:oracle-fallback".
  std::vector<std::string> flags() const;
};

Probability prob_q1(const SystemParams& p);
Probability prob_q2(const SystemParams& p);
/// side 1 is PU1 (threshold k'), side 2 is PU2 (threshold k'').
Probability prob_bc_pu(const SystemParams& p, int side);
Probability prob_bc_su2_df(const SystemParams& p);

/// Throws ComponentError naming the failing component.
DfOutageBreakdown df_outage(const SystemParams& p);

}  // namespace swipt
