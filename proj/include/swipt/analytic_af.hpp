#pragma once

#include <string>
#include <vector>

#include "swipt/params.hpp"
#include "swipt/probability.hpp"

namespace swipt {

/// Component success probabilities of the amplify-and-forward link under the
/// noise-free amplification gain, and the outages composed from them.
struct AfOutageBreakdown {
  Probability p_bc_pu1;    // PU1 decodes the amplified PU2 signal
  Probability p_bc_pu2;    // PU2 decodes the amplified PU1 signal
  Probability p_spu;       // SU2 decodes the PU signals first
  Probability p_su_given;  // SU2 then decodes its own signal
  double pu_outage = 1.0;
  double su_outage = 1.0;

  std::vector<std::string> flags() const;
};

Probability prob_bc_pu_af(const SystemParams& p, int side);
Probability prob_su2_af(const SystemParams& p);
Probability prob_spu_af(const SystemParams& p);

/// Throws ComponentError naming the failing component.
AfOutageBreakdown af_outage(const SystemParams& p);

}  // namespace swipt
