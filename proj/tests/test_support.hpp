#pragma once

#include <random>

#include "swipt/params.hpp"

namespace test_support {

/// A valid parameter set around the reference point with every field varied.
/// Antenna counts differ so the closed forms avoid their degenerate cases.
inline swipt::SystemParams random_params(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> ant(1, 3);
  swipt::SystemParams p = swipt::reference_params();
  p.na = ant(gen);
  do {
    p.nb = ant(gen);
  } while (p.nb == p.na);
  p.m_k = ant(gen);
  p.pp1 = swipt::dbm_to_watts(-35.0 + 20.0 * u(gen));
  p.pp2 = swipt::dbm_to_watts(-35.0 + 20.0 * u(gen));
  p.d1 = 5.0 + 10.0 * u(gen);
  p.d2 = 5.0 + 10.0 * u(gen);
  p.d3 = 5.0 + 10.0 * u(gen);
  p.d4 = 5.0 + 10.0 * u(gen);
  p.d5 = 5.0 + 10.0 * u(gen);
  p.m = 2.0 + 1.5 * u(gen);
  p.eta = 0.5 + 0.5 * u(gen);
  p.rho = 0.1 + 0.85 * u(gen);
  p.alpha = 0.1 + 0.85 * u(gen);
  p.r_pu = 0.05 + 0.45 * u(gen);
  p.r_su = 0.2 + 1.3 * u(gen);
  return p;
}

}  // namespace test_support
