#pragma once

#include <cstdint>
#include <string_view>

#include "swipt/params.hpp"

namespace swipt {

enum class RelayMode { df, af };

/// Per-antenna fading variance convention.
enum class Normalization {
  analysis,       // channel power sums are Gamma(N, 1/N): unit total mean
  per_antenna,  // every antenna has unit variance: Gamma(N, 1)
};

/// Amplification gain of the AF relay.
enum class XiMode {
  approx,  // receiver noise dropped from the normaliser, as in the closed forms
  exact,
};

/// How the factors of an outage event are sampled.
enum class Coupling {
  factorized,  // each factor of the success product gets its own channel draw
  joint,       // one channel draw decides every factor of a sample
};

std::string_view to_string(RelayMode m);
std::string_view to_string(Normalization m);
std::string_view to_string(XiMode m);
std::string_view to_string(Coupling m);
RelayMode parse_relay_mode(std::string_view s);
Normalization parse_normalization(std::string_view s);
XiMode parse_xi_mode(std::string_view s);
Coupling parse_coupling(std::string_view s);

/// Counter-based generator: the k-th output of stream (seed, index) is a pure
/// function of (seed, index, k), so samples can be drawn in any order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next_u64();
  /// Uniform on (0, 1].
  double uniform();
  /// Gamma(shape, scale) for integer shape, as a sum of exponentials.
  double gamma_int(int shape, double scale);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct ChannelSample {
  double x1 = 0.0;  // PU1 -> SU1 power sum
  double y1 = 0.0;  // PU2 -> SU1 power sum
  double x2 = 0.0;  // PU1 -> SU2 power sum
  double y2 = 0.0;  // PU2 -> SU2 power sum
  double z = 0.0;   // SU1 -> SU2 power gain
  double xi2_exact = 0.0;   // squared AF gain with receiver noise
  double xi2_approx = 0.0;  // squared AF gain without it
};

ChannelSample sample_channels(const SystemParams& p, SampleStream& rng,
                              Normalization norm = Normalization::analysis);

/// Success indicators of each DF factor for one channel draw.
struct DfEvents {
  bool q1 = false;
  bool q2 = false;
  bool bc_pu1 = false;
  bool bc_pu2 = false;
  bool bc_su2 = false;
};

/// Success indicators of each AF factor for one channel draw.
struct AfEvents {
  bool bc_pu1 = false;
  bool bc_pu2 = false;
  bool spu = false;  // SU2 decodes the PU signal
  bool su2 = false;  // SU2 decodes its own signal
};

DfEvents df_sample_events(const SystemParams& p, const ChannelSample& s);
AfEvents af_sample_events(const SystemParams& p, const ChannelSample& s, XiMode xi);

struct SampleOutcome {
  bool pu_fail = true;
  bool su_fail = true;
};

/// Joint outcome of a single realization.
SampleOutcome df_sample_outcome(const SystemParams& p, const ChannelSample& s);
SampleOutcome af_sample_outcome(const SystemParams& p, const ChannelSample& s, XiMode xi);

struct McEstimate {
  double p_hat = 0.0;
  double std_error = 0.0;  // sqrt(p_hat (1 - p_hat) / n)
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  int workers = 0;  // 0: hardware concurrency
  Coupling coupling = Coupling::factorized;
  Normalization normalization = Normalization::analysis;
  XiMode xi_mode = XiMode::approx;
};

struct McOutage {
  McEstimate pu;
  McEstimate su;
};

/// Fraction of failed samples out of n. Output depends only on
/// (p, mode, n, seed, coupling, normalization, xi_mode), never on workers.
McOutage estimate_outage(const SystemParams& p, RelayMode mode, std::uint64_t n,
                         std::uint64_t seed, const McOptions& opts = {});

}  // namespace swipt
