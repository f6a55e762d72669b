#include "swipt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace swipt {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

[[noreturn]] void bad_name(const char* what, std::string_view s) {
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(RelayMode m) { return m == RelayMode::df ? "DF" : "AF"; }
std::string_view to_string(Normalization m) {
  return m == Normalization::analysis ? "analysis" : "per_antenna";
}
std::string_view to_string(XiMode m) { return m == XiMode::approx ? "approx" : "exact"; }
std::string_view to_string(Coupling m) {
  return m == Coupling::factorized ? "factorized" : "joint";
}

RelayMode parse_relay_mode(std::string_view s) {
  if (s == "DF" || s == "df") return RelayMode::df;
  if (s == "AF" || s == "af") return RelayMode::af;
  bad_name("relay mode", s);
}
Normalization parse_normalization(std::string_view s) {
  if (s == "analysis") return Normalization::analysis;
  if (s == "per_antenna" || s == "per-antenna") return Normalization::per_antenna;
  bad_name("normalization", s);
}
XiMode parse_xi_mode(std::string_view s) {
  if (s == "approx") return XiMode::approx;
  if (s == "exact") return XiMode::exact;
  bad_name("xi mode", s);
}
Coupling parse_coupling(std::string_view s) {
  if (s == "factorized") return Coupling::factorized;
  if (s == "joint") return Coupling::joint;
  bad_name("coupling", s);
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index)
    : key_(mix64(seed ^ mix64(index + kGolden))) {}

std::uint64_t SampleStream::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double SampleStream::uniform() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SampleStream::gamma_int(int shape, double scale) {
  double sum = 0.0;
  for (int i = 0; i < shape; ++i) sum -= std::log(uniform());
  return sum * scale;
}

namespace {

struct Powers {
  double d1m, d2m, d3m, d4m, d5m;
  explicit Powers(const SystemParams& p)
      : d1m(std::pow(p.d1, p.m)),
        d2m(std::pow(p.d2, p.m)),
        d3m(std::pow(p.d3, p.m)),
        d4m(std::pow(p.d4, p.m)),
        d5m(std::pow(p.d5, p.m)) {}
};

// Received PU powers at SU1 before splitting.
double p1_rx(const SystemParams& p, const Powers& w, double x1) {
  return p.pp1 / (p.na * w.d1m) * x1;
}
double p2_rx(const SystemParams& p, const Powers& w, double y1) {
  return p.pp2 / (p.nb * w.d2m) * y1;
}

// Both single-user rates and the sum rate clear R_PU; SNRs are linear.
bool mac_decodable(double snr1, double snr2, double r_pu) {
  const auto rate = [](double snr) { return 0.5 * std::log2(1.0 + snr); };
  return rate(snr1) >= r_pu && rate(snr2) >= r_pu && rate(snr1 + snr2) >= 2.0 * r_pu;
}

DfEvents df_events(const SystemParams& p, const Powers& w, const Thresholds& th,
                   const ChannelSample& s) {
  DfEvents e;
  const double p1 = p1_rx(p, w, s.x1);
  const double p2 = p2_rx(p, w, s.y1);
  e.q1 = mac_decodable((1.0 - p.rho) * p1 / p.sigma2, (1.0 - p.rho) * p2 / p.sigma2, p.r_pu);
  const double g1 = p.pp1 / (p.na * w.d4m) * s.x2 / p.sigma2;
  const double g2 = p.pp2 / (p.nb * w.d5m) * s.y2 / p.sigma2;
  e.q2 = mac_decodable(g1, g2, p.r_pu);

  const double ps = p.eta * p.rho * (p1 + p2);
  const double r1 = ps * s.x1 / w.d1m;
  const double r2 = ps * s.y1 / w.d2m;
  const double sinr1 = p.alpha * r1 / ((1.0 - p.alpha) * r1 + p.sigma2);
  const double sinr2 = p.alpha * r2 / ((1.0 - p.alpha) * r2 + p.sigma2);
  e.bc_pu1 = sinr1 >= th.u1;
  e.bc_pu2 = sinr2 >= th.u1;
  const double snr_su = (1.0 - p.alpha) * ps * s.z / (w.d3m * p.sigma2);
  e.bc_su2 = snr_su >= th.u4;
  return e;
}

AfEvents af_events(const SystemParams& p, const Powers& w, const Thresholds& th,
                   const ChannelSample& s, XiMode xi) {
  AfEvents e;
  const double p1 = p1_rx(p, w, s.x1);
  const double p2 = p2_rx(p, w, s.y1);
  const double pr = p1 + p2;
  const double ps = p.eta * p.rho * pr;
  const double xi2 = xi == XiMode::exact ? s.xi2_exact : s.xi2_approx;
  // Amplified PU signal power per unit of the forwarded link gain.
  const double amp = p.alpha * xi2 * ps;
  const double n2 = p.sigma2;

  const double cross = (1.0 - p.rho) / std::pow(p.d1 * p.d2, p.m);
  const double sig1 = amp * cross * p.pp2 / p.nb * s.x1 * s.y1 /
                      ((1.0 - p.alpha) * ps * s.x1 / w.d1m + amp * s.x1 * n2 / w.d1m + n2);
  const double sig2 = amp * cross * p.pp1 / p.na * s.x1 * s.y1 /
                      ((1.0 - p.alpha) * ps * s.y1 / w.d2m + amp * s.y1 * n2 / w.d2m + n2);
  e.bc_pu1 = sig1 >= th.u1;
  e.bc_pu2 = sig2 >= th.u1;

  const double hz = s.z / w.d3m;
  const double spu = amp * (1.0 - p.rho) * pr * hz /
                     ((1.0 - p.alpha) * ps * hz + amp * n2 * hz + n2);
  const double ssu = (1.0 - p.alpha) * ps * hz / (amp * n2 * hz + n2);
  e.spu = spu >= th.u1;
  e.su2 = ssu >= th.u4;
  return e;
}

}  // namespace

ChannelSample sample_channels(const SystemParams& p, SampleStream& rng, Normalization norm) {
  const bool literal = norm == Normalization::per_antenna;
  ChannelSample s;
  s.x1 = rng.gamma_int(p.na, literal ? 1.0 : 1.0 / p.na);
  s.y1 = rng.gamma_int(p.nb, literal ? 1.0 : 1.0 / p.nb);
  s.x2 = rng.gamma_int(p.na, literal ? 1.0 : 1.0 / p.na);
  s.y2 = rng.gamma_int(p.nb, literal ? 1.0 : 1.0 / p.nb);
  s.z = rng.gamma_int(p.m_k, 1.0 / p.m_k);
  const Powers w(p);
  const double rx = (1.0 - p.rho) * (p1_rx(p, w, s.x1) + p2_rx(p, w, s.y1));
  s.xi2_exact = 1.0 / (rx + p.sigma2);
  s.xi2_approx = 1.0 / rx;
  return s;
}

DfEvents df_sample_events(const SystemParams& p, const ChannelSample& s) {
  return df_events(p, Powers(p), derive_thresholds(p), s);
}

AfEvents af_sample_events(const SystemParams& p, const ChannelSample& s, XiMode xi) {
  return af_events(p, Powers(p), derive_thresholds(p), s, xi);
}

SampleOutcome df_sample_outcome(const SystemParams& p, const ChannelSample& s) {
  const DfEvents e = df_sample_events(p, s);
  return {!(e.q1 && e.bc_pu1 && e.bc_pu2), !(e.q1 && e.q2 && e.bc_su2)};
}

SampleOutcome af_sample_outcome(const SystemParams& p, const ChannelSample& s, XiMode xi) {
  const AfEvents e = af_sample_events(p, s, xi);
  return {!(e.bc_pu1 && e.bc_pu2), !(e.su2 && e.spu)};
}

namespace {

struct Counts {
  std::uint64_t pu_fail = 0;
  std::uint64_t su_fail = 0;
};

SampleOutcome one_sample(const SystemParams& p, const Powers& w, const Thresholds& th,
                         RelayMode mode, const McOptions& o, SampleStream& rng) {
  const auto draw = [&] { return sample_channels(p, rng, o.normalization); };
  if (mode == RelayMode::df) {
    if (o.coupling == Coupling::joint) {
      const DfEvents e = df_events(p, w, th, draw());
      return {!(e.q1 && e.bc_pu1 && e.bc_pu2), !(e.q1 && e.q2 && e.bc_su2)};
    }
    const DfEvents a = df_events(p, w, th, draw());
    const DfEvents b = df_events(p, w, th, draw());
    const DfEvents c = df_events(p, w, th, draw());
    const DfEvents d = df_events(p, w, th, draw());
    // Q1 and Q2 read disjoint channels of draw a, so they stay independent.
    return {!(a.q1 && b.bc_pu1 && c.bc_pu2), !(a.q1 && a.q2 && d.bc_su2)};
  }
  if (o.coupling == Coupling::joint) {
    const AfEvents e = af_events(p, w, th, draw(), o.xi_mode);
    return {!(e.bc_pu1 && e.bc_pu2), !(e.su2 && e.spu)};
  }
  const AfEvents a = af_events(p, w, th, draw(), o.xi_mode);
  const AfEvents b = af_events(p, w, th, draw(), o.xi_mode);
  return {!(a.bc_pu1 && b.bc_pu2), !(a.su2 && b.spu)};
}

McEstimate make_estimate(std::uint64_t fails, std::uint64_t n, std::uint64_t seed) {
  McEstimate e;
  e.n = n;
  e.seed = seed;
  e.p_hat = static_cast<double>(fails) / static_cast<double>(n);
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(n));
  return e;
}

}  // namespace

McOutage estimate_outage(const SystemParams& p, RelayMode mode, std::uint64_t n,
                         std::uint64_t seed, const McOptions& opts) {
  if (n < 1) throw std::invalid_argument("estimate_outage: n must be >= 1");
  const Powers w(p);
  const Thresholds th = derive_thresholds(p);

  unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));

  // Worker k handles the contiguous index block [n k / W, n (k+1) / W).
  // Only integer counts are merged, so the total is independent of W.
  std::vector<Counts> counts(workers);
  const auto run = [&](unsigned k) {
    const std::uint64_t lo = n * k / workers;
    const std::uint64_t hi = n * (k + 1) / workers;
    Counts c;
    for (std::uint64_t i = lo; i < hi; ++i) {
      SampleStream rng(seed, i);
      const SampleOutcome out = one_sample(p, w, th, mode, opts, rng);
      c.pu_fail += out.pu_fail;
      c.su_fail += out.su_fail;
    }
    counts[k] = c;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run, k);
    for (auto& t : pool) t.join();
  }
  Counts total;
  for (const Counts& c : counts) {
    total.pu_fail += c.pu_fail;
    total.su_fail += c.su_fail;
  }
  return {make_estimate(total.pu_fail, n, seed), make_estimate(total.su_fail, n, seed)};
}

}  // namespace swipt
