#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "swipt/params.hpp"

using namespace swipt;

namespace {

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("thresholds at the reference rates") {
  const Thresholds th = derive_thresholds(reference_params());
  CHECK(th.u1 == doctest::Approx(0.31951).epsilon(1e-5));
  CHECK(th.u2 == th.u1);
  CHECK(th.u3 == doctest::Approx(0.74110).epsilon(1e-5));
  CHECK(th.u4 == 3.0);
  REQUIRE(th.us.has_value());
  REQUIRE(th.kp.has_value());
  REQUIRE(th.kpp.has_value());
}

TEST_CASE("u3 is u1 squared plus twice u1") {
  SystemParams p = reference_params();
  for (double r = 0.01; r <= 10.0; r *= 1.37) {
    p.r_pu = r;
    const Thresholds th = derive_thresholds(p);
    CHECK(rel_close(th.u3, th.u1 * th.u1 + 2.0 * th.u1, 1e-12));
  }
}

TEST_CASE("zero PU rate gives zero thresholds") {
  SystemParams p = reference_params();
  p.r_pu = 0.0;
  const Thresholds th = derive_thresholds(p);
  CHECK(th.u1 == 0.0);
  CHECK(th.u2 == 0.0);
  CHECK(th.u3 == 0.0);
}

TEST_CASE("us gate opens exactly above u1 / (1 + u1)") {
  SystemParams p = reference_params();
  p.alpha = 0.2;
  CHECK_FALSE(derive_thresholds(p).us.has_value());
  const double u1 = derive_thresholds(p).u1;
  const double edge = u1 / (1.0 + u1);
  for (double a = 0.01; a < 0.99; a += 0.01) {
    p.alpha = a;
    CHECK(derive_thresholds(p).us.has_value() == (a > edge));
  }
}

TEST_CASE("DF coefficients at the reference point") {
  const SystemParams p = reference_params(2, 1);
  const DfCoefficients c = derive_df_coeffs(p);
  // (1 - 0.9) 10^-5.3 W / (2 10^2.7 10^-13 W) = 5e3.
  CHECK(c.a1_cap == doctest::Approx(5.0e3).epsilon(1e-12));
  CHECK(c.a1_cap == doctest::Approx((1.0 - p.rho) * p.pp1 / (p.na * std::pow(p.d1, p.m) * p.sigma2)));
  for (double v : {c.a1_cap, c.a2_cap, c.b1_cap, c.b2_cap, c.a1, c.b1, c.a1p, c.a2p, c.b1p, c.b2p, c.c}) {
    CHECK(v > 0.0);
  }

  SystemParams one = p;
  one.na = 1;
  CHECK(derive_df_coeffs(one).a1 == doctest::Approx(2.0 * c.a1).epsilon(1e-15));

  SystemParams near_one = p;
  near_one.rho = 1.0;
  CHECK(derive_df_coeffs(near_one).a1_cap == 0.0);
  CHECK(derive_df_coeffs(near_one).a2_cap == 0.0);
}

TEST_CASE("AF coefficient ratios") {
  SystemParams p = reference_params();
  const AfCoefficients c = derive_af_coeffs(p);
  const double ratio = p.alpha / (1.0 - p.alpha);
  CHECK(rel_close(c.u3c / c.u1c, ratio, 1e-14));
  CHECK(rel_close(c.v3c / c.v1c, ratio, 1e-14));
  CHECK(c.c1 / c.e1 == doctest::Approx(4.263).epsilon(1e-3));
  for (double v : {c.c1, c.c2, c.h1, c.h2, c.e1, c.e2, c.f1, c.f2, c.u1c, c.v1c, c.u2c, c.u3c,
                   c.v3c, c.s1, c.s2}) {
    CHECK(v > 0.0);
  }
  p.alpha = 0.5;
  const AfCoefficients h = derive_af_coeffs(p);
  CHECK(h.u3c / h.u1c == doctest::Approx(1.0).epsilon(1e-15));

  p.eta = 0.0;
  const AfCoefficients z = derive_af_coeffs(p);
  CHECK(z.c1 == 0.0);
  CHECK(z.h1 == 0.0);
  CHECK(z.u1c == 0.0);
  CHECK(z.s1 == 0.0);
}

TEST_CASE("SNR coefficients are invariant to a common power scale") {
  const SystemParams p = reference_params();
  SystemParams q = p;
  q.pp1 *= 37.0;
  q.pp2 *= 37.0;
  q.sigma2 *= 37.0;
  const DfCoefficients d0 = derive_df_coeffs(p), d1 = derive_df_coeffs(q);
  CHECK(rel_close(d0.a1_cap, d1.a1_cap, 1e-14));
  CHECK(rel_close(d0.a2_cap, d1.a2_cap, 1e-14));
  CHECK(rel_close(d0.b1_cap, d1.b1_cap, 1e-14));
  CHECK(rel_close(d0.b2_cap, d1.b2_cap, 1e-14));
  const AfCoefficients a0 = derive_af_coeffs(p), a1 = derive_af_coeffs(q);
  for (auto f : {&AfCoefficients::c1, &AfCoefficients::c2, &AfCoefficients::h1, &AfCoefficients::h2,
                 &AfCoefficients::e1, &AfCoefficients::e2, &AfCoefficients::u1c, &AfCoefficients::v1c,
                 &AfCoefficients::u3c, &AfCoefficients::v3c, &AfCoefficients::s1, &AfCoefficients::s2}) {
    CHECK(rel_close(a0.*f, a1.*f, 1e-14));
  }

  SystemParams r = p;
  r.pp1 *= 5.0;
  r.pp2 *= 0.2;
  const AfCoefficients a2 = derive_af_coeffs(r);
  CHECK(a2.f1 == a0.f1);
  CHECK(a2.f2 == a0.f2);
  CHECK(a2.u2c == a0.u2c);
}

TEST_CASE("validation rejects out-of-range fields") {
  CHECK_NOTHROW(reference_params().validate());
  const auto bad = [](auto mutate) {
    SystemParams p = reference_params();
    mutate(p);
    return p;
  };
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.rho = 0.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.rho = 1.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.alpha = 1.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.eta = 1.5; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.na = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.m_k = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.d3 = 0.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.m = 1.5; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.sigma2 = 0.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.r_su = 0.0; }).validate(), std::invalid_argument);

  CHECK_NOTHROW(bad([](SystemParams& p) { p.rho = 0.0; }).validate_limits());
  CHECK_NOTHROW(bad([](SystemParams& p) { p.r_pu = 0.0; }).validate_limits());
  CHECK_THROWS_AS(bad([](SystemParams& p) { p.rho = 1.0; }).validate_limits(), std::invalid_argument);
}

TEST_CASE("unit conversions") {
  CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0));
  CHECK(dbm_to_watts(-100.0) == doctest::Approx(1e-13));
  CHECK(watts_to_dbm(dbm_to_watts(-23.0)) == doctest::Approx(-23.0));
  CHECK(db_over_noise_to_watts(20.0, 1e-13) == doctest::Approx(1e-11));
  SystemParams p;
  p.l = 30.0;
  apply_midpoint_geometry(p);
  CHECK(p.d1 == 15.0);
  CHECK(p.d5 == 15.0);
}
