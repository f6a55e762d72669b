#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "swipt/analytic_df.hpp"
#include "swipt/oracle.hpp"
#include "test_support.hpp"

using namespace swipt;

TEST_CASE("DF breakdown composes its outages") {
  const DfOutageBreakdown b = df_outage(reference_params());
  CHECK(b.pu_outage == doctest::Approx(1.0 - b.p_q1.value * b.p_bc_pu1.value * b.p_bc_pu2.value));
  CHECK(b.su_outage == doctest::Approx(1.0 - b.p_q1.value * b.p_q2.value * b.p_bc_su2.value));
  CHECK(b.p_q1.method == Method::closed_form);
  CHECK(b.p_bc_pu1.method == Method::closed_form);
}

TEST_CASE("DF limits") {
  SystemParams p = reference_params();
  p.r_pu = 0.0;
  CHECK(prob_q1(p).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(prob_q2(p).value == doctest::Approx(1.0).epsilon(1e-12));

  SystemParams q = reference_params();
  q.rho = 1.0 - 1e-12;
  CHECK(prob_q1(q).value < 1e-6);

  SystemParams r = reference_params();
  r.alpha = 1.0 - 1e-9;
  CHECK(prob_bc_su2_df(r).value < 1e-6);
}

TEST_CASE("DF BC gate returns an exact zero") {
  SystemParams p = reference_params();
  p.alpha = 0.2;
  const DfOutageBreakdown b = df_outage(p);
  CHECK(b.p_bc_pu1.value == 0.0);
  CHECK(b.p_bc_pu1.method == Method::gated);
  CHECK(b.p_bc_pu2.value == 0.0);
  CHECK(b.pu_outage == 1.0);
  const double u1 = derive_thresholds(p).u1;
  for (double a = 0.02; a < u1 / (1.0 + u1); a += 0.02) {
    p.alpha = a;
    CHECK(prob_bc_pu(p, 1).value == 0.0);
    CHECK(prob_bc_pu(p, 2).value == 0.0);
  }
}

TEST_CASE("DF components agree with the oracle") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 6; ++i) {
    const SystemParams p = test_support::random_params(gen);
    CAPTURE(i);
    CHECK(std::abs(prob_q1(p).value - oracle::q1(p).value) < 1e-5);
    CHECK(std::abs(prob_q2(p).value - oracle::q2(p).value) < 1e-5);
    CHECK(std::abs(prob_bc_pu(p, 1).value - oracle::bc_pu_df(p, 1).value) < 1e-5);
    CHECK(std::abs(prob_bc_pu(p, 2).value - oracle::bc_pu_df(p, 2).value) < 1e-5);
    CHECK(std::abs(prob_bc_su2_df(p).value - oracle::bc_su2_df(p).value) < 1e-5);
  }
}

TEST_CASE("DF probabilities stay in [0, 1] over random draws") {
  std::mt19937_64 gen(77);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const SystemParams p = test_support::random_params(gen);
    try {
      const DfOutageBreakdown b = df_outage(p);
      for (double v : {b.p_q1.value, b.p_q2.value, b.p_bc_pu1.value, b.p_bc_pu2.value,
                       b.p_bc_su2.value, b.pu_outage, b.su_outage}) {
        if (!(v >= 0.0 && v <= 1.0)) ++failures;
      }
    } catch (const std::exception& e) {
      MESSAGE(e.what());
      ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("DF outages are monotone in alpha") {
  for (int na : {1, 2}) {
    SystemParams p = reference_params(na, 1);
    const double u1 = derive_thresholds(p).u1;
    const double lo = u1 / (1.0 + u1) + 0.01;
    double prev_pu = 2.0, prev_su = -1.0;
    for (double a = lo; a <= 0.99; a += 0.01) {
      p.alpha = a;
      const DfOutageBreakdown b = df_outage(p);
      CHECK(b.pu_outage <= prev_pu + 1e-12);
      CHECK(b.su_outage >= prev_su - 1e-12);
      prev_pu = b.pu_outage;
      prev_su = b.su_outage;
    }
  }
}

TEST_CASE("equal antenna counts fall back to the oracle") {
  SystemParams p = reference_params(1, 1);
  const DfOutageBreakdown b = df_outage(p);
  CHECK(b.p_bc_su2.method == Method::oracle_fallback);
  const auto flags = b.flags();
  CHECK(std::find(flags.begin(), flags.end(), "bc_su2_df:oracle-fallback") != flags.end());
  CHECK(std::abs(b.p_bc_su2.value - oracle::bc_su2_df(p).value) < 1e-8);
}

TEST_CASE("clamping tolerates only floating-point dust") {
  CHECK(clamp_probability(1.0 + 1e-12, "x") == 1.0);
  CHECK(clamp_probability(-1e-12, "x") == 0.0);
  CHECK(clamp_probability(0.3, "x") == 0.3);
  CHECK_THROWS_AS(clamp_probability(1.0 + 1e-6, "x"), ComponentError);
  try {
    clamp_probability(-0.1, "bc_pu1");
  } catch (const ComponentError& e) {
    CHECK(e.component() == "bc_pu1");
  }
}
