#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "swipt/config.hpp"
#include "swipt/sweep.hpp"

using namespace swipt;

TEST_CASE("grid parsing") {
  const auto g = parse_grid("0.05:0.02:0.95");
  REQUIRE(g.size() == 46);
  CHECK(g.front() == 0.05);
  CHECK(g[1] == 0.07);
  CHECK(g.back() == 0.95);
  CHECK(parse_grid("-50:5:-15").size() == 8);
  CHECK(parse_grid("0.1, 0.2,0.4") == std::vector<double>{0.1, 0.2, 0.4});
  CHECK_THROWS_AS(parse_grid("1:0:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0.1,abc"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# reference point with two PU1 antennas\n"
      "na = 2\n"
      "\n"
      "power_dbm=-30   # both PUs\n"
      "alpha=0.5\n"
      "alpha=0.6\n"
      "grid=0.1,0.2\n");
  const Settings s = parse_settings(in);
  REQUIRE(s.find("alpha"));
  CHECK(*s.find("alpha") == "0.6");
  SystemParams p = reference_params(1, 1);
  apply_settings(p, s);
  CHECK(p.na == 2);
  CHECK(p.alpha == 0.6);
  CHECK(p.pp1 == doctest::Approx(1e-6));
  CHECK(p.pp2 == doctest::Approx(1e-6));

  std::istringstream bad("alpha 0.5\n");
  CHECK_THROWS_AS(parse_settings(bad), std::invalid_argument);
  Settings unknown;
  unknown.set("nonsense", "1");
  CHECK_THROWS_AS(apply_settings(p, unknown), std::invalid_argument);
  Settings notnum;
  notnum.set("rho", "0.9x");
  CHECK_THROWS_AS(apply_settings(p, notnum), std::invalid_argument);
  CHECK(parse_assignment("seed=4") == std::pair<std::string, std::string>{"seed", "4"});
}

TEST_CASE("dB over noise sets both powers") {
  Settings s;
  s.set("sigma2_dbm", "-90");
  s.set("power_db_noise", "30");
  SystemParams p = reference_params();
  apply_settings(p, s);
  CHECK(p.sigma2 == doctest::Approx(1e-12));
  CHECK(p.pp1 == doctest::Approx(1e-9));
}

TEST_CASE("gated alpha rows report certain PU outage") {
  SweepSpec spec;
  spec.grid = {0.2};
  spec.analytic = spec.mc = spec.oracle = true;
  spec.mc_samples = 5000;
  const auto rows = run_sweep(spec, reference_params());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].mode == "DF");
  CHECK(rows[1].mode == "AF");
  for (const auto& r : rows) {
    CHECK(r.error.empty());
    CHECK(r.analytic_pu == 1.0);
    CHECK(r.mc_pu == 1.0);
    CHECK(r.mc_pu_se == 0.0);
    CHECK(r.oracle_pu == 1.0);
  }
  CHECK(rows[1].analytic_su == 1.0);
}

TEST_CASE("invalid grid values become row errors") {
  SweepSpec spec;
  spec.variable = SweepVariable::rho;
  spec.grid = {0.5, 1.5};
  const auto rows = run_sweep(spec, reference_params());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].error.empty());
  CHECK_FALSE(rows[2].error.empty());
  CHECK(std::isnan(rows[2].analytic_pu));
}

TEST_CASE("rows do not depend on the thread count") {
  SweepSpec spec;
  spec.grid = parse_grid("0.3:0.1:0.9");
  spec.mc = true;
  spec.mc_samples = 20000;
  const auto a = run_sweep(spec, reference_params(), 1);
  const auto b = run_sweep(spec, reference_params(), 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].analytic_pu == b[i].analytic_pu);
    CHECK(a[i].mc_pu == b[i].mc_pu);
    CHECK(a[i].mc_su == b[i].mc_su);
  }
}

TEST_CASE("CSV round trip") {
  SweepSpec spec;
  spec.grid = {0.2, 0.5, 0.81};
  spec.mc = true;
  spec.mc_samples = 3000;
  auto rows = run_sweep(spec, reference_params());
  rows[0].flags = "a,\"quoted\"";
  std::ostringstream out;
  write_csv(out, rows);
  std::istringstream in(out.str());
  const auto back = read_csv(in);
  REQUIRE(back.size() == rows.size());
  const auto close = [](double a, double b, double rel) {
    if (std::isnan(a)) return std::isnan(b);
    return std::abs(a - b) <= rel * std::max(std::abs(a), 1e-300);
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].mode == rows[i].mode);
    CHECK(back[i].flags == rows[i].flags);
    // Full-precision columns.
    CHECK(close(rows[i].value, back[i].value, 1e-12));
    CHECK(close(rows[i].se, back[i].se, 1e-12));
    CHECK(close(rows[i].ee, back[i].ee, 1e-12));
    CHECK(close(rows[i].mc_pu_se, back[i].mc_pu_se, 1e-12));
    // Probability columns carry 9 significant digits.
    CHECK(close(rows[i].analytic_pu, back[i].analytic_pu, 1e-8));
    CHECK(close(rows[i].analytic_su, back[i].analytic_su, 1e-8));
    CHECK(close(rows[i].mc_pu, back[i].mc_pu, 1e-8));
    CHECK(std::isnan(back[i].oracle_pu));
  }
  std::ostringstream again;
  write_csv(again, back);
  CHECK(again.str() == out.str());

  std::istringstream wrong("a,b\n");
  CHECK_THROWS_AS(read_csv(wrong), std::invalid_argument);
}

TEST_CASE("presets") {
  for (const auto& name : preset_names()) {
    const SweepSpec s = preset(name);
    CHECK_NOTHROW(s.validate());
  }
  CHECK(preset("alpha_df").df);
  CHECK_FALSE(preset("alpha_df").af);
  CHECK(preset("alpha_af").af);
  CHECK(preset("power").variable == SweepVariable::power_db);
  CHECK(preset("rho").grid.size() == 19);
  CHECK_THROWS_AS(preset("beta"), std::invalid_argument);
}

TEST_CASE("power sweep sets both PU powers") {
  const SystemParams p = params_at(reference_params(), SweepVariable::power_db, -30.0);
  CHECK(p.pp1 == doctest::Approx(1e-6));
  CHECK(p.pp2 == doctest::Approx(1e-6));
  CHECK(params_at(reference_params(), SweepVariable::na, 3.0).na == 3);
  CHECK_THROWS_AS(params_at(reference_params(), SweepVariable::na, 2.5), std::invalid_argument);
}

TEST_CASE("sweep spec checks") {
  SweepSpec s;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.grid = {0.3, 0.2};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.grid = {0.2};
  s.df = s.af = false;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
