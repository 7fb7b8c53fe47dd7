#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rch/error.hpp"
#include "rch/experiments.hpp"
#include "rch/initial_data.hpp"
#include "test_support.hpp"

using namespace rch;

namespace {

CampaignConfig small_campaign() {
  CampaignConfig c;
  c.n_points = std::size_t{1} << 14;
  c.n_list = {4, 5, 6};
  c.t_points = 4;
  return c;
}

void check_t0_rows(const ExperimentReport& rep) {
  const auto t = rep.table.column("t");
  const auto d = rep.table.column("distance");
  const auto gap = rep.table.column("initial_gap");
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] == 0.0) CHECK(std::abs(d[k] - gap[k]) <= 1e-12 * gap[k]);
}

}  // namespace

TEST_CASE("index classification") {
  CHECK(is_supercritical({2.0, 2.0, 2.0}));
  CHECK(is_supercritical({2.5, 2.0, 2.0}));
  CHECK_FALSE(is_supercritical({1.5, 2.0, 1.0}));
  CHECK_FALSE(is_supercritical({2.0, 1.0, 1.0}));
  CHECK_THROWS_AS(run_nonuniform_supercritical({1.5, 2.0, 1.0}, small_campaign()), InvalidParameter);
  CHECK_THROWS_AS(run_nonuniform_critical(3.0, small_campaign()), InvalidParameter);
}

TEST_CASE("supercritical campaign on a small grid") {
  const auto rep = run_nonuniform_supercritical({2.0, 2.0, 2.0}, small_campaign());
  CHECK(rep.table.rows.size() == 3 * 5);
  check_t0_rows(rep);
  CHECK(rep.verdict("t0_rows").pass);
  CHECK(rep.verdict("kappa_positive").pass);
  CHECK(rep.verdict("v0n_vanishing").pass);
  CHECK(rep.verdict("initial_gap_slope").value == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("critical campaign on a small grid") {
  const auto rep = run_nonuniform_critical(2.0, small_campaign());
  check_t0_rows(rep);
  CHECK(rep.verdict("t0_rows").pass);
  CHECK(rep.verdict("kappa_positive").pass);
}

TEST_CASE("expansion residuals on a small grid") {
  const auto cfg = small_campaign();
  const auto dec = run_decomposition_rates({2.0, 2.0, 2.0}, cfg, 6);
  CHECK(dec.verdict("residual_t_exponent").value >= 1.8);
  CHECK(dec.verdict("control_t_exponent").value >= 0.95);
  const auto crit = run_critical_expansion(2.0, cfg, 6);
  CHECK(crit.verdict("t0_residual").pass);
  CHECK(crit.verdict("residual_t_exponent").value >= 1.8);
  CHECK_THROWS_AS(run_decomposition_rates({2.0, 2.0, 2.0}, cfg, 9), InvalidParameter);
}

TEST_CASE("continuous dependence on a small grid") {
  CampaignConfig cfg;
  cfg.n_points = 4096;
  const auto rep = run_continuous_dependence({2.0, 2.0, 2.0}, {0.0, 1e-2, 1e-3, 1e-4}, cfg);
  CHECK(rep.verdict("zero_eps").pass);
  CHECK(rep.verdict("distance_decreasing").pass);
  CHECK(rep.verdict("lipschitz_slope").pass);
}

TEST_CASE("Picard campaign on the smoke data") {
  SolverConfig cfg;
  cfg.t_end = 0.0;
  cfg.dt = 0.0;
  const auto rep = run_picard_convergence(smoke_data(), 0.5, 8, cfg);
  for (const auto& [k, v] : rep.verdicts) {
    INFO(k << " = " << v.value);
    CHECK(v.pass);
  }
  CHECK_THROWS_AS(run_picard_convergence(smoke_data(), 0.5, 2, cfg), InvalidParameter);
}

TEST_CASE("reports are reproducible") {
  SolverConfig cfg;
  cfg.t_end = 0.0;
  cfg.dt = 0.0;
  const auto a = run_picard_convergence(smoke_data(64), 0.5, 4, cfg);
  const auto b = run_picard_convergence(smoke_data(64), 0.5, 4, cfg);
  CHECK(a.to_json() == b.to_json());
}
