#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rch/error.hpp"
#include "rch/eulerian.hpp"
#include "rch/experiments.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/spectral.hpp"
#include "test_support.hpp"

using namespace rch;
using rch_test::kPi;
using rch_test::max_diff;

namespace {

const PeriodicGrid kTorus(2.0 * kPi, 128);

Field cos_field() { return Field::sample(kTorus, [](double x) { return std::cos(x); }); }

// -d_x p*(u^2 + u_x^2 / 2), written out with the classical coefficients.
Field ch_rhs(const Field& u) {
  const Field ux = spectral::ddx(u);
  const Field flux = spectral::product(u, u, true) + 0.5 * spectral::product(ux, ux, true);
  return -1.0 * spectral::grad_p_conv(flux);
}

}  // namespace

TEST_CASE("nonlocal term oracles at omega = 0") {
  const auto p0 = derive_coefficients(0.0);
  const Field s2 = Field::sample(kTorus, [](double x) { return std::sin(2 * x); });
  CHECK(max_diff(rhs_g(cos_field(), p0), 0.1 * s2) <= 1e-14);
  CHECK(max_diff(full_rhs(cos_field(), p0), 0.6 * s2) <= 1e-14);
  CHECK(rhs_g(Field(kTorus), p0).max_abs() == 0.0);
  CHECK(full_rhs(Field(kTorus), derive_coefficients(0.5)).max_abs() == 0.0);
  const Field a = Field::sample(kTorus, [](double) { return 0.7; });
  CHECK(rhs_g(a, p0).max_abs() <= 1e-15);
  CHECK(full_rhs(a, derive_coefficients(0.5)).max_abs() <= 1e-15);

  const Field r = rch_test::random_bandlimited(kTorus, 30, 4);
  CHECK(max_diff(rhs_g(r, p0), ch_rhs(r)) <= 1e-14 * std::max(1.0, ch_rhs(r).max_abs()));
}

TEST_CASE("operator object matches free functions") {
  const auto p = derive_coefficients(0.5);
  const RchOperator op(kTorus, p, true);
  const Field u = rch_test::random_bandlimited(kTorus, 20, 8);
  CHECK(max_diff(op.full_rhs(u), full_rhs(u, p)) == 0.0);
  const Field v = rch_test::random_bandlimited(kTorus, 20, 9);
  const Field g = rch_test::random_bandlimited(kTorus, 20, 10);
  const Field expect = g - spectral::product(u, spectral::ddx(v), true);
  CHECK(max_diff(op.transport_rhs(u, v, g), spectral::truncate(expect)) <= 1e-12);
}

TEST_CASE("zero datum stays zero") {
  SolverConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 1.0;
  const auto tr = solve(Field(kTorus), derive_coefficients(0.5), cfg);
  REQUIRE(tr.times.size() == 11);
  for (const auto& s : tr.states) CHECK(s.max_abs() == 0.0);
  CHECK(tr.times.back() == doctest::Approx(1.0));
}

TEST_CASE("RK4 temporal order") {
  const Field u0 = smoke_data(32);
  const auto p = derive_coefficients(0.5);
  auto end_state = [&](double dt) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 2.0;
    cfg.snapshot_every = 1 << 20;
    return solve(u0, p, cfg).states.back();
  };
  const Field ref = end_state(0.2 / 64);
  const double e1 = max_diff(end_state(0.2), ref);
  const double e2 = max_diff(end_state(0.1), ref);
  const double e3 = max_diff(end_state(0.05), ref);
  const double order = std::log2(e2 / e3);
  INFO("errors " << e1 << " " << e2 << " " << e3);
  CHECK(std::log2(e1 / e2) >= 3.8);
  CHECK(order >= 3.8);
}

TEST_CASE("H1 integral conserved at omega = 0") {
  const Field u0 = smoke_data(4096);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  cfg.snapshot_every = 50;
  const auto tr = solve(u0, derive_coefficients(0.0), cfg);
  const double e0 = h1_integral(u0);
  double drift = 0.0;
  for (const auto& s : tr.states) drift = std::max(drift, std::abs(h1_integral(s) - e0) / e0);
  CHECK(tr.times.back() == doctest::Approx(1.0));
  CHECK(drift <= 1e-6);
}

TEST_CASE("Besov size stays within the asserted headroom up to the horizon") {
  const Field u0 = smoke_data(256);
  const DyadicFilterBank bank(u0.grid());
  const BesovIndex idx{2.0, 2.0, 2.0};
  const double b0 = bank.besov_norm(u0, idx);
  SolverConfig cfg;
  cfg.t_end = kappa_horizon(b0);
  cfg.dt = cfg.t_end / 32;
  const auto tr = solve(u0, derive_coefficients(0.5), cfg);
  for (const auto& s : tr.states) {
    CHECK(bank.besov_norm(s, idx) <= 3.0 * b0);
    CHECK(std::isfinite(lipschitz_monitor(s)));
  }
}

TEST_CASE("dense output and snapshots") {
  const Field u0 = smoke_data(64);
  SolverConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 0.1;
  const auto tr = solve(u0, derive_coefficients(0.5), cfg);
  REQUIRE(tr.rates.size() == tr.states.size());
  CHECK(max_diff(tr.at(0.05), tr.states[5]) <= 1e-15);
  CHECK(tr.nearest(0.049) == 5);
  // Cubic Hermite midpoint agrees with an RK4 run to the half step.
  SolverConfig fine = cfg;
  fine.dt = 0.005;
  const auto tf = solve(u0, derive_coefficients(0.5), fine);
  CHECK(max_diff(tr.at(0.055), tf.states[11]) <= 1e-8);

  cfg.snapshot_every = 4;
  const auto coarse = solve(u0, derive_coefficients(0.5), cfg);
  CHECK(coarse.times.size() == 4);  // 0, 0.04, 0.08, and the final 0.1
  CHECK(coarse.times.back() == doctest::Approx(0.1));
  CHECK_THROWS_AS(coarse.at(0.05), InvalidParameter);
}

TEST_CASE("solver guards") {
  const Field u0 = smoke_data(64);
  SolverConfig cfg;
  cfg.dt = 0.5;
  cfg.t_end = 1.0;
  CHECK_THROWS_AS(solve(u0, derive_coefficients(0.0), cfg), CflViolation);
  cfg.dt = 0.01;
  cfg.blowup_threshold = 0.1;
  CHECK_THROWS_AS(solve(u0, derive_coefficients(0.0), cfg), BlowUp);
  cfg.dt = 2.0;
  CHECK_THROWS_AS(solve(u0, derive_coefficients(0.0), cfg), InvalidParameter);
  CHECK_THROWS_AS(kappa_horizon(0.0), InvalidParameter);
  CHECK(kappa_horizon(1.0) == doctest::Approx(0.1 / 3.0));
}

TEST_CASE("Picard iterates") {
  const Field u0 = smoke_data(128);
  const auto p = derive_coefficients(0.5);
  SolverConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 0.5;
  const auto it = picard_iterate(u0, p, cfg, 6);
  REQUIRE(it.size() == 7);
  for (const auto& s : it[0].states) CHECK(s.max_abs() == 0.0);
  for (const auto& s : it[1].states) CHECK(max_diff(s, u0) == 0.0);
  double prev = 0.0;
  for (int m = 1; m < 6; ++m) {
    double d = 0.0;
    for (std::size_t k = 0; k < it[m].states.size(); ++k)
      d = std::max(d, max_diff(it[m + 1].states[k], it[m].states[k]));
    if (m >= 2) CHECK(d < prev);
    prev = d;
  }
  const auto ref = solve(u0, p, cfg);
  CHECK(max_diff(it.back().states.back(), ref.states.back()) <= 1e-4);
  CHECK_THROWS_AS(picard_iterate(u0, p, cfg, 0), InvalidParameter);
}

TEST_CASE("monitors") {
  const Field c = cos_field();
  CHECK(h1_integral(c) == doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(lipschitz_monitor(c) == doctest::Approx(4.0).epsilon(1e-3));
}
