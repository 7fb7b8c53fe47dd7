#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "rch/coefficients.hpp"
#include "rch/error.hpp"

using rch::derive_coefficients;

TEST_CASE("omega = 0 reduces to the classical coefficients") {
  const auto p = derive_coefficients(0.0);
  CHECK(p.c == 1.0);
  CHECK(p.alpha == 0.5);
  CHECK(p.beta0 == 0.25);
  CHECK(p.beta == 5.0 / 12.0);
  CHECK(p.omega1 == 0.0);
  CHECK(p.omega2 == 0.0);
  CHECK(std::abs(p.gamma - 0.2) <= 1e-14);
  CHECK(std::abs(p.c1 - 1.0) <= 1e-14);
  CHECK(p.c2 == 0.0);
  CHECK(p.c3 == 0.0);
  CHECK(std::abs(p.c0 - 0.4) <= 1e-14);
  CHECK_FALSE(p.gamma_multiple_roots);
}

TEST_CASE("omega = 1 against high-precision evaluation") {
  const auto p = derive_coefficients(1.0);
  CHECK(std::abs(p.c - 0.41421356237309504880) <= 1e-15);
  CHECK(std::abs(p.alpha - 0.14644660940672623780) <= 1e-15);
  CHECK(std::abs(p.beta0 - 0.002961158827728135167) <= 1e-15);
  CHECK(std::abs(p.beta - 0.0559644062711508252) <= 1e-15);
  CHECK(std::abs(p.omega1 + 0.58524756441743298248) <= 1e-14);
  CHECK(std::abs(p.omega2 + 0.10590897801643785576) <= 1e-14);
  // Bisection oracle on [-10, 10] finds three roots -0.14181, 0.087494, 0.86357.
  CHECK(std::abs(p.gamma - 0.087494005940278342411) <= 1e-10);
  CHECK(p.gamma_multiple_roots);
  CHECK(std::abs(p.c0 - (p.beta0 / p.beta - p.gamma)) <= 1e-15);
}

TEST_CASE("omega = 0.5 root and weak-form coefficients") {
  const auto p = derive_coefficients(0.5);
  CHECK(std::abs(p.gamma - 0.1078448588915261398) <= 1e-10);
  CHECK(std::abs(p.c1 - 1.39173) <= 1e-5);
  CHECK(std::abs(p.c2 + 0.888931) <= 1e-6);
  CHECK(std::abs(p.c3 + 1.49217) <= 1e-5);
}

TEST_CASE("cubic residual across the omega sweep") {
  for (int i = 0; i <= 20; ++i) {
    const double omega = 0.1 * i;
    const auto p = derive_coefficients(omega);
    INFO("omega = " << omega);
    CHECK(rch::gamma_residual(p, p.gamma) <= 1e-12);
    CHECK(p.c > 0.0);
    CHECK(p.alpha > 0.0);
    CHECK(p.alpha < 1.0);
  }
}

TEST_CASE("derivation is deterministic") {
  const auto a = derive_coefficients(0.7);
  const auto b = derive_coefficients(0.7);
  CHECK(a.gamma == b.gamma);
  CHECK(a.c1 == b.c1);
  CHECK(a.c2 == b.c2);
  CHECK(a.c3 == b.c3);
}

TEST_CASE("c1 is continuous in omega") {
  for (int i = 0; i <= 20; ++i) {
    const double omega = 0.1 * i;
    INFO("omega = " << omega);
    CHECK(std::abs(derive_coefficients(omega + 1e-6).c1 - derive_coefficients(omega).c1) <= 1e-3);
  }
}

TEST_CASE("gamma cubic examples") {
  const auto lin = rch::solve_gamma_cubic(1.0, 0.5, 0.6, 1.0, 0.0, 0.0);
  CHECK(std::abs(lin.value - 0.2) <= 1e-15);
  CHECK(lin.real_root_count == 1);
  const auto zero = rch::solve_gamma_cubic(0.6, 0.5, 0.6, 1.0, 0.0, 0.0);
  CHECK(std::abs(zero.value) <= 1e-15);
  CHECK(zero.residual <= 1e-15);
}

TEST_CASE("polynomial roots") {
  auto r = rch::real_polynomial_roots(-6.0, 11.0, -6.0, 1.0);
  REQUIRE(r.size() == 3);
  CHECK(std::abs(r[0] - 1.0) <= 1e-12);
  CHECK(std::abs(r[1] - 2.0) <= 1e-12);
  CHECK(std::abs(r[2] - 3.0) <= 1e-12);
  CHECK(rch::real_polynomial_roots(1.0, 0.0, 1.0, 0.0).empty());
  r = rch::real_polynomial_roots(3.0, -2.0, 0.0, 0.0);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] - 1.5) <= 1e-15);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(derive_coefficients(std::numeric_limits<double>::quiet_NaN()), rch::InvalidParameter);
  CHECK_THROWS_AS(derive_coefficients(std::numeric_limits<double>::infinity()), rch::InvalidParameter);
  CHECK_THROWS_AS(derive_coefficients(-1.0), rch::InvalidParameter);
  CHECK_THROWS_AS(rch::real_polynomial_roots(0.0, 0.0, 0.0, 0.0), rch::InvalidParameter);
  CHECK_THROWS_AS(rch::solve_gamma_cubic(1.0, 0.5, 0.25, 0.0, 0.0, 0.0), rch::InvalidParameter);
  CHECK_THROWS_AS(rch::solve_gamma_cubic(1.0, 0.0, 0.25, 1.0, 0.0, 0.0), rch::InvalidParameter);
}
