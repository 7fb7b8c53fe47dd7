#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rch/error.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/spectral.hpp"
#include "test_support.hpp"

using namespace rch;
using rch_test::kPi;
using rch_test::max_diff;

namespace {

double l2(const Field& f) { return lp_norm(f, 2.0); }

}  // namespace

TEST_CASE("cutoff functions") {
  CHECK(lp_chi(0.5) == 1.0);
  CHECK(lp_chi(1.0) == 1.0);
  CHECK(lp_chi(2.0) == 0.0);
  CHECK(lp_chi(4.0 / 3.0) == 0.0);
  CHECK(lp_phi(2.0) == 1.0);
  CHECK(lp_phi(0.99) == 0.0);
  CHECK(lp_phi(8.0 / 3.0) == 0.0);
  CHECK(lp_chi(-0.5) == lp_chi(0.5));
  double prev = 1.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = lp_chi(1.0 + i / 300.0);
    CHECK(v <= prev);
    prev = v;
  }
  // Telescoping: chi + sum_{j <= 5} phi(2^-j xi) = chi(xi / 64).
  double sum = lp_chi(5.0);
  for (int j = 0; j <= 5; ++j) sum += lp_phi(std::ldexp(5.0, -j));
  CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("partition of unity on every lattice mode") {
  const DyadicFilterBank bank(PeriodicGrid(64.0 * kPi, std::size_t{1} << 17));
  CHECK(bank.partition_defect() <= 1e-12);
  const PeriodicGrid small(2.0 * kPi, 512);
  const DyadicFilterBank b2(small);
  CHECK(b2.j_max() == 6);
  CHECK(b2.partition_defect() <= 1e-12);
  // Without the tail the partition still holds up to (3/4) 2^{j_max}.
  for (std::size_t m = 0; m < small.spectrum_size(); ++m) {
    const double k = small.wavenumber(m);
    if (k > 0.75 * std::ldexp(1.0, b2.j_max())) break;
    double sum = 0.0;
    for (int j = -1; j <= b2.j_max(); ++j) sum += b2.multiplier(j)[m];
    CHECK(std::abs(sum - b2.tail_multiplier()[m] - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(DyadicFilterBank(PeriodicGrid(2.0 * kPi, 16)), InvalidParameter);
}

TEST_CASE("single-block localization") {
  const PeriodicGrid g(2.0 * kPi, 512);
  const DyadicFilterBank bank(g);
  const Field f = Field::sample(g, [](double x) { return std::cos(64.0 * x); });
  CHECK(max_diff(bank.block(f, 5), f) <= 1e-13);
  for (int j = -1; j <= bank.j_max(); ++j)
    if (j != 5) CHECK(bank.block(f, j).max_abs() <= 1e-13);
  CHECK(bank.block(f, -2).max_abs() == 0.0);
  CHECK_THROWS_AS(bank.block(f, bank.j_max() + 1), InvalidParameter);
  CHECK(std::abs(bank.besov_norm(f, {2.0, kInf, 1.0}) / 1024.0 - 1.0) <= 1e-3);

  const Field one = Field::sample(g, [](double) { return 3.0; });
  CHECK(max_diff(bank.block(one, -1), one) <= 1e-14);
  for (int j = 0; j <= bank.j_max(); ++j) CHECK(bank.block(one, j).max_abs() <= 1e-14);
}

TEST_CASE("reconstruction and low sums") {
  const PeriodicGrid g(64.0 * kPi, 4096);
  const DyadicFilterBank bank(g);
  const Field f = rch_test::random_bandlimited(g, 1300, 5);
  Field sum(g);
  for (int j = -1; j <= bank.j_max(); ++j) sum += bank.block(f, j);
  CHECK(l2(sum - f) <= 1e-11 * l2(f));
  Field partial(g);
  for (int j = -1; j < 4; ++j) partial += bank.block(f, j);
  CHECK(l2(bank.low_sum(f, 4) - partial) <= 1e-12 * l2(f));
}

TEST_CASE("Bernstein inequality at p = 2") {
  const PeriodicGrid g(2.0 * kPi, 512);
  const DyadicFilterBank bank(g);
  const Field f = rch_test::random_bandlimited(g, std::size_t{1} << (bank.j_max() + 1), 9);
  for (int j = 0; j <= bank.j_max(); ++j) {
    const Field b = bank.block(f, j);
    INFO("j = " << j);
    CHECK(l2(spectral::ddx(b)) <= (8.0 / 3.0) * std::ldexp(1.0, j) * l2(b));
  }
}

TEST_CASE("Besov norm properties") {
  const PeriodicGrid g(16.0 * kPi, 2048);
  const DyadicFilterBank bank(g);
  CHECK(bank.besov_norm(Field(g), {1.5, 2.0, 1.0}) == 0.0);
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const Field f = rch_test::random_bandlimited(g, 600, seed);
    for (double p : {1.0, 2.0, 3.0, kInf}) {
      const BesovIndex one{1.5, p, 1.0}, inf{1.5, p, kInf};
      const double n1 = bank.besov_norm(f, one);
      CHECK(bank.besov_norm(f, inf) <= n1);
      CHECK(std::abs(bank.besov_norm(-2.5 * f, one) - 2.5 * n1) <= 1e-12 * 2.5 * n1);
    }
    CHECK(f.max_abs() <= 3.0 * bank.besov_norm(f, {0.5, 2.0, 1.0}));
  }
  const Field f = rch_test::random_bandlimited(g, 600, 7);
  const auto serial = bank.block_lp_norms_serial(f, 1.5);
  const auto par = bank.block_lp_norms(f, 1.5);
  REQUIRE(serial.size() == par.size());
  for (std::size_t j = 0; j < serial.size(); ++j) CHECK(serial[j] == doctest::Approx(par[j]).epsilon(1e-13));
  CHECK_THROWS_AS(bank.besov_norm(f, {1.0, 0.5, 1.0}), InvalidParameter);
}

TEST_CASE("profile tail is reported") {
  const PeriodicGrid g(2.0 * kPi, 512);
  const DyadicFilterBank bank(g);
  const Field low = Field::sample(g, [](double x) { return std::cos(10.0 * x); });
  CHECK(bank.besov_profile(low, {1.0, 2.0, 2.0}).tail_l2 <= 1e-12);
  const Field high = Field::sample(g, [](double x) { return std::cos(250.0 * x); });
  const auto prof = bank.besov_profile(high, {1.0, 2.0, 2.0});
  CHECK(prof.tail_l2 == doctest::Approx(l2(high)).epsilon(1e-10));
  CHECK(prof.levels.front() == -1);
  CHECK(prof.levels.back() == bank.j_max());
}

TEST_CASE("Sobolev and Lebesgue norms") {
  const PeriodicGrid g(2.0 * kPi, 64);
  const Field c = Field::sample(g, [](double x) { return std::cos(x); });
  const Field s = Field::sample(g, [](double x) { return std::sin(x); });
  CHECK(sobolev_h_norm(c, 0.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(sobolev_h_norm(c, 1.0) == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-13));
  CHECK(sobolev_h_norm(Field(g), 2.0) == 0.0);
  CHECK(w1p_norm(Field::sample(g, [](double) { return -1.5; }), kInf) == doctest::Approx(1.5));
  CHECK(w1p_norm(s, kInf) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(w1p_norm(s, 2.0) == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-13));
  // Rectangle rule across the kinks of |cos|.
  CHECK(lp_norm(c, 1.0) == doctest::Approx(4.0).epsilon(1e-2));
  CHECK_THROWS_AS(lp_norm(c, 0.5), InvalidParameter);
}

TEST_CASE("l^r aggregation") {
  const std::vector<double> a{3.0, 4.0};
  CHECK(lr_aggregate(a, 1.0) == 7.0);
  CHECK(lr_aggregate(a, 2.0) == doctest::Approx(5.0));
  CHECK(lr_aggregate(a, kInf) == 4.0);
}
