#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "rch/grid.hpp"
#include "rch/spectral.hpp"

namespace rch_test {

inline constexpr double kPi = std::numbers::pi;

/// Random real field whose modes stop at index `max_mode` (inclusive).
inline rch::Field random_bandlimited(const rch::PeriodicGrid& grid, std::size_t max_mode, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  rch::Spectrum s(grid.spectrum_size(), rch::Complex(0.0, 0.0));
  for (std::size_t m = 0; m <= max_mode && m < s.size(); ++m) {
    const double decay = 1.0 / (1.0 + 0.01 * static_cast<double>(m));
    s[m] = rch::Complex(dist(gen), m == 0 ? 0.0 : dist(gen)) * decay * static_cast<double>(grid.size());
  }
  return rch::spectral::synthesize(grid, s);
}

inline double max_diff(const rch::Field& a, const rch::Field& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline rch::Field sampled(const rch::PeriodicGrid& grid, double (*f)(double)) {
  return rch::Field::sample(grid, [f](double x) { return f(x); });
}

}  // namespace rch_test
