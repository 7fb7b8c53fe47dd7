#pragma once

#include <span>
#include <vector>

namespace rch {

/// Ordinary least squares line y = intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t points = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Fit of log_b(y) against x (b = 2 by default).
LineFit fit_log_y(std::span<const double> x, std::span<const double> y, double base = 2.0);
/// Fit of log(y) against log(x).
LineFit fit_log_log(std::span<const double> x, std::span<const double> y);

/// Index of the first element of the top half of a range of `count` items
/// (the last ceil(count/2) entries).
std::size_t top_half_start(std::size_t count) noexcept;

/// (max - min) / min of the values.
double relative_spread(std::span<const double> v);

}  // namespace rch
