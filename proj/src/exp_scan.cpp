#include "rch/exp_scan.hpp"

#include <cmath>
#include <sstream>

#include "rch/error.hpp"

namespace rch {

void require_monotone(std::span<const double> y, double period, double time) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (!(y[i] > y[i - 1])) {
      std::ostringstream os;
      os << "flow map not increasing at index " << i << " (t=" << time << ")";
      throw DiffeomorphismViolation(os.str(), time);
    }
  }
  if (std::isfinite(period) && !y.empty() && !(y.back() < y.front() + period))
    throw DiffeomorphismViolation("flow map wraps past one period", time);
}

std::vector<double> exp_scan_split(std::span<const double> weights, std::span<const double> y, double dxi,
                                   ScanKind kind, double period) {
  const std::size_t n = y.size();
  if (weights.size() != n) throw InvalidParameter("weights and positions differ in length");
  if (n == 0) return {};
  require_monotone(y, period, std::numeric_limits<double>::quiet_NaN());
  const bool periodic = std::isfinite(period);

  std::vector<double> left(n, 0.0), right(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    left[i] = std::exp(-(y[i] - y[i - 1])) * (left[i - 1] + weights[i - 1] * dxi);
  for (std::size_t i = n - 1; i-- > 0;)
    right[i] = std::exp(-(y[i + 1] - y[i])) * (right[i + 1] + weights[i + 1] * dxi);

  if (periodic) {
    const double gap = y.front() + period - y.back();
    const double geometric = 1.0 / (-std::expm1(-period));
    const double carry_left = std::exp(-gap) * (left[n - 1] + weights[n - 1] * dxi) * geometric;
    const double carry_right = std::exp(-gap) * (right[0] + weights[0] * dxi) * geometric;
    for (std::size_t i = 0; i < n; ++i) {
      left[i] += carry_left * std::exp(-(y[i] - y.front()));
      right[i] += carry_right * std::exp(-(y.back() - y[i]));
    }
  }

  std::vector<double> out(n);
  if (kind == ScanKind::Signed) {
    for (std::size_t i = 0; i < n; ++i) out[i] = left[i] - right[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = left[i] + right[i];
  }
  return out;
}

}  // namespace rch
