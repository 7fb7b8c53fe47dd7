#include "rch/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rch/error.hpp"

namespace rch::kernels {
namespace {

void check_sizes(std::size_t a, std::size_t b, std::size_t c) {
  if (a != b || a != c) throw InvalidParameter("kernel operand sizes differ");
}

// Images needed so that the dropped tail is below double precision.
int image_count(double period) {
  if (!std::isfinite(period)) return 0;
  return static_cast<int>(std::ceil(40.0 / period)) + 1;
}

double exp_kernel_row(std::span<const double> w, std::span<const double> y, std::size_t i, double period,
                      KernelSign sign) {
  const int images = image_count(period);
  const std::size_t n = y.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (int m = -images; m <= images; ++m) {
      if (j == i && m == 0) continue;
      const double d = y[i] - (y[j] + (images ? m * period : 0.0));
      const double k = std::exp(-std::abs(d));
      if (sign == KernelSign::Signed) {
        // Left images carry +, right images -. Ordering inside one period
        // follows the labels, which matches positions when y is monotone.
        const bool left = (m < 0) || (m == 0 && j < i);
        acc += left ? k * w[j] : -k * w[j];
      } else {
        acc += k * w[j];
      }
    }
  }
  return acc;
}

inline double chunk_lp(const double* v, std::size_t n, double p) {
  double acc = 0.0;
  if (std::isinf(p)) {
    for (std::size_t i = 0; i < n; ++i) acc = std::max(acc, std::abs(v[i]));
  } else if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) acc += std::abs(v[i]);
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < n; ++i) acc += v[i] * v[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) acc += std::pow(std::abs(v[i]), p);
  }
  return acc;
}

}  // namespace

namespace serial {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  check_sizes(a.size(), b.size(), out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void scale_spectrum(std::span<Complex> s, std::span<const double> multiplier) {
  if (s.size() != multiplier.size()) throw InvalidParameter("multiplier size mismatch");
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= multiplier[i];
}

double lp_sum(std::span<const double> v, double p) { return chunk_lp(v.data(), v.size(), p); }

double weighted_energy(std::span<const Complex> s, std::span<const double> weight) {
  if (s.size() != weight.size()) throw InvalidParameter("weight size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += weight[i] * std::norm(s[i]);
  return acc;
}

void exp_kernel_direct(std::span<const double> w, std::span<const double> y, double dxi, double period,
                       KernelSign sign, std::span<double> out) {
  check_sizes(w.size(), y.size(), out.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = dxi * exp_kernel_row(w, y, i, period, sign);
}

}  // namespace serial

namespace parallel {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  check_sizes(a.size(), b.size(), out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scale_spectrum(std::span<Complex> s, std::span<const double> multiplier) {
  if (s.size() != multiplier.size()) throw InvalidParameter("multiplier size mismatch");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) s[i] *= multiplier[i];
}

double lp_sum(std::span<const double> v, double p) {
  std::array<double, kReductionChunks> partial{};
  const std::size_t n = v.size();
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(kReductionChunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * static_cast<std::size_t>(c) / kReductionChunks;
    const std::size_t hi = n * static_cast<std::size_t>(c + 1) / kReductionChunks;
    partial[c] = chunk_lp(v.data() + lo, hi - lo, p);
  }
  double acc = 0.0;
  for (double x : partial) acc = std::isinf(p) ? std::max(acc, x) : acc + x;
  return acc;
}

double weighted_energy(std::span<const Complex> s, std::span<const double> weight) {
  if (s.size() != weight.size()) throw InvalidParameter("weight size mismatch");
  std::array<double, kReductionChunks> partial{};
  const std::size_t n = s.size();
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(kReductionChunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * static_cast<std::size_t>(c) / kReductionChunks;
    const std::size_t hi = n * static_cast<std::size_t>(c + 1) / kReductionChunks;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += weight[i] * std::norm(s[i]);
    partial[c] = acc;
  }
  double acc = 0.0;
  for (double x : partial) acc += x;
  return acc;
}

void exp_kernel_direct(std::span<const double> w, std::span<const double> y, double dxi, double period,
                       KernelSign sign, std::span<double> out) {
  check_sizes(w.size(), y.size(), out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = dxi * exp_kernel_row(w, y, static_cast<std::size_t>(i), period, sign);
}

}  // namespace parallel

int max_threads() noexcept { return omp_get_max_threads(); }

}  // namespace rch::kernels
