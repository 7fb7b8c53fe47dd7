#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference in
// `serial::` and an OpenMP version in `parallel::`; the library calls the
// parallel ones. Parallel reductions use a fixed chunking that does not
// depend on the thread count, so results are reproducible bit for bit.

#include <cstddef>
#include <span>

#include "rch/fourier.hpp"

namespace rch::kernels {

/// Number of fixed reduction chunks used by the parallel reductions.
inline constexpr std::size_t kReductionChunks = 64;

enum class KernelSign { Signed, Unsigned };

namespace serial {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void scale_spectrum(std::span<Complex> s, std::span<const double> multiplier);
/// sum |v|^p over the samples, or max |v| for p = infinity.
double lp_sum(std::span<const double> v, double p);
/// sum_m w_m |s_m|^2
double weighted_energy(std::span<const Complex> s, std::span<const double> weight);
/// Direct O(N^2) evaluation of
///   out_i = sum_{j != i} sgn_ij * sum_m exp(-|y_i - y_j + m L|) w_j dxi
/// over periodic images m (none when `period` is infinite); sgn_ij is +1 for
/// images on the left and -1 on the right when `sign` is Signed. Self images
/// (j = i, m != 0) are included.
void exp_kernel_direct(std::span<const double> w, std::span<const double> y, double dxi, double period,
                       KernelSign sign, std::span<double> out);

}  // namespace serial

namespace parallel {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void scale_spectrum(std::span<Complex> s, std::span<const double> multiplier);
double lp_sum(std::span<const double> v, double p);
double weighted_energy(std::span<const Complex> s, std::span<const double> weight);
void exp_kernel_direct(std::span<const double> w, std::span<const double> y, double dxi, double period,
                       KernelSign sign, std::span<double> out);

}  // namespace parallel

int max_threads() noexcept;

}  // namespace rch::kernels
