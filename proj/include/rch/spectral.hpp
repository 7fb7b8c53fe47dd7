#pragma once

#include <functional>
#include <span>

#include "rch/fourier.hpp"
#include "rch/grid.hpp"

namespace rch {

/// Fourier-multiplier operators and products on a PeriodicGrid.
namespace spectral {

Spectrum transform(const Field& f);
Field synthesize(const PeriodicGrid& grid, std::span<const Complex> spectrum);

/// Multiplies mode m by symbol(k_m). Odd symbols must pass `odd = true`
/// so that the unpaired Nyquist mode is zeroed.
Field apply_multiplier(const Field& f, const std::function<Complex(double)>& symbol, bool odd);

/// Exact spectral derivative (symbol ik).
Field ddx(const Field& f);
/// (1 - d_x^2)^{-1}, i.e. convolution with the periodized kernel exp(-|x|)/2.
Field helmholtz_inverse(const Field& f);
/// d_x (1 - d_x^2)^{-1}, symbol ik / (1 + k^2).
Field grad_p_conv(const Field& f);

/// Highest half-spectrum index kept by the 2/3 rule.
std::size_t dealias_cutoff(std::size_t n_points) noexcept;
/// Zeroes modes above the 2/3 cutoff in place.
void truncate_spectrum(std::span<Complex> s, std::size_t n_points) noexcept;
Field truncate(const Field& f);

/// Pointwise product. With `dealias`, both factors and the result are
/// truncated by the 2/3 rule, so no aliased energy lands on retained modes.
Field product(const Field& f, const Field& g, bool dealias);

/// Lattice inner product h * sum f_i g_i.
double inner(const Field& f, const Field& g);

}  // namespace spectral
}  // namespace rch
