#include "rch/spectral.hpp"

#include "rch/error.hpp"
#include "rch/kernels.hpp"

namespace rch::spectral {

Spectrum transform(const Field& f) { return Fourier(f.size()).forward(f.values()); }

Field synthesize(const PeriodicGrid& grid, std::span<const Complex> spectrum) {
  Field out(grid);
  Fourier(grid.size()).inverse(spectrum, out.values());
  return out;
}

Field apply_multiplier(const Field& f, const std::function<Complex(double)>& symbol, bool odd) {
  const auto& grid = f.grid();
  Spectrum s = transform(f);
  for (std::size_t m = 0; m < s.size(); ++m) s[m] *= symbol(grid.wavenumber(m));
  if (odd) s.back() = 0.0;
  return synthesize(grid, s);
}

Field ddx(const Field& f) {
  return apply_multiplier(f, [](double k) { return Complex(0.0, k); }, true);
}

Field helmholtz_inverse(const Field& f) {
  return apply_multiplier(f, [](double k) { return Complex(1.0 / (1.0 + k * k), 0.0); }, false);
}

Field grad_p_conv(const Field& f) {
  return apply_multiplier(f, [](double k) { return Complex(0.0, k / (1.0 + k * k)); }, true);
}

std::size_t dealias_cutoff(std::size_t n_points) noexcept { return n_points / 3; }

void truncate_spectrum(std::span<Complex> s, std::size_t n_points) noexcept {
  const std::size_t cut = dealias_cutoff(n_points);
  for (std::size_t m = cut + 1; m < s.size(); ++m) s[m] = 0.0;
}

Field truncate(const Field& f) {
  Spectrum s = transform(f);
  truncate_spectrum(s, f.size());
  return synthesize(f.grid(), s);
}

Field product(const Field& f, const Field& g, bool dealias) {
  require_same_grid(f, g);
  Field out(f.grid());
  if (!dealias) {
    kernels::parallel::multiply(f.values(), g.values(), out.values());
    return out;
  }
  const Field ft = truncate(f);
  const Field gt = truncate(g);
  kernels::parallel::multiply(ft.values(), gt.values(), out.values());
  return truncate(out);
}

double inner(const Field& f, const Field& g) {
  require_same_grid(f, g);
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i];
  return acc * f.grid().spacing();
}

}  // namespace rch::spectral
