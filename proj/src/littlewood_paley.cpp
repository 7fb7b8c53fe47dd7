#include "rch/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>

#include "rch/error.hpp"
#include "rch/kernels.hpp"
#include "rch/spectral.hpp"

namespace rch {

double smooth_step(double t) noexcept {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double lp_chi(double xi) noexcept { return 1.0 - smooth_step(3.0 * (std::abs(xi) - 1.0)); }

double lp_phi(double xi) noexcept { return lp_chi(0.5 * xi) - lp_chi(xi); }

void validate(const BesovIndex& idx) {
  if (!std::isfinite(idx.s)) throw InvalidParameter("Besov s must be finite");
  if (!(idx.p >= 1.0) || !(idx.r >= 1.0)) throw InvalidParameter("Besov p, r must lie in [1, inf]");
}

double lp_norm(const Field& f, double p) {
  if (!(p >= 1.0)) throw InvalidParameter("L^p needs p >= 1");
  const double sum = kernels::parallel::lp_sum(f.values(), p);
  if (std::isinf(p)) return sum;
  const double h = f.grid().spacing();
  if (p == 1.0) return h * sum;
  if (p == 2.0) return std::sqrt(h * sum);
  return std::pow(h * sum, 1.0 / p);
}

namespace {

// Weight turning half-spectrum |F_m|^2 into lattice L^2 mass h * sum |f_i|^2.
std::vector<double> plancherel_weights(const PeriodicGrid& grid) {
  const std::size_t half = grid.spectrum_size();
  const double n = static_cast<double>(grid.size());
  const double base = grid.length() / (n * n);
  std::vector<double> w(half, 2.0 * base);
  w.front() = base;
  w.back() = base;
  return w;
}

}  // namespace

double sobolev_h_norm(const Field& f, double s) {
  const auto& grid = f.grid();
  const Spectrum spec = spectral::transform(f);
  auto w = plancherel_weights(grid);
  for (std::size_t m = 0; m < w.size(); ++m) {
    const double k = grid.wavenumber(m);
    w[m] *= std::pow(1.0 + k * k, s);
  }
  return std::sqrt(kernels::parallel::weighted_energy(spec, w));
}

double w1p_norm(const Field& f, double p) { return lp_norm(f, p) + lp_norm(spectral::ddx(f), p); }

double lr_aggregate(std::span<const double> a, double r) {
  if (std::isinf(r)) {
    double m = 0.0;
    for (double v : a) m = std::max(m, v);
    return m;
  }
  double acc = 0.0;
  if (r == 1.0) {
    for (double v : a) acc += v;
    return acc;
  }
  for (double v : a) acc += std::pow(v, r);
  return std::pow(acc, 1.0 / r);
}

DyadicFilterBank::DyadicFilterBank(const PeriodicGrid& grid) : grid_(grid) {
  const double nyq = grid.nyquist();
  int j = -1;
  while ((8.0 / 3.0) * std::ldexp(1.0, j + 1) <= nyq) ++j;
  j_max_ = j;
  if (j_max_ < 3) throw InvalidParameter("grid too coarse: needs at least four dyadic blocks (j_max >= 3)");

  const std::size_t half = grid.spectrum_size();
  mult_.assign(static_cast<std::size_t>(j_max_) + 2, std::vector<double>(half, 0.0));
  tail_.assign(half, 0.0);
  for (std::size_t m = 0; m < half; ++m) {
    const double k = grid.wavenumber(m);
    mult_[0][m] = lp_chi(k);
    for (int level = 0; level <= j_max_; ++level) mult_[level + 1][m] = lp_phi(std::ldexp(k, -level));
    tail_[m] = 1.0 - lp_chi(std::ldexp(k, -(j_max_ + 1)));
    mult_.back()[m] += tail_[m];
  }
  plancherel_ = plancherel_weights(grid);
}

std::span<const double> DyadicFilterBank::multiplier(int j) const {
  if (j < -1 || j > j_max_) throw InvalidParameter("dyadic level outside [-1, j_max]");
  return mult_[static_cast<std::size_t>(j + 1)];
}

double DyadicFilterBank::partition_defect() const {
  double worst = 0.0;
  for (std::size_t m = 0; m < grid_.spectrum_size(); ++m) {
    double sum = 0.0;
    for (const auto& row : mult_) sum += row[m];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

Field DyadicFilterBank::block(const Field& f, int j) const {
  if (!(f.grid() == grid_)) throw GridMismatch("field and filter bank grids differ");
  if (j > j_max_) throw InvalidParameter("dyadic block above j_max is not resolvable on this grid");
  if (j <= -2) return Field(grid_);
  Spectrum s = spectral::transform(f);
  kernels::parallel::scale_spectrum(s, multiplier(j));
  return spectral::synthesize(grid_, s);
}

Field DyadicFilterBank::low_sum(const Field& f, int j) const {
  if (!(f.grid() == grid_)) throw GridMismatch("field and filter bank grids differ");
  Spectrum s = spectral::transform(f);
  std::vector<double> m(grid_.spectrum_size(), 0.0);
  for (int level = -1; level < std::min(j, j_max_ + 1); ++level) {
    const auto row = multiplier(level);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += row[i];
  }
  kernels::parallel::scale_spectrum(s, m);
  return spectral::synthesize(grid_, s);
}

std::vector<double> DyadicFilterBank::block_norms_from_spectrum(const Spectrum& s, double p,
                                                                bool parallel) const {
  const std::size_t levels = mult_.size();
  std::vector<double> out(levels, 0.0);
  const Fourier fft(grid_.size());
  const double h = grid_.spacing();

  auto one_block = [&](std::size_t b) {
    const auto& row = mult_[b];
    if (p == 2.0) {
      double acc = 0.0;
      for (std::size_t m = 0; m < s.size(); ++m) acc += plancherel_[m] * row[m] * row[m] * std::norm(s[m]);
      return std::sqrt(acc);
    }
    Spectrum local(s.size());
    for (std::size_t m = 0; m < s.size(); ++m) local[m] = s[m] * row[m];
    std::vector<double> values(grid_.size());
    fft.inverse(local, values);
    const double sum = kernels::serial::lp_sum(values, p);
    if (std::isinf(p)) return sum;
    return p == 1.0 ? h * sum : std::pow(h * sum, 1.0 / p);
  };

  if (parallel) {
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(levels);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < nb; ++b) out[b] = one_block(static_cast<std::size_t>(b));
  } else {
    for (std::size_t b = 0; b < levels; ++b) out[b] = one_block(b);
  }
  return out;
}

std::vector<double> DyadicFilterBank::block_lp_norms(const Field& f, double p) const {
  if (!(f.grid() == grid_)) throw GridMismatch("field and filter bank grids differ");
  if (!(p >= 1.0)) throw InvalidParameter("L^p needs p >= 1");
  return block_norms_from_spectrum(spectral::transform(f), p, true);
}

std::vector<double> DyadicFilterBank::block_lp_norms_serial(const Field& f, double p) const {
  if (!(f.grid() == grid_)) throw GridMismatch("field and filter bank grids differ");
  if (!(p >= 1.0)) throw InvalidParameter("L^p needs p >= 1");
  return block_norms_from_spectrum(spectral::transform(f), p, false);
}

BesovProfile DyadicFilterBank::besov_profile(const Field& f, const BesovIndex& idx) const {
  validate(idx);
  if (!(f.grid() == grid_)) throw GridMismatch("field and filter bank grids differ");
  const Spectrum s = spectral::transform(f);
  BesovProfile out;
  out.block_lp = block_norms_from_spectrum(s, idx.p, true);
  for (int j = -1; j <= j_max_; ++j) {
    out.levels.push_back(j);
    out.weighted.push_back(std::pow(2.0, j * idx.s) * out.block_lp[j + 1]);
  }
  out.norm = lr_aggregate(out.weighted, idx.r);
  double tail = 0.0;
  for (std::size_t m = 0; m < s.size(); ++m) tail += plancherel_[m] * tail_[m] * tail_[m] * std::norm(s[m]);
  out.tail_l2 = std::sqrt(tail);
  return out;
}

double DyadicFilterBank::besov_norm(const Field& f, const BesovIndex& idx) const {
  return besov_profile(f, idx).norm;
}

}  // namespace rch
