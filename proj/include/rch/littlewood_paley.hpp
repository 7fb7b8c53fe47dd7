#pragma once

#include <limits>
#include <span>
#include <vector>

#include "rch/fourier.hpp"
#include "rch/grid.hpp"

namespace rch {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// C-infinity transition: 0 for t <= 0, 1 for t >= 1, built from exp(-1/t).
double smooth_step(double t) noexcept;

/// Dyadic low-pass cutoff: 1 on |xi| <= 1, 0 on |xi| >= 4/3.
double lp_chi(double xi) noexcept;
/// Annulus cutoff chi(xi/2) - chi(xi), supported in 1 <= |xi| <= 8/3.
double lp_phi(double xi) noexcept;

struct BesovIndex {
  double s = 0.0;
  double p = 2.0;
  double r = 2.0;
};

/// Validates p, r in [1, infinity].
void validate(const BesovIndex& idx);

/// Lattice quadrature L^p norm (spacing-weighted; p = infinity takes the max).
double lp_norm(const Field& f, double p);
double sobolev_h_norm(const Field& f, double s);
/// ||f||_{L^p} + ||d_x f||_{L^p}.
double w1p_norm(const Field& f, double p);

/// Per-block data behind a Besov norm.
struct BesovProfile {
  std::vector<int> levels;               // -1 .. j_max
  std::vector<double> block_lp;          // ||Delta_j f||_{L^p}
  std::vector<double> weighted;          // 2^{js} ||Delta_j f||_{L^p}
  double norm = 0.0;
  /// L^2 size of the modes beyond the complete partition (folded into j_max).
  double tail_l2 = 0.0;
};

/// The chi / phi(2^{-j} .) family sampled on the lattice frequencies of a grid.
/// Block j_max also carries the high-frequency tail 1 - chi(xi / 2^{j_max+1}),
/// so the stored multipliers partition unity on every lattice mode.
class DyadicFilterBank {
 public:
  explicit DyadicFilterBank(const PeriodicGrid& grid);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  int j_max() const noexcept { return j_max_; }

  /// Stored multiplier of block j, half-spectrum indexed; j in [-1, j_max].
  std::span<const double> multiplier(int j) const;
  /// Multiplier of the high-frequency tail folded into block j_max.
  std::span<const double> tail_multiplier() const noexcept { return tail_; }

  /// max over lattice modes of |sum_j multiplier_j - 1|.
  double partition_defect() const;

  /// Delta_j f. j <= -2 gives zero; j > j_max throws.
  Field block(const Field& f, int j) const;
  /// S_j f = sum_{j' < j} Delta_{j'} f.
  Field low_sum(const Field& f, int j) const;

  std::vector<double> block_lp_norms(const Field& f, double p) const;
  /// Serial reference of block_lp_norms (no OpenMP over blocks).
  std::vector<double> block_lp_norms_serial(const Field& f, double p) const;

  BesovProfile besov_profile(const Field& f, const BesovIndex& idx) const;
  double besov_norm(const Field& f, const BesovIndex& idx) const;

 private:
  std::vector<double> block_norms_from_spectrum(const Spectrum& s, double p, bool parallel) const;

  PeriodicGrid grid_;
  int j_max_;
  std::vector<std::vector<double>> mult_;  // index j + 1
  std::vector<double> tail_;
  std::vector<double> plancherel_;         // L^2 weights per half-spectrum mode
};

/// l^r aggregation of a sequence (r = infinity takes the max).
double lr_aggregate(std::span<const double> a, double r);

}  // namespace rch
