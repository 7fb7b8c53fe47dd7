#pragma once

#include <vector>

#include "rch/grid.hpp"
#include "rch/report.hpp"

namespace rch {

/// Even band-limited bump: psi_hat = 1 on |xi| <= 1/4, 0 on |xi| >= 1/2.
struct BumpProfile {
  PeriodicGrid grid;
  Field psi;
  double psi_hat_plateau = 0.25;
  double psi_hat_support = 0.5;
};

/// The smooth plateau symbol of psi, evaluated on the real line.
double psi_hat(double xi) noexcept;

/// Throws InvalidParameter unless 2 pi / L <= 1/32.
BumpProfile build_psi(const PeriodicGrid& grid);

/// Lattice frequency nearest to (33/24) 2^n and the relative snap
/// |k_n - (33/24) 2^n| / 2^n.
struct Modulation {
  double target = 0.0;
  double k = 0.0;
  double snap = 0.0;
};
Modulation modulation_frequency(const PeriodicGrid& grid, int n);

/// Largest n whose side-bands k_n +- 1/2 fit under the 2/3 cap.
int max_feasible_n(const PeriodicGrid& grid);

/// 2^{-ns} psi(x) sin(k_n x).
Field make_w0n(const BumpProfile& bump, int n, double s);
/// (24/33) 2^{-n} psi(x).
Field make_v0n(const BumpProfile& bump, int n);

struct DataFamily {
  int n = 0;
  double s = 0.0;
  Modulation modulation;
  Field w0n;
  Field v0n;
  Field u0n;
  /// -u0n * d_x u0n (dealiased).
  Field z0n;
};
DataFamily make_family(const BumpProfile& bump, int n, double s);

/// Per-n table and its top-half minimum (the empirical liminf).
struct NormTable {
  Table table;
  double empirical_constant = 0.0;
  double top_half_spread = 0.0;
};

/// ||psi^2 cos(k_n .)||_{L^a} over n_list.
NormTable check_psii(const BumpProfile& bump, double a, const std::vector<int>& n_list);
/// ||v0n d_x w0n||_{B^s_{p,inf}} over n_list, with the level attaining the sup.
NormTable check_low_product(const BumpProfile& bump, const std::vector<int>& n_list, double s, double p);

/// Scaling-law certification of the data families: rate fits for w0n in
/// B^{s-1}, B^s, B^{s+1}, for ||d_x w0n||_{L^p}, ||v0n||_{B^s}, and the
/// empirical constants of the two lim-inf bounds.
ExperimentReport certify_data(const BumpProfile& bump, const std::vector<int>& n_list, double s, double p);

}  // namespace rch
