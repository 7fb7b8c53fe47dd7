#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "rch/eulerian.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/report.hpp"

namespace rch {

/// Grid, model and sampling shared by the data-family campaigns.
struct CampaignConfig {
  double length = 64.0 * std::numbers::pi;
  std::size_t n_points = std::size_t{1} << 18;
  double omega = 0.5;
  std::vector<int> n_list{5, 6, 7, 8, 9};
  /// The time grid is T0 * j / t_points, j = 0..t_points.
  int t_points = 8;
  /// Upper bound on the time step; 0 uses 8 steps per grid interval.
  double dt = 0.0;
  double kappa = 0.1;
};

/// s > max(3/2, 1 + 1/p).
bool is_supercritical(const BesovIndex& idx) noexcept;

/// ||u - w||_{B^s} / t bounds along the high-frequency family with and
/// without the low-frequency shift v0n.
ExperimentReport run_nonuniform_supercritical(const BesovIndex& idx, const CampaignConfig& cfg);
/// Same pipeline at s = 1 + 1/p, r = 1, for p in [1, 2].
ExperimentReport run_nonuniform_critical(double p, const CampaignConfig& cfg);

/// Drift rate of w^n, the t^2 remainder of u^n - u0n - t z0n at n_fixed,
/// and the B^{s +- 1} growth of w^n.
ExperimentReport run_decomposition_rates(const BesovIndex& idx, const CampaignConfig& cfg, int n_fixed);
/// t^2 remainder of u^n - u0n - t h(u0n) at the critical index and the
/// size of the Q(u0n) bound across n.
ExperimentReport run_critical_expansion(double p, const CampaignConfig& cfg, int n_fixed);

/// Fixed smooth datum plus eps * bump; the grid must admit build_psi.
ExperimentReport run_continuous_dependence(const BesovIndex& idx, const std::vector<double>& eps_list,
                                           const CampaignConfig& cfg);

/// Small smooth datum on the 2 pi torus used for solver cross-checks.
Field smoke_data(std::size_t n_points = 256);

/// Successive-iterate distances in B^{s-1}_{p,r}, checked against solve().
/// cfg.t_end <= 0 selects the kappa-horizon of u0 in B^s_{p,r}; cfg.dt <= 0
/// (or above t_end) selects t_end / 16.
ExperimentReport run_picard_convergence(const Field& u0, double omega, int m_max, SolverConfig cfg,
                                        const BesovIndex& idx = {2.0, 2.0, 2.0});

}  // namespace rch
