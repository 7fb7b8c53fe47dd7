#pragma once

#include <vector>

#include "rch/coefficients.hpp"
#include "rch/fourier.hpp"
#include "rch/grid.hpp"

namespace rch {

enum class TimeScheme { Rk4 };

struct SolverConfig {
  double dt = 1e-2;
  double t_end = 1.0;
  bool dealias = true;
  int snapshot_every = 1;
  TimeScheme scheme = TimeScheme::Rk4;
  /// Any state with |u| above this (or non-finite) aborts the run.
  double blowup_threshold = 1e8;
  /// Enforce dt * max|u| <= 0.5 * spacing at every step.
  bool check_cfl = true;
};

/// Stored states of one run. `rates` (du/dt at the stored times) is filled
/// only when every step is stored; it feeds the dense-output interpolant.
struct Trajectory {
  std::vector<double> times;
  std::vector<Field> states;
  std::vector<Field> rates;
  ModelParams params;

  /// Cubic Hermite interpolation in time; needs `rates`.
  Field at(double t) const;
  /// Index of the stored time closest to t.
  std::size_t nearest(double t) const;
};

/// Right-hand sides of the weak-form equation on one grid. Multipliers are
/// precomputed; instances are immutable and shareable between threads.
class RchOperator {
 public:
  RchOperator(const PeriodicGrid& grid, const ModelParams& params, bool dealias);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  const ModelParams& params() const noexcept { return params_; }
  bool dealias() const noexcept { return dealias_; }

  /// G(u) = -d_x p*(u_x^2/2 + c1 u^2 + c2 u^3 + c3 u^4).
  Field rhs_g(const Field& u) const;
  /// -u u_x + G(u).
  Field full_rhs(const Field& u) const;
  /// -a v_x + g: the frozen-coefficient transport operator.
  Field transport_rhs(const Field& a, const Field& v, const Field& g) const;

 private:
  // Writes the spectrum of the (dealiased) flux and, optionally, of u u_x.
  void flux_spectra(const Field& u, Spectrum& flux, Spectrum* advection) const;
  void maybe_truncate(Spectrum& s) const;

  PeriodicGrid grid_;
  ModelParams params_;
  bool dealias_;
  Fourier fft_;
  std::vector<double> k_;
  std::vector<double> grad_p_;  // k / (1 + k^2), Nyquist zeroed
};

Field rhs_g(const Field& u, const ModelParams& params, bool dealias = true);
Field full_rhs(const Field& u, const ModelParams& params, bool dealias = true);

/// Classical RK4 for u_t = -u u_x + G(u).
Trajectory solve(const Field& u0, const ModelParams& params, const SolverConfig& cfg);

/// Picard / linear-transport iterates u^0 = 0, u^{m+1}_t + u^m u^{m+1}_x = G(u^m),
/// u^{m+1}(0) = u0. Returns m_iters + 1 trajectories (u^0 .. u^{m_iters}),
/// each stored at every step with rates for dense output.
std::vector<Trajectory> picard_iterate(const Field& u0, const ModelParams& params, const SolverConfig& cfg,
                                       int m_iters);

/// Time horizon kappa / (b + b^2 + b^3) for a data size b.
double kappa_horizon(double data_norm, double kappa = 0.1);

/// Integral of u^2 + u_x^2 over the torus (conserved by CH at omega = 0).
double h1_integral(const Field& u);

/// ||u_x||_inf + ||u||_inf + ||u||_inf^2 + ||u||_inf^3.
double lipschitz_monitor(const Field& u);

}  // namespace rch
