#pragma once

#include <vector>

#include "rch/coefficients.hpp"
#include "rch/eulerian.hpp"
#include "rch/grid.hpp"

namespace rch {

/// Flow-map variables on a uniform label grid, one period of the torus.
struct LagrangianState {
  double time = 0.0;
  double period = 0.0;
  std::vector<double> labels;
  std::vector<double> y;
  std::vector<double> y_xi;
  std::vector<double> U;
  std::vector<double> U_xi;

  std::size_t size() const noexcept { return labels.size(); }
  double label_spacing() const noexcept { return period / static_cast<double>(labels.size()); }
};

struct LagrangianDerivative {
  std::vector<double> y;
  std::vector<double> y_xi;
  std::vector<double> U;
  std::vector<double> U_xi;
};

/// y = xi, y_xi = 1, U = u0, U_xi = spectral d_x u0 on the grid points.
LagrangianState initial_lagrangian_state(const Field& u0);

/// Time derivative of (y, y_xi, U, U_xi). The kernel integrals run in label
/// space (dx = y_eta deta) through exp_scan_split, with the kink of the
/// kernel at the node handled by an endpoint-corrected trapezoid rule.
LagrangianDerivative lagrangian_rhs(const LagrangianState& state, const ModelParams& params);

/// RK4 on lagrangian_rhs; the first state is the t = 0 identity flow.
std::vector<LagrangianState> lagrangian_solve(const Field& u0, const ModelParams& params,
                                              const SolverConfig& cfg);

/// u = U o y^{-1} on the grid by periodic monotone cubic interpolation.
Field pullback_to_eulerian(const LagrangianState& state, const PeriodicGrid& grid);

/// Per snapshot: ||U1 - U2||_{W^{1,inf} cap W^{1,p}} + ||y1 - y2||_{W^{1,inf} cap W^{1,p}},
/// each intersection norm being the sum of the two W^{1,q} norms; label
/// derivatives are the carried U_xi and y_xi.
std::vector<double> stability_distance(const std::vector<LagrangianState>& a,
                                       const std::vector<LagrangianState>& b, double p);

/// Largest relative gap between y_xi and exp(int_0^t U_xi / y_xi dtau),
/// the integral taken over the stored snapshots by the trapezoid rule with
/// its derivative end correction.
double flow_map_exponential_defect(const std::vector<LagrangianState>& states, const ModelParams& params);

}  // namespace rch
