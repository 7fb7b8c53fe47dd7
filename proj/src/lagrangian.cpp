#include "rch/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rch/error.hpp"
#include "rch/exp_scan.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/spectral.hpp"

namespace rch {
namespace {

void require_positive_jacobian(const LagrangianState& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s.y_xi[i] > 0.0)) {
      std::ostringstream os;
      os << "y_xi <= 0 at label index " << i << " (t=" << s.time << ")";
      throw DiffeomorphismViolation(os.str(), s.time);
    }
  }
  require_monotone(s.y, s.period, s.time);
}

LagrangianState advance(const LagrangianState& s, const LagrangianDerivative& d, double h) {
  LagrangianState out = s;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.y[i] += h * d.y[i];
    out.y_xi[i] += h * d.y_xi[i];
    out.U[i] += h * d.U[i];
    out.U_xi[i] += h * d.U_xi[i];
  }
  return out;
}

double lq(std::span<const double> v, double p, double h) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::abs(x), p);
  return std::pow(acc * h, 1.0 / p);
}

}  // namespace

LagrangianState initial_lagrangian_state(const Field& u0) {
  const auto& grid = u0.grid();
  LagrangianState s;
  s.period = grid.length();
  const std::size_t n = grid.size();
  s.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.labels[i] = grid.x(i);
  s.y = s.labels;
  s.y_xi.assign(n, 1.0);
  s.U.assign(u0.values().begin(), u0.values().end());
  const Field ux = spectral::ddx(u0);
  s.U_xi.assign(ux.values().begin(), ux.values().end());
  return s;
}

LagrangianDerivative lagrangian_rhs(const LagrangianState& s, const ModelParams& params) {
  require_positive_jacobian(s);
  const std::size_t n = s.size();
  const double h = s.label_spacing();
  const double c1 = params.c1, c2 = params.c2, c3 = params.c3;

  // Flux density in label space: (c1 U^2 + c2 U^3 + c3 U^4) y_xi + U_xi^2 / (2 y_xi).
  std::vector<double> w(n), flux(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = s.U[i], jac = s.y_xi[i], ux = s.U_xi[i];
    const double poly = u * u * (c1 + u * (c2 + c3 * u));
    w[i] = poly * jac + 0.5 * ux * ux / jac;
    flux[i] = poly + 0.5 * (ux / jac) * (ux / jac);
  }
  std::vector<double> odd = exp_scan_split(w, s.y, h, ScanKind::Signed, s.period);
  std::vector<double> even = exp_scan_split(w, s.y, h, ScanKind::Unsigned, s.period);

  LagrangianDerivative d;
  d.y = s.U;
  d.y_xi = s.U_xi;
  d.U.resize(n);
  d.U_xi.resize(n);
  const double corr = h * h / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wp = (w[(i + 1) % n] - w[(i + n - 1) % n]) / (2.0 * h);
    const double signed_integral = odd[i] - corr * wp;
    const double unsigned_integral = even[i] + h * w[i] - corr * s.y_xi[i] * w[i];
    d.U[i] = 0.5 * signed_integral;
    d.U_xi[i] = s.y_xi[i] * (flux[i] - 0.5 * unsigned_integral);
  }
  return d;
}

std::vector<LagrangianState> lagrangian_solve(const Field& u0, const ModelParams& params,
                                              const SolverConfig& cfg) {
  if (!u0.all_finite()) throw InvalidParameter("initial datum must be finite");
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0)) throw InvalidParameter("dt and t_end must be positive");
  if (cfg.snapshot_every < 1) throw InvalidParameter("snapshot_every must be >= 1");
  const double slope = spectral::ddx(u0).max_abs();
  if (!(slope * cfg.t_end < 1.0))
    throw InvalidParameter("||u0_x||_inf * t_end >= 1: flow map may lose monotonicity");

  const long steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  const double h = cfg.t_end / static_cast<double>(steps);

  std::vector<LagrangianState> out;
  LagrangianState s = initial_lagrangian_state(u0);
  out.push_back(s);
  for (long step = 0; step < steps; ++step) {
    const auto k1 = lagrangian_rhs(s, params);
    const auto k2 = lagrangian_rhs(advance(s, k1, 0.5 * h), params);
    const auto k3 = lagrangian_rhs(advance(s, k2, 0.5 * h), params);
    const auto k4 = lagrangian_rhs(advance(s, k3, h), params);
    for (std::size_t i = 0; i < s.size(); ++i) {
      s.y[i] += h / 6.0 * (k1.y[i] + 2.0 * k2.y[i] + 2.0 * k3.y[i] + k4.y[i]);
      s.y_xi[i] += h / 6.0 * (k1.y_xi[i] + 2.0 * k2.y_xi[i] + 2.0 * k3.y_xi[i] + k4.y_xi[i]);
      s.U[i] += h / 6.0 * (k1.U[i] + 2.0 * k2.U[i] + 2.0 * k3.U[i] + k4.U[i]);
      s.U_xi[i] += h / 6.0 * (k1.U_xi[i] + 2.0 * k2.U_xi[i] + 2.0 * k3.U_xi[i] + k4.U_xi[i]);
    }
    s.time = h * static_cast<double>(step + 1);
    require_positive_jacobian(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isfinite(s.U[i]) || std::abs(s.U[i]) > cfg.blowup_threshold)
        throw BlowUp("Lagrangian velocity left the bounded regime", h * static_cast<double>(step));
    }
    if ((step + 1) % cfg.snapshot_every == 0 || step + 1 == steps) out.push_back(s);
  }
  return out;
}

Field pullback_to_eulerian(const LagrangianState& s, const PeriodicGrid& grid) {
  const std::size_t n = s.size();
  if (n < 2) throw InvalidParameter("pullback needs at least two particles");
  require_monotone(s.y, s.period, s.time);
  const double L = s.period;

  // Periodic extension with one ghost node on each side.
  std::vector<double> xs(n + 2), vs(n + 2);
  xs[0] = s.y[n - 1] - L;
  vs[0] = s.U[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    xs[i + 1] = s.y[i];
    vs[i + 1] = s.U[i];
  }
  xs[n + 1] = s.y[0] + L;
  vs[n + 1] = s.U[0];

  const std::size_t m = n + 2;
  std::vector<double> delta(m - 1), tang(m, 0.0);
  for (std::size_t k = 0; k + 1 < m; ++k) delta[k] = (vs[k + 1] - vs[k]) / (xs[k + 1] - xs[k]);
  // Interior tangents; the ghost ends reuse the periodic neighbour slopes.
  for (std::size_t k = 1; k + 1 < m; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) {
      tang[k] = 0.0;
    } else {
      tang[k] = 0.5 * (delta[k - 1] + delta[k]);
    }
  }
  tang[0] = tang[n];
  tang[m - 1] = tang[1];
  // Fritsch-Carlson limiter keeps each cubic piece monotone.
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (delta[k] == 0.0) {
      tang[k] = 0.0;
      tang[k + 1] = 0.0;
      continue;
    }
    const double a = tang[k] / delta[k];
    const double b = tang[k + 1] / delta[k];
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      tang[k] = tau * a * delta[k];
      tang[k + 1] = tau * b * delta[k];
    }
  }

  Field out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double x = grid.x(j);
    const double base = xs[1];
    x = base + std::fmod(std::fmod(x - base, L) + L, L);
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t k = static_cast<std::size_t>(it - xs.begin());
    k = std::clamp<std::size_t>(k, 1, m - 1) - 1;
    const double span = xs[k + 1] - xs[k];
    const double t = (x - xs[k]) / span;
    const double t2 = t * t, t3 = t2 * t;
    out[j] = (2 * t3 - 3 * t2 + 1) * vs[k] + (t3 - 2 * t2 + t) * span * tang[k] +
             (-2 * t3 + 3 * t2) * vs[k + 1] + (t3 - t2) * span * tang[k + 1];
  }
  return out;
}

std::vector<double> stability_distance(const std::vector<LagrangianState>& a,
                                       const std::vector<LagrangianState>& b, double p) {
  if (a.size() != b.size()) throw GridMismatch("snapshot counts differ");
  if (!(p >= 1.0)) throw InvalidParameter("p must be >= 1");
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& s1 = a[k];
    const auto& s2 = b[k];
    if (s1.labels != s2.labels || s1.period != s2.period) throw GridMismatch("label grids differ");
    if (std::abs(s1.time - s2.time) > 1e-12 * std::max(1.0, std::abs(s1.time)))
      throw GridMismatch("snapshot times differ");
    const std::size_t n = s1.size();
    const double h = s1.label_spacing();
    std::vector<double> du(n), dux(n), dy(n), dyx(n);
    for (std::size_t i = 0; i < n; ++i) {
      du[i] = s1.U[i] - s2.U[i];
      dux[i] = s1.U_xi[i] - s2.U_xi[i];
      dy[i] = s1.y[i] - s2.y[i];
      dyx[i] = s1.y_xi[i] - s2.y_xi[i];
    }
    auto both = [&](const std::vector<double>& f, const std::vector<double>& fx) {
      return lq(f, kInf, h) + lq(fx, kInf, h) + lq(f, p, h) + lq(fx, p, h);
    };
    out.push_back(both(du, dux) + both(dy, dyx));
  }
  return out;
}

double flow_map_exponential_defect(const std::vector<LagrangianState>& states, const ModelParams& params) {
  if (states.empty()) return 0.0;
  const std::size_t n = states.front().size();
  std::vector<double> integral(n, 0.0);
  std::vector<double> prev_rate(n), prev_slope(n);
  auto rate_and_slope = [&](const LagrangianState& s, std::vector<double>& rate, std::vector<double>& slope) {
    const auto d = lagrangian_rhs(s, params);
    for (std::size_t i = 0; i < n; ++i) {
      rate[i] = s.U_xi[i] / s.y_xi[i];
      slope[i] = (d.U_xi[i] * s.y_xi[i] - s.U_xi[i] * d.y_xi[i]) / (s.y_xi[i] * s.y_xi[i]);
    }
  };
  rate_and_slope(states.front(), prev_rate, prev_slope);
  double worst = 0.0;
  std::vector<double> rate(n), slope(n);
  for (std::size_t k = 1; k < states.size(); ++k) {
    const double dt = states[k].time - states[k - 1].time;
    rate_and_slope(states[k], rate, slope);
    for (std::size_t i = 0; i < n; ++i) {
      integral[i] += 0.5 * dt * (prev_rate[i] + rate[i]) - dt * dt / 12.0 * (slope[i] - prev_slope[i]);
      const double predicted = std::exp(integral[i]);
      worst = std::max(worst, std::abs(states[k].y_xi[i] - predicted) / predicted);
    }
    prev_rate.swap(rate);
    prev_slope.swap(slope);
  }
  return worst;
}

}  // namespace rch
