#include "rch/eulerian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rch/error.hpp"
#include "rch/kernels.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/spectral.hpp"

namespace rch {

RchOperator::RchOperator(const PeriodicGrid& grid, const ModelParams& params, bool dealias)
    : grid_(grid), params_(params), dealias_(dealias), fft_(grid.size()) {
  const std::size_t half = grid.spectrum_size();
  k_.resize(half);
  grad_p_.resize(half);
  for (std::size_t m = 0; m < half; ++m) {
    const double k = grid.wavenumber(m);
    k_[m] = k;
    grad_p_[m] = k / (1.0 + k * k);
  }
  k_.back() = 0.0;
  grad_p_.back() = 0.0;
}

void RchOperator::maybe_truncate(Spectrum& s) const {
  if (dealias_) spectral::truncate_spectrum(s, grid_.size());
}

void RchOperator::flux_spectra(const Field& u, Spectrum& flux, Spectrum* advection) const {
  const std::size_t n = grid_.size();
  const std::size_t half = grid_.spectrum_size();
  Spectrum uh = fft_.forward(u.values());
  maybe_truncate(uh);

  std::vector<double> ut(n), ux(n), work(n);
  fft_.inverse(uh, ut);
  Spectrum dh(half);
  for (std::size_t m = 0; m < half; ++m) dh[m] = Complex(-k_[m] * uh[m].imag(), k_[m] * uh[m].real());
  fft_.inverse(dh, ux);

  const double c1 = params_.c1, c2 = params_.c2, c3 = params_.c3;
  const bool higher = (c2 != 0.0 || c3 != 0.0);
  std::vector<double> sq;
  if (higher) {
    sq.resize(n);
    kernels::parallel::multiply(ut, ut, sq);
    if (dealias_) {
      Spectrum qh = fft_.forward(sq);
      maybe_truncate(qh);
      fft_.inverse(qh, sq);
    }
  }

  const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < ni; ++i) {
    const double a = ut[i];
    double f = 0.5 * ux[i] * ux[i] + c1 * a * a;
    if (higher) f += c2 * sq[i] * a + c3 * sq[i] * sq[i];
    work[i] = f;
  }
  flux.resize(half);
  fft_.forward(work, flux);
  maybe_truncate(flux);

  if (advection) {
    kernels::parallel::multiply(ut, ux, work);
    advection->resize(half);
    fft_.forward(work, *advection);
    maybe_truncate(*advection);
  }
}

Field RchOperator::rhs_g(const Field& u) const {
  if (!(u.grid() == grid_)) throw GridMismatch("operator and field grids differ");
  Spectrum flux;
  flux_spectra(u, flux, nullptr);
  for (std::size_t m = 0; m < flux.size(); ++m) {
    const Complex f = flux[m];
    flux[m] = Complex(grad_p_[m] * f.imag(), -grad_p_[m] * f.real());  // -i g f
  }
  Field out(grid_);
  fft_.inverse(flux, out.values());
  return out;
}

Field RchOperator::full_rhs(const Field& u) const {
  if (!(u.grid() == grid_)) throw GridMismatch("operator and field grids differ");
  Spectrum flux, adv;
  flux_spectra(u, flux, &adv);
  for (std::size_t m = 0; m < flux.size(); ++m) {
    const Complex f = flux[m];
    flux[m] = Complex(grad_p_[m] * f.imag(), -grad_p_[m] * f.real()) - adv[m];
  }
  Field out(grid_);
  fft_.inverse(flux, out.values());
  return out;
}

Field RchOperator::transport_rhs(const Field& a, const Field& v, const Field& g) const {
  require_same_grid(a, v);
  require_same_grid(a, g);
  if (!(a.grid() == grid_)) throw GridMismatch("operator and field grids differ");
  const std::size_t n = grid_.size();
  const std::size_t half = grid_.spectrum_size();

  Spectrum vh = fft_.forward(v.values());
  maybe_truncate(vh);
  for (std::size_t m = 0; m < half; ++m) vh[m] = Complex(-k_[m] * vh[m].imag(), k_[m] * vh[m].real());
  std::vector<double> vx(n), at(n);
  fft_.inverse(vh, vx);
  if (dealias_) {
    Spectrum ah = fft_.forward(a.values());
    maybe_truncate(ah);
    fft_.inverse(ah, at);
  } else {
    std::copy(a.values().begin(), a.values().end(), at.begin());
  }
  kernels::parallel::multiply(at, vx, vx);
  Spectrum ph = fft_.forward(vx);
  maybe_truncate(ph);
  Field out(grid_);
  fft_.inverse(ph, out.values());
  out *= -1.0;
  out += g;
  return out;
}

Field rhs_g(const Field& u, const ModelParams& params, bool dealias) {
  return RchOperator(u.grid(), params, dealias).rhs_g(u);
}

Field full_rhs(const Field& u, const ModelParams& params, bool dealias) {
  return RchOperator(u.grid(), params, dealias).full_rhs(u);
}

std::size_t Trajectory::nearest(double t) const {
  if (times.empty()) throw InvalidParameter("empty trajectory");
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end()) return times.size() - 1;
  const std::size_t i = static_cast<std::size_t>(it - times.begin());
  if (i > 0 && std::abs(times[i - 1] - t) <= std::abs(times[i] - t)) return i - 1;
  return i;
}

Field Trajectory::at(double t) const {
  if (times.empty()) throw InvalidParameter("empty trajectory");
  if (rates.size() != states.size()) throw InvalidParameter("dense output needs stored rates");
  if (t <= times.front()) return states.front();
  if (t >= times.back()) return states.back();
  auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times.begin()) - 1;
  const double span = times[k + 1] - times[k];
  const double th = (t - times[k]) / span;
  if (th == 0.0) return states[k];
  const double th2 = th * th, th3 = th2 * th;
  const double h00 = 2 * th3 - 3 * th2 + 1, h10 = th3 - 2 * th2 + th;
  const double h01 = -2 * th3 + 3 * th2, h11 = th3 - th2;
  Field out = h00 * states[k];
  out.axpy(h10 * span, rates[k]);
  out.axpy(h01, states[k + 1]);
  out.axpy(h11 * span, rates[k + 1]);
  return out;
}

namespace {

struct StepPlan {
  long steps;
  double dt;
};

StepPlan plan_steps(const SolverConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0)) throw InvalidParameter("dt and t_end must be positive");
  if (cfg.dt > cfg.t_end * (1.0 + 1e-12)) throw InvalidParameter("dt exceeds t_end");
  if (cfg.snapshot_every < 1) throw InvalidParameter("snapshot_every must be >= 1");
  // Shrink dt so that an integer number of steps lands exactly on t_end.
  const long steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  return {steps, cfg.t_end / static_cast<double>(steps)};
}

void guard_state(const Field& u, const SolverConfig& cfg, double t, double last_good) {
  const double m = u.max_abs();
  if (!u.all_finite() || !(m <= cfg.blowup_threshold)) {
    std::ostringstream os;
    os << "blow-up at t=" << t << " (max|u|=" << m << ")";
    throw BlowUp(os.str(), last_good);
  }
}

void guard_cfl(const Field& u, double dt, const SolverConfig& cfg, double t) {
  if (!cfg.check_cfl) return;
  const double m = u.max_abs();
  if (dt * m > 0.5 * u.grid().spacing()) {
    std::ostringstream os;
    os << "CFL violation at t=" << t << ": dt*max|u|=" << dt * m << " > " << 0.5 * u.grid().spacing();
    throw CflViolation(os.str());
  }
}

}  // namespace

Trajectory solve(const Field& u0, const ModelParams& params, const SolverConfig& cfg) {
  if (!u0.all_finite()) throw InvalidParameter("initial datum must be finite");
  const StepPlan plan = plan_steps(cfg);
  const RchOperator op(u0.grid(), params, cfg.dealias);
  const bool dense = cfg.snapshot_every == 1;

  Trajectory traj;
  traj.params = params;
  Field u = u0;
  traj.times.push_back(0.0);
  traj.states.push_back(u);

  const double h = plan.dt;
  for (long step = 0; step < plan.steps; ++step) {
    const double t = h * static_cast<double>(step);
    guard_cfl(u, h, cfg, t);
    Field k1 = op.full_rhs(u);
    if (dense) traj.rates.push_back(k1);
    Field stage = u;
    stage.axpy(0.5 * h, k1);
    Field k2 = op.full_rhs(stage);
    stage = u;
    stage.axpy(0.5 * h, k2);
    Field k3 = op.full_rhs(stage);
    stage = u;
    stage.axpy(h, k3);
    Field k4 = op.full_rhs(stage);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
    auto uv = u.values();
    const auto a = k1.values(), b = k2.values(), c = k3.values(), d = k4.values();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) uv[i] += h / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);

    const double t_next = h * static_cast<double>(step + 1);
    guard_state(u, cfg, t_next, t);
    if ((step + 1) % cfg.snapshot_every == 0 || step + 1 == plan.steps) {
      traj.times.push_back(t_next);
      traj.states.push_back(u);
    }
  }
  if (dense) traj.rates.push_back(op.full_rhs(u));
  return traj;
}

std::vector<Trajectory> picard_iterate(const Field& u0, const ModelParams& params, const SolverConfig& cfg,
                                       int m_iters) {
  if (m_iters < 1) throw InvalidParameter("picard_iterate needs m_iters >= 1");
  if (!u0.all_finite()) throw InvalidParameter("initial datum must be finite");
  const StepPlan plan = plan_steps(cfg);
  const RchOperator op(u0.grid(), params, cfg.dealias);
  const double h = plan.dt;

  std::vector<Trajectory> iterates;
  iterates.reserve(static_cast<std::size_t>(m_iters) + 1);
  {
    Trajectory zero;
    zero.params = params;
    for (long step = 0; step <= plan.steps; ++step) {
      zero.times.push_back(h * static_cast<double>(step));
      zero.states.emplace_back(u0.grid());
      zero.rates.emplace_back(u0.grid());
    }
    iterates.push_back(std::move(zero));
  }

  for (int m = 0; m < m_iters; ++m) {
    const Trajectory& prev = iterates.back();
    Trajectory next;
    next.params = params;
    Field v = u0;
    next.times.push_back(0.0);
    next.states.push_back(v);

    Field a_start = prev.states.front();
    Field g_start = op.rhs_g(a_start);
    for (long step = 0; step < plan.steps; ++step) {
      const double t = h * static_cast<double>(step);
      const Field a_mid = prev.at(t + 0.5 * h);
      const Field g_mid = op.rhs_g(a_mid);
      const Field& a_end = prev.states[static_cast<std::size_t>(step) + 1];
      Field g_end = op.rhs_g(a_end);

      Field k1 = op.transport_rhs(a_start, v, g_start);
      next.rates.push_back(k1);
      Field stage = v;
      stage.axpy(0.5 * h, k1);
      Field k2 = op.transport_rhs(a_mid, stage, g_mid);
      stage = v;
      stage.axpy(0.5 * h, k2);
      Field k3 = op.transport_rhs(a_mid, stage, g_mid);
      stage = v;
      stage.axpy(h, k3);
      Field k4 = op.transport_rhs(a_end, stage, g_end);
      v.axpy(h / 6.0, k1).axpy(h / 3.0, k2).axpy(h / 3.0, k3).axpy(h / 6.0, k4);

      const double t_next = h * static_cast<double>(step + 1);
      guard_state(v, cfg, t_next, t);
      next.times.push_back(t_next);
      next.states.push_back(v);
      a_start = a_end;
      g_start = std::move(g_end);
    }
    next.rates.push_back(op.transport_rhs(a_start, v, g_start));
    iterates.push_back(std::move(next));
  }
  return iterates;
}

double kappa_horizon(double data_norm, double kappa) {
  if (!(data_norm > 0.0)) throw InvalidParameter("kappa horizon needs a positive data norm");
  return kappa / (data_norm + data_norm * data_norm + data_norm * data_norm * data_norm);
}

double h1_integral(const Field& u) {
  const Field ux = spectral::ddx(u);
  return spectral::inner(u, u) + spectral::inner(ux, ux);
}

double lipschitz_monitor(const Field& u) {
  const double a = u.max_abs();
  return spectral::ddx(u).max_abs() + a + a * a + a * a * a;
}

}  // namespace rch
