// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rch/coefficients.hpp"
#include "rch/eulerian.hpp"
#include "rch/exp_scan.hpp"
#include "rch/experiments.hpp"
#include "rch/initial_data.hpp"
#include "rch/kernels.hpp"
#include "rch/lagrangian.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/spectral.hpp"
#include "test_support.hpp"

using namespace rch;
using rch_test::kPi;
using rch_test::max_diff;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "" : "[failed] ") << what << "; ";
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void require_verdicts(Outcome& out, const ExperimentReport& rep, const std::vector<std::string>& keys,
                      const std::string& label = "") {
  const std::string head = rep.name + (label.empty() ? "" : "[" + label + "]") + ".";
  for (const auto& k : keys) {
    const Verdict& v = rep.verdict(k);
    out.require(v.pass, head + k + " = " + fmt(v.value) + " (" + v.criterion + ")");
  }
}

void require_all(Outcome& out, const ExperimentReport& rep) {
  for (const auto& [k, v] : rep.verdicts)
    out.require(v.pass, rep.name + "." + k + " = " + fmt(v.value) + " (" + v.criterion + ")");
}

Outcome coefficient_pipeline() {
  Outcome out;
  const auto p = derive_coefficients(0.0);
  out.require(p.c == 1.0 && p.alpha == 0.5 && p.beta0 == 0.25 && p.beta == 5.0 / 12.0 && p.omega1 == 0.0 &&
                  p.omega2 == 0.0,
              "exact classical coefficients");
  const double dev = std::max({std::abs(p.gamma - 0.2), std::abs(p.c1 - 1.0), std::abs(p.c2), std::abs(p.c3)});
  out.require(dev <= 1e-14, "gamma, c1, c2, c3 deviation " + fmt(dev));
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const auto q = derive_coefficients(0.1 * i);
    worst = std::max(worst, gamma_residual(q, q.gamma));
  }
  out.require(worst <= 1e-12, "sweep residual " + fmt(worst));
  return out;
}

Outcome littlewood_paley_suite() {
  Outcome out;
  const PeriodicGrid g(64.0 * kPi, std::size_t{1} << 17);
  const DyadicFilterBank bank(g);
  out.require(bank.partition_defect() <= 1e-12, "partition defect " + fmt(bank.partition_defect()));

  const Field f = rch_test::random_bandlimited(g, g.size() / 3, 21);
  Field sum(g);
  for (int j = -1; j <= bank.j_max(); ++j) sum += bank.block(f, j);
  const double rec = lp_norm(sum - f, 2.0) / lp_norm(f, 2.0);
  out.require(rec <= 1e-11, "reconstruction " + fmt(rec));

  // Band-limited below 2^{j_max + 1}, where the folded tail vanishes.
  const std::size_t top = static_cast<std::size_t>(std::ldexp(1.0, bank.j_max() + 1) / g.dk());
  const Field h = rch_test::random_bandlimited(g, top, 22);
  bool bernstein = true;
  for (int j = 0; j <= bank.j_max(); ++j) {
    const Field b = bank.block(h, j);
    bernstein = bernstein && lp_norm(spectral::ddx(b), 2.0) <= (8.0 / 3.0) * std::ldexp(1.0, j) * lp_norm(b, 2.0);
  }
  out.require(bernstein, "Bernstein 8/3 at every level");

  const PeriodicGrid torus(2.0 * kPi, 512);
  const Field mode = Field::sample(torus, [](double x) { return std::cos(64.0 * x); });
  const double single = DyadicFilterBank(torus).besov_norm(mode, {2.0, kInf, 1.0});
  out.require(std::abs(single / 1024.0 - 1.0) <= 1e-3, "single-block norm " + fmt(single));
  return out;
}

Outcome solver_correctness() {
  Outcome out;
  const auto p = derive_coefficients(0.5);
  {
    const Field u0 = smoke_data(32);
    auto end_state = [&](double dt) {
      SolverConfig cfg;
      cfg.dt = dt;
      cfg.t_end = 2.0;
      cfg.snapshot_every = 1 << 20;
      return solve(u0, p, cfg).states.back();
    };
    const Field ref = end_state(0.2 / 64);
    const double order = std::log2(max_diff(end_state(0.1), ref) / max_diff(end_state(0.05), ref));
    out.require(order >= 3.8, "RK4 order " + fmt(order));
  }
  {
    const Field u0 = smoke_data(4096);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.snapshot_every = 10;
    const auto tr = solve(u0, derive_coefficients(0.0), cfg);
    const double e0 = h1_integral(u0);
    double drift = 0.0;
    for (const auto& s : tr.states) drift = std::max(drift, std::abs(h1_integral(s) - e0) / e0);
    out.require(drift <= 1e-6, "H1 drift " + fmt(drift));
  }
  {
    const Field u0 = smoke_data(512);
    SolverConfig cfg;
    cfg.dt = 1e-2;
    cfg.t_end = 1.0;
    cfg.snapshot_every = 10;
    const auto lag = lagrangian_solve(u0, p, cfg);
    const auto eul = solve(u0, p, cfg);
    double worst = 0.0;
    for (std::size_t k = 0; k < lag.size(); ++k)
      worst = std::max(worst, max_diff(pullback_to_eulerian(lag[k], u0.grid()), eul.states[k]));
    out.require(worst <= 1e-4, "Eulerian/Lagrangian L-inf " + fmt(worst));
  }
  {
    const std::size_t n = 512;
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> step(0.2, 1.8), val(-1.0, 1.0);
    std::vector<double> y(n), w(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = acc;
      acc += step(gen);
      w[i] = val(gen);
    }
    const double period = acc;
    double worst = 0.0;
    for (ScanKind kind : {ScanKind::Signed, ScanKind::Unsigned}) {
      const auto fast = exp_scan_split(w, y, 0.05, kind, period);
      std::vector<double> slow(n);
      kernels::serial::exp_kernel_direct(w, y, 0.05, period, kind, slow);
      double d = 0.0, m = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        d = std::max(d, std::abs(fast[i] - slow[i]));
        m = std::max(m, std::abs(slow[i]));
      }
      worst = std::max(worst, d / m);
    }
    out.require(worst <= 1e-10, "scan vs brute force " + fmt(worst));
  }
  return out;
}

Outcome data_certifications() {
  Outcome out;
  const BumpProfile bump = build_psi(PeriodicGrid(64.0 * kPi, std::size_t{1} << 18));
  for (const auto& [s, p] : std::vector<std::pair<double, double>>{{2.0, 2.0}, {1.5, 2.0}, {2.0, 1.0}})
    require_verdicts(out, certify_data(bump, {5, 6, 7, 8, 9}, s, p),
                     {"w0n_besov_s_minus_1_slope", "w0n_besov_s_slope", "w0n_besov_s_plus_1_slope",
                      "v0n_besov_slope", "psii_constant", "low_product_constant"},
                     "s=" + fmt(s) + ",p=" + fmt(p));
  return out;
}

Outcome drift_rate() {
  Outcome out;
  require_verdicts(out, run_decomposition_rates({2.5, 2.0, 2.0}, CampaignConfig{}, 9), {"w_drift_slope"});
  return out;
}

Outcome t_expansions() {
  Outcome out;
  require_verdicts(out, run_decomposition_rates({2.0, 2.0, 2.0}, CampaignConfig{}, 9), {"residual_t_exponent"});
  require_verdicts(out, run_critical_expansion(2.0, CampaignConfig{}, 9), {"residual_t_exponent"});
  return out;
}

Outcome nonuniform_dependence() {
  Outcome out;
  const CampaignConfig cfg;
  const std::vector<std::string> keys{"initial_gap_slope", "kappa_positive"};
  require_verdicts(out, run_nonuniform_supercritical({2.0, 2.0, 2.0}, cfg), keys);
  require_verdicts(out, run_nonuniform_critical(2.0, cfg), keys, "p=2");
  require_verdicts(out, run_nonuniform_critical(1.0, cfg), keys, "p=1");
  return out;
}

Outcome continuity() {
  Outcome out;
  CampaignConfig cfg;
  cfg.n_points = 4096;
  for (const BesovIndex& idx : {BesovIndex{2.0, 2.0, 2.0}, BesovIndex{1.5, 2.0, 1.0}})
    require_verdicts(out, run_continuous_dependence(idx, {0.0, 1e-2, 1e-3, 1e-4}, cfg),
                     {"zero_eps", "distance_decreasing"}, "s=" + fmt(idx.s) + ",r=" + fmt(idx.r));
  return out;
}

Outcome picard() {
  Outcome out;
  SolverConfig cfg;
  cfg.t_end = 0.0;
  cfg.dt = 0.0;
  require_all(out, run_picard_convergence(smoke_data(), 0.5, 8, cfg));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"coefficient pipeline", coefficient_pipeline},
      {"Littlewood-Paley suite", littlewood_paley_suite},
      {"solver correctness", solver_correctness},
      {"data-family certifications", data_certifications},
      {"high-frequency drift rate", drift_rate},
      {"t-expansion residuals", t_expansions},
      {"non-uniform dependence", nonuniform_dependence},
      {"continuous dependence", continuity},
      {"Picard scheme", picard},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "error: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << fmt(secs)
              << " s): " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
