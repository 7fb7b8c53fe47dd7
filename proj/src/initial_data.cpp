#include "rch/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rch/error.hpp"
#include "rch/fit.hpp"
#include "rch/littlewood_paley.hpp"
#include "rch/spectral.hpp"

namespace rch {

double psi_hat(double xi) noexcept { return 1.0 - smooth_step(4.0 * (std::abs(xi) - 0.25)); }

BumpProfile build_psi(const PeriodicGrid& grid) {
  if (grid.dk() > (1.0 / 32.0) * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "lattice frequency spacing " << grid.dk() << " exceeds 1/32; use L >= 64 pi";
    throw InvalidParameter(os.str());
  }
  const double scale = static_cast<double>(grid.size()) / grid.length();
  Spectrum spec(grid.spectrum_size());
  for (std::size_t m = 0; m < spec.size(); ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    spec[m] = Complex(scale * sign * psi_hat(grid.wavenumber(m)), 0.0);
  }
  return BumpProfile{grid, spectral::synthesize(grid, spec)};
}

Modulation modulation_frequency(const PeriodicGrid& grid, int n) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  Modulation out;
  out.target = (33.0 / 24.0) * std::ldexp(1.0, n);
  out.k = std::round(out.target / grid.dk()) * grid.dk();
  out.snap = std::abs(out.k - out.target) / std::ldexp(1.0, n);
  return out;
}

int max_feasible_n(const PeriodicGrid& grid) {
  const double cap = static_cast<double>(spectral::dealias_cutoff(grid.size())) * grid.dk();
  int n = 0;
  while (modulation_frequency(grid, n + 1).k + 0.5 <= cap) ++n;
  return n;
}

Field make_w0n(const BumpProfile& bump, int n, double s) {
  const Modulation mod = modulation_frequency(bump.grid, n);
  const double cap = static_cast<double>(spectral::dealias_cutoff(bump.grid.size())) * bump.grid.dk();
  if (mod.k + 0.5 > cap) {
    std::ostringstream os;
    os << "k_n + 1/2 = " << mod.k + 0.5 << " exceeds the dealias cap " << cap << "; maximal feasible n is "
       << max_feasible_n(bump.grid);
    throw InvalidParameter(os.str());
  }
  const double amp = std::pow(2.0, -n * s);
  Field out(bump.grid);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = amp * bump.psi[i] * std::sin(mod.k * bump.grid.x(i));
  return out;
}

Field make_v0n(const BumpProfile& bump, int n) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  return (24.0 / 33.0) * std::ldexp(1.0, -n) * bump.psi;
}

DataFamily make_family(const BumpProfile& bump, int n, double s) {
  DataFamily d{n, s, modulation_frequency(bump.grid, n), make_w0n(bump, n, s), make_v0n(bump, n),
               Field(bump.grid), Field(bump.grid)};
  d.u0n = d.w0n + d.v0n;
  d.z0n = -1.0 * spectral::product(d.u0n, spectral::ddx(d.u0n), true);
  return d;
}

namespace {

void close_table(NormTable& out, const std::string& column) {
  const auto values = out.table.column(column);
  const std::vector<double> top(values.begin() + static_cast<std::ptrdiff_t>(top_half_start(values.size())),
                                values.end());
  double lo = top.empty() ? 0.0 : top.front();
  for (double v : top) lo = std::min(lo, v);
  out.empirical_constant = lo;
  out.top_half_spread = top.empty() || lo <= 0.0 ? 0.0 : relative_spread(top);
}

}  // namespace

NormTable check_psii(const BumpProfile& bump, double a, const std::vector<int>& n_list) {
  if (!(a >= 1.0)) throw InvalidParameter("a must lie in [1, inf]");
  NormTable out;
  out.table.columns = {"n", "k_n", "norm"};
  for (int n : n_list) {
    const Modulation mod = modulation_frequency(bump.grid, n);
    Field f(bump.grid);
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] = bump.psi[i] * bump.psi[i] * std::cos(mod.k * bump.grid.x(i));
    out.table.add({static_cast<double>(n), mod.k, lp_norm(f, a)});
  }
  close_table(out, "norm");
  return out;
}

NormTable check_low_product(const BumpProfile& bump, const std::vector<int>& n_list, double s, double p) {
  const DyadicFilterBank bank(bump.grid);
  NormTable out;
  out.table.columns = {"n", "k_n", "norm", "peak_level"};
  for (int n : n_list) {
    const Field w = make_w0n(bump, n, s);
    const Field v = make_v0n(bump, n);
    const Field prod = spectral::product(v, spectral::ddx(w), true);
    const BesovProfile prof = bank.besov_profile(prod, {s, p, kInf});
    std::size_t peak = 0;
    for (std::size_t j = 1; j < prof.weighted.size(); ++j)
      if (prof.weighted[j] > prof.weighted[peak]) peak = j;
    out.table.add({static_cast<double>(n), modulation_frequency(bump.grid, n).k, prof.norm,
                   static_cast<double>(prof.levels[peak])});
  }
  close_table(out, "norm");
  return out;
}

ExperimentReport certify_data(const BumpProfile& bump, const std::vector<int>& n_list, double s, double p) {
  if (n_list.size() < 2) throw InvalidParameter("certification needs at least two values of n");
  const DyadicFilterBank bank(bump.grid);
  ExperimentReport rep;
  rep.name = "data-certification";
  rep.param("L", bump.grid.length());
  rep.param("N", static_cast<double>(bump.grid.size()));
  rep.param("s", s);
  rep.param("p", p);
  rep.table.columns = {"n", "k_n", "snap", "w_B_s-1", "w_B_s", "w_B_s+1", "dxw_Lp", "v_B_s", "v_Lp",
                       "psii_La", "low_product"};

  const NormTable psii = check_psii(bump, p, n_list);
  const NormTable low = check_low_product(bump, n_list, s, p);
  const double psi_lp = lp_norm(bump.psi, p);
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    const int n = n_list[k];
    const Field w = make_w0n(bump, n, s);
    const Field v = make_v0n(bump, n);
    const Modulation mod = modulation_frequency(bump.grid, n);
    rep.table.add({static_cast<double>(n), mod.k, mod.snap, bank.besov_norm(w, {s - 1.0, p, 2.0}),
                   bank.besov_norm(w, {s, p, 2.0}), bank.besov_norm(w, {s + 1.0, p, 2.0}),
                   lp_norm(spectral::ddx(w), p), bank.besov_norm(v, {s, p, 2.0}), lp_norm(v, p),
                   psii.table.rows[k][2], low.table.rows[k][2]});
  }

  const auto ns = rep.table.column("n");
  auto slope_check = [&](const std::string& col, double expected, double tol, const std::string& label) {
    const LineFit f = fit_log_y(ns, rep.table.column(col));
    rep.add_fit(col, f, "log2 " + col + " vs n");
    std::ostringstream crit;
    crit << "|slope - (" << expected << ")| <= " << tol;
    rep.add_verdict(label, {std::abs(f.slope - expected) <= tol, f.slope, crit.str(), ""});
  };
  slope_check("w_B_s-1", -1.0, 0.05, "w0n_besov_s_minus_1_slope");
  slope_check("w_B_s", 0.0, 0.05, "w0n_besov_s_slope");
  slope_check("w_B_s+1", 1.0, 0.05, "w0n_besov_s_plus_1_slope");
  slope_check("dxw_Lp", 1.0 - s, 0.05, "dx_w0n_lp_slope");
  slope_check("v_B_s", -1.0, 0.05, "v0n_besov_slope");

  const double v_ratio_err = [&] {
    double worst = 0.0;
    const auto vl = rep.table.column("v_Lp");
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const double exact = (24.0 / 33.0) * std::pow(2.0, -ns[k]) * psi_lp;
      worst = std::max(worst, std::abs(vl[k] - exact) / exact);
    }
    return worst;
  }();
  rep.add_verdict("v0n_lp_homogeneity", {v_ratio_err <= 1e-12, v_ratio_err, "relative error <= 1e-12", ""});

  auto constant_check = [&](const NormTable& t, const std::string& label) {
    std::ostringstream detail;
    detail << "top-half relative spread " << t.top_half_spread;
    rep.add_verdict(label, {t.empirical_constant > 0.0 && t.top_half_spread <= 0.10, t.empirical_constant,
                            "constant > 0 and top-half spread <= 10%", detail.str()});
  };
  constant_check(psii, "psii_constant");
  constant_check(low, "low_product_constant");
  return rep;
}

}  // namespace rch
