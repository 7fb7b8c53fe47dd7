#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rch/coefficients.hpp"
#include "rch/error.hpp"
#include "rch/eulerian.hpp"
#include "rch/experiments.hpp"
#include "rch/field_io.hpp"
#include "rch/initial_data.hpp"
#include "rch/lagrangian.hpp"
#include "rch/littlewood_paley.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Shared {
  double length = 0.0;
  std::size_t n_points = 0;
  double dt = 0.0;
  std::string out;
};

void add_shared(CLI::App* cmd, Shared& sh) {
  cmd->add_option("--L", sh.length, "torus length");
  cmd->add_option("--N", sh.n_points, "grid points (power of two)");
  cmd->add_option("--dt", sh.dt, "time step");
  cmd->add_option("--out", sh.out, "output path");
}

std::vector<rch::BesovIndex> parse_indices(const std::vector<std::string>& specs) {
  auto number = [](const std::string& t) { return t == "inf" ? rch::kInf : std::stod(t); };
  std::vector<rch::BesovIndex> out;
  for (const auto& spec : specs) {
    std::vector<std::string> parts;
    std::istringstream is(spec);
    for (std::string t; std::getline(is, t, ',');) parts.push_back(t);
    if (parts.size() != 3) throw rch::InvalidParameter("index must read s,p,r: " + spec);
    rch::BesovIndex idx{std::stod(parts[0]), number(parts[1]), number(parts[2])};
    rch::validate(idx);
    out.push_back(idx);
  }
  return out;
}

rch::Field initial_field(const std::string& init, const Shared& sh) {
  if (init != "smoke" && init != "cos" && init != "psi") return rch::io::read_field(init);
  const double pi = std::numbers::pi;
  const double length = sh.length > 0.0 ? sh.length : (init == "psi" ? 64.0 * pi : 2.0 * pi);
  const std::size_t n = sh.n_points > 0 ? sh.n_points : (init == "psi" ? 4096 : 256);
  const rch::PeriodicGrid grid(length, n);
  if (init == "psi") return rch::build_psi(grid).psi;
  if (init == "cos") return rch::Field::sample(grid, [](double x) { return std::cos(x); });
  return rch::Field::sample(grid, [](double x) { return 0.2 * std::cos(x) + 0.1 * std::sin(2.0 * x); });
}

json params_json(const rch::ModelParams& p) {
  return {{"omega", p.omega},   {"c", p.c},   {"alpha", p.alpha}, {"beta0", p.beta0}, {"beta", p.beta},
          {"omega1", p.omega1}, {"omega2", p.omega2}, {"gamma", p.gamma}, {"c0", p.c0}, {"c1", p.c1},
          {"c2", p.c2},         {"c3", p.c3}, {"gamma_multiple_roots", p.gamma_multiple_roots}};
}

rch::CampaignConfig campaign(const Shared& sh, double omega, const std::vector<int>& n_list, int t_points) {
  rch::CampaignConfig c;
  if (sh.length > 0.0) c.length = sh.length;
  if (sh.n_points > 0) c.n_points = sh.n_points;
  c.dt = sh.dt;
  c.omega = omega;
  if (!n_list.empty()) c.n_list = n_list;
  c.t_points = t_points;
  return c;
}

int finish(const rch::ExperimentReport& rep, const Shared& sh, const std::string& x, const std::string& y) {
  const fs::path dir = sh.out.empty() ? fs::path(rep.name) : fs::path(sh.out);
  rep.write(dir, x, y);
  std::cout << rep.name << ": " << (rep.all_pass() ? "all verdicts pass" : "some verdicts fail") << " ("
            << (dir / "report.json").string() << ")\n";
  for (const auto& [k, v] : rep.verdicts)
    std::cout << "  " << (v.pass ? "PASS " : "FAIL ") << k << " = " << v.value << "  [" << v.criterion << "]\n";
  return rep.all_pass() ? 0 : 2;
}

void write_norms(const rch::Trajectory& tr, const std::vector<rch::BesovIndex>& idx, const fs::path& path) {
  const rch::DyadicFilterBank bank(tr.states.front().grid());
  std::ofstream os(path);
  os << "t,L2,Linf,H1_integral";
  for (const auto& b : idx) os << ",B_" << b.s << "_" << b.p << "_" << b.r;
  os << '\n';
  char buf[64];
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const auto& u = tr.states[k];
    std::snprintf(buf, sizeof buf, "%.17g", tr.times[k]);
    os << buf;
    for (double v : {rch::lp_norm(u, 2.0), u.max_abs(), rch::h1_integral(u)}) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      os << buf;
    }
    for (const auto& b : idx) {
      std::snprintf(buf, sizeof buf, ",%.17g", bank.besov_norm(u, b));
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation Camassa-Holm solvers, Besov norms and non-uniform dependence campaigns"};
  app.require_subcommand(1);

  // coeffs
  double omega = 0.5;
  bool sweep = false;
  auto* coeffs = app.add_subcommand("coeffs", "derive the weak-form coefficients for a rotation speed");
  coeffs->add_option("--omega", omega, "rotation parameter")->capture_default_str();
  coeffs->add_flag("--sweep", sweep, "tabulate omega in [0, 2] with step 0.1");
  bool coeffs_json = false;
  coeffs->add_flag("--json", coeffs_json, "print a JSON object keyed by field name");

  // besov
  Shared sh;
  std::string in_file;
  std::vector<std::string> index_specs;
  std::string s_spec = "2", p_spec = "2", r_spec = "2";
  bool profile = false, as_json = false;
  auto* besov = app.add_subcommand("besov", "Besov, Sobolev and Lebesgue norms of a field file");
  besov->add_option("--input,--in", in_file, "field file (.csv or binary)")->required();
  besov->add_option("--s", s_spec, "smoothness")->capture_default_str();
  besov->add_option("--p", p_spec, "Lebesgue index (accepts inf)")->capture_default_str();
  besov->add_option("--r", r_spec, "summation index (accepts inf)")->capture_default_str();
  besov->add_option("--index", index_specs, "s,p,r in place of --s/--p/--r (repeatable, JSON output)");
  besov->add_flag("--json", as_json, "print a JSON summary instead of the block CSV");
  besov->add_flag("--profile", profile, "include per-block norms in the JSON summary");

  // solve
  std::string init = "smoke";
  double t_end = 1.0;
  int snapshot_every = 10;
  auto* solve_cmd = app.add_subcommand("solve", "RK4 pseudospectral solve");
  add_shared(solve_cmd, sh);
  solve_cmd->add_option("--omega", omega)->capture_default_str();
  solve_cmd->add_option("--init", init, "field file or builtin: smoke, cos, psi")->capture_default_str();
  solve_cmd->add_option("--tend", t_end)->capture_default_str();
  solve_cmd->add_option("--snapshot-every", snapshot_every)->capture_default_str();
  solve_cmd->add_option("--index", index_specs, "Besov index s,p,r for norms.csv (repeatable)");

  // lagrangian
  bool cross_check = false;
  auto* lag = app.add_subcommand("lagrangian", "characteristics solver with exponential scans");
  add_shared(lag, sh);
  lag->add_option("--omega", omega)->capture_default_str();
  lag->add_option("--init", init, "field file or builtin: smoke, cos, psi")->capture_default_str();
  lag->add_option("--tend", t_end)->capture_default_str();
  lag->add_option("--snapshot-every", snapshot_every)->capture_default_str();
  lag->add_flag("--cross-check", cross_check, "compare against the Eulerian solver");

  // data
  std::string family = "psi";
  int n = 5;
  double s = 2.0, p = 2.0, r = 2.0;
  bool certify = false;
  std::vector<int> n_list;
  auto* data = app.add_subcommand("data", "build or certify the high/low frequency data families");
  add_shared(data, sh);
  data->add_option("--family", family, "psi, w0n, v0n, u0n or z0n")
      ->check(CLI::IsMember({"psi", "w0n", "v0n", "u0n", "z0n"}))
      ->capture_default_str();
  data->add_option("--n", n)->capture_default_str();
  data->add_option("--s", s)->capture_default_str();
  data->add_option("--p", p, "Lebesgue index for --certify")->capture_default_str();
  data->add_option("--n-list", n_list, "n values for --certify");
  data->add_flag("--certify", certify, "emit the scaling-law certification table");

  // campaigns
  int t_points = 8;
  int n_fixed = 9;
  auto campaign_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    add_shared(c, sh);
    c->add_option("--omega", omega)->capture_default_str();
    c->add_option("--n-list", n_list, "high-frequency indices (default 5..9)");
    c->add_option("--t-points", t_points, "time samples in [0, T0]")->capture_default_str();
    return c;
  };
  auto* super = campaign_cmd("nonuniform-super", "non-uniform dependence, supercritical index");
  super->add_option("--s", s)->capture_default_str();
  super->add_option("--p", p)->capture_default_str();
  super->add_option("--r", r)->capture_default_str();
  auto* crit = campaign_cmd("nonuniform-critical", "non-uniform dependence at s = 1 + 1/p, r = 1");
  crit->add_option("--p", p)->capture_default_str();
  auto* decomp = campaign_cmd("decomp-rates", "drift and t-expansion rates of the data families");
  decomp->add_option("--s", s)->capture_default_str();
  decomp->add_option("--p", p)->capture_default_str();
  decomp->add_option("--r", r)->capture_default_str();
  decomp->add_option("--n-fixed", n_fixed)->capture_default_str();
  auto* cexp = campaign_cmd("critical-expansion", "t-expansion at the critical index and Q(u0n)");
  cexp->add_option("--p", p)->capture_default_str();
  cexp->add_option("--n-fixed", n_fixed)->capture_default_str();

  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  auto* cont = app.add_subcommand("continuity", "continuous dependence on the data");
  add_shared(cont, sh);
  cont->add_option("--omega", omega)->capture_default_str();
  cont->add_option("--s", s)->capture_default_str();
  cont->add_option("--p", p)->capture_default_str();
  cont->add_option("--r", r)->capture_default_str();
  cont->add_option("--eps", eps, "perturbation sizes")->capture_default_str();
  cont->add_option("--t-points", t_points)->capture_default_str();

  int m_max = 8;
  double picard_tend = 0.0;
  auto* picard = app.add_subcommand("picard", "Picard / linear-transport iteration convergence");
  add_shared(picard, sh);
  picard->add_option("--omega", omega)->capture_default_str();
  picard->add_option("--init", init, "field file or builtin: smoke, cos, psi")->capture_default_str();
  picard->add_option("--m", m_max, "number of iterates")->capture_default_str();
  picard->add_option("--tend", picard_tend, "final time (0: kappa-horizon)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coeffs) {
      if (!sweep) {
        const json j = params_json(rch::derive_coefficients(omega));
        if (coeffs_json) {
          std::cout << j.dump(2) << '\n';
        } else {
          for (const auto& [k, v] : j.items()) std::cout << k << " = " << v.dump() << '\n';
        }
        return 0;
      }
      std::cout << "omega,c,alpha,beta0,beta,omega1,omega2,gamma,c0,c1,c2,c3,gamma_roots\n";
      for (int k = 0; k <= 20; ++k) {
        const double w = 0.1 * k;
        try {
          const auto q = rch::derive_coefficients(w);
          std::printf("%.1f,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", w, q.c,
                      q.alpha, q.beta0, q.beta, q.omega1, q.omega2, q.gamma, q.c0, q.c1, q.c2, q.c3,
                      q.gamma_multiple_roots ? 3 : 1);
        } catch (const rch::InvalidParameter& e) {
          std::printf("%.1f,error: %s\n", w, e.what());
        }
      }
      return 0;
    }

    if (*besov) {
      const rch::Field f = rch::io::read_field(in_file);
      const rch::DyadicFilterBank bank(f.grid());
      if (index_specs.empty()) {
        index_specs = {s_spec + "," + p_spec + "," + r_spec};
        if (!as_json) {
          const rch::BesovIndex idx = parse_indices(index_specs).front();
          const auto prof = bank.besov_profile(f, idx);
          std::printf("norm,%.17g\ntail_l2,%.17g\nj,weighted_block\n", prof.norm, prof.tail_l2);
          for (std::size_t k = 0; k < prof.levels.size(); ++k)
            std::printf("%d,%.17g\n", prof.levels[k], prof.weighted[k]);
          return 0;
        }
      }
      json out;
      out["L"] = f.grid().length();
      out["N"] = f.grid().size();
      out["L2"] = rch::lp_norm(f, 2.0);
      out["Linf"] = f.max_abs();
      out["H1"] = rch::sobolev_h_norm(f, 1.0);
      out["j_max"] = bank.j_max();
      auto& arr = out["besov"] = json::array();
      for (const auto& idx : parse_indices(index_specs)) {
        const auto prof = bank.besov_profile(f, idx);
        json e = {{"s", idx.s}, {"p", std::isinf(idx.p) ? json("inf") : json(idx.p)},
                  {"r", std::isinf(idx.r) ? json("inf") : json(idx.r)}, {"norm", prof.norm},
                  {"tail_l2", prof.tail_l2}};
        if (profile) {
          e["levels"] = prof.levels;
          e["block_lp"] = prof.block_lp;
        }
        arr.push_back(e);
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*solve_cmd) {
      const rch::Field u0 = initial_field(init, sh);
      rch::SolverConfig cfg;
      cfg.t_end = t_end;
      cfg.dt = sh.dt > 0.0 ? sh.dt : std::min(1e-2, t_end);
      cfg.snapshot_every = snapshot_every;
      const auto tr = rch::solve(u0, rch::derive_coefficients(omega), cfg);
      const fs::path dir = sh.out.empty() ? fs::path("solve") : fs::path(sh.out);
      fs::create_directories(dir);
      for (std::size_t k = 0; k < tr.states.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "u_%04zu", k);
        rch::io::write_binary(tr.states[k], dir / (std::string(name) + ".bin"));
        rch::io::write_csv(tr.states[k], dir / (std::string(name) + ".csv"));
      }
      if (index_specs.empty()) index_specs = {"2,2,2"};
      write_norms(tr, parse_indices(index_specs), dir / "norms.csv");
      std::cout << "wrote " << tr.states.size() << " snapshots to " << dir.string() << '\n';
      return 0;
    }

    if (*lag) {
      const rch::Field u0 = initial_field(init, sh);
      const auto params = rch::derive_coefficients(omega);
      rch::SolverConfig cfg;
      cfg.t_end = t_end;
      cfg.dt = sh.dt > 0.0 ? sh.dt : std::min(1e-2, t_end);
      cfg.snapshot_every = snapshot_every;
      const auto states = rch::lagrangian_solve(u0, params, cfg);
      const fs::path dir = sh.out.empty() ? fs::path("lagrangian") : fs::path(sh.out);
      fs::create_directories(dir);
      for (std::size_t k = 0; k < states.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "state_%04zu.csv", k);
        std::ofstream os(dir / name);
        os << "xi,y,y_xi,U,U_xi\n";
        const auto& st = states[k];
        char buf[160];
        for (std::size_t i = 0; i < st.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", st.labels[i], st.y[i], st.y_xi[i],
                        st.U[i], st.U_xi[i]);
          os << buf;
        }
      }
      if (cross_check) {
        const auto tr = rch::solve(u0, params, cfg);
        rch::ExperimentReport rep;
        rep.name = "lagrangian-cross-check";
        rep.param("omega", omega);
        rep.param("t_end", t_end);
        rep.param("dt", cfg.dt);
        rep.table.columns = {"t", "linf_distance", "sup_U", "sup_u"};
        double worst = 0.0;
        for (std::size_t k = 0; k < states.size(); ++k) {
          const rch::Field pulled = rch::pullback_to_eulerian(states[k], u0.grid());
          const double d = (pulled - tr.states[k]).max_abs();
          double sup_u = 0.0;
          for (double v : states[k].U) sup_u = std::max(sup_u, std::abs(v));
          rep.table.add({states[k].time, d, sup_u, tr.states[k].max_abs()});
          worst = std::max(worst, d);
        }
        rep.add_verdict("cross_agreement", {worst <= 1e-4, worst, "L-inf distance <= 1e-4", ""});
        const double defect = rch::flow_map_exponential_defect(states, params);
        rep.add_verdict("flow_map_exponential", {defect <= 1e-6, defect, "relative defect <= 1e-6", ""});
        rep.write(dir / "cross_check", "t", "linf_distance");
        for (const auto& [k, v] : rep.verdicts)
          std::cout << (v.pass ? "PASS " : "FAIL ") << k << " = " << v.value << '\n';
        return rep.all_pass() ? 0 : 2;
      }
      std::cout << "wrote " << states.size() << " states to " << dir.string() << '\n';
      return 0;
    }

    if (*data) {
      const rch::PeriodicGrid grid(sh.length > 0.0 ? sh.length : 64.0 * std::numbers::pi,
                                   sh.n_points > 0 ? sh.n_points : std::size_t{1} << 18);
      const auto bump = rch::build_psi(grid);
      if (certify) {
        const auto rep = rch::certify_data(bump, n_list.empty() ? std::vector<int>{5, 6, 7, 8, 9} : n_list, s, p);
        if (sh.out.empty()) {
          std::cout << rep.table.to_csv();
          return rep.all_pass() ? 0 : 2;
        }
        return finish(rep, sh, "n", "w_B_s");
      }
      rch::Field f = bump.psi;
      if (family != "psi") {
        const auto fam = rch::make_family(bump, n, s);
        f = family == "w0n" ? fam.w0n : family == "v0n" ? fam.v0n : family == "u0n" ? fam.u0n : fam.z0n;
      }
      const fs::path path = sh.out.empty() ? fs::path(family + ".bin") : fs::path(sh.out);
      if (path.extension() == ".csv")
        rch::io::write_csv(f, path);
      else
        rch::io::write_binary(f, path);
      std::cout << "wrote " << path.string() << '\n';
      return 0;
    }

    if (*super)
      return finish(rch::run_nonuniform_supercritical({s, p, r}, campaign(sh, omega, n_list, t_points)), sh, "t",
                    "distance");
    if (*crit)
      return finish(rch::run_nonuniform_critical(p, campaign(sh, omega, n_list, t_points)), sh, "t", "distance");
    if (*decomp)
      return finish(rch::run_decomposition_rates({s, p, r}, campaign(sh, omega, n_list, t_points), n_fixed), sh,
                    "t", "residual");
    if (*cexp)
      return finish(rch::run_critical_expansion(p, campaign(sh, omega, n_list, t_points), n_fixed), sh, "t",
                    "residual");
    if (*cont) {
      rch::CampaignConfig c = campaign(sh, omega, {}, t_points);
      if (sh.n_points == 0) c.n_points = 4096;
      return finish(rch::run_continuous_dependence({s, p, r}, eps, c), sh, "t", "distance");
    }
    if (*picard) {
      const rch::Field u0 = initial_field(init, sh);
      rch::SolverConfig cfg;
      cfg.t_end = picard_tend;
      cfg.dt = sh.dt;
      return finish(rch::run_picard_convergence(u0, omega, m_max, cfg), sh, "m", "successive_distance");
    }
  } catch (const rch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
