// kfbi_cli.cpp — command-line driver: single solves, convergence sweeps, and
// surface-tension-driven interface evolution.
#include <cstdio>
#include <cstdlib>
#include <future>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kfbi/examples.hpp"
#include "kfbi/io.hpp"
#include "kfbi/motion.hpp"

namespace {

using namespace kfbi;

std::string out_base(const std::string &user, const std::string &fallback) {
  if (!user.empty()) return user;
  const char *root = std::getenv("KFBI_OUT_ROOT");
  const std::string base =
      (root != nullptr && *root != '\0') ? std::string(root) : std::string(".");
  return base + "/" + fallback;
}

struct StaticSpec {
  int example = 1;
  std::string case_name = "I";
  double mu_plus = 0.0, mu_minus = 0.0;  // 0: taken from the named case
  int nodes = 0;
  double tol = 1e-8;

  void resolve() {
    double p = 0, m = 0;
    KFBI_REQUIRE(viscosity_case(case_name, &p, &m),
                 "unknown viscosity case: " + case_name);
    if (mu_plus <= 0.0) mu_plus = p;
    if (mu_minus <= 0.0) mu_minus = m;
  }
};

struct StaticRun {
  KfbiResult res;
  ErrorNorms err;
};

StaticRun run_static(const StaticSpec &s, int n, bool want_traces) {
  const ExactSolution ex = make_exact(s.example);
  const Grid grid(ex.domain_a, ex.domain_b, n);
  TwoPhaseProblem prob = make_static_problem(ex, s.mu_plus, s.mu_minus);
  KfbiOptions opt;
  opt.nodes = s.nodes;
  opt.gmres_tol = s.tol;
  opt.want_traces = want_traces;
  StaticRun run;
  run.res = solve_two_phase(grid, prob, opt);
  run.err = compute_errors(*run.res.geometry, run.res, ex, s.mu_plus,
                           s.mu_minus);
  return run;
}

void print_tables(const std::vector<ConvergenceRow> &rows,
                  const StaticSpec &s) {
  for (int pass = 0; pass < 2; ++pass) {
    const bool use_max = pass == 1;
    std::printf("# example %d, case %s (mu+ = %g, mu- = %g), %s norms\n",
                s.example, s.case_name.c_str(), s.mu_plus, s.mu_minus,
                use_max ? "max" : "l2");
    std::printf("%-6s %-11s %-7s %-11s %-7s %-11s %-7s %s\n", "n", "u",
                "order", "grad_u", "order", "p", "order", "iters");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const ErrorNorms &e = rows[r].err;
      const double cur[3] = {use_max ? e.max_u : e.l2_u,
                             use_max ? e.max_du : e.l2_du,
                             use_max ? e.max_p : e.l2_p};
      std::printf("%-6d ", rows[r].n);
      for (int c = 0; c < 3; ++c) {
        std::printf("%-11.4e ", cur[c]);
        if (r == 0) {
          std::printf("%-7s ", "-");
        } else {
          const ErrorNorms &pe = rows[r - 1].err;
          const double prev[3] = {use_max ? pe.max_u : pe.l2_u,
                                  use_max ? pe.max_du : pe.l2_du,
                                  use_max ? pe.max_p : pe.l2_p};
          std::printf("%-7.3f ", std::log2(prev[c] / cur[c]));
        }
      }
      std::printf("%d\n", rows[r].iters);
    }
    std::printf("\n");
  }
}

void dump_static(const std::string &dir, const StaticRun &run,
                 const std::function<Vec2(double)> &jump_f, bool fields,
                 bool trace, bool jumps) {
  const KfbiResult &res = run.res;
  const Grid &g = res.geometry->grid();
  write_residual_csv(dir + "/gmres.csv", res.gmres_history);
  if (fields) {
    write_component_dumps(dir + "/u1.vtk", dir + "/u1.csv", g, Lattice::u1,
                          "u1", res.u1);
    write_component_dumps(dir + "/u2.vtk", dir + "/u2.csv", g, Lattice::u2,
                          "u2", res.u2);
    write_component_dumps(dir + "/p.vtk", dir + "/p.csv", g, Lattice::p, "p",
                          res.p);
    write_fields_vtk(dir + "/fields.vtk", g, res.u1, res.u2, res.p);
  }
  if (trace && !res.traces.empty())
    write_trace_csv(dir + "/trace.csv", *res.mesh, res.traces, res.psi);
  if (jumps) {
    NodalDensity psi_den(*res.mesh, res.psi);
    JumpSource js(*res.mesh, nullptr, &psi_den, jump_f);
    std::vector<std::pair<double, Vec2>> pts;
    for (int f = 0; f < 4; ++f)
      for (const auto &line : res.geometry->family(static_cast<LineFamily>(f)))
        for (const Crossing &c : line) pts.emplace_back(c.t, c.x);
    write_jumps_csv(dir + "/jumps.csv", pts,
                    [&js](double t) { return js.at(t); });
  }
}

int cmd_solve(const StaticSpec &spec, int n, const std::string &out,
              bool fields, bool trace, bool jumps) {
  StaticRun run = run_static(spec, n, trace);
  std::vector<ConvergenceRow> rows{{n, run.err, run.res.gmres_iters}};
  print_tables(rows, spec);
  std::printf(
      "gmres: %d iterations, certificate residual %.3e; saddle: %d CG "
      "iterations, momentum %.3e, divergence %.3e\n",
      run.res.gmres_iters, run.res.gmres_rel_res, run.res.last_saddle.cg_iters,
      run.res.last_saddle.mom_res, run.res.last_saddle.div_res);
  write_convergence_csv(out + "/l2.csv", rows, false);
  write_convergence_csv(out + "/max.csv", rows, true);
  const ExactSolution ex = make_exact(spec.example);
  const TwoPhaseProblem prob =
      make_static_problem(ex, spec.mu_plus, spec.mu_minus);
  auto curve = prob.curve;
  auto bf = prob.body_force;
  const double mp = spec.mu_plus, mm = spec.mu_minus;
  auto jf = [curve, bf, mp, mm](double t) {
    const Vec2 x = curve->at(t);
    return bf(x, Side::plus) / mp - bf(x, Side::minus) / mm;
  };
  dump_static(out, run, jf, fields, trace, jumps);
  std::printf("outputs in %s\n", out.c_str());
  return 0;
}

int cmd_converge(const StaticSpec &spec, std::vector<int> grids, int jobs,
                 const std::string &out) {
  if (grids.empty()) grids = {64, 128, 256};
  std::sort(grids.begin(), grids.end());
  std::vector<StaticRun> runs(grids.size());
  if (jobs < 1) jobs = 1;
  for (std::size_t base = 0; base < grids.size();
       base += static_cast<std::size_t>(jobs)) {
    std::vector<std::future<StaticRun>> batch;
    for (std::size_t k = base;
         k < std::min(grids.size(), base + static_cast<std::size_t>(jobs));
         ++k)
      batch.push_back(std::async(std::launch::async, run_static, spec,
                                 grids[k], false));
    for (std::size_t k = 0; k < batch.size(); ++k)
      runs[base + k] = batch[k].get();
  }
  std::vector<ConvergenceRow> rows;
  for (std::size_t k = 0; k < grids.size(); ++k)
    rows.push_back({grids[k], runs[k].err, runs[k].res.gmres_iters});
  print_tables(rows, spec);
  write_convergence_csv(out + "/l2.csv", rows, false);
  write_convergence_csv(out + "/max.csv", rows, true);
  std::printf("outputs in %s\n", out.c_str());
  return 0;
}

struct EvolveSpec {
  int example = 3;
  std::string curve_spec;  // empty: from example id
  int n = 128, nodes = 100;
  double domain_half = 1.2;
  double tension = -1.0, mu_plus = -1.0, mu_minus = -1.0, t_final = -1.0;
  double dt = 0.0, tol = 1e-8;
  int snap_every = 0;
  bool dump_fields = false;

  void resolve() {
    std::string curve;
    double T0 = 0.5, mp = 10.0, mm = 1.0, tf = 8.0;
    switch (example) {
      case 3:
        curve = "polar: r0=0.8 amp=0.2 k=3";
        break;
      case 4:
        curve = "polar: r0=0.8 amp=0.2 k=8";
        T0 = 0.5;
        mp = 1.0;
        mm = 10.0;
        tf = 2.0;
        break;
      case 5:
        curve = "heart";
        T0 = 1.0;
        mp = 1.0;
        mm = 10.0;
        tf = 20.0;
        break;
      case 6:
        curve = "kidney";
        T0 = 1.0;
        mp = 10.0;
        mm = 1.0;
        tf = 8.0;
        break;
      default:
        KFBI_REQUIRE(!curve_spec.empty(),
                     "evolve needs --example 3..6 or an explicit --curve");
    }
    if (curve_spec.empty()) curve_spec = curve;
    if (tension < 0.0) tension = T0;
    if (mu_plus < 0.0) mu_plus = mp;
    if (mu_minus < 0.0) mu_minus = mm;
    if (t_final < 0.0) t_final = tf;
  }
};

int cmd_evolve(const EvolveSpec &s, const std::string &out) {
  const Grid grid(-s.domain_half, s.domain_half, s.n);
  auto curve = make_curve(s.curve_spec);
  const std::vector<double> params = curve->equipartition(s.nodes);
  std::vector<Vec2> pts(params.size());
  for (std::size_t i = 0; i < params.size(); ++i)
    pts[i] = curve->at(params[i]);

  EvolveParams par;
  par.tension = s.tension;
  par.mu_plus = s.mu_plus;
  par.mu_minus = s.mu_minus;
  par.t_final = s.t_final;
  par.dt = s.dt;
  par.gmres_tol = s.tol;

  EvolveCallback cb;
  if (s.snap_every > 0) {
    const int every = s.snap_every;
    const bool fields = s.dump_fields;
    cb = [out, every, fields](int step, double, const SplineCurve &c,
                              const KfbiResult *res) {
      if (step % every != 0 && res != nullptr) return;
      char name[64];
      std::snprintf(name, sizeof name, "/snap_%06d.csv", step);
      write_curve_csv(out + name, c.control_points());
      if (fields && res != nullptr) {
        std::snprintf(name, sizeof name, "/fields_%06d.vtk", step);
        write_fields_vtk(out + name, res->geometry->grid(), res->u1, res->u2,
                         res->p);
      }
    };
  }

  EvolveResult er = run_simulation(grid, pts, par, cb);
  write_evolve_csv(out + "/evolve.csv", er.history);
  write_curve_csv(out + "/final_curve.csv", er.points);

  const EvolveRecord &last = er.history.back();
  const double drift = (er.final_area - er.initial_area) / er.initial_area;
  std::printf("evolved to t = %.6f in %d steps\n", last.time, last.step);
  std::printf("area %.8f -> %.8f (relative drift %.3e)\n", er.initial_area,
              er.final_area, drift);
  std::printf("isoperimetric ratio %.8f -> %.8f\n",
              4.0 * 3.14159265358979323846 * er.initial_area /
                  (er.initial_length * er.initial_length),
              last.isoperimetric);
  std::printf("equivalent circle radius sqrt(A/pi) = %.8f\n",
              std::sqrt(er.final_area / 3.14159265358979323846));
  std::printf("outputs in %s\n", out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-phase Stokes flow with an embedded interface"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a key=value file");

  StaticSpec sspec;
  int solve_n = 128;
  std::string solve_out;
  bool solve_fields = false, solve_trace = false, solve_jumps = false;
  CLI::App *solve = app.add_subcommand("solve", "one static benchmark solve");
  solve->add_option("--example", sspec.example, "benchmark id (1 or 2)")
      ->check(CLI::Range(1, 2));
  solve->add_option("--case", sspec.case_name, "viscosity case I..VI");
  solve->add_option("--mu-plus", sspec.mu_plus, "enclosed viscosity override");
  solve->add_option("--mu-minus", sspec.mu_minus,
                    "exterior viscosity override");
  solve->add_option("--grid", solve_n, "cells per side");
  solve->add_option("--nodes", sspec.nodes, "interface nodes (0: match grid)");
  solve->add_option("--tol", sspec.tol, "interface-solve tolerance");
  solve->add_option("--out", solve_out, "output directory");
  solve->add_flag("--dump-fields", solve_fields, "write field dumps");
  solve->add_flag("--dump-trace", solve_trace, "write boundary traces");
  solve->add_flag("--dump-jumps", solve_jumps,
                  "write derived jumps at intersection points");

  StaticSpec cspec;
  std::vector<int> cgrids;
  int jobs = 1;
  std::string conv_out;
  CLI::App *conv = app.add_subcommand("converge", "grid-refinement study");
  conv->add_option("--example", cspec.example, "benchmark id (1 or 2)")
      ->check(CLI::Range(1, 2));
  conv->add_option("--case", cspec.case_name, "viscosity case I..VI");
  conv->add_option("--mu-plus", cspec.mu_plus, "enclosed viscosity override");
  conv->add_option("--mu-minus", cspec.mu_minus, "exterior viscosity override");
  conv->add_option("--grid", cgrids, "cells per side (repeatable)");
  conv->add_option("--nodes", cspec.nodes, "interface nodes (0: match grid)");
  conv->add_option("--tol", cspec.tol, "interface-solve tolerance");
  conv->add_option("--jobs", jobs, "parallel solves");
  conv->add_option("--out", conv_out, "output directory");

  EvolveSpec espec;
  std::string ev_out;
  CLI::App *ev = app.add_subcommand("evolve", "moving-interface simulation");
  ev->add_option("--example", espec.example, "preset 3..6")
      ->check(CLI::Range(3, 6));
  ev->add_option("--curve", espec.curve_spec,
                 "curve spec or control-point CSV (overrides the preset)");
  ev->add_option("--grid", espec.n, "cells per side");
  ev->add_option("--nodes", espec.nodes, "interface markers");
  ev->add_option("--domain-half", espec.domain_half, "half side length");
  ev->add_option("--tension", espec.tension, "surface tension coefficient");
  ev->add_option("--mu-plus", espec.mu_plus, "enclosed viscosity");
  ev->add_option("--mu-minus", espec.mu_minus, "exterior viscosity");
  ev->add_option("--t-final", espec.t_final, "end time");
  ev->add_option("--dt", espec.dt, "time step (0: grid spacing)");
  ev->add_option("--tol", espec.tol, "interface-solve tolerance");
  ev->add_option("--snap-every", espec.snap_every,
                 "curve snapshot every k steps (0: none)");
  ev->add_flag("--dump-fields", espec.dump_fields,
               "field dump at snapshot times");
  ev->add_option("--out", ev_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      sspec.resolve();
      char tag[64];
      std::snprintf(tag, sizeof tag, "solve_ex%d_%s_n%d", sspec.example,
                    sspec.case_name.c_str(), solve_n);
      return cmd_solve(sspec, solve_n, out_base(solve_out, tag), solve_fields,
                       solve_trace, solve_jumps);
    }
    if (conv->parsed()) {
      cspec.resolve();
      char tag[64];
      std::snprintf(tag, sizeof tag, "converge_ex%d_%s", cspec.example,
                    cspec.case_name.c_str());
      return cmd_converge(cspec, cgrids, jobs, out_base(conv_out, tag));
    }
    if (ev->parsed()) {
      espec.resolve();
      char tag[64];
      std::snprintf(tag, sizeof tag, "evolve_ex%d", espec.example);
      return cmd_evolve(espec, out_base(ev_out, tag));
    }
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
