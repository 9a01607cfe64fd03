// bie.hpp — two-phase Stokes interface solver: the interface equation for the
// traction density is solved by GMRES, with every operator application
// realized as one grid solve plus trace extraction.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "kfbi/classify.hpp"
#include "kfbi/extract.hpp"
#include "kfbi/stokes_solver.hpp"

namespace kfbi {

/** Problem data for the two-phase Stokes system: piecewise-constant viscosity,
 * an embedded closed interface, physical body force and wall velocity, and the
 * prescribed jumps of traction (and optionally velocity) across the
 * interface. Empty function fields mean identically zero. */
struct TwoPhaseProblem {
  double mu_plus = 1.0;   // viscosity enclosed by the interface
  double mu_minus = 1.0;  // viscosity outside it
  std::shared_ptr<const Curve> curve;
  std::function<Vec2(const Vec2 &, Side)> body_force;  // physical force
  std::function<Vec2(const Vec2 &)> wall_velocity;
  std::function<Vec2(double)> traction_jump;  // physical, vs. curve parameter
  std::function<Vec2(double)> velocity_jump;  // optional prescribed [[u]]
};

struct KfbiOptions {
  int nodes = 0;  // interface nodes; 0 = match the grid resolution
  std::optional<std::vector<double>> node_params;  // explicit curve parameters
  double gmres_tol = 1e-8;
  int gmres_max_iters = 200;
  double cg_tol = 1e-11;
  bool want_traces = false;  // return one-sided traces of the solution
  bool direct_single_fluid = false;  // equal-viscosity shortcut, no iteration
};

struct KfbiResult {
  std::vector<double> u1, u2;  // velocity on the staggered faces
  std::vector<double> p;       // scaled pressure (pressure / viscosity)
  std::vector<double> psi;     // converged density, interleaved (x0,y0,x1,..)
  int gmres_iters = 0;
  double gmres_rel_res = 0.0;   // independently recomputed relative residual
  std::vector<double> gmres_history;  // per-iteration relative residuals
  SaddleStats last_saddle;      // certificate of the final grid solve
  std::vector<Traces> traces;   // filled when requested
  std::shared_ptr<GridGeometry> geometry;
  std::shared_ptr<InterfaceMesh> mesh;
};

KfbiResult solve_two_phase(const Grid &grid, const TwoPhaseProblem &prob,
                           const KfbiOptions &opt = {});

struct GmresStats {
  int iters = 0;
  double rel_res = 0.0;  // max-norm residual over max-norm right side
  bool converged = false;
  std::vector<double> history;  // relative residual after each iteration
};

/** Unrestarted GMRES with modified Gram-Schmidt, zero initial guess, and a
 * max-norm relative residual stopping test on the true residual vector. */
GmresStats gmres_solve(
    const std::function<void(const std::vector<double> &,
                             std::vector<double> &)> &op,
    const std::vector<double> &b, std::vector<double> &x, double tol,
    int max_iters);

}  // namespace kfbi
