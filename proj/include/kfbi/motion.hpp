// motion.hpp — surface-tension-driven interface evolution: marker advection
// by the interpolated two-phase velocity with periodic redistribution.
#pragma once

#include "kfbi/bie.hpp"

namespace kfbi {

struct EvolveParams {
  double tension = 0.5;
  double mu_plus = 10.0, mu_minus = 1.0;
  double t_final = 8.0;
  double dt = 0.0;             // 0: use the grid spacing
  double max_move_frac = 0.5;  // cap marker displacement per step, in units of h
  int redistribute_every = 10; // re-equidistribute markers every k steps
  int record_every = 1;
  double gmres_tol = 1e-8;
  double cg_tol = 1e-11;
};

struct EvolveRecord {
  int step = 0;
  double time = 0, dt = 0;
  double area = 0, length = 0, isoperimetric = 0;  // 4*pi*A / L^2
  double max_speed = 0;
  int gmres_iters = 0;
};

struct EvolveResult {
  std::vector<EvolveRecord> history;  // one row per recorded step + final state
  std::vector<Vec2> points;           // final marker positions
  double initial_area = 0, final_area = 0, initial_length = 0;
};

/** Called once per step with the current curve; the solve result pointer is
 * null on the final (post-integration) visit. */
using EvolveCallback =
    std::function<void(int step, double time, const SplineCurve &,
                       const KfbiResult *)>;

/** Traction jump exerted by uniform surface tension at curve parameter t, in
 * the outward-normal frame: tension pulls a convex interface inward. */
Vec2 tension_traction(const Curve &c, double tension, double t);

/** Bilinear interpolation of the staggered velocity at an interior point;
 * wall faces take homogeneous Dirichlet values. */
Vec2 sample_velocity(const Grid &g, const std::vector<double> &u1,
                     const std::vector<double> &u2, const Vec2 &x);

/** Forward-Euler evolution of a closed marker chain under the two-phase flow
 * driven by surface tension, with zero wall velocity and no body force. */
EvolveResult run_simulation(const Grid &grid, std::vector<Vec2> points,
                            const EvolveParams &par,
                            const EvolveCallback &cb = {});

}  // namespace kfbi
