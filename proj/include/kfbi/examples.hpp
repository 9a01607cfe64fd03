// examples.hpp — built-in benchmark problems with closed-form two-phase
// solutions, and grid error norms against them.
#pragma once

#include <string>

#include "kfbi/bie.hpp"

namespace kfbi {

/** A closed-form two-phase reference solution on (a,b)^2: velocity with its
 * first and second derivatives per side, and the physical pressure. The same
 * velocity/pressure pair serves every viscosity pairing; only the body force
 * derived from it changes. */
struct ExactSolution {
  std::shared_ptr<const Curve> curve;
  double domain_a = -2.0, domain_b = 2.0;
  std::function<Vec2(const Vec2 &, Side)> u;
  std::function<Mat2(const Vec2 &, Side)> grad_u;  // row k = grad u_k
  std::function<Mat2(const Vec2 &, Side)> hess_u1, hess_u2;
  std::function<Vec2(const Vec2 &, Side)> lap_u;
  std::function<double(const Vec2 &, Side)> pressure;  // physical
  std::function<Vec2(const Vec2 &, Side)> grad_pressure;
};

/** Benchmark 1: circle of radius 1; benchmark 2: 2:1 ellipse. Both on (-2,2)^2
 * with velocity continuous across the interface and pressure discontinuous. */
ExactSolution make_exact(int which);

/** Assembles the two-phase problem whose data (body force, wall velocity,
 * traction jump) reproduce the given reference solution. */
TwoPhaseProblem make_static_problem(const ExactSolution &ex, double mu_plus,
                                    double mu_minus);

/** Named viscosity pairings I..VI: (1,10), (1,100), (1,1000) and the three
 * reversed pairs. Returns false for unknown names. */
bool viscosity_case(const std::string &name, double *mu_plus, double *mu_minus);

struct ErrorNorms {
  double l2_u = 0, l2_du = 0, l2_p = 0;
  double max_u = 0, max_du = 0, max_p = 0;
};

/**
 * Grid error norms of a computed solution against the reference: scaled l2 and
 * max norms of the velocity, of its one-sided difference quotients (wall
 * closures included, half-weighted ghost rows), and of the physical pressure
 * after matching the additive constant per the solver's zero-mean convention.
 * Max-norm entries are averaged over components/difference families.
 */
ErrorNorms compute_errors(const GridGeometry &gg, const KfbiResult &sol,
                          const ExactSolution &ex, double mu_plus,
                          double mu_minus);

}  // namespace kfbi
