// extract.hpp — one-sided interface traces of the staggered fields by
// jump-corrected polynomial interpolation, and one-sided traction assembly.
#pragma once

#include <functional>

#include "kfbi/classify.hpp"
#include "kfbi/interface_mesh.hpp"
#include "kfbi/jumps.hpp"

namespace kfbi {

/** One-sided values at one interface node. */
struct Traces {
  Vec2 v_plus, v_minus;
  Mat2 dv_plus, dv_minus;  // row k = grad v_k
  double q_plus = 0.0, q_minus = 0.0;
  Vec2 trac_plus, trac_minus;  // sigma(v, q) n per side
  Vec2 trac_avg;               // arithmetic mean of the two tractions
};

/** Value/gradient of one scalar lattice field extrapolated to the enclosed
 * side at an interface point, with the stencil condition number. */
struct ScalarTrace {
  double value = 0.0;
  Vec2 grad;
  double cond = 0.0;
};

/**
 * Quadratic six-point (velocity) or linear three-point (pressure) trace of a
 * single lattice field at interface point x. Stencil values on the exterior
 * side are shifted by the Taylor-expanded jump so the fit sees the smooth
 * enclosed-side extension. `jd` holds the jump data at x; `quadratic` selects
 * the stencil size.
 */
ScalarTrace extract_scalar(const GridGeometry &gg, Lattice which,
                           const std::vector<double> &field, const Vec2 &x,
                           const JumpData &jd, int comp, bool quadratic);

/**
 * Full velocity/pressure/traction traces at every mesh node. `jumps` supplies
 * the jump data (pass a source built from null densities for a smooth field).
 */
std::vector<Traces> extract_traces(const GridGeometry &gg,
                                   const InterfaceMesh &mesh,
                                   const std::vector<double> &u1,
                                   const std::vector<double> &u2,
                                   const std::vector<double> &p,
                                   const std::function<JumpData(double)> &jumps);

}  // namespace kfbi
