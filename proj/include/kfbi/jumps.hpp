// jumps.hpp — two-sided interface jump calculus: from the primary densities
// ([[v]], [[sigma(v,q)n]], [[f]]) derive the first- and second-derivative
// jumps of velocity and pressure used by corrections and trace extraction.
#pragma once

#include <functional>

#include "kfbi/core.hpp"
#include "kfbi/interface_mesh.hpp"

namespace kfbi {

/**
 * All interface jumps of the (unit-viscosity scaled) velocity/pressure pair at
 * one interface point. Jumps are enclosed-side minus exterior-side values;
 * dv row k is the gradient of [[v_k]], hv1/hv2 are the component Hessians.
 */
struct JumpData {
  Vec2 v;          // [[v]]
  Mat2 dv;         // [[grad v]]
  Mat2 hv1, hv2;   // [[Hess v_1]], [[Hess v_2]]
  double q = 0.0;  // [[q]]
  Vec2 dq;         // [[grad q]]
};

/**
 * Closed-form jump relations at a point with outward normal `nrm`, CCW unit
 * tangent `tau` and signed curvature `kappa`, given the velocity jump phi and
 * its first two arclength derivatives, the traction jump psi and its first
 * arclength derivative, and the momentum right-side jump jf = [[f]].
 *
 * Derivation sketch: tangential differentiation of [[v]] and the divergence
 * constraint fix the normal/tangential split of [[grad v]] and, with the
 * traction jump, the pressure jump; differentiating once more along the curve
 * gives the mixed Hessian columns, while the jump of the momentum equation and
 * of grad(div v) = 0 close the normal-normal Hessian entries and [[grad q]].
 */
JumpData derive_jumps(const Vec2 &nrm, const Vec2 &tau, double kappa,
                      const Vec2 &phi, const Vec2 &phi_s, const Vec2 &phi_ss,
                      const Vec2 &psi, const Vec2 &psi_s, const Vec2 &jf);

/** Taylor expansion of one jump field about the jump-data point:
 * comp 0/1 = velocity components, comp 2 = pressure; order 1 stops at the
 * gradient, order 2 includes the Hessian (velocity components only). */
double jump_taylor(const JumpData &jd, int comp, int order, const Vec2 &d);

/**
 * Evaluates JumpData anywhere on the interface from spline-backed densities.
 * Null densities are treated as identically zero; jump_f may be empty.
 */
class JumpSource {
 public:
  JumpSource(const InterfaceMesh &mesh, const NodalDensity *phi,
             const NodalDensity *psi, std::function<Vec2(double)> jump_f = {});

  JumpData at(double t) const;

 private:
  const Curve *curve_;
  const NodalDensity *phi_, *psi_;
  std::function<Vec2(double)> jump_f_;
};

}  // namespace kfbi
