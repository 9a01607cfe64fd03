// corrections.hpp — right-side corrections for the corrected MAC scheme:
// interface jump terms at irregular stencils and wall terms for inhomogeneous
// boundary data. The discrete operator itself is never modified.
#pragma once

#include <functional>

#include "kfbi/classify.hpp"
#include "kfbi/jumps.hpp"

namespace kfbi {

/** Right side of the saddle system: momentum components and divergence target. */
struct SaddleRhs {
  std::vector<double> f1, f2, g;

  SaddleRhs() = default;
  explicit SaddleRhs(const Grid &gr)
      : f1(gr.size_u1(), 0.0), f2(gr.size_u2(), 0.0), g(gr.size_p(), 0.0) {}
};

/**
 * Adds the interface correction C = -sgn(P) * sum_R c_R J_w(R) to every
 * irregular equation, where the sum runs over stencil neighbors separated from
 * the equation node P by the interface, c_R is the neighbor's stencil
 * coefficient and J_w(R) the Taylor expansion of the relevant jump field from
 * the crossing point to R.
 */
void add_interface_corrections(const GridGeometry &gg,
                               const std::function<JumpData(double)> &jumps,
                               SaddleRhs &rhs);

/**
 * Folds Dirichlet wall data u_b into the right side: eliminated normal
 * neighbors contribute u_b/h^2, reflected tangential ghosts 2 u_b/h^2, and
 * wall faces of the divergence stencil +/- u_b/h.
 */
void add_boundary_terms(const Grid &g, const std::function<Vec2(Vec2)> &u_b,
                        SaddleRhs &rhs);

}  // namespace kfbi
