// stokes_solver.hpp — Uzawa/Schur-complement solver for the corrected MAC
// saddle system: conjugate gradients on the pressure Schur complement, each
// application costing two DST velocity solves.
#pragma once

#include "kfbi/corrections.hpp"
#include "kfbi/poisson_dst.hpp"

namespace kfbi {

struct SaddleStats {
  int cg_iters = 0;
  double mom_res = 0.0;   // max-norm momentum residual of the returned fields
  double div_res = 0.0;   // max-norm divergence residual vs the given target
  double incompat = 0.0;  // h^2-weighted mean of the divergence target
};

/**
 * Solves  A u + G p = F,  Div u = g  on the staggered grid, where A is the
 * per-component velocity operator, G the cell-to-face pressure gradient and
 * Div = -G^T the face-to-cell divergence. The pressure is determined up to a
 * constant and returned with zero mean; the mean of g (which must vanish for
 * compatible data) is projected out before the Schur solve.
 */
class SaddleSolver {
 public:
  explicit SaddleSolver(const Grid &g, double tol = 1e-11, int max_iters = 0);

  SaddleStats solve(const SaddleRhs &rhs, std::vector<double> &u1,
                    std::vector<double> &u2, std::vector<double> &p) const;

  const Grid &grid() const { return g_; }

  /** G p as the two face-centered component arrays. */
  void gradient(const std::vector<double> &p, std::vector<double> &g1,
                std::vector<double> &g2) const;
  /** Div u at cell centers (wall-normal faces contribute zero). */
  void divergence(const std::vector<double> &u1, const std::vector<double> &u2,
                  std::vector<double> &d) const;

 private:
  Grid g_;
  double tol_;
  int max_iters_;
  DstVelocitySolver a1_, a2_;
};

}  // namespace kfbi
