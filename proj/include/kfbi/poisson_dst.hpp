// poisson_dst.hpp — fast solver for the constant-coefficient velocity blocks:
// the five-point Laplacian with eliminated Dirichlet lines in the wall-normal
// direction and reflected-ghost closures in the other, diagonalized by
// discrete sine transforms.
#pragma once

#include <vector>

#include "kfbi/core.hpp"

// forward declarations to keep fftw out of the public header
struct fftw_plan_s;

namespace kfbi {

/**
 * Direct solver for A x = b where A is the discrete operator of one velocity
 * component (component 1: nodes on vertical cell edges, Dirichlet closure in
 * x and ghost closure in y; component 2 mirrored). One instance owns its FFTW
 * plans and scratch buffer; instances are independent, but a single instance
 * must not be used from two threads at once.
 */
class DstVelocitySolver {
 public:
  DstVelocitySolver(const Grid &g, int component);
  ~DstVelocitySolver();
  DstVelocitySolver(const DstVelocitySolver &) = delete;
  DstVelocitySolver &operator=(const DstVelocitySolver &) = delete;

  /** Solves A out = rhs (sizes = the component's unknown count). */
  void solve(const std::vector<double> &rhs, std::vector<double> &out) const;
  /** Applies the operator directly (five-point stencil with closures). */
  void apply(const std::vector<double> &in, std::vector<double> &out) const;

  int size() const { return nx_ * ny_; }

 private:
  Grid g_;
  int comp_, nx_, ny_;
  fftw_plan_s *fwd_ = nullptr, *bwd_ = nullptr;
  double *buf_ = nullptr;
  std::vector<double> inv_eig_;  // 1 / (eigenvalue * normalization)
};

}  // namespace kfbi
