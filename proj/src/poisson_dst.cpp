// poisson_dst.cpp — DST-diagonalized velocity-block solver.
#include "kfbi/poisson_dst.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

namespace kfbi {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex &plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

DstVelocitySolver::DstVelocitySolver(const Grid &g, int component)
    : g_(g), comp_(component) {
  KFBI_REQUIRE(component == 1 || component == 2, "component must be 1 or 2");
  const int n = g.n;
  nx_ = (comp_ == 1) ? n - 1 : n;
  ny_ = (comp_ == 1) ? n : n - 1;

  buf_ = fftw_alloc_real(static_cast<std::size_t>(nx_) * ny_);
  KFBI_REQUIRE(buf_ != nullptr, "fftw allocation failed");

  // Component 1: x direction is a pure Dirichlet interior chain (DST-I on
  // n-1 points, modes sin(k pi x)), y direction has the reflected ghost
  // closure whose eigenvectors are the half-offset modes of DST-II.
  const fftw_r2r_kind fx = (comp_ == 1) ? FFTW_RODFT00 : FFTW_RODFT10;
  const fftw_r2r_kind fy = (comp_ == 1) ? FFTW_RODFT10 : FFTW_RODFT00;
  const fftw_r2r_kind bx = (comp_ == 1) ? FFTW_RODFT00 : FFTW_RODFT01;
  const fftw_r2r_kind by = (comp_ == 1) ? FFTW_RODFT01 : FFTW_RODFT00;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd_ = fftw_plan_r2r_2d(nx_, ny_, buf_, buf_, fx, fy, FFTW_ESTIMATE);
    bwd_ = fftw_plan_r2r_2d(nx_, ny_, buf_, buf_, bx, by, FFTW_ESTIMATE);
  }
  KFBI_REQUIRE(fwd_ && bwd_, "fftw plan creation failed");

  // Both closures share the eigenvalue (4/h^2) sin^2(m pi / 2n) with the mode
  // number m starting at 1; the round trip multiplies by 2n per dimension.
  const double scale = 1.0 / (4.0 * static_cast<double>(n) * n);
  inv_eig_.resize(static_cast<std::size_t>(nx_) * ny_);
  for (int i = 0; i < nx_; ++i) {
    const double sx = std::sin((i + 1) * M_PI / (2.0 * n));
    for (int j = 0; j < ny_; ++j) {
      const double sy = std::sin((j + 1) * M_PI / (2.0 * n));
      const double lam = 4.0 / (g_.h * g_.h) * (sx * sx + sy * sy);
      inv_eig_[static_cast<std::size_t>(i) * ny_ + j] = scale / lam;
    }
  }
}

DstVelocitySolver::~DstVelocitySolver() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  if (fwd_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(fwd_));
  if (bwd_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(bwd_));
  if (buf_) fftw_free(buf_);
}

void DstVelocitySolver::solve(const std::vector<double> &rhs,
                              std::vector<double> &out) const {
  const std::size_t sz = static_cast<std::size_t>(nx_) * ny_;
  KFBI_REQUIRE(rhs.size() == sz, "rhs size mismatch");
  std::memcpy(buf_, rhs.data(), sz * sizeof(double));
  fftw_execute(reinterpret_cast<fftw_plan>(fwd_));
  for (std::size_t k = 0; k < sz; ++k) buf_[k] *= inv_eig_[k];
  fftw_execute(reinterpret_cast<fftw_plan>(bwd_));
  out.assign(buf_, buf_ + sz);
}

void DstVelocitySolver::apply(const std::vector<double> &in,
                              std::vector<double> &out) const {
  const std::size_t sz = static_cast<std::size_t>(nx_) * ny_;
  KFBI_REQUIRE(in.size() == sz, "input size mismatch");
  out.resize(sz);
  const double ih2 = 1.0 / (g_.h * g_.h);
  // Out-of-range neighbors: eliminated Dirichlet lines contribute zero, the
  // ghost closure reflects to minus the boundary-adjacent value.
  auto val = [&](int i, int j) -> double {
    if (comp_ == 1) {
      if (i < 0 || i >= nx_) return 0.0;
      if (j < 0) return -in[static_cast<std::size_t>(i) * ny_ + 0];
      if (j >= ny_) return -in[static_cast<std::size_t>(i) * ny_ + ny_ - 1];
    } else {
      if (j < 0 || j >= ny_) return 0.0;
      if (i < 0) return -in[0 * ny_ + j];
      if (i >= nx_) return -in[static_cast<std::size_t>(nx_ - 1) * ny_ + j];
    }
    return in[static_cast<std::size_t>(i) * ny_ + j];
  };
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j)
      out[static_cast<std::size_t>(i) * ny_ + j] =
          ih2 * (4.0 * val(i, j) - val(i - 1, j) - val(i + 1, j) -
                 val(i, j - 1) - val(i, j + 1));
}

}  // namespace kfbi
