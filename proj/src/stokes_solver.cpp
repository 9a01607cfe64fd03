// stokes_solver.cpp — Schur-complement CG for the MAC saddle system.
#include "kfbi/stokes_solver.hpp"

#include <cmath>
#include <numeric>

namespace kfbi {

namespace {

double mean(const std::vector<double> &v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

void remove_mean(std::vector<double> &v) {
  const double m = mean(v);
  for (double &x : v) x -= m;
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SaddleSolver::SaddleSolver(const Grid &g, double tol, int max_iters)
    : g_(g), tol_(tol), max_iters_(max_iters > 0 ? max_iters : 10 * g.n),
      a1_(g, 1), a2_(g, 2) {}

void SaddleSolver::gradient(const std::vector<double> &p,
                            std::vector<double> &g1,
                            std::vector<double> &g2) const {
  const double ih = 1.0 / g_.h;
  g1.resize(g_.size_u1());
  g2.resize(g_.size_u2());
  for (int i = 0; i < g_.nx_u1(); ++i)
    for (int j = 0; j < g_.ny_u1(); ++j)
      g1[g_.iu1(i, j)] = ih * (p[g_.ip(i + 1, j)] - p[g_.ip(i, j)]);
  for (int i = 0; i < g_.nx_u2(); ++i)
    for (int j = 0; j < g_.ny_u2(); ++j)
      g2[g_.iu2(i, j)] = ih * (p[g_.ip(i, j + 1)] - p[g_.ip(i, j)]);
}

void SaddleSolver::divergence(const std::vector<double> &u1,
                              const std::vector<double> &u2,
                              std::vector<double> &d) const {
  const double ih = 1.0 / g_.h;
  const int n = g_.n;
  d.resize(g_.size_p());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double e = (i < n - 1) ? u1[g_.iu1(i, j)] : 0.0;
      const double w = (i > 0) ? u1[g_.iu1(i - 1, j)] : 0.0;
      const double nn = (j < n - 1) ? u2[g_.iu2(i, j)] : 0.0;
      const double ss = (j > 0) ? u2[g_.iu2(i, j - 1)] : 0.0;
      d[g_.ip(i, j)] = ih * (e - w + nn - ss);
    }
}

SaddleStats SaddleSolver::solve(const SaddleRhs &rhs, std::vector<double> &u1,
                                std::vector<double> &u2,
                                std::vector<double> &p) const {
  SaddleStats stats;
  std::vector<double> w1, w2, d, b, r, dir, q, t1, t2;

  // Schur right side b = g - Div A^{-1} F, mean projected out.
  a1_.solve(rhs.f1, w1);
  a2_.solve(rhs.f2, w2);
  divergence(w1, w2, d);
  b.resize(g_.size_p());
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = rhs.g[k] - d[k];
  stats.incompat = mean(rhs.g) * g_.h * g_.h * g_.size_p();
  remove_mean(b);

  // CG on S p = b with S = G^T A^{-1} G (SPD on mean-zero pressures).
  p.assign(g_.size_p(), 0.0);
  r = b;
  dir = r;
  const double bnorm = max_abs(b);
  double rho = dot(r, r);
  if (bnorm > 0.0) {
    for (int it = 0; it < max_iters_; ++it) {
      if (max_abs(r) <= tol_ * bnorm) break;
      gradient(dir, t1, t2);
      a1_.solve(t1, w1);
      a2_.solve(t2, w2);
      divergence(w1, w2, q);
      for (double &x : q) x = -x;  // S = -Div A^{-1} G
      remove_mean(q);
      const double alpha = rho / dot(dir, q);
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += alpha * dir[k];
      for (std::size_t k = 0; k < r.size(); ++k) r[k] -= alpha * q[k];
      const double rho_new = dot(r, r);
      const double beta = rho_new / rho;
      rho = rho_new;
      for (std::size_t k = 0; k < dir.size(); ++k)
        dir[k] = r[k] + beta * dir[k];
      stats.cg_iters = it + 1;
    }
    remove_mean(p);
  }

  // Back-substitution u = A^{-1}(F - G p).
  gradient(p, t1, t2);
  for (std::size_t k = 0; k < t1.size(); ++k) t1[k] = rhs.f1[k] - t1[k];
  for (std::size_t k = 0; k < t2.size(); ++k) t2[k] = rhs.f2[k] - t2[k];
  a1_.solve(t1, u1);
  a2_.solve(t2, u2);

  // Residual certificate.
  std::vector<double> m1, m2;
  a1_.apply(u1, m1);
  a2_.apply(u2, m2);
  gradient(p, t1, t2);
  double mres = 0.0;
  for (std::size_t k = 0; k < m1.size(); ++k)
    mres = std::max(mres, std::abs(m1[k] + t1[k] - rhs.f1[k]));
  for (std::size_t k = 0; k < m2.size(); ++k)
    mres = std::max(mres, std::abs(m2[k] + t2[k] - rhs.f2[k]));
  stats.mom_res = mres;
  divergence(u1, u2, d);
  double dres = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k)
    dres = std::max(dres, std::abs(d[k] - rhs.g[k]));
  stats.div_res = dres;
  return stats;
}

}  // namespace kfbi
