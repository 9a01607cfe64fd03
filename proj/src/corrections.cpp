// corrections.cpp — assembly of interface and wall right-side terms.
#include "kfbi/corrections.hpp"

namespace kfbi {

void add_interface_corrections(const GridGeometry &gg,
                               const std::function<JumpData(double)> &jumps,
                               SaddleRhs &rhs) {
  auto apply = [&](const std::vector<IrregularEq> &eqs,
                   std::vector<double> &target) {
    for (const IrregularEq &eq : eqs) {
      double corr = 0.0;
      for (const ArmHit &arm : eq.arms) {
        const JumpData jd = jumps(arm.t);
        corr -= eq.sgn * arm.coef * jump_taylor(jd, arm.comp, arm.order, arm.d);
      }
      target[eq.idx] += corr;
    }
  };
  apply(gg.irregular_mom1(), rhs.f1);
  apply(gg.irregular_mom2(), rhs.f2);
  apply(gg.irregular_div(), rhs.g);
}

void add_boundary_terms(const Grid &g, const std::function<Vec2(Vec2)> &u_b,
                        SaddleRhs &rhs) {
  const double h = g.h, h2 = g.h * g.h;
  const int n = g.n;
  // u1 momentum: eliminated wall columns and reflected ghost rows
  for (int j = 0; j < g.ny_u1(); ++j) {
    rhs.f1[g.iu1(0, j)] += u_b({g.a, g.yu1(j)}).x / h2;
    rhs.f1[g.iu1(g.nx_u1() - 1, j)] += u_b({g.b, g.yu1(j)}).x / h2;
  }
  for (int i = 0; i < g.nx_u1(); ++i) {
    rhs.f1[g.iu1(i, 0)] += 2.0 * u_b({g.xu1(i), g.a}).x / h2;
    rhs.f1[g.iu1(i, g.ny_u1() - 1)] += 2.0 * u_b({g.xu1(i), g.b}).x / h2;
  }
  // u2 momentum, mirrored
  for (int i = 0; i < g.nx_u2(); ++i) {
    rhs.f2[g.iu2(i, 0)] += u_b({g.xu2(i), g.a}).y / h2;
    rhs.f2[g.iu2(i, g.ny_u2() - 1)] += u_b({g.xu2(i), g.b}).y / h2;
  }
  for (int j = 0; j < g.ny_u2(); ++j) {
    rhs.f2[g.iu2(0, j)] += 2.0 * u_b({g.a, g.yu2(j)}).y / h2;
    rhs.f2[g.iu2(g.nx_u2() - 1, j)] += 2.0 * u_b({g.b, g.yu2(j)}).y / h2;
  }
  // divergence: known wall-normal face velocities
  for (int j = 0; j < n; ++j) {
    rhs.g[g.ip(0, j)] += u_b({g.a, g.yp(j)}).x / h;
    rhs.g[g.ip(n - 1, j)] -= u_b({g.b, g.yp(j)}).x / h;
  }
  for (int i = 0; i < n; ++i) {
    rhs.g[g.ip(i, 0)] += u_b({g.xp(i), g.a}).y / h;
    rhs.g[g.ip(i, n - 1)] -= u_b({g.xp(i), g.b}).y / h;
  }
}

}  // namespace kfbi
