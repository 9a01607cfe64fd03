// extract.cpp — jump-corrected one-sided interpolation of staggered fields.
#include "kfbi/extract.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace kfbi {

namespace {

struct LatticeInfo {
  double ox, oy;  // position of lattice point (0, 0)
  int nx, ny;
  const Grid *g;
  Lattice which;

  double px(int i) const { return ox + g->h * i; }
  double py(int j) const { return oy + g->h * j; }
  int index(int i, int j) const { return i * ny + j; }
};

LatticeInfo lattice_info(const Grid &g, Lattice which) {
  switch (which) {
    case Lattice::u1:
      return {g.a + g.h, g.a + 0.5 * g.h, g.n - 1, g.n, &g, which};
    case Lattice::u2:
      return {g.a + 0.5 * g.h, g.a + g.h, g.n, g.n - 1, &g, which};
    default:
      return {g.a + 0.5 * g.h, g.a + 0.5 * g.h, g.n, g.n, &g, which};
  }
}

// Nearest in-range lattice index along one axis, plus the stencil direction:
// +1/-1 toward the query point, flipped inward when the two-step reach would
// leave the lattice.
void anchor_axis(double x, double origin, double h, int count, int *idx,
                 int *step) {
  int i = (int)std::lround((x - origin) / h);
  if (i < 0) i = 0;
  if (i > count - 1) i = count - 1;
  int s = (x >= origin + h * i) ? 1 : -1;
  if (i + 2 * s < 0 || i + 2 * s > count - 1) s = -s;
  KFBI_REQUIRE(i + 2 * s >= 0 && i + 2 * s <= count - 1,
               "interpolation stencil does not fit in the grid");
  *idx = i;
  *step = s;
}

}  // namespace

ScalarTrace extract_scalar(const GridGeometry &gg, Lattice which,
                           const std::vector<double> &field, const Vec2 &x,
                           const JumpData &jd, int comp, bool quadratic) {
  const Grid &g = gg.grid();
  const LatticeInfo L = lattice_info(g, which);
  KFBI_REQUIRE(L.nx >= 5 && L.ny >= 5, "grid too coarse for trace extraction");
  KFBI_REQUIRE((int)field.size() == L.nx * L.ny, "field size mismatch");

  int ci, cj, sx, sy;
  anchor_axis(x.x, L.ox, g.h, L.nx, &ci, &sx);
  anchor_axis(x.y, L.oy, g.h, L.ny, &cj, &sy);

  const int order = quadratic ? 2 : 1;
  // Lattice offsets of the stencil: a corner triangle for the quadratic fit,
  // an L of three points for the linear one.
  static const int quad_off[6][2] = {{0, 0}, {1, 0}, {2, 0},
                                     {0, 1}, {1, 1}, {0, 2}};
  static const int lin_off[3][2] = {{0, 0}, {1, 0}, {0, 1}};
  const int m = quadratic ? 6 : 3;

  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd rhs(m);
  for (int k = 0; k < m; ++k) {
    const int di = quadratic ? quad_off[k][0] : lin_off[k][0];
    const int dj = quadratic ? quad_off[k][1] : lin_off[k][1];
    const int i = ci + sx * di;
    const int j = cj + sy * dj;
    const Vec2 z{L.px(i), L.py(j)};
    const double alpha = (z.x - x.x) / g.h;
    const double beta = (z.y - x.y) / g.h;
    A(k, 0) = 1.0;
    A(k, 1) = alpha;
    A(k, 2) = beta;
    if (quadratic) {
      A(k, 3) = 0.5 * alpha * alpha;
      A(k, 4) = alpha * beta;
      A(k, 5) = 0.5 * beta * beta;
    }
    double val = field[L.index(i, j)];
    if (gg.side(which, i, j) == Side::minus)
      val += jump_taylor(jd, comp, order, z - x);
    rhs(k) = val;
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  KFBI_REQUIRE(lu.isInvertible(), "degenerate interpolation stencil");
  Eigen::VectorXd c = lu.solve(rhs);
  const Eigen::MatrixXd Ainv = lu.inverse();

  ScalarTrace out;
  out.value = c(0);
  out.grad = Vec2{c(1) / g.h, c(2) / g.h};
  out.cond = A.cwiseAbs().colwise().sum().maxCoeff() *
             Ainv.cwiseAbs().colwise().sum().maxCoeff();
  return out;
}

std::vector<Traces> extract_traces(
    const GridGeometry &gg, const InterfaceMesh &mesh,
    const std::vector<double> &u1, const std::vector<double> &u2,
    const std::vector<double> &p,
    const std::function<JumpData(double)> &jumps) {
  std::vector<Traces> out(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    const InterfaceNode &nd = mesh.node(i);
    const JumpData jd = jumps ? jumps(nd.t) : JumpData{};

    const ScalarTrace t1 =
        extract_scalar(gg, Lattice::u1, u1, nd.x, jd, 0, true);
    const ScalarTrace t2 =
        extract_scalar(gg, Lattice::u2, u2, nd.x, jd, 1, true);
    const ScalarTrace tp =
        extract_scalar(gg, Lattice::p, p, nd.x, jd, 2, false);

    Traces tr;
    tr.v_plus = Vec2{t1.value, t2.value};
    tr.dv_plus.m[0][0] = t1.grad.x;
    tr.dv_plus.m[0][1] = t1.grad.y;
    tr.dv_plus.m[1][0] = t2.grad.x;
    tr.dv_plus.m[1][1] = t2.grad.y;
    tr.q_plus = tp.value;

    tr.v_minus = tr.v_plus - jd.v;
    tr.dv_minus = tr.dv_plus - jd.dv;
    tr.q_minus = tr.q_plus - jd.q;

    auto traction = [&nd](const Mat2 &dv, double q) {
      Mat2 sym = dv + dv.transpose();
      Vec2 t = sym * nd.nrm;
      return t - nd.nrm * q;
    };
    tr.trac_plus = traction(tr.dv_plus, tr.q_plus);
    tr.trac_minus = traction(tr.dv_minus, tr.q_minus);
    tr.trac_avg = (tr.trac_plus + tr.trac_minus) * 0.5;
    out[i] = tr;
  }
  return out;
}

}  // namespace kfbi
