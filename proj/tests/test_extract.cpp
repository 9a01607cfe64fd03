// test_extract.cpp — jump-corrected one-sided trace extraction.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kfbi/examples.hpp"
#include "kfbi/extract.hpp"

using namespace kfbi;

namespace {

/** Quadratic scalar z -> c0 + c.x x + c.y y + 0.5 (qxx x^2 + 2 qxy xy + qyy y^2). */
struct Quad {
  double c0;
  Vec2 c;
  double qxx, qxy, qyy;
  double at(const Vec2 &z) const {
    return c0 + c.dot(z) +
           0.5 * (qxx * z.x * z.x + 2.0 * qxy * z.x * z.y + qyy * z.y * z.y);
  }
  Vec2 grad(const Vec2 &z) const {
    return {c.x + qxx * z.x + qxy * z.y, c.y + qxy * z.x + qyy * z.y};
  }
};

JumpData reference_jumps(const ExactSolution &ex, double mup, double mum,
                         const Vec2 &x) {
  JumpData jd;
  jd.v = ex.u(x, Side::plus) - ex.u(x, Side::minus);
  jd.dv = ex.grad_u(x, Side::plus) - ex.grad_u(x, Side::minus);
  jd.hv1 = ex.hess_u1(x, Side::plus) - ex.hess_u1(x, Side::minus);
  jd.hv2 = ex.hess_u2(x, Side::plus) - ex.hess_u2(x, Side::minus);
  jd.q = ex.pressure(x, Side::plus) / mup - ex.pressure(x, Side::minus) / mum;
  jd.dq = ex.grad_pressure(x, Side::plus) / mup -
          ex.grad_pressure(x, Side::minus) / mum;
  return jd;
}

}  // namespace

TEST_CASE("piecewise quadratics are recovered exactly with jump shifts") {
  const Grid g(-2.0, 2.0, 40);
  const CircleCurve c({0.1, -0.05}, 0.9);
  const GridGeometry gg(g, c);

  // distinct quadratics per side for the u1 field
  const Quad qp{0.7, {1.2, -0.4}, 0.9, -0.3, 0.5};   // enclosed side
  const Quad qm{-0.2, {0.3, 0.8}, -0.6, 0.2, 1.1};   // exterior side
  std::vector<double> f(g.size_u1());
  for (int i = 0; i < g.nx_u1(); ++i)
    for (int j = 0; j < g.ny_u1(); ++j) {
      const Vec2 z = g.pos_u1(i, j);
      f[g.iu1(i, j)] =
          gg.side_u1(i, j) == Side::plus ? qp.at(z) : qm.at(z);
    }

  double vmax = 0.0, gmax = 0.0, cond_max = 0.0;
  for (int k = 0; k < 160; ++k) {
    const double t = 2.0 * M_PI * k / 160.0 + 0.013;
    const Vec2 x = c.at(t);
    JumpData jd;  // exact jumps of the constructed pair, as comp 0
    jd.v = {qp.at(x) - qm.at(x), 0.0};
    const Vec2 dg = qp.grad(x) - qm.grad(x);
    jd.dv = {dg.x, dg.y, 0.0, 0.0};
    jd.hv1 = {qp.qxx - qm.qxx, qp.qxy - qm.qxy, qp.qxy - qm.qxy,
              qp.qyy - qm.qyy};
    const ScalarTrace tr = extract_scalar(gg, Lattice::u1, f, x, jd, 0, true);
    vmax = std::max(vmax, std::abs(tr.value - qp.at(x)));
    gmax = std::max(gmax, (tr.grad - qp.grad(x)).norm());
    cond_max = std::max(cond_max, tr.cond);
  }
  CHECK(vmax < 1e-11);
  CHECK(gmax < 1e-9);
  CHECK(cond_max < 1e4);
}

TEST_CASE("linear pressure stencil recovers piecewise linears exactly") {
  const Grid g(-2.0, 2.0, 36);
  const CircleCurve c({0.0, 0.0}, 1.1);
  const GridGeometry gg(g, c);
  const Quad lp{2.0, {0.5, -1.5}, 0, 0, 0}, lm{-1.0, {1.0, 0.25}, 0, 0, 0};
  std::vector<double> f(g.size_p());
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const Vec2 z = g.pos_p(i, j);
      f[g.ip(i, j)] = gg.side_p(i, j) == Side::plus ? lp.at(z) : lm.at(z);
    }
  double vmax = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = 2.0 * M_PI * k / 100.0 + 0.007;
    const Vec2 x = c.at(t);
    JumpData jd;
    jd.q = lp.at(x) - lm.at(x);
    jd.dq = lp.grad(x) - lm.grad(x);
    const ScalarTrace tr = extract_scalar(gg, Lattice::p, f, x, jd, 2, false);
    vmax = std::max(vmax, std::abs(tr.value - lp.at(x)));
  }
  CHECK(vmax < 1e-12);
}

TEST_CASE("stencils stay in bounds with tame conditioning on a flower") {
  const Grid g(-1.2, 1.2, 64);
  const TrigPolarCurve fl({0.0, 0.0}, 0.8, {{3, 0.0, 0.2}});
  const GridGeometry gg(g, fl);
  std::vector<double> zero_u1(g.size_u1(), 0.0), zero_p(g.size_p(), 0.0);
  double cmax_q = 0.0, cmax_l = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double t = 2.0 * M_PI * k / 400.0;
    const Vec2 x = fl.at(t);
    const JumpData jd{};
    cmax_q = std::max(
        cmax_q, extract_scalar(gg, Lattice::u1, zero_u1, x, jd, 0, true).cond);
    cmax_l = std::max(
        cmax_l, extract_scalar(gg, Lattice::p, zero_p, x, jd, 2, false).cond);
  }
  INFO("quadratic cond ", cmax_q, ", linear cond ", cmax_l);
  CHECK(cmax_q < 1e4);
  CHECK(cmax_l < 100.0);
}

TEST_CASE("traces of a reference solution converge at second order") {
  const ExactSolution ex = make_exact(1);
  const double mup = 1.0, mum = 10.0;
  auto mu_of = [&](Side s) { return s == Side::plus ? mup : mum; };

  auto run = [&](int n, double *ev, double *edv, double *eq, double *etr) {
    const Grid g(ex.domain_a, ex.domain_b, n);
    const GridGeometry gg(g, *ex.curve);
    const InterfaceMesh mesh(*ex.curve, n);
    std::vector<double> u1(g.size_u1()), u2(g.size_u2()), p(g.size_p());
    for (int i = 0; i < g.nx_u1(); ++i)
      for (int j = 0; j < g.ny_u1(); ++j)
        u1[g.iu1(i, j)] = ex.u(g.pos_u1(i, j), gg.side_u1(i, j)).x;
    for (int i = 0; i < g.nx_u2(); ++i)
      for (int j = 0; j < g.ny_u2(); ++j)
        u2[g.iu2(i, j)] = ex.u(g.pos_u2(i, j), gg.side_u2(i, j)).y;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        const Side s = gg.side_p(i, j);
        p[g.ip(i, j)] = ex.pressure(g.pos_p(i, j), s) / mu_of(s);
      }
    const auto traces = extract_traces(gg, mesh, u1, u2, p, [&](double t) {
      return reference_jumps(ex, mup, mum, ex.curve->at(t));
    });
    *ev = *edv = *eq = *etr = 0.0;
    for (int i = 0; i < mesh.size(); ++i) {
      const double t = mesh.node(i).t;
      const Vec2 x = ex.curve->at(t), nrm = mesh.node(i).nrm;
      const Traces &tr = traces[i];
      *ev = std::max({*ev, (tr.v_plus - ex.u(x, Side::plus)).norm(),
                      (tr.v_minus - ex.u(x, Side::minus)).norm()});
      *edv = std::max({*edv,
                       (tr.dv_plus - ex.grad_u(x, Side::plus)).max_abs(),
                       (tr.dv_minus - ex.grad_u(x, Side::minus)).max_abs()});
      *eq = std::max({*eq,
                      std::abs(tr.q_plus - ex.pressure(x, Side::plus) / mup),
                      std::abs(tr.q_minus - ex.pressure(x, Side::minus) / mum)});
      // one-sided tractions from the exact fields
      auto trac = [&](Side s) {
        const Mat2 dv = ex.grad_u(x, s);
        const double q = ex.pressure(x, s) / mu_of(s);
        return (dv + dv.transpose()) * nrm - nrm * q;
      };
      *etr = std::max(
          {*etr, (tr.trac_plus - trac(Side::plus)).norm(),
           (tr.trac_minus - trac(Side::minus)).norm(),
           (tr.trac_avg - (trac(Side::plus) + trac(Side::minus)) * 0.5).norm()});
    }
  };

  double ev64, edv64, eq64, etr64, ev128, edv128, eq128, etr128;
  run(64, &ev64, &edv64, &eq64, &etr64);
  run(128, &ev128, &edv128, &eq128, &etr128);
  INFO("v ", ev64, " -> ", ev128, ", dv ", edv64, " -> ", edv128);
  INFO("q ", eq64, " -> ", eq128, ", trac ", etr64, " -> ", etr128);
  // values: third-order interpolation; gradients/pressure/tractions: second
  CHECK(std::log2(ev64 / ev128) > 2.4);
  CHECK(std::log2(edv64 / edv128) > 1.7);
  CHECK(std::log2(eq64 / eq128) > 1.7);
  CHECK(std::log2(etr64 / etr128) > 1.7);
  CHECK(ev128 < 1e-4);
  CHECK(edv128 < 1e-2);
  CHECK(eq128 < 1e-2);
  CHECK(etr128 < 2e-2);
}
