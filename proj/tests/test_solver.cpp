// test_solver.cpp — fast velocity blocks and the Uzawa saddle solver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "kfbi/corrections.hpp"
#include "kfbi/curve.hpp"
#include "kfbi/poisson_dst.hpp"
#include "kfbi/stokes_solver.hpp"

using namespace kfbi;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> random_vec(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (double &x : v) x = d(rng);
  return v;
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
}  // namespace

TEST_CASE("velocity blocks: discrete eigenvectors, roundtrip, symmetry") {
  const Grid g(-0.5, 1.5, 24);
  const int n = g.n;
  for (int comp : {1, 2}) {
    CAPTURE(comp);
    const DstVelocitySolver A(g, comp);

    // Product eigenvector: eliminated-Dirichlet sine in the wall-normal
    // direction, half-offset sine (reflected ghosts) in the other.
    const int m1 = 3, m2 = 5;
    const int nx = comp == 1 ? n - 1 : n, ny = comp == 1 ? n : n - 1;
    std::vector<double> v(nx * ny), av;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const double sx = comp == 1 ? std::sin(m1 * kPi * (i + 1.0) / n)
                                    : std::sin(m1 * kPi * (i + 0.5) / n);
        const double sy = comp == 1 ? std::sin(m2 * kPi * (j + 0.5) / n)
                                    : std::sin(m2 * kPi * (j + 1.0) / n);
        v[i * ny + j] = sx * sy;
      }
    const double lam =
        (4.0 / (g.h * g.h)) * (std::pow(std::sin(m1 * kPi / (2.0 * n)), 2) +
                               std::pow(std::sin(m2 * kPi / (2.0 * n)), 2));
    A.apply(v, av);
    double worst = 0.0;
    for (int k = 0; k < nx * ny; ++k)
      worst = std::max(worst, std::abs(av[k] - lam * v[k]));
    CHECK(worst < 1e-10 * lam);

    // solve(apply(x)) = x and apply(solve(b)) = b
    const auto x = random_vec(A.size(), 17u + comp);
    std::vector<double> b, xr, br;
    A.apply(x, b);
    A.solve(b, xr);
    double e = 0.0;
    for (int k = 0; k < A.size(); ++k) e = std::max(e, std::abs(xr[k] - x[k]));
    CHECK(e < 1e-11);
    A.solve(x, br);
    A.apply(br, b);
    e = 0.0;
    for (int k = 0; k < A.size(); ++k) e = std::max(e, std::abs(b[k] - x[k]));
    CHECK(e < 1e-9 / (g.h * g.h));

    // symmetry and positivity of the operator
    const auto y = random_vec(A.size(), 91u + comp);
    std::vector<double> ay;
    A.apply(x, b);
    A.apply(y, ay);
    CHECK(dot(b, y) == doctest::Approx(dot(x, ay)).epsilon(1e-12));
    CHECK(dot(b, x) > 0.0);
  }
}

TEST_CASE("gradient and divergence are negative adjoints") {
  const Grid g(0.0, 1.0, 16);
  const SaddleSolver solver(g);
  const auto p = random_vec(g.size_p(), 5u);
  const auto u1 = random_vec(g.size_u1(), 6u);
  const auto u2 = random_vec(g.size_u2(), 7u);
  std::vector<double> g1, g2, d;
  solver.gradient(p, g1, g2);
  solver.divergence(u1, u2, d);
  // <G p, u> = -<p, Div u>
  const double lhs = dot(g1, u1) + dot(g2, u2);
  const double rhs = -dot(p, d);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("manufactured smooth solution converges at second order") {
  auto u1e = [](const Vec2 &z) {
    return kPi * std::sin(kPi * z.x) * std::cos(kPi * z.y);
  };
  auto u2e = [](const Vec2 &z) {
    return -kPi * std::cos(kPi * z.x) * std::sin(kPi * z.y);
  };
  auto pe = [](const Vec2 &z) {
    return std::cos(kPi * z.x) * std::sin(kPi * z.y);
  };

  auto run = [&](int n, double *eu, double *ep) {
    const Grid g(0.0, 1.0, n);
    SaddleRhs rhs(g);
    for (int i = 0; i < g.nx_u1(); ++i)
      for (int j = 0; j < g.ny_u1(); ++j) {
        const Vec2 z = g.pos_u1(i, j);
        rhs.f1[g.iu1(i, j)] = 2.0 * std::pow(kPi, 3) * std::sin(kPi * z.x) *
                                  std::cos(kPi * z.y) -
                              kPi * std::sin(kPi * z.x) * std::sin(kPi * z.y);
      }
    for (int i = 0; i < g.nx_u2(); ++i)
      for (int j = 0; j < g.ny_u2(); ++j) {
        const Vec2 z = g.pos_u2(i, j);
        rhs.f2[g.iu2(i, j)] = -2.0 * std::pow(kPi, 3) * std::cos(kPi * z.x) *
                                  std::sin(kPi * z.y) +
                              kPi * std::cos(kPi * z.x) * std::cos(kPi * z.y);
      }
    add_boundary_terms(
        g, [&](Vec2 z) { return Vec2{u1e(z), u2e(z)}; }, rhs);

    const SaddleSolver solver(g);
    std::vector<double> u1, u2, p;
    const SaddleStats st = solver.solve(rhs, u1, u2, p);
    CHECK(st.mom_res < 1e-8);
    CHECK(st.div_res < 1e-8);

    double e2 = 0.0;
    for (int i = 0; i < g.nx_u1(); ++i)
      for (int j = 0; j < g.ny_u1(); ++j)
        e2 += std::pow(u1[g.iu1(i, j)] - u1e(g.pos_u1(i, j)), 2);
    for (int i = 0; i < g.nx_u2(); ++i)
      for (int j = 0; j < g.ny_u2(); ++j)
        e2 += std::pow(u2[g.iu2(i, j)] - u2e(g.pos_u2(i, j)), 2);
    *eu = std::sqrt(g.h * g.h * e2);

    double pm_num = 0.0, pm_exact = 0.0;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        pm_num += p[g.ip(i, j)];
        pm_exact += pe(g.pos_p(i, j));
      }
    pm_num /= g.size_p();
    pm_exact /= g.size_p();
    double ep2 = 0.0;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        ep2 += std::pow((p[g.ip(i, j)] - pm_num) -
                            (pe(g.pos_p(i, j)) - pm_exact),
                        2);
    *ep = std::sqrt(g.h * g.h * ep2);
  };

  double eu32, ep32, eu64, ep64, eu128, ep128;
  run(32, &eu32, &ep32);
  run(64, &eu64, &ep64);
  run(128, &eu128, &ep128);
  INFO("velocity errors ", eu32, " ", eu64, " ", eu128);
  INFO("pressure errors ", ep32, " ", ep64, " ", ep128);
  CHECK(std::log2(eu32 / eu64) > 1.9);
  CHECK(std::log2(eu64 / eu128) > 1.9);
  CHECK(std::log2(ep32 / ep64) > 1.5);
  CHECK(std::log2(ep64 / ep128) > 1.5);
}

TEST_CASE("residual certificates are verified externally") {
  const Grid g(0.0, 2.0, 20);
  SaddleRhs rhs(g);
  rhs.f1 = random_vec(g.size_u1(), 31u);
  rhs.f2 = random_vec(g.size_u2(), 32u);
  rhs.g = random_vec(g.size_p(), 33u);
  double mean = 0.0;
  for (double x : rhs.g) mean += x;
  mean /= g.size_p();
  for (double &x : rhs.g) x -= mean;  // compatible divergence target

  const SaddleSolver solver(g);
  std::vector<double> u1, u2, p;
  const SaddleStats st = solver.solve(rhs, u1, u2, p);

  // recompute the residuals independently of the solver's bookkeeping
  const DstVelocitySolver A1(g, 1), A2(g, 2);
  std::vector<double> au1, au2, g1, g2, d;
  A1.apply(u1, au1);
  A2.apply(u2, au2);
  solver.gradient(p, g1, g2);
  solver.divergence(u1, u2, d);
  double mom = 0.0, div = 0.0;
  for (int k = 0; k < g.size_u1(); ++k)
    mom = std::max(mom, std::abs(au1[k] + g1[k] - rhs.f1[k]));
  for (int k = 0; k < g.size_u2(); ++k)
    mom = std::max(mom, std::abs(au2[k] + g2[k] - rhs.f2[k]));
  for (int k = 0; k < g.size_p(); ++k)
    div = std::max(div, std::abs(d[k] - rhs.g[k]));

  CHECK(st.mom_res == doctest::Approx(mom).epsilon(1e-10));
  CHECK(st.div_res == doctest::Approx(div).epsilon(1e-10));
  CHECK(mom < 1e-9);
  CHECK(div < 1e-9);
  CHECK(std::abs(st.incompat) < 1e-14);
  // pressure is returned with zero mean
  double pm = 0.0;
  for (double x : p) pm += x;
  CHECK(std::abs(pm / g.size_p()) < 1e-12);
}

TEST_CASE("zero interface jumps leave the solve unchanged") {
  const Grid g(0.0, 1.0, 16);
  const CircleCurve c({0.5, 0.5}, 0.2);
  const GridGeometry gg(g, c);

  SaddleRhs rhs(g);
  rhs.f1 = random_vec(g.size_u1(), 41u);
  rhs.f2 = random_vec(g.size_u2(), 42u);

  SaddleRhs rhs2 = rhs;
  add_interface_corrections(gg, [](double) { return JumpData{}; }, rhs2);

  const SaddleSolver solver(g);
  std::vector<double> u1a, u2a, pa, u1b, u2b, pb;
  solver.solve(rhs, u1a, u2a, pa);
  solver.solve(rhs2, u1b, u2b, pb);
  double e = 0.0;
  for (int k = 0; k < g.size_u1(); ++k)
    e = std::max(e, std::abs(u1a[k] - u1b[k]));
  for (int k = 0; k < g.size_u2(); ++k)
    e = std::max(e, std::abs(u2a[k] - u2b[k]));
  for (int k = 0; k < g.size_p(); ++k)
    e = std::max(e, std::abs(pa[k] - pb[k]));
  CHECK(e < 1e-13);
}
