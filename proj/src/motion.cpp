// motion.cpp — interface evolution loop.
#include "kfbi/motion.hpp"

#include <cmath>
#include <numeric>

namespace kfbi {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Vec2 tension_traction(const Curve &c, double tension, double t) {
  // In the outward-normal frame with CCW-positive curvature the pillbox
  // balance across the interface gives a traction jump of -tension*kappa*n:
  // pressure is higher inside a convex region.
  return c.normal(t) * (-tension * c.curvature(t));
}

Vec2 sample_velocity(const Grid &g, const std::vector<double> &u1,
                     const std::vector<double> &u2, const Vec2 &x) {
  // Per-component bilinear interpolation on the face lattices extended by the
  // homogeneous wall values.
  auto interp = [&](int comp) {
    const double ox = comp == 1 ? g.a : g.a + 0.5 * g.h;
    const double oy = comp == 1 ? g.a + 0.5 * g.h : g.a;
    const int nx = comp == 1 ? g.n + 1 : g.n;      // including wall columns
    const int ny = comp == 1 ? g.n : g.n + 1;
    const double fx = (x.x - ox) / g.h;
    const double fy = (x.y - oy) / g.h;
    const int i0 = static_cast<int>(std::floor(fx));
    const int j0 = static_cast<int>(std::floor(fy));
    KFBI_REQUIRE(i0 >= 0 && i0 + 1 <= nx - 1 && j0 >= 0 && j0 + 1 <= ny - 1,
                 "velocity sample point too close to the walls");
    const double ax = fx - i0, ay = fy - j0;
    auto value = [&](int i, int j) {
      if (comp == 1)
        return (i == 0 || i == g.n) ? 0.0 : u1[g.iu1(i - 1, j)];
      return (j == 0 || j == g.n) ? 0.0 : u2[g.iu2(i, j - 1)];
    };
    return (1 - ax) * (1 - ay) * value(i0, j0) +
           ax * (1 - ay) * value(i0 + 1, j0) +
           (1 - ax) * ay * value(i0, j0 + 1) + ax * ay * value(i0 + 1, j0 + 1);
  };
  return Vec2{interp(1), interp(2)};
}

EvolveResult run_simulation(const Grid &grid, std::vector<Vec2> points,
                            const EvolveParams &par, const EvolveCallback &cb) {
  const int m = static_cast<int>(points.size());
  KFBI_REQUIRE(m >= 8, "need at least 8 interface markers");
  KFBI_REQUIRE(par.tension >= 0.0, "surface tension must be nonnegative");

  EvolveResult out;
  double t = 0.0;
  int step = 0;
  const double tiny = 1e-12 * std::max(1.0, par.t_final);

  std::vector<double> params(m);
  std::iota(params.begin(), params.end(), 0.0);  // markers are the spline knots

  while (true) {
    auto curve = std::make_shared<SplineCurve>(points);
    const double area = curve->area();
    const double len = curve->length();
    if (step == 0) {
      out.initial_area = area;
      out.initial_length = len;
    }
    const bool done = t >= par.t_final - tiny;

    KfbiResult res;
    std::vector<Vec2> vel(m);
    double vmax = 0.0, dt = 0.0;
    int giters = 0;
    if (!done) {
      TwoPhaseProblem prob;
      prob.mu_plus = par.mu_plus;
      prob.mu_minus = par.mu_minus;
      prob.curve = curve;
      const double T0 = par.tension;
      const Curve *cp = curve.get();
      prob.traction_jump = [cp, T0](double tt) {
        return tension_traction(*cp, T0, tt);
      };
      KfbiOptions opt;
      opt.gmres_tol = par.gmres_tol;
      opt.cg_tol = par.cg_tol;
      opt.node_params = params;
      res = solve_two_phase(grid, prob, opt);
      giters = res.gmres_iters;
      for (int i = 0; i < m; ++i) {
        vel[i] = sample_velocity(grid, res.u1, res.u2, points[i]);
        vmax = std::max(vmax, vel[i].norm());
      }
      dt = par.dt > 0.0 ? par.dt : grid.h;
      if (vmax > 0.0) dt = std::min(dt, par.max_move_frac * grid.h / vmax);
      dt = std::min(dt, par.t_final - t);
    }

    if (done || par.record_every <= 1 || step % par.record_every == 0) {
      EvolveRecord rec;
      rec.step = step;
      rec.time = t;
      rec.dt = dt;
      rec.area = area;
      rec.length = len;
      rec.isoperimetric = 4.0 * kPi * area / (len * len);
      rec.max_speed = vmax;
      rec.gmres_iters = giters;
      out.history.push_back(rec);
    }
    if (cb) cb(step, t, *curve, done ? nullptr : &res);
    if (done) {
      out.final_area = area;
      out.points = points;
      break;
    }

    for (int i = 0; i < m; ++i) points[i] = points[i] + vel[i] * dt;
    t += dt;
    ++step;

    if (par.redistribute_every > 0 && step % par.redistribute_every == 0) {
      SplineCurve nc(points);
      const std::vector<double> ps = nc.equipartition(m);
      std::vector<Vec2> np(m);
      for (int i = 0; i < m; ++i) np[i] = nc.at(ps[i]);
      points = np;
    }
  }
  return out;
}

}  // namespace kfbi
