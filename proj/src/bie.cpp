// bie.cpp — GMRES and the two-phase interface solver built on grid solves.
#include "kfbi/bie.hpp"

#include <cmath>

#include "kfbi/corrections.hpp"

namespace kfbi {

namespace {

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double a, const std::vector<double> &x, std::vector<double> &y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline double mu_of(Side s, double mu_p, double mu_m) {
  return s == Side::plus ? mu_p : mu_m;
}

}  // namespace

GmresStats gmres_solve(
    const std::function<void(const std::vector<double> &,
                             std::vector<double> &)> &op,
    const std::vector<double> &b, std::vector<double> &x, double tol,
    int max_iters) {
  const std::size_t dim = b.size();
  GmresStats st;
  x.assign(dim, 0.0);
  const double bmax = max_abs(b);
  if (bmax == 0.0) {
    st.converged = true;
    return st;
  }
  const double beta = std::sqrt(dot(b, b));

  std::vector<std::vector<double>> V, Hraw, R;
  std::vector<double> cs, sn, gv{beta}, y;
  V.emplace_back(dim);
  for (std::size_t i = 0; i < dim; ++i) V[0][i] = b[i] / beta;

  std::vector<double> w(dim);
  for (int k = 0; k < max_iters; ++k) {
    op(V[k], w);
    std::vector<double> h(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      h[i] = dot(w, V[i]);
      axpy(-h[i], V[i], w);
    }
    const double hn = std::sqrt(dot(w, w));
    h[k + 1] = hn;
    Hraw.push_back(h);

    // Rotate the new column by the accumulated Givens rotations, then append
    // the rotation that annihilates its subdiagonal.
    std::vector<double> rc(h);
    for (int i = 0; i < k; ++i) {
      const double t0 = cs[i] * rc[i] + sn[i] * rc[i + 1];
      const double t1 = -sn[i] * rc[i] + cs[i] * rc[i + 1];
      rc[i] = t0;
      rc[i + 1] = t1;
    }
    const double denom = std::hypot(rc[k], rc[k + 1]);
    double c = 1.0, s = 0.0;
    if (denom > 0.0) {
      c = rc[k] / denom;
      s = rc[k + 1] / denom;
    }
    cs.push_back(c);
    sn.push_back(s);
    rc[k] = denom;
    rc[k + 1] = 0.0;
    R.push_back(rc);
    const double g0 = gv[k];
    gv[k] = c * g0;
    gv.push_back(-s * g0);

    const bool breakdown = hn <= 1e-14 * beta;
    if (!breakdown) {
      V.emplace_back(dim);
      for (std::size_t i = 0; i < dim; ++i) V[k + 1][i] = w[i] / hn;
    } else {
      V.emplace_back(dim, 0.0);
    }

    // Least-squares solution in the Krylov basis.
    y.assign(k + 1, 0.0);
    for (int i = k; i >= 0; --i) {
      double acc = gv[i];
      for (int j = i + 1; j <= k; ++j) acc -= R[j][i] * y[j];
      KFBI_REQUIRE(R[i][i] != 0.0, "GMRES projected system is singular");
      y[i] = acc / R[i][i];
    }

    // True residual vector via the Arnoldi relation, for a max-norm test.
    std::vector<double> d(k + 2, 0.0);
    d[0] = beta;
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j + 1; ++i) d[i] -= Hraw[j][i] * y[j];
    std::vector<double> r(dim, 0.0);
    for (int i = 0; i <= k + 1; ++i)
      if (d[i] != 0.0) axpy(d[i], V[i], r);
    st.rel_res = max_abs(r) / bmax;
    st.iters = k + 1;
    st.history.push_back(st.rel_res);
    if (st.rel_res <= tol || breakdown) {
      st.converged = st.rel_res <= tol;
      break;
    }
  }
  for (std::size_t j = 0; j < y.size(); ++j) axpy(y[j], V[j], x);
  return st;
}

KfbiResult solve_two_phase(const Grid &grid, const TwoPhaseProblem &prob,
                           const KfbiOptions &opt) {
  KFBI_REQUIRE(prob.curve != nullptr, "two-phase problem needs a curve");
  KFBI_REQUIRE(prob.mu_plus > 0.0 && prob.mu_minus > 0.0,
               "viscosities must be positive");
  const double mu_p = prob.mu_plus, mu_m = prob.mu_minus;
  const double musum = mu_p + mu_m;
  const double gamma = (mu_p - mu_m) / musum;

  KfbiResult res;
  if (opt.node_params)
    res.mesh = std::make_shared<InterfaceMesh>(*prob.curve, *opt.node_params);
  else
    res.mesh = std::make_shared<InterfaceMesh>(
        *prob.curve, opt.nodes > 0 ? opt.nodes : grid.n);
  res.geometry = std::make_shared<GridGeometry>(grid, *prob.curve);
  const InterfaceMesh &mesh = *res.mesh;
  const GridGeometry &gg = *res.geometry;
  const int m = mesh.size();

  SaddleSolver solver(grid, opt.cg_tol);

  // Per-side scaled body force sampled on the staggered lattices, plus its
  // interface jump for the correction terms.
  SaddleRhs base(grid);
  std::function<Vec2(double)> jf;
  if (prob.body_force) {
    for (int i = 0; i < grid.nx_u1(); ++i)
      for (int j = 0; j < grid.ny_u1(); ++j) {
        const Side s = gg.side_u1(i, j);
        base.f1[grid.iu1(i, j)] =
            prob.body_force(grid.pos_u1(i, j), s).x / mu_of(s, mu_p, mu_m);
      }
    for (int i = 0; i < grid.nx_u2(); ++i)
      for (int j = 0; j < grid.ny_u2(); ++j) {
        const Side s = gg.side_u2(i, j);
        base.f2[grid.iu2(i, j)] =
            prob.body_force(grid.pos_u2(i, j), s).y / mu_of(s, mu_p, mu_m);
      }
    const Curve *cv = prob.curve.get();
    auto bf = prob.body_force;
    jf = [cv, bf, mu_p, mu_m](double t) {
      const Vec2 xx = cv->at(t);
      return bf(xx, Side::plus) / mu_p - bf(xx, Side::minus) / mu_m;
    };
  }

  // Scaled traction-jump data at the nodes.
  std::vector<Vec2> ghat(m);
  for (int i = 0; i < m; ++i)
    ghat[i] = (prob.traction_jump ? prob.traction_jump(mesh.node(i).t)
                                  : Vec2{}) /
              musum;

  // Wall-data lift: one smooth solve absorbs inhomogeneous wall velocity, and
  // its traction re-enters the interface data.
  std::vector<double> ud1, ud2, qd;
  const bool lift = static_cast<bool>(prob.wall_velocity);
  if (lift) {
    SaddleRhs lr(grid);
    add_boundary_terms(grid, prob.wall_velocity, lr);
    solver.solve(lr, ud1, ud2, qd);
    auto dtr = extract_traces(gg, mesh, ud1, ud2, qd, {});
    for (int i = 0; i < m; ++i)
      ghat[i] = ghat[i] - dtr[i].trac_avg * ((mu_p - mu_m) / musum);
  }

  std::vector<double> b(2 * m, 0.0);
  for (int i = 0; i < m; ++i) {
    b[2 * i] = ghat[i].x;
    b[2 * i + 1] = ghat[i].y;
  }

  auto solve_with = [&](const JumpSource &js, const SaddleRhs &body,
                        std::vector<double> &v1, std::vector<double> &v2,
                        std::vector<double> &q) {
    SaddleRhs r = body;
    add_interface_corrections(gg, [&js](double t) { return js.at(t); }, r);
    return solver.solve(r, v1, v2, q);
  };

  // Volume contribution of the body force to the interface equation.
  if (prob.body_force) {
    JumpSource js(mesh, nullptr, nullptr, jf);
    std::vector<double> v1, v2, q;
    solve_with(js, base, v1, v2, q);
    auto tr =
        extract_traces(gg, mesh, v1, v2, q,
                       [&js](double t) { return js.at(t); });
    for (int i = 0; i < m; ++i) {
      b[2 * i] -= gamma * tr[i].trac_avg.x;
      b[2 * i + 1] -= gamma * tr[i].trac_avg.y;
    }
  }

  // Prescribed velocity-jump contribution.
  std::optional<NodalDensity> phi_den;
  if (prob.velocity_jump) {
    std::vector<double> pv(2 * m);
    for (int i = 0; i < m; ++i) {
      const Vec2 ph = prob.velocity_jump(mesh.node(i).t);
      pv[2 * i] = ph.x;
      pv[2 * i + 1] = ph.y;
    }
    phi_den.emplace(mesh, pv);
    JumpSource js(mesh, &*phi_den, nullptr);
    std::vector<double> v1, v2, q;
    solve_with(js, SaddleRhs(grid), v1, v2, q);
    auto tr =
        extract_traces(gg, mesh, v1, v2, q,
                       [&js](double t) { return js.at(t); });
    for (int i = 0; i < m; ++i) {
      b[2 * i] -= gamma * tr[i].trac_avg.x;
      b[2 * i + 1] -= gamma * tr[i].trac_avg.y;
    }
  }

  // Interface equation for the density: (1/2) psi + gamma M psi = b.
  std::vector<double> psi(2 * m, 0.0);
  if (opt.direct_single_fluid) {
    KFBI_REQUIRE(std::abs(gamma) < 1e-14,
                 "direct path requires equal viscosities");
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = 2.0 * b[i];
  } else {
    auto apply = [&](const std::vector<double> &in, std::vector<double> &out) {
      NodalDensity den(mesh, in);
      JumpSource js(mesh, nullptr, &den);
      std::vector<double> v1, v2, q;
      solve_with(js, SaddleRhs(grid), v1, v2, q);
      auto tr =
          extract_traces(gg, mesh, v1, v2, q,
                         [&js](double t) { return js.at(t); });
      out.resize(in.size());
      for (int i = 0; i < m; ++i) {
        out[2 * i] = 0.5 * in[2 * i] + gamma * tr[i].trac_avg.x;
        out[2 * i + 1] = 0.5 * in[2 * i + 1] + gamma * tr[i].trac_avg.y;
      }
    };
    GmresStats st =
        gmres_solve(apply, b, psi, opt.gmres_tol, opt.gmres_max_iters);
    res.gmres_iters = st.iters;
    res.gmres_history = std::move(st.history);
  }

  // Final field solve with all interface data.
  NodalDensity psi_den(mesh, psi);
  JumpSource js_final(mesh, phi_den ? &*phi_den : nullptr, &psi_den, jf);
  res.last_saddle = solve_with(js_final, base, res.u1, res.u2, res.p);
  auto tr_final =
      extract_traces(gg, mesh, res.u1, res.u2, res.p,
                     [&js_final](double t) { return js_final.at(t); });

  // Residual certificate: by linearity the averaged traction of the final
  // solve is the sum of the layer contributions, so the interface-equation
  // residual reduces to ghat - psi/2 - gamma * (averaged final traction).
  double rmax = 0.0;
  const double bnorm = max_abs(b);
  for (int i = 0; i < m; ++i) {
    const double rx =
        ghat[i].x - 0.5 * psi[2 * i] - gamma * tr_final[i].trac_avg.x;
    const double ry =
        ghat[i].y - 0.5 * psi[2 * i + 1] - gamma * tr_final[i].trac_avg.y;
    rmax = std::max(rmax, std::max(std::abs(rx), std::abs(ry)));
  }
  res.gmres_rel_res = bnorm > 0.0 ? rmax / bnorm : rmax;
  res.psi = std::move(psi);
  if (opt.want_traces) res.traces = std::move(tr_final);

  if (lift) {
    for (std::size_t i = 0; i < res.u1.size(); ++i) res.u1[i] += ud1[i];
    for (std::size_t i = 0; i < res.u2.size(); ++i) res.u2[i] += ud2[i];
    for (std::size_t i = 0; i < res.p.size(); ++i) res.p[i] += qd[i];
  }
  return res;
}

}  // namespace kfbi
