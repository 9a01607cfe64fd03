// classify.cpp — crossing search, parity classification, irregular stencils.
#include "kfbi/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

namespace kfbi {

namespace {

/** Sign used by the crossing search: an exact zero counts as positive, so a
 * curve point landing exactly on a grid line registers one transversal
 * crossing (and a tangential touch an even number), keeping parity exact. */
inline bool neg(double f) { return f < 0.0; }

/** Root of f(t) = coord(X(t)) - c on [ta, tb] with f(ta), f(tb) of opposite
 * sign: bisection to a narrow bracket, then Newton polish. */
double refine_root(const Curve &cv, bool vertical, double c, double ta,
                   double tb, double fa) {
  double lo = ta, hi = tb, flo = fa;
  for (int it = 0; it < 40 && (hi - lo) > 1e-10 * (tb - ta + 1e-30); ++it) {
    const double mid = 0.5 * (lo + hi);
    const Vec2 x = cv.at(mid);
    const double fm = (vertical ? x.x : x.y) - c;
    if (neg(fm) == neg(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const Vec2 x = cv.at(t), v = cv.d1(t);
    const double f = (vertical ? x.x : x.y) - c;
    const double df = vertical ? v.x : v.y;
    if (df == 0.0) break;
    double tn = t - f / df;
    if (tn < ta || tn > tb) break;
    t = tn;
  }
  return t;
}

}  // namespace

GridGeometry::GridGeometry(const Grid &g, const Curve &c) : grid_(g) {
  find_crossings(c);
  classify();
  build_irregular();
}

Side GridGeometry::side(Lattice which, int i, int j) const {
  switch (which) {
    case Lattice::u1: return side_u1(i, j);
    case Lattice::u2: return side_u2(i, j);
    default: return side_p(i, j);
  }
}

int GridGeometry::total_crossings() const {
  int total = 0;
  for (const auto &f : fam_)
    for (const auto &line : f) total += static_cast<int>(line.size());
  return total;
}

void GridGeometry::find_crossings(const Curve &c) {
  const Grid &g = grid_;
  const double a = g.a, h = g.h;
  const int n = g.n;

  struct Spec {
    bool vertical;
    double first;
    int count;
  };
  const Spec specs[4] = {{true, a + h, n - 1},          // vint
                         {true, a + 0.5 * h, n},        // vhalf
                         {false, a + h, n - 1},         // hint
                         {false, a + 0.5 * h, n}};      // hhalf
  for (int f = 0; f < 4; ++f) fam_[f].assign(specs[f].count, {});

  const double T = c.period();
  const int K = std::max({2048, 8 * n, 2 * c.table_size()});
  std::vector<Vec2> sample(K + 1);
  for (int k = 0; k < K; ++k) sample[k] = c.at(T * k / K);
  // Close the loop with the identical value so the cyclic sign pattern is
  // consistent: f(T) re-evaluated can differ from f(0) by rounding, which
  // would let a crossing at the parameter seam slip through both intervals.
  sample[K] = sample[0];

  wall_margin_ = 1e300;
  for (int k = 0; k < K; ++k) {
    const Vec2 &p = sample[k];
    wall_margin_ = std::min({wall_margin_, p.x - a, g.b - p.x, p.y - a,
                             g.b - p.y});
  }
  KFBI_REQUIRE(wall_margin_ >= 3.0 * h,
               "interface must stay at least 3h away from the domain walls");

  for (int k = 0; k < K; ++k) {
    const double ta = T * k / K, tb = T * (k + 1) / K;
    const Vec2 &p0 = sample[k], &p1 = sample[k + 1];
    for (int f = 0; f < 4; ++f) {
      const Spec &sp = specs[f];
      const double c0 = ((sp.vertical ? p0.x : p0.y) - sp.first) / h;
      const double c1 = ((sp.vertical ? p1.x : p1.y) - sp.first) / h;
      const int llo = static_cast<int>(std::ceil(std::min(c0, c1)));
      const int lhi = static_cast<int>(std::floor(std::max(c0, c1)));
      for (int l = std::max(llo, 0); l <= std::min(lhi, sp.count - 1); ++l) {
        const double lc = sp.first + l * h;
        const double fa = (sp.vertical ? p0.x : p0.y) - lc;
        const double fb = (sp.vertical ? p1.x : p1.y) - lc;
        if (neg(fa) == neg(fb)) continue;  // no sign change in this interval
        const double t = refine_root(c, sp.vertical, lc, ta, tb, fa);
        const Vec2 x = c.at(t);
        Crossing xg;
        xg.t = t;
        xg.x = sp.vertical ? Vec2{lc, x.y} : Vec2{x.x, lc};
        xg.along = sp.vertical ? x.y : x.x;
        fam_[f][l].push_back(xg);
      }
    }
  }

  // Each crossing is found in exactly one sample interval (strict sign change
  // with the zero-positive convention), so sorting is all that remains; merging
  // near-equal positions would break parity for closely-spaced genuine pairs.
  for (auto &f : fam_)
    for (auto &line : f)
      std::sort(line.begin(), line.end(),
                [](const Crossing &u, const Crossing &v) {
                  return u.along < v.along;
                });
}

void GridGeometry::classify() {
  const Grid &g = grid_;
  const double tol = 1e-12 * g.h;

  // Parity of the crossing count below a node decides its side; a node within
  // tolerance of a crossing counts as exterior.
  auto sweep = [&](const std::vector<Crossing> &line, auto node_y, int count,
                   auto set_side) {
    std::size_t cptr = 0;
    for (int j = 0; j < count; ++j) {
      const double y = node_y(j);
      while (cptr < line.size() && line[cptr].along < y - tol) ++cptr;
      const bool on_node =
          (cptr < line.size() && std::abs(line[cptr].along - y) <= tol) ||
          (cptr > 0 && std::abs(line[cptr - 1].along - y) <= tol);
      const bool inside = !on_node && (cptr % 2 == 1);
      set_side(j, inside);
    }
  };

  side_u1_.assign(g.size_u1(), -1);
  for (int i = 0; i < g.nx_u1(); ++i)
    sweep(fam_[static_cast<int>(LineFamily::vint)][i],
          [&](int j) { return g.yu1(j); }, g.ny_u1(),
          [&](int j, bool in) { side_u1_[g.iu1(i, j)] = in ? 1 : -1; });

  side_u2_.assign(g.size_u2(), -1);
  side_p_.assign(g.size_p(), -1);
  for (int i = 0; i < g.n; ++i) {
    const auto &line = fam_[static_cast<int>(LineFamily::vhalf)][i];
    sweep(line, [&](int j) { return g.yu2(j); }, g.ny_u2(),
          [&](int j, bool in) { side_u2_[g.iu2(i, j)] = in ? 1 : -1; });
    sweep(line, [&](int j) { return g.yp(j); }, g.n,
          [&](int j, bool in) { side_p_[g.ip(i, j)] = in ? 1 : -1; });
  }
}

std::vector<int> GridGeometry::hits_between(LineFamily f, int line, double lo,
                                            double hi) const {
  const auto &xs = fam_[static_cast<int>(f)][line];
  std::vector<int> out;
  auto first = std::lower_bound(
      xs.begin(), xs.end(), lo,
      [](const Crossing &c, double v) { return c.along < v; });
  for (auto it = first; it != xs.end() && it->along <= hi; ++it)
    out.push_back(static_cast<int>(it - xs.begin()));
  return out;
}

void GridGeometry::build_irregular() {
  const Grid &g = grid_;
  const double h = g.h, a = g.a;
  const int n = g.n;
  const double tol = 1e-11 * h;  // endpoint slack for arm membership

  std::vector<char> cm1(g.size_u1(), 0), cm2(g.size_u2(), 0), cd(g.size_p(), 0);
  auto mark = [](std::vector<char> &m, int idx) { m[idx] = 1; };
  auto mark_span = [&](std::vector<char> &m, int nx, int ny, int i0, int j0,
                       bool span_j) {
    for (int d = -1; d <= 2; ++d) {
      const int i = span_j ? i0 : i0 + d;
      const int j = span_j ? j0 + d : j0;
      if (i >= 0 && i < nx && j >= 0 && j < ny) mark(m, i * ny + j);
    }
  };

  for (int i = 0; i < n - 1; ++i)
    for (const Crossing &c : fam_[static_cast<int>(LineFamily::vint)][i])
      mark_span(cm1, g.nx_u1(), g.ny_u1(), i,
                static_cast<int>(std::floor((c.along - a) / h - 0.5)), true);
  for (int i = 0; i < n; ++i)
    for (const Crossing &c : fam_[static_cast<int>(LineFamily::vhalf)][i]) {
      mark_span(cm2, g.nx_u2(), g.ny_u2(), i,
                static_cast<int>(std::floor((c.along - a) / h - 1.0)), true);
      mark_span(cd, n, n, i,
                static_cast<int>(std::floor((c.along - a) / h - 0.5)), true);
    }
  for (int j = 0; j < n - 1; ++j)
    for (const Crossing &c : fam_[static_cast<int>(LineFamily::hint)][j])
      mark_span(cm2, g.nx_u2(), g.ny_u2(),
                static_cast<int>(std::floor((c.along - a) / h - 0.5)), j,
                false);
  for (int j = 0; j < n; ++j)
    for (const Crossing &c : fam_[static_cast<int>(LineFamily::hhalf)][j]) {
      mark_span(cm1, g.nx_u1(), g.ny_u1(),
                static_cast<int>(std::floor((c.along - a) / h - 1.0)), j,
                false);
      mark_span(cd, n, n,
                static_cast<int>(std::floor((c.along - a) / h - 0.5)), j,
                false);
    }

  // Precise arm enumeration for one candidate equation. P is the equation
  // node, R the neighbor carrying stencil coefficient `coef`; both lie on the
  // given grid line. Emits an ArmHit when the interface separates P from R.
  auto probe_arm = [&](std::vector<ArmHit> &arms, LineFamily f, int line,
                       const Vec2 &P, Side sideP, const Vec2 &R, Side sideR,
                       double coef, int comp, int order) {
    const bool vertical =
        (f == LineFamily::vint || f == LineFamily::vhalf);
    const double ap = vertical ? P.y : P.x;
    const double ar = vertical ? R.y : R.x;
    const auto hits = hits_between(f, line, std::min(ap, ar) - tol,
                                   std::max(ap, ar) + tol);
    if (sideR == sideP) {
      if (!hits.empty()) {
        // An even crossing group inside one arm needs no correction (the jump
        // terms cancel). A pair spanning a real fraction of the arm signals an
        // under-resolved feature; a degenerate pair is just a tangential touch.
        const auto &xs = fam_[static_cast<int>(f)][line];
        const double span =
            xs[hits.back()].along - xs[hits.front()].along;
        if (span > 0.01 * h && skipped_arms_++ == 0)
          std::fprintf(stderr,
                       "[kfbi] warning: interface crosses and returns within "
                       "one stencil arm near (%.6g, %.6g); under-resolved "
                       "feature skipped\n",
                       P.x, P.y);
      }
      return;
    }
    if (hits.empty()) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "side parity inconsistent with crossing list: family %d "
                    "line %d, arm (%.17g, %.17g) -> (%.17g, %.17g)",
                    static_cast<int>(f), line, P.x, P.y, R.x, R.y);
      fail(buf);
    }
    const auto &xs = fam_[static_cast<int>(f)][line];
    int best = hits.front();
    for (int idx : hits)
      if (std::abs(xs[idx].along - ap) < std::abs(xs[best].along - ap))
        best = idx;
    const Crossing &c = xs[best];
    arms.push_back(ArmHit{c.x, c.t, coef, R - c.x, comp, order});
  };

  const double ch2 = -1.0 / (h * h);  // Laplacian off-diagonal coefficient
  const double chp = 1.0 / h;

  mom1_.clear();
  for (int i = 0; i < g.nx_u1(); ++i)
    for (int j = 0; j < g.ny_u1(); ++j) {
      if (!cm1[g.iu1(i, j)]) continue;
      const Vec2 P = g.pos_u1(i, j);
      const Side sp = side_u1(i, j);
      IrregularEq eq;
      eq.idx = g.iu1(i, j);
      eq.sgn = side_sign(sp);
      if (i > 0)
        probe_arm(eq.arms, LineFamily::hhalf, j, P, sp, g.pos_u1(i - 1, j),
                  side_u1(i - 1, j), ch2, 0, 2);
      if (i + 1 < g.nx_u1())
        probe_arm(eq.arms, LineFamily::hhalf, j, P, sp, g.pos_u1(i + 1, j),
                  side_u1(i + 1, j), ch2, 0, 2);
      if (j > 0)
        probe_arm(eq.arms, LineFamily::vint, i, P, sp, g.pos_u1(i, j - 1),
                  side_u1(i, j - 1), ch2, 0, 2);
      if (j + 1 < g.ny_u1())
        probe_arm(eq.arms, LineFamily::vint, i, P, sp, g.pos_u1(i, j + 1),
                  side_u1(i, j + 1), ch2, 0, 2);
      probe_arm(eq.arms, LineFamily::hhalf, j, P, sp, g.pos_p(i, j),
                side_p(i, j), -chp, 2, 1);
      probe_arm(eq.arms, LineFamily::hhalf, j, P, sp, g.pos_p(i + 1, j),
                side_p(i + 1, j), chp, 2, 1);
      if (!eq.arms.empty()) mom1_.push_back(std::move(eq));
    }

  mom2_.clear();
  for (int i = 0; i < g.nx_u2(); ++i)
    for (int j = 0; j < g.ny_u2(); ++j) {
      if (!cm2[g.iu2(i, j)]) continue;
      const Vec2 P = g.pos_u2(i, j);
      const Side sp = side_u2(i, j);
      IrregularEq eq;
      eq.idx = g.iu2(i, j);
      eq.sgn = side_sign(sp);
      if (i > 0)
        probe_arm(eq.arms, LineFamily::hint, j, P, sp, g.pos_u2(i - 1, j),
                  side_u2(i - 1, j), ch2, 1, 2);
      if (i + 1 < g.nx_u2())
        probe_arm(eq.arms, LineFamily::hint, j, P, sp, g.pos_u2(i + 1, j),
                  side_u2(i + 1, j), ch2, 1, 2);
      if (j > 0)
        probe_arm(eq.arms, LineFamily::vhalf, i, P, sp, g.pos_u2(i, j - 1),
                  side_u2(i, j - 1), ch2, 1, 2);
      if (j + 1 < g.ny_u2())
        probe_arm(eq.arms, LineFamily::vhalf, i, P, sp, g.pos_u2(i, j + 1),
                  side_u2(i, j + 1), ch2, 1, 2);
      probe_arm(eq.arms, LineFamily::vhalf, i, P, sp, g.pos_p(i, j),
                side_p(i, j), -chp, 2, 1);
      probe_arm(eq.arms, LineFamily::vhalf, i, P, sp, g.pos_p(i, j + 1),
                side_p(i, j + 1), chp, 2, 1);
      if (!eq.arms.empty()) mom2_.push_back(std::move(eq));
    }

  div_.clear();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!cd[g.ip(i, j)]) continue;
      const Vec2 P = g.pos_p(i, j);
      const Side sp = side_p(i, j);
      IrregularEq eq;
      eq.idx = g.ip(i, j);
      eq.sgn = side_sign(sp);
      if (i > 0)
        probe_arm(eq.arms, LineFamily::hhalf, j, P, sp, g.pos_u1(i - 1, j),
                  side_u1(i - 1, j), -chp, 0, 1);
      if (i < n - 1)
        probe_arm(eq.arms, LineFamily::hhalf, j, P, sp, g.pos_u1(i, j),
                  side_u1(i, j), chp, 0, 1);
      if (j > 0)
        probe_arm(eq.arms, LineFamily::vhalf, i, P, sp, g.pos_u2(i, j - 1),
                  side_u2(i, j - 1), -chp, 1, 1);
      if (j < n - 1)
        probe_arm(eq.arms, LineFamily::vhalf, i, P, sp, g.pos_u2(i, j),
                  side_u2(i, j), chp, 1, 1);
      if (!eq.arms.empty()) div_.push_back(std::move(eq));
    }
}

}  // namespace kfbi
