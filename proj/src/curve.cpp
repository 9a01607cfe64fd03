// curve.cpp — periodic splines, arclength/area tables, analytic curve families.
#include "kfbi/curve.hpp"

#include <algorithm>
#include <cmath>

namespace kfbi {

namespace {

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr int kGaussN = 5;
constexpr double kGaussX[kGaussN] = {-0.9061798459386640, -0.5384693101056831,
                                     0.0, 0.5384693101056831,
                                     0.9061798459386640};
constexpr double kGaussW[kGaussN] = {0.2369268850561891, 0.4786286704993665,
                                     0.5688888888888889, 0.4786286704993665,
                                     0.2369268850561891};

/** Solve a tridiagonal system in place (Thomas); diag/rhs are overwritten. */
void thomas(std::vector<double> &sub, std::vector<double> &diag,
            std::vector<double> &sup, std::vector<double> &rhs) {
  const int n = static_cast<int>(diag.size());
  for (int i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (int i = n - 2; i >= 0; --i)
    rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
}

}  // namespace

PeriodicSpline1::PeriodicSpline1(std::vector<double> knots,
                                 std::vector<double> values, double period)
    : knots_(std::move(knots)), values_(std::move(values)), period_(period) {
  const int m = static_cast<int>(knots_.size());
  KFBI_REQUIRE(m >= 3 && values_.size() == knots_.size() && period_ > 0.0,
               "periodic spline needs >= 3 knots");
  std::vector<double> h(m);  // h[i] = t_{i+1} - t_i, wrapping at the seam
  for (int i = 0; i < m; ++i) {
    const double tn = (i + 1 < m) ? knots_[i + 1] : knots_[0] + period_;
    h[i] = tn - knots_[i];
    KFBI_REQUIRE(h[i] > 0.0, "spline knots must be strictly increasing");
  }
  // Cyclic tridiagonal system for the knot second derivatives M_i:
  //   h_{i-1}/6 M_{i-1} + (h_{i-1}+h_i)/3 M_i + h_i/6 M_{i+1}
  //     = (v_{i+1}-v_i)/h_i - (v_i-v_{i-1})/h_{i-1}
  std::vector<double> sub(m), diag(m), sup(m), rhs(m);
  for (int i = 0; i < m; ++i) {
    const int im = (i + m - 1) % m, ip = (i + 1) % m;
    sub[i] = h[im] / 6.0;
    diag[i] = (h[im] + h[i]) / 3.0;
    sup[i] = h[i] / 6.0;
    rhs[i] = (values_[ip] - values_[i]) / h[i] -
             (values_[i] - values_[im]) / h[im];
  }
  // Sherman-Morrison to fold the two cyclic corner entries into a rank-1 update.
  const double alpha = h[m - 1] / 6.0;  // coupling across the seam (symmetric)
  const double gamma = -diag[0];
  std::vector<double> d1 = diag, d2 = diag, r2(m, 0.0);
  d1[0] -= gamma;
  d1[m - 1] -= alpha * alpha / gamma;
  d2 = d1;
  r2[0] = gamma;
  r2[m - 1] = alpha;
  std::vector<double> s1 = sub, p1 = sup, s2 = sub, p2 = sup, r1 = rhs;
  thomas(s1, d1, p1, r1);
  thomas(s2, d2, p2, r2);
  const double vy = r1[0] + (alpha / gamma) * r1[m - 1];
  const double vz = r2[0] + (alpha / gamma) * r2[m - 1];
  const double factor = vy / (1.0 + vz);
  m2_.resize(m);
  for (int i = 0; i < m; ++i) m2_[i] = r1[i] - factor * r2[i];
}

int PeriodicSpline1::segment(double &t) const {
  const double t0 = knots_.front();
  double u = std::fmod(t - t0, period_);
  if (u < 0.0) u += period_;
  t = t0 + u;
  int i = static_cast<int>(std::upper_bound(knots_.begin(), knots_.end(), t) -
                           knots_.begin()) - 1;
  if (i < 0) i = 0;
  if (i >= static_cast<int>(knots_.size())) i = static_cast<int>(knots_.size()) - 1;
  return i;
}

double PeriodicSpline1::at(double t) const {
  const int m = static_cast<int>(knots_.size());
  const int i = segment(t);
  const int ip = (i + 1) % m;
  const double tr = (i + 1 < m) ? knots_[i + 1] : knots_[0] + period_;
  const double h = tr - knots_[i], u = t - knots_[i], w = tr - t;
  return m2_[i] * w * w * w / (6.0 * h) + m2_[ip] * u * u * u / (6.0 * h) +
         (values_[i] / h - m2_[i] * h / 6.0) * w +
         (values_[ip] / h - m2_[ip] * h / 6.0) * u;
}

double PeriodicSpline1::d1(double t) const {
  const int m = static_cast<int>(knots_.size());
  const int i = segment(t);
  const int ip = (i + 1) % m;
  const double tr = (i + 1 < m) ? knots_[i + 1] : knots_[0] + period_;
  const double h = tr - knots_[i], u = t - knots_[i], w = tr - t;
  return -m2_[i] * w * w / (2.0 * h) + m2_[ip] * u * u / (2.0 * h) +
         (values_[ip] - values_[i]) / h - (m2_[ip] - m2_[i]) * h / 6.0;
}

double PeriodicSpline1::d2(double t) const {
  const int m = static_cast<int>(knots_.size());
  const int i = segment(t);
  const int ip = (i + 1) % m;
  const double tr = (i + 1 < m) ? knots_[i + 1] : knots_[0] + period_;
  const double h = tr - knots_[i], u = t - knots_[i], w = tr - t;
  return m2_[i] * w / h + m2_[ip] * u / h;
}

double Curve::curvature(double t) const {
  const Vec2 v = d1(t), a = d2(t);
  const double sp = v.norm();
  return (v.x * a.y - v.y * a.x) / (sp * sp * sp);
}

double Curve::d2sdt2(double t) const { return d1(t).dot(d2(t)) / speed(t); }

void Curve::ensure_tables() const {
  if (length_ >= 0.0) return;
  const int K = table_size();
  const double T = period();
  tab_t_.resize(K + 1);
  tab_s_.resize(K + 1);
  tab_s_[0] = 0.0;
  double area_acc = 0.0;
  for (int k = 0; k < K; ++k) {
    const double ta = k * T / K, tb = (k + 1) * T / K;
    tab_t_[k] = ta;
    const double c = 0.5 * (ta + tb), r = 0.5 * (tb - ta);
    double ds = 0.0;
    for (int q = 0; q < kGaussN; ++q) {
      const double t = c + r * kGaussX[q];
      const Vec2 x = at(t), v = d1(t);
      ds += kGaussW[q] * v.norm();
      area_acc += kGaussW[q] * r * 0.5 * (x.x * v.y - x.y * v.x);
    }
    tab_s_[k + 1] = tab_s_[k] + r * ds;
  }
  tab_t_[K] = T;
  length_ = tab_s_[K];
  area_ = area_acc;
}

double Curve::length() const {
  ensure_tables();
  return length_;
}

double Curve::area() const {
  ensure_tables();
  return area_;
}

double Curve::arclength(double t) const {
  ensure_tables();
  const double T = period();
  const double wraps = std::floor(t / T);
  const double tr = t - wraps * T;  // in [0, T)
  const int K = static_cast<int>(tab_t_.size()) - 1;
  int k = std::min(static_cast<int>(tr / T * K), K - 1);
  while (k > 0 && tab_t_[k] > tr) --k;
  while (k + 1 < K && tab_t_[k + 1] <= tr) ++k;
  const double ta = tab_t_[k];
  const double c = 0.5 * (ta + tr), r = 0.5 * (tr - ta);
  double ds = 0.0;
  for (int q = 0; q < kGaussN; ++q) ds += kGaussW[q] * speed(c + r * kGaussX[q]);
  return tab_s_[k] + r * ds + wraps * length_;
}

double Curve::param_at_arclength(double s) const {
  ensure_tables();
  const double L = length_, T = period();
  const double wraps = std::floor(s / L);
  const double sr = s - wraps * L;  // in [0, L)
  // bracket from the table, then safeguarded Newton on arclength(t) - sr
  const int K = static_cast<int>(tab_s_.size()) - 1;
  int k = static_cast<int>(std::upper_bound(tab_s_.begin(), tab_s_.end(), sr) -
                           tab_s_.begin()) - 1;
  k = std::clamp(k, 0, K - 1);
  double lo = tab_t_[k], hi = tab_t_[k + 1];
  double t = lo + (hi - lo) * (sr - tab_s_[k]) /
                      std::max(tab_s_[k + 1] - tab_s_[k], 1e-300);
  const double tol = 1e-14 * std::max(1.0, L);
  for (int it = 0; it < 100; ++it) {
    const double f = arclength(t) - sr;
    if (std::abs(f) <= tol) break;
    if (f > 0.0) hi = t; else lo = t;
    double tn = t - f / speed(t);
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    t = tn;
  }
  return t + wraps * T;
}

std::vector<double> Curve::equipartition(int m) const {
  KFBI_REQUIRE(m >= 3, "equipartition needs at least 3 nodes");
  const double L = length();
  std::vector<double> params(m);
  params[0] = 0.0;
  for (int i = 1; i < m; ++i) params[i] = param_at_arclength(L * i / m);
  return params;
}

void TrigPolarCurve::radius(double t, double &r, double &dr, double &d2r) const {
  r = r0_;
  dr = 0.0;
  d2r = 0.0;
  for (const Harmonic &hm : harm_) {
    const double c = std::cos(hm.k * t), s = std::sin(hm.k * t);
    r += hm.a * c + hm.b * s;
    dr += hm.k * (-hm.a * s + hm.b * c);
    d2r += hm.k * hm.k * (-hm.a * c - hm.b * s);
  }
}

Vec2 TrigPolarCurve::at(double t) const {
  double r, dr, d2r;
  radius(t, r, dr, d2r);
  return {c_.x + r * std::cos(t), c_.y + r * std::sin(t)};
}

Vec2 TrigPolarCurve::d1(double t) const {
  double r, dr, d2r;
  radius(t, r, dr, d2r);
  const double c = std::cos(t), s = std::sin(t);
  return {dr * c - r * s, dr * s + r * c};
}

Vec2 TrigPolarCurve::d2(double t) const {
  double r, dr, d2r;
  radius(t, r, dr, d2r);
  const double c = std::cos(t), s = std::sin(t);
  return {(d2r - r) * c - 2.0 * dr * s, (d2r - r) * s + 2.0 * dr * c};
}

SplineCurve::SplineCurve(std::vector<Vec2> points) : pts_(std::move(points)) {
  const int m = static_cast<int>(pts_.size());
  KFBI_REQUIRE(m >= 4, "spline curve needs at least 4 control points");
  std::vector<double> knots(m), vx(m), vy(m);
  for (int i = 0; i < m; ++i) {
    knots[i] = i;
    vx[i] = pts_[i].x;
    vy[i] = pts_[i].y;
  }
  sx_ = PeriodicSpline1(knots, vx, static_cast<double>(m));
  sy_ = PeriodicSpline1(std::move(knots), std::move(vy), static_cast<double>(m));
}

}  // namespace kfbi
