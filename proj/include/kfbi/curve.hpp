// curve.hpp — closed parametric curves: analytic families and periodic cubic
// splines, with arclength tables, equal-arclength partitioning and enclosed area.
#pragma once

#include <memory>
#include <vector>

#include "kfbi/core.hpp"

namespace kfbi {

/**
 * Periodic cubic spline through scalar values at (possibly non-uniform) knots.
 * Knots t_0 < t_1 < ... < t_{m-1} with period T wrap around to t_m = t_0 + T;
 * the interpolant is C^2 across the seam.
 */
class PeriodicSpline1 {
 public:
  PeriodicSpline1() = default;
  PeriodicSpline1(std::vector<double> knots, std::vector<double> values,
                  double period);

  double at(double t) const;
  double d1(double t) const;
  double d2(double t) const;
  double period() const { return period_; }

 private:
  int segment(double &t) const;  // reduces t into [t0, t0+T), returns interval
  std::vector<double> knots_, values_, m2_;  // m2_ = second derivatives at knots
  double period_ = 0.0;
};

/**
 * Closed parametric curve X(t), t in [0, period). Implementations provide the
 * position and its first two parameter derivatives; the base class derives the
 * local frame, curvature, an arclength table, equal-arclength partitions and
 * the enclosed area. The parameter is assumed to traverse the curve
 * counterclockwise, so normal() points out of the enclosed region.
 */
class Curve {
 public:
  virtual ~Curve() = default;

  virtual double period() const = 0;
  virtual Vec2 at(double t) const = 0;
  virtual Vec2 d1(double t) const = 0;
  virtual Vec2 d2(double t) const = 0;
  /** Number of sub-intervals for quadrature tables (resolution hint). */
  virtual int table_size() const { return 512; }

  double speed(double t) const { return d1(t).norm(); }
  Vec2 tangent(double t) const { return d1(t) / speed(t); }
  /** Outward unit normal (tangent rotated clockwise). */
  Vec2 normal(double t) const { return tangent(t).perp_cw(); }
  /** Signed curvature; +1/r on a CCW circle of radius r. */
  double curvature(double t) const;
  /** d(arclength)/dt and its derivative d^2 s/dt^2 (= X'.X''/|X'|). */
  double dsdt(double t) const { return speed(t); }
  double d2sdt2(double t) const;

  /** Total length (arclength table is built lazily and cached). */
  double length() const;
  /** Arclength from parameter 0 to t (t may be any real; wraps mod period). */
  double arclength(double t) const;
  /** Inverse of arclength(); s may be any real, result wraps mod period. */
  double param_at_arclength(double s) const;
  /** Enclosed (signed) area, positive for CCW traversal. */
  double area() const;
  /** Parameters of m points with equal arclength spacing, starting at t=0. */
  std::vector<double> equipartition(int m) const;

 private:
  void ensure_tables() const;
  mutable std::vector<double> tab_t_, tab_s_;  // cumulative arclength table
  mutable double length_ = -1.0, area_ = 0.0;
};

/** Circle of radius r about c, parameterized by angle. */
class CircleCurve : public Curve {
 public:
  CircleCurve(Vec2 c, double r) : c_(c), r_(r) {}
  double period() const override { return 2.0 * M_PI; }
  Vec2 at(double t) const override {
    return {c_.x + r_ * std::cos(t), c_.y + r_ * std::sin(t)};
  }
  Vec2 d1(double t) const override {
    return {-r_ * std::sin(t), r_ * std::cos(t)};
  }
  Vec2 d2(double t) const override {
    return {-r_ * std::cos(t), -r_ * std::sin(t)};
  }

 private:
  Vec2 c_;
  double r_;
};

/** Axis-aligned ellipse (rx cos t, ry sin t) about c. */
class EllipseCurve : public Curve {
 public:
  EllipseCurve(Vec2 c, double rx, double ry) : c_(c), rx_(rx), ry_(ry) {}
  double period() const override { return 2.0 * M_PI; }
  Vec2 at(double t) const override {
    return {c_.x + rx_ * std::cos(t), c_.y + ry_ * std::sin(t)};
  }
  Vec2 d1(double t) const override {
    return {-rx_ * std::sin(t), ry_ * std::cos(t)};
  }
  Vec2 d2(double t) const override {
    return {-rx_ * std::cos(t), -ry_ * std::sin(t)};
  }

 private:
  Vec2 c_;
  double rx_, ry_;
};

/**
 * Star-shaped curve r(theta) = r0 + sum_k (a_k cos k*theta + b_k sin k*theta)
 * about a center; covers the lobed interfaces used by the moving examples.
 */
class TrigPolarCurve : public Curve {
 public:
  struct Harmonic {
    int k;
    double a, b;  // a cos(k t) + b sin(k t)
  };
  TrigPolarCurve(Vec2 c, double r0, std::vector<Harmonic> harmonics)
      : c_(c), r0_(r0), harm_(std::move(harmonics)) {}
  double period() const override { return 2.0 * M_PI; }
  Vec2 at(double t) const override;
  Vec2 d1(double t) const override;
  Vec2 d2(double t) const override;

 private:
  void radius(double t, double &r, double &dr, double &d2r) const;
  Vec2 c_;
  double r0_;
  std::vector<Harmonic> harm_;
};

/**
 * Closed periodic C^2 cubic spline through m control points, with uniform
 * knots t_i = i and period m. Control points double as the Lagrangian markers
 * of the moving-interface solver.
 */
class SplineCurve : public Curve {
 public:
  explicit SplineCurve(std::vector<Vec2> points);
  double period() const override { return static_cast<double>(pts_.size()); }
  Vec2 at(double t) const override { return {sx_.at(t), sy_.at(t)}; }
  Vec2 d1(double t) const override { return {sx_.d1(t), sy_.d1(t)}; }
  Vec2 d2(double t) const override { return {sx_.d2(t), sy_.d2(t)}; }
  int table_size() const override { return 4 * static_cast<int>(pts_.size()); }
  const std::vector<Vec2> &control_points() const { return pts_; }

 private:
  std::vector<Vec2> pts_;
  PeriodicSpline1 sx_, sy_;
};

}  // namespace kfbi
