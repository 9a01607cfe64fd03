// interface_mesh.hpp — interface discretization: marker nodes with local frame,
// and periodic-spline interpolation of nodal densities along the curve.
#pragma once

#include <functional>
#include <vector>

#include "kfbi/core.hpp"
#include "kfbi/curve.hpp"

namespace kfbi {

/** One interface marker: curve parameter, arclength, position, frame,
 * curvature, and trapezoidal arclength weight. */
struct InterfaceNode {
  double t = 0.0, s = 0.0;
  Vec2 x, nrm, tau;
  double kappa = 0.0;
  double w = 0.0;
};

/**
 * A set of m marker nodes on a closed curve. The default placement is
 * equal-arclength; explicit parameters are also accepted (e.g. control points
 * of a spline curve at integer knots).
 */
class InterfaceMesh {
 public:
  InterfaceMesh(const Curve &c, int m);
  InterfaceMesh(const Curve &c, std::vector<double> params);

  int size() const { return static_cast<int>(nodes_.size()); }
  const InterfaceNode &node(int i) const { return nodes_[i]; }
  const std::vector<InterfaceNode> &nodes() const { return nodes_; }
  const Curve &curve() const { return *curve_; }
  /** Largest arclength gap between consecutive nodes. */
  double max_spacing() const { return max_spacing_; }

 private:
  void init(std::vector<double> params);
  const Curve *curve_;
  std::vector<InterfaceNode> nodes_;
  double max_spacing_ = 0.0;
};

/**
 * A vector-valued density given by nodal values on an InterfaceMesh and
 * interpolated along the curve with periodic cubic splines in the curve
 * parameter. Provides arclength derivatives via the chain rule. Nodal values
 * are packed interleaved: (x_0, y_0, x_1, y_1, ...).
 */
class NodalDensity {
 public:
  NodalDensity(const InterfaceMesh &mesh, const std::vector<double> &interleaved);

  Vec2 at(double t) const { return {sx_.at(t), sy_.at(t)}; }
  /** d/ds along the curve. */
  Vec2 d_s(double t) const;
  /** d^2/ds^2 along the curve. */
  Vec2 d2_s(double t) const;

 private:
  const Curve *curve_;
  PeriodicSpline1 sx_, sy_;
};

}  // namespace kfbi
