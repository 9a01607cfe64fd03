// interface_mesh.cpp — marker placement and density interpolation.
#include "kfbi/interface_mesh.hpp"

#include <cmath>

namespace kfbi {

InterfaceMesh::InterfaceMesh(const Curve &c, int m) : curve_(&c) {
  init(c.equipartition(m));
}

InterfaceMesh::InterfaceMesh(const Curve &c, std::vector<double> params)
    : curve_(&c) {
  init(std::move(params));
}

void InterfaceMesh::init(std::vector<double> params) {
  const int m = static_cast<int>(params.size());
  KFBI_REQUIRE(m >= 3, "interface mesh needs at least 3 nodes");
  nodes_.resize(m);
  for (int i = 0; i < m; ++i) {
    InterfaceNode &nd = nodes_[i];
    nd.t = params[i];
    nd.s = curve_->arclength(params[i]);
    nd.x = curve_->at(nd.t);
    nd.tau = curve_->tangent(nd.t);
    nd.nrm = nd.tau.perp_cw();
    nd.kappa = curve_->curvature(nd.t);
  }
  const double L = curve_->length();
  max_spacing_ = 0.0;
  for (int i = 0; i < m; ++i) {
    const double s0 = nodes_[i].s;
    const double s1 = (i + 1 < m) ? nodes_[i + 1].s : nodes_[0].s + L;
    max_spacing_ = std::max(max_spacing_, s1 - s0);
  }
  // Trapezoidal arclength weights (half the two adjacent gaps, cyclically).
  for (int i = 0; i < m; ++i) {
    const double sp = (i > 0) ? nodes_[i - 1].s : nodes_[m - 1].s - L;
    const double sn = (i + 1 < m) ? nodes_[i + 1].s : nodes_[0].s + L;
    nodes_[i].w = 0.5 * (sn - sp);
  }
}

NodalDensity::NodalDensity(const InterfaceMesh &mesh,
                           const std::vector<double> &interleaved)
    : curve_(&mesh.curve()) {
  const int m = mesh.size();
  KFBI_REQUIRE(static_cast<int>(interleaved.size()) == 2 * m,
               "density vector must hold two interleaved components per node");
  std::vector<double> knots(m), vx(m), vy(m);
  for (int i = 0; i < m; ++i) {
    knots[i] = mesh.node(i).t;
    vx[i] = interleaved[2 * i];
    vy[i] = interleaved[2 * i + 1];
  }
  const double T = curve_->period();
  sx_ = PeriodicSpline1(knots, vx, T);
  sy_ = PeriodicSpline1(std::move(knots), std::move(vy), T);
}

Vec2 NodalDensity::d_s(double t) const {
  const double sp = curve_->speed(t);
  return Vec2{sx_.d1(t), sy_.d1(t)} / sp;
}

Vec2 NodalDensity::d2_s(double t) const {
  // f_ss = (f_tt - f_t * s_tt / s_t) / s_t^2
  const double st = curve_->speed(t);
  const double stt = curve_->d2sdt2(t);
  const Vec2 ft{sx_.d1(t), sy_.d1(t)};
  const Vec2 ftt{sx_.d2(t), sy_.d2(t)};
  return (ftt - ft * (stt / st)) / (st * st);
}

}  // namespace kfbi
