// jumps.cpp — closed-form interface jump relations.
#include "kfbi/jumps.hpp"

namespace kfbi {

JumpData derive_jumps(const Vec2 &nrm, const Vec2 &tau, double kappa,
                      const Vec2 &phi, const Vec2 &phi_s, const Vec2 &phi_ss,
                      const Vec2 &psi, const Vec2 &psi_s, const Vec2 &jf) {
  JumpData out;
  out.v = phi;

  // First derivatives. Write grad [[v_k]] = a_k n + t_k tau with t = phi_s
  // known; the divergence constraint gives a.n and the traction jump the rest.
  const Vec2 t = phi_s;
  const double An = -t.dot(tau);             // a.n from tr [[grad v]] = 0
  const double At = psi.dot(tau) - t.dot(nrm);
  const Vec2 a = An * nrm + At * tau;
  out.dv = Mat2::outer(a, nrm) + Mat2::outer(t, tau);
  out.q = 2.0 * An - psi.dot(nrm);

  // Arclength derivatives of the frame: d tau/ds = -kappa n, d n/ds = kappa tau.
  const Vec2 tp = phi_ss;
  const double Anp = -tp.dot(tau) + kappa * t.dot(nrm);
  const double Atp = psi_s.dot(tau) - kappa * psi.dot(nrm) - tp.dot(nrm) -
                     kappa * t.dot(tau);
  const Vec2 ap = (Anp - kappa * At) * nrm + (Atp + kappa * An) * tau;

  // Hessian columns along tau: [[H v_k]] tau = (a_k' - kappa t_k) n
  //                                            + (kappa a_k + t_k') tau.
  const double P1 = kappa * a.x + tp.x, Q1 = ap.x - kappa * t.x;
  const double P2 = kappa * a.y + tp.y, Q2 = ap.y - kappa * t.y;

  // d[[q]]/ds closes the tangential pressure gradient.
  const double qs = 2.0 * Anp - (psi_s.dot(nrm) + kappa * psi.dot(tau));

  // Remaining normal-normal entries R_k from [[grad(div v)]] = 0 (normal
  // component) and from [[grad q]].tau = d[[q]]/ds with [[grad q]] given by
  // the momentum jump [[grad q]]_k = [[f_k]] + tr [[H v_k]]:
  //   n1 R1 + n2 R2 = -(Q1 tau1 + Q2 tau2)
  //   tau1 R1 + tau2 R2 = qs - ([[f1]]+P1) tau1 - ([[f2]]+P2) tau2
  const double b1 = -(Q1 * tau.x + Q2 * tau.y);
  const double b2 = qs - (jf.x + P1) * tau.x - (jf.y + P2) * tau.y;
  const double R1 = nrm.x * b1 + tau.x * b2;  // inverse of the orthogonal
  const double R2 = nrm.y * b1 + tau.y * b2;  // matrix [n^T; tau^T]

  const Mat2 tt = Mat2::outer(tau, tau);
  const Mat2 nn = Mat2::outer(nrm, nrm);
  const Mat2 tn = Mat2::outer(tau, nrm) + Mat2::outer(nrm, tau);
  out.hv1 = tt * P1 + tn * Q1 + nn * R1;
  out.hv2 = tt * P2 + tn * Q2 + nn * R2;
  out.dq = {jf.x + P1 + R1, jf.y + P2 + R2};
  return out;
}

double jump_taylor(const JumpData &jd, int comp, int order, const Vec2 &d) {
  if (comp == 2) return jd.q + d.dot(jd.dq);
  const double v0 = (comp == 0) ? jd.v.x : jd.v.y;
  const Vec2 g = jd.dv.row(comp);
  double val = v0 + d.dot(g);
  if (order >= 2) {
    const Mat2 &H = (comp == 0) ? jd.hv1 : jd.hv2;
    val += 0.5 * d.dot(H * d);
  }
  return val;
}

JumpSource::JumpSource(const InterfaceMesh &mesh, const NodalDensity *phi,
                       const NodalDensity *psi,
                       std::function<Vec2(double)> jump_f)
    : curve_(&mesh.curve()), phi_(phi), psi_(psi), jump_f_(std::move(jump_f)) {}

JumpData JumpSource::at(double t) const {
  const Vec2 tau = curve_->tangent(t);
  const Vec2 nrm = tau.perp_cw();
  const double kappa = curve_->curvature(t);
  const Vec2 zero;
  const Vec2 phi = phi_ ? phi_->at(t) : zero;
  const Vec2 phi_s = phi_ ? phi_->d_s(t) : zero;
  const Vec2 phi_ss = phi_ ? phi_->d2_s(t) : zero;
  const Vec2 psi = psi_ ? psi_->at(t) : zero;
  const Vec2 psi_s = psi_ ? psi_->d_s(t) : zero;
  const Vec2 jf = jump_f_ ? jump_f_(t) : zero;
  return derive_jumps(nrm, tau, kappa, phi, phi_s, phi_ss, psi, psi_s, jf);
}

}  // namespace kfbi
