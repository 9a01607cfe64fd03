// classify.hpp — curve/grid geometry: grid-line crossings, side classification
// of the staggered unknowns, and per-equation irregular-stencil records.
#pragma once

#include <vector>

#include "kfbi/core.hpp"
#include "kfbi/curve.hpp"

namespace kfbi {

/** One transversal crossing of the curve with a grid line. */
struct Crossing {
  double t = 0.0;      // curve parameter
  double along = 0.0;  // coordinate along the line (y on vertical, x on horizontal)
  Vec2 x;              // position, placed exactly on the line
};

/** The four families of grid lines carrying staggered stencil arms. */
enum class LineFamily : int { vint = 0, vhalf = 1, hint = 2, hhalf = 3 };

/** The three staggered sub-lattices. */
enum class Lattice : int { u1 = 0, u2 = 1, p = 2 };

/**
 * One stencil arm of a discrete equation broken by the interface: the
 * coefficient of the neighbor unknown, the crossing used for the jump
 * correction, and which jump field / Taylor order applies.
 */
struct ArmHit {
  Vec2 xing;        // crossing position
  double t = 0.0;   // curve parameter at the crossing
  double coef = 0;  // stencil coefficient of the neighbor unknown
  Vec2 d;           // neighbor position minus crossing position
  int comp = 0;     // jump field: 0 = v1, 1 = v2, 2 = q
  int order = 1;    // Taylor order of the jump correction (1 or 2)
};

/** A discrete equation with at least one interface-broken arm. */
struct IrregularEq {
  int idx = 0;      // linear index of the equation in its family
  double sgn = 1;   // +1 if the equation node is in the enclosed region
  std::vector<ArmHit> arms;
};

/**
 * All grid/interface geometry for one curve position: crossings of the four
 * grid-line families, side classification of every staggered unknown, and the
 * irregular equation lists for both momentum components and the divergence.
 *
 * Requires the curve to stay at least 3h away from the domain walls, which
 * keeps boundary closures and interpolation stencils free of interface logic.
 */
class GridGeometry {
 public:
  GridGeometry(const Grid &g, const Curve &c);

  const Grid &grid() const { return grid_; }

  Side side(Lattice which, int i, int j) const;
  Side side_u1(int i, int j) const { return at(side_u1_, grid_.iu1(i, j)); }
  Side side_u2(int i, int j) const { return at(side_u2_, grid_.iu2(i, j)); }
  Side side_p(int i, int j) const { return at(side_p_, grid_.ip(i, j)); }

  const std::vector<IrregularEq> &irregular_mom1() const { return mom1_; }
  const std::vector<IrregularEq> &irregular_mom2() const { return mom2_; }
  const std::vector<IrregularEq> &irregular_div() const { return div_; }

  const std::vector<std::vector<Crossing>> &family(LineFamily f) const {
    return fam_[static_cast<int>(f)];
  }
  int total_crossings() const;
  /** Smallest distance from any curve sample to the domain boundary. */
  double wall_margin() const { return wall_margin_; }
  /** Arms skipped because the curve crossed and returned within one arm. */
  int skipped_arms() const { return skipped_arms_; }

 private:
  static Side at(const std::vector<signed char> &v, int idx) {
    return v[idx] > 0 ? Side::plus : Side::minus;
  }
  void find_crossings(const Curve &c);
  void classify();
  void build_irregular();
  // crossings on one line within [lo-tol, hi+tol], as indices into the line
  std::vector<int> hits_between(LineFamily f, int line, double lo,
                                double hi) const;

  Grid grid_;
  std::vector<std::vector<Crossing>> fam_[4];
  std::vector<signed char> side_u1_, side_u2_, side_p_;
  std::vector<IrregularEq> mom1_, mom2_, div_;
  double wall_margin_ = 0.0;
  int skipped_arms_ = 0;
};

}  // namespace kfbi
