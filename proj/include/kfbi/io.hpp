// io.hpp — deterministic text output (CSV tables, legacy VTK dumps) and
// curve-specification parsing for the command-line driver.
#pragma once

#include <string>

#include "kfbi/examples.hpp"
#include "kfbi/motion.hpp"

namespace kfbi {

/** One row of a grid-refinement study. */
struct ConvergenceRow {
  int n = 0;
  ErrorNorms err;
  int iters = 0;
};

/** Eight-column convergence table (n, velocity error, order, gradient error,
 * order, pressure error, order, iterations); orders are blank on the first
 * row. `use_max` selects the max-norm triple instead of the l2 triple. */
void write_convergence_csv(const std::string &path,
                           const std::vector<ConvergenceRow> &rows,
                           bool use_max);

void write_evolve_csv(const std::string &path,
                      const std::vector<EvolveRecord> &hist);

/** Cell-centered fields as legacy ASCII VTK structured points: velocity
 * averaged from the adjacent faces (walls closed homogeneously) plus the
 * scaled pressure. */
void write_fields_vtk(const std::string &path, const Grid &g,
                      const std::vector<double> &u1,
                      const std::vector<double> &u2,
                      const std::vector<double> &p);

/** Closed marker chain as legacy ASCII VTK polydata, optionally carrying the
 * interleaved density as point vectors. */
void write_interface_vtk(const std::string &path, const std::vector<Vec2> &pts,
                         const std::vector<double> *psi = nullptr);

void write_trace_csv(const std::string &path, const InterfaceMesh &mesh,
                     const std::vector<Traces> &trs,
                     const std::vector<double> &psi);

/** All derived jump quantities, one row per listed curve location (typically
 * the grid-line intersection points). */
void write_jumps_csv(const std::string &path,
                     const std::vector<std::pair<double, Vec2>> &points,
                     const std::function<JumpData(double)> &jumps);

/** One scalar staggered component on its own lattice: legacy ASCII VTK
 * structured points plus a CSV of (i, j, x, y, value) rows. */
void write_component_dumps(const std::string &vtk_path,
                           const std::string &csv_path, const Grid &g,
                           Lattice which, const std::string &name,
                           const std::vector<double> &field);

/** Marker chain as CSV, one "x,y" row per point. */
void write_curve_csv(const std::string &path, const std::vector<Vec2> &pts);

/** Iteration log of the interface solve: (iteration, relative residual). */
void write_residual_csv(const std::string &path,
                        const std::vector<double> &history);

/**
 * Builds a curve from a textual spec:
 *   "circle: r=1 cx=0 cy=0", "ellipse: rx=1 ry=0.5",
 *   "polar: r0=0.8 amp=0.2 k=3", the named shapes "heart" / "kidney",
 *   or a path to a CSV file of control points (one "x,y" pair per line).
 */
std::shared_ptr<Curve> make_curve(const std::string &spec);

/** Creates the parent directory of `path` if needed. */
void ensure_parent_dir(const std::string &path);

}  // namespace kfbi
