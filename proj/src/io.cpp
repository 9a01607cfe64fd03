// io.cpp — text output and curve-spec parsing.
#include "kfbi/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace kfbi {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

FILE *open_out(const std::string &path) {
  ensure_parent_dir(path);
  FILE *f = std::fopen(path.c_str(), "w");
  KFBI_REQUIRE(f != nullptr, "cannot open output file: " + path);
  return f;
}

}  // namespace

void ensure_parent_dir(const std::string &path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path() && !p.parent_path().empty())
    std::filesystem::create_directories(p.parent_path());
}

void write_convergence_csv(const std::string &path,
                           const std::vector<ConvergenceRow> &rows,
                           bool use_max) {
  FILE *f = open_out(path);
  if (use_max)
    std::fprintf(f, "n,u_max,order,grad_u_max,order,p_max,order,gmres_iters\n");
  else
    std::fprintf(f, "n,u_l2,order,grad_u_l2,order,p_l2,order,gmres_iters\n");
  auto triple = [&](const ErrorNorms &e) {
    return use_max ? std::array<double, 3>{e.max_u, e.max_du, e.max_p}
                   : std::array<double, 3>{e.l2_u, e.l2_du, e.l2_p};
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cur = triple(rows[r].err);
    std::string line = std::to_string(rows[r].n);
    for (int c = 0; c < 3; ++c) {
      line += "," + num(cur[c]) + ",";
      if (r > 0) {
        const auto prev = triple(rows[r - 1].err);
        line += num(std::log2(prev[c] / cur[c]));
      }
    }
    line += "," + std::to_string(rows[r].iters);
    std::fprintf(f, "%s\n", line.c_str());
  }
  std::fclose(f);
}

void write_evolve_csv(const std::string &path,
                      const std::vector<EvolveRecord> &hist) {
  FILE *f = open_out(path);
  std::fprintf(f,
               "step,t,area,length,isoperimetric,max_speed,dt,gmres_iters\n");
  for (const EvolveRecord &r : hist)
    std::fprintf(f, "%d,%s,%s,%s,%s,%s,%s,%d\n", r.step, num(r.time).c_str(),
                 num(r.area).c_str(), num(r.length).c_str(),
                 num(r.isoperimetric).c_str(), num(r.max_speed).c_str(),
                 num(r.dt).c_str(), r.gmres_iters);
  std::fclose(f);
}

void write_fields_vtk(const std::string &path, const Grid &g,
                      const std::vector<double> &u1,
                      const std::vector<double> &u2,
                      const std::vector<double> &p) {
  FILE *f = open_out(path);
  const int n = g.n;
  std::fprintf(f,
               "# vtk DataFile Version 3.0\nfields\nASCII\n"
               "DATASET STRUCTURED_POINTS\nDIMENSIONS %d %d 1\n"
               "ORIGIN %s %s 0\nSPACING %s %s 1\nPOINT_DATA %d\n",
               n, n, num(g.a + 0.5 * g.h).c_str(), num(g.a + 0.5 * g.h).c_str(),
               num(g.h).c_str(), num(g.h).c_str(), n * n);
  auto face1 = [&](int i, int j) {
    return (i < 0 || i > n - 2) ? 0.0 : u1[g.iu1(i, j)];
  };
  auto face2 = [&](int i, int j) {
    return (j < 0 || j > n - 2) ? 0.0 : u2[g.iu2(i, j)];
  };
  std::fprintf(f, "VECTORS velocity double\n");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      std::fprintf(f, "%s %s 0\n",
                   num(0.5 * (face1(i - 1, j) + face1(i, j))).c_str(),
                   num(0.5 * (face2(i, j - 1) + face2(i, j))).c_str());
  std::fprintf(f, "SCALARS pressure double 1\nLOOKUP_TABLE default\n");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      std::fprintf(f, "%s\n", num(p[g.ip(i, j)]).c_str());
  std::fclose(f);
}

void write_interface_vtk(const std::string &path, const std::vector<Vec2> &pts,
                         const std::vector<double> *psi) {
  FILE *f = open_out(path);
  const int m = static_cast<int>(pts.size());
  std::fprintf(f,
               "# vtk DataFile Version 3.0\ninterface\nASCII\n"
               "DATASET POLYDATA\nPOINTS %d double\n",
               m);
  for (const Vec2 &q : pts)
    std::fprintf(f, "%s %s 0\n", num(q.x).c_str(), num(q.y).c_str());
  std::fprintf(f, "LINES 1 %d\n%d", m + 2, m + 1);
  for (int i = 0; i < m; ++i) std::fprintf(f, " %d", i);
  std::fprintf(f, " 0\n");
  if (psi != nullptr && static_cast<int>(psi->size()) == 2 * m) {
    std::fprintf(f, "POINT_DATA %d\nVECTORS density double\n", m);
    for (int i = 0; i < m; ++i)
      std::fprintf(f, "%s %s 0\n", num((*psi)[2 * i]).c_str(),
                   num((*psi)[2 * i + 1]).c_str());
  }
  std::fclose(f);
}

void write_trace_csv(const std::string &path, const InterfaceMesh &mesh,
                     const std::vector<Traces> &trs,
                     const std::vector<double> &psi) {
  FILE *f = open_out(path);
  std::fprintf(f,
               "i,t,s,x,y,nx,ny,kappa,psi_x,psi_y,"
               "v_plus_x,v_plus_y,v_minus_x,v_minus_y,q_plus,q_minus,"
               "trac_plus_x,trac_plus_y,trac_minus_x,trac_minus_y\n");
  for (int i = 0; i < mesh.size(); ++i) {
    const InterfaceNode &nd = mesh.node(i);
    const Traces &tr = trs[i];
    std::ostringstream os;
    os << i;
    for (double v :
         {nd.t, nd.s, nd.x.x, nd.x.y, nd.nrm.x, nd.nrm.y, nd.kappa,
          psi[2 * i], psi[2 * i + 1], tr.v_plus.x, tr.v_plus.y, tr.v_minus.x,
          tr.v_minus.y, tr.q_plus, tr.q_minus, tr.trac_plus.x, tr.trac_plus.y,
          tr.trac_minus.x, tr.trac_minus.y})
      os << ',' << num(v);
    std::fprintf(f, "%s\n", os.str().c_str());
  }
  std::fclose(f);
}

void write_jumps_csv(const std::string &path,
                     const std::vector<std::pair<double, Vec2>> &points,
                     const std::function<JumpData(double)> &jumps) {
  FILE *f = open_out(path);
  std::fprintf(f,
               "i,t,x,y,v_x,v_y,dv_xx,dv_xy,dv_yx,dv_yy,q,dq_x,dq_y,"
               "h1_xx,h1_xy,h1_yy,h2_xx,h2_xy,h2_yy\n");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double t = points[i].first;
    const Vec2 &x = points[i].second;
    const JumpData jd = jumps(t);
    std::ostringstream os;
    os << i;
    for (double v :
         {t, x.x, x.y, jd.v.x, jd.v.y, jd.dv.m[0][0], jd.dv.m[0][1],
          jd.dv.m[1][0], jd.dv.m[1][1], jd.q, jd.dq.x, jd.dq.y,
          jd.hv1.m[0][0], jd.hv1.m[0][1], jd.hv1.m[1][1], jd.hv2.m[0][0],
          jd.hv2.m[0][1], jd.hv2.m[1][1]})
      os << ',' << num(v);
    std::fprintf(f, "%s\n", os.str().c_str());
  }
  std::fclose(f);
}

void write_component_dumps(const std::string &vtk_path,
                           const std::string &csv_path, const Grid &g,
                           Lattice which, const std::string &name,
                           const std::vector<double> &field) {
  double ox = 0, oy = 0;
  int nx = 0, ny = 0;
  switch (which) {
    case Lattice::u1:
      ox = g.a + g.h;
      oy = g.a + 0.5 * g.h;
      nx = g.n - 1;
      ny = g.n;
      break;
    case Lattice::u2:
      ox = g.a + 0.5 * g.h;
      oy = g.a + g.h;
      nx = g.n;
      ny = g.n - 1;
      break;
    default:
      ox = oy = g.a + 0.5 * g.h;
      nx = ny = g.n;
      break;
  }
  KFBI_REQUIRE(static_cast<int>(field.size()) == nx * ny,
               "field size does not match its lattice");

  FILE *f = open_out(vtk_path);
  std::fprintf(f,
               "# vtk DataFile Version 3.0\n%s\nASCII\n"
               "DATASET STRUCTURED_POINTS\nDIMENSIONS %d %d 1\n"
               "ORIGIN %s %s 0\nSPACING %s %s 1\nPOINT_DATA %d\n"
               "SCALARS %s double 1\nLOOKUP_TABLE default\n",
               name.c_str(), nx, ny, num(ox).c_str(), num(oy).c_str(),
               num(g.h).c_str(), num(g.h).c_str(), nx * ny, name.c_str());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      std::fprintf(f, "%s\n", num(field[i * ny + j]).c_str());
  std::fclose(f);

  FILE *c = open_out(csv_path);
  std::fprintf(c, "i,j,x,y,%s\n", name.c_str());
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      std::fprintf(c, "%d,%d,%s,%s,%s\n", i, j, num(ox + i * g.h).c_str(),
                   num(oy + j * g.h).c_str(), num(field[i * ny + j]).c_str());
  std::fclose(c);
}

void write_curve_csv(const std::string &path, const std::vector<Vec2> &pts) {
  FILE *f = open_out(path);
  std::fprintf(f, "x,y\n");
  for (const Vec2 &q : pts)
    std::fprintf(f, "%s,%s\n", num(q.x).c_str(), num(q.y).c_str());
  std::fclose(f);
}

void write_residual_csv(const std::string &path,
                        const std::vector<double> &history) {
  FILE *f = open_out(path);
  std::fprintf(f, "iteration,rel_residual\n");
  for (std::size_t i = 0; i < history.size(); ++i)
    std::fprintf(f, "%zu,%s\n", i + 1, num(history[i]).c_str());
  std::fclose(f);
}

std::shared_ptr<Curve> make_curve(const std::string &spec) {
  const auto colon = spec.find(':');
  std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  // trim
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  head = trim(head);

  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::istringstream is(spec.substr(colon + 1));
    std::string tok;
    while (is >> tok) {
      const auto eq = tok.find('=');
      KFBI_REQUIRE(eq != std::string::npos,
                   "curve spec tokens must be key=value: " + tok);
      kv[trim(tok.substr(0, eq))] = std::stod(tok.substr(eq + 1));
    }
  }
  auto get = [&](const std::string &k, double dflt) {
    const auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  };

  if (head == "circle")
    return std::make_shared<CircleCurve>(Vec2{get("cx", 0), get("cy", 0)},
                                         get("r", 1.0));
  if (head == "ellipse")
    return std::make_shared<EllipseCurve>(Vec2{get("cx", 0), get("cy", 0)},
                                          get("rx", 1.0), get("ry", 0.5));
  if (head == "polar") {
    std::vector<TrigPolarCurve::Harmonic> hs;
    hs.push_back({static_cast<int>(get("k", 3)), 0.0, get("amp", 0.2)});
    return std::make_shared<TrigPolarCurve>(Vec2{get("cx", 0), get("cy", 0)},
                                            get("r0", 0.8), hs);
  }
  if (head == "heart") {
    std::vector<TrigPolarCurve::Harmonic> hs{{1, 0.0, -0.26}, {2, 0.10, 0.0}};
    return std::make_shared<TrigPolarCurve>(Vec2{0, 0}, 0.62, hs);
  }
  if (head == "kidney") {
    std::vector<TrigPolarCurve::Harmonic> hs{{1, 0.22, 0.0}, {2, -0.20, 0.0}};
    return std::make_shared<TrigPolarCurve>(Vec2{0, 0}, 0.68, hs);
  }

  // Otherwise: a CSV file of control points.
  std::ifstream in(spec);
  KFBI_REQUIRE(in.good(), "unknown curve spec and not a readable file: " + spec);
  std::vector<Vec2> pts;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    for (char &c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ls(line);
    double x, y;
    if (ls >> x >> y) pts.push_back(Vec2{x, y});
  }
  KFBI_REQUIRE(pts.size() >= 8,
               "control-point file needs at least 8 points: " + spec);
  return std::make_shared<SplineCurve>(pts);
}

}  // namespace kfbi
