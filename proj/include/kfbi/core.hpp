// core.hpp — small fixed-size linear algebra, MAC grid descriptor, error handling.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfbi {

/** Throw a std::runtime_error with the given message. */
[[noreturn]] inline void fail(const std::string &msg) {
  throw std::runtime_error(msg);
}

/** Runtime precondition/consistency check; active in all build types. */
#define KFBI_REQUIRE(cond, msg)                                                \
  do {                                                                         \
    if (!(cond)) ::kfbi::fail(std::string(msg) + " (" #cond ")");              \
  } while (0)

/** 2D vector with the usual componentwise arithmetic. */
struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 &operator+=(const Vec2 &o) { x += o.x; y += o.y; return *this; }
  Vec2 &operator-=(const Vec2 &o) { x -= o.x; y -= o.y; return *this; }
  Vec2 &operator*=(double s) { x *= s; y *= s; return *this; }

  double dot(const Vec2 &o) const { return x * o.x + y * o.y; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  /** Clockwise perpendicular (t.y, -t.x); maps a CCW tangent to the outward normal. */
  Vec2 perp_cw() const { return {y, -x}; }
};

inline Vec2 operator*(double s, const Vec2 &v) { return v * s; }

/** 2x2 matrix, row-major. */
struct Mat2 {
  double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  Mat2() = default;
  Mat2(double a11, double a12, double a21, double a22) {
    m[0][0] = a11; m[0][1] = a12; m[1][0] = a21; m[1][1] = a22;
  }
  /** Outer product u v^T. */
  static Mat2 outer(const Vec2 &u, const Vec2 &v) {
    return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
  }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double &operator()(int r, int c) { return m[r][c]; }
  double operator()(int r, int c) const { return m[r][c]; }

  Mat2 operator+(const Mat2 &o) const {
    return {m[0][0] + o.m[0][0], m[0][1] + o.m[0][1],
            m[1][0] + o.m[1][0], m[1][1] + o.m[1][1]};
  }
  Mat2 operator-(const Mat2 &o) const {
    return {m[0][0] - o.m[0][0], m[0][1] - o.m[0][1],
            m[1][0] - o.m[1][0], m[1][1] - o.m[1][1]};
  }
  Mat2 operator*(double s) const {
    return {m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s};
  }
  Vec2 operator*(const Vec2 &v) const {
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
  }
  Mat2 transpose() const { return {m[0][0], m[1][0], m[0][1], m[1][1]}; }
  double trace() const { return m[0][0] + m[1][1]; }
  Vec2 row(int r) const { return {m[r][0], m[r][1]}; }
  double max_abs() const {
    return std::max(std::max(std::abs(m[0][0]), std::abs(m[0][1])),
                    std::max(std::abs(m[1][0]), std::abs(m[1][1])));
  }
};

/** Region label relative to the closed interface: plus = enclosed, minus = exterior. */
enum class Side : signed char { minus = -1, plus = +1 };

inline double side_sign(Side s) { return s == Side::plus ? 1.0 : -1.0; }
inline Side other(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

/**
 * Uniform staggered (MAC) grid on the square (a,b)^2 with n cells per side.
 *
 * Unknown layout (0-based storage indices):
 *  - u1 (x-velocity): (n-1) x n values at (a+(i+1)h, a+(j+1/2)h); the wall
 *    columns x=a and x=b carry boundary data and are not stored.
 *  - u2 (y-velocity): n x (n-1) values at (a+(i+1/2)h, a+(j+1)h).
 *  - p  (pressure):   n x n values at cell centers (a+(i+1/2)h, a+(j+1/2)h).
 * All 2D arrays are x-major: lin = ix * ny + iy.
 */
struct Grid {
  double a = 0.0, b = 1.0;
  int n = 1;
  double h = 1.0;

  Grid() = default;
  Grid(double a_, double b_, int n_) : a(a_), b(b_), n(n_), h((b_ - a_) / n_) {
    KFBI_REQUIRE(n_ >= 2 && b_ > a_, "grid needs at least 2 cells and b > a");
  }

  // coordinates of the unknowns
  double xu1(int i) const { return a + (i + 1) * h; }
  double yu1(int j) const { return a + (j + 0.5) * h; }
  double xu2(int i) const { return a + (i + 0.5) * h; }
  double yu2(int j) const { return a + (j + 1) * h; }
  double xp(int i) const { return a + (i + 0.5) * h; }
  double yp(int j) const { return a + (j + 0.5) * h; }

  Vec2 pos_u1(int i, int j) const { return {xu1(i), yu1(j)}; }
  Vec2 pos_u2(int i, int j) const { return {xu2(i), yu2(j)}; }
  Vec2 pos_p(int i, int j) const { return {xp(i), yp(j)}; }

  // array extents and linear indexing (x-major)
  int nx_u1() const { return n - 1; }
  int ny_u1() const { return n; }
  int nx_u2() const { return n; }
  int ny_u2() const { return n - 1; }
  int size_u1() const { return (n - 1) * n; }
  int size_u2() const { return n * (n - 1); }
  int size_p() const { return n * n; }
  int iu1(int i, int j) const { return i * n + j; }
  int iu2(int i, int j) const { return i * (n - 1) + j; }
  int ip(int i, int j) const { return i * n + j; }
};

/** max |v_i| of a vector. */
inline double max_abs(const std::vector<double> &v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace kfbi
