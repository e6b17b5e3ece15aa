#pragma once

#include <array>
#include <cmath>

namespace rotflow {

/// Plain 2-vector in Cartesian components.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// x^perp = (x2, -x1), the clockwise rotation used throughout.
constexpr Vec2 perp(Vec2 a) { return {a.y, -a.x}; }

/// 2x2 matrix, row-major: m[i][j]. For Jacobians m[i][j] = d_j F_i.
struct Mat2 {
  std::array<std::array<double, 2>, 2> m{};

  constexpr double operator()(int i, int j) const { return m[i][j]; }
  constexpr double& operator()(int i, int j) { return m[i][j]; }

  constexpr double trace() const { return m[0][0] + m[1][1]; }
  constexpr Mat2 transpose() const { return {{{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}}; }
};

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}
constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}
constexpr Mat2 operator*(double s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}
constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}
constexpr Vec2 operator*(const Mat2& a, Vec2 v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y, a.m[1][0] * v.x + a.m[1][1] * v.y};
}

/// a (x) b, i.e. (a b^T)_{ij} = a_i b_j.
constexpr Mat2 outer(Vec2 a, Vec2 b) {
  return {{{{a.x * b.x, a.x * b.y}, {a.y * b.x, a.y * b.y}}}};
}

/// Frobenius contraction A:B = sum_ij A_ij B_ij.
constexpr double contract(const Mat2& a, const Mat2& b) {
  return a.m[0][0] * b.m[0][0] + a.m[0][1] * b.m[0][1] + a.m[1][0] * b.m[1][0] +
         a.m[1][1] * b.m[1][1];
}

/// Largest eigenvalue of a symmetric 2x2 matrix (trace/discriminant form).
/// Only the symmetric part of `a` is used.
inline double sym2_max_eigenvalue(const Mat2& a) {
  const double p = a.m[0][0];
  const double q = a.m[1][1];
  const double off = 0.5 * (a.m[0][1] + a.m[1][0]);
  const double half_trace = 0.5 * (p + q);
  const double half_diff = 0.5 * (p - q);
  return half_trace + std::hypot(half_diff, off);
}

}  // namespace rotflow
