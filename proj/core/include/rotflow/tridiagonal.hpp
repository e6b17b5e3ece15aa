#pragma once

#include <span>
#include <vector>

namespace rotflow {

/// Tridiagonal system with sub-diagonal `lower` (lower[0] unused), `diag`,
/// and super-diagonal `upper` (upper[n-1] unused).
struct TridiagonalMatrix {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  explicit TridiagonalMatrix(std::size_t n = 0) : lower(n), diag(n), upper(n) {}
  std::size_t size() const { return diag.size(); }

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
};

/// Thomas algorithm without pivoting; requires a diagonally dominant (or
/// otherwise pivot-safe) matrix. Throws std::runtime_error on a zero pivot.
std::vector<double> solve_tridiagonal(const TridiagonalMatrix& a, std::span<const double> rhs);

}  // namespace rotflow
