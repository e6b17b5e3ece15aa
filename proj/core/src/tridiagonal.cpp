#include "rotflow/tridiagonal.hpp"

#include <stdexcept>

namespace rotflow {

void TridiagonalMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("tridiagonal multiply: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += lower[i] * x[i - 1];
    if (i + 1 < n) v += upper[i] * x[i + 1];
    y[i] = v;
  }
}

std::vector<double> solve_tridiagonal(const TridiagonalMatrix& a, std::span<const double> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("tridiagonal solve: size mismatch");
  if (n == 0) return {};
  std::vector<double> c(n);
  std::vector<double> x(n);

  double pivot = a.diag[0];
  if (pivot == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
  c[0] = a.upper[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = a.diag[i] - a.lower[i] * c[i - 1];
    if (pivot == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
    c[i] = (i + 1 < n ? a.upper[i] : 0.0) / pivot;
    x[i] = (rhs[i] - a.lower[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace rotflow
