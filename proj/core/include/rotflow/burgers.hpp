#pragma once

#include <functional>
#include <vector>

#include "rotflow/domain.hpp"

namespace rotflow {

/// Samples of a scalar function of r at a fixed time.
struct RadialProfile {
  std::vector<double> grid;  ///< strictly increasing radii
  std::vector<double> values;
  double t = 0.0;
};

/// Exact entropy solution of f_t + (lambda/2)(f^2)_r = 0 with f(r,0) = sign(r - r0).
///
/// -1 left of the fan r0 - lambda t, +1 right of r0 + lambda t, linear in between.
/// The fan edges themselves take the one-sided outer values (-1 at the left
/// edge, +1 at the right edge); at t = 0 the result is sign(r - r0) with f(r0, 0) = 0.
double rarefaction_f(double r, double t, double r0, double lambda);

/// Cell-averaged state of the Godunov finite-volume scheme for the flux (lambda/2) f^2.
struct FVState {
  std::vector<double> edges;     ///< uniform, size n_cells + 1
  std::vector<double> averages;  ///< size n_cells
  double time = 0.0;
  double lambda = 0.0;

  std::size_t size() const { return averages.size(); }
  double cell_width() const { return edges[1] - edges[0]; }
  double midpoint(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
  /// sum of averages times cell widths
  double total() const;
};

inline constexpr double kMaxCfl = 0.9;

/// Exact Godunov flux for q(f) = (lambda/2) f^2.
double godunov_flux(double left, double right, double lambda);

/// Uniform cells on [rho, R] holding the exact cell averages of sign(r - r0).
FVState riemann_initial_state(const AnnulusGeometry& geom, double lambda, std::size_t n_cells);

/// Largest step with CFL number `cfl` for the current state.
double stable_dt(const FVState& state, double cfl = kMaxCfl);

/// One conservative Godunov update with zero-gradient ghost cells.
/// Throws std::invalid_argument when dt exceeds the CFL limit of 0.9.
FVState godunov_step(const FVState& state, double dt);

/// Advance to t_end in CFL-limited steps, the last one clipped to land exactly on t_end.
FVState godunov_advance(FVState state, double t_end, double cfl = kMaxCfl);

/// Solve from the Riemann data sign(r - r0) to t_end; returns cell-midpoint samples.
RadialProfile godunov_solve(const AnnulusGeometry& geom, double lambda, double t_end, std::size_t n_cells);

struct FvComparison {
  double l1 = 0.0;    ///< sum |f_h - f(midpoint)| h
  double linf = 0.0;  ///< max over cells at least two cells away from both fan edges
  std::size_t n_cells = 0;
};

FvComparison compare_exact_vs_fv(const AnnulusGeometry& geom, double lambda, double t, std::size_t n_cells);

}  // namespace rotflow
