#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rotflow/burgers.hpp"
#include "rotflow/domain.hpp"

namespace rotflow {

/// Rotationally symmetric Navier-Stokes reduced to
///   d_t alpha = nu (d_rr alpha + d_r alpha / r - alpha / r^2) + source,
/// alpha(rho) = alpha(R) = 0, alpha(., 0) = alpha0.
struct ParabolicProblem {
  AnnulusGeometry geom;
  double viscosity = 1e-3;       ///< kinematic viscosity nu > 0
  std::size_t n_intervals = 1000;  ///< uniform radial grid with n_intervals + 1 nodes
  double dt = 1e-3;
  /// Optional forcing S(r, t), for manufactured solutions.
  std::function<double(double, double)> source;
  /// Initial profile; defaults to the vortex-sheet data -/+ 1/r^2.
  std::function<double(double)> initial;
};

/// Snapshots and energy bookkeeping of one parabolic solve.
struct EvolutionRecord {
  std::vector<RadialProfile> snapshots;
  /// 2 pi int (alpha(t) - alpha0)^2 r dr, square-rooted (trapezoid over all nodes)
  std::vector<double> distance_to_initial;
  /// 1/2 |alpha(t)|^2 in the discrete weighted norm over interior nodes
  std::vector<double> kinetic_energy;
  /// nu int_0^t of the discrete |grad v|^2, accumulated at step midpoints
  std::vector<double> dissipated;
  double max_abs_alpha = 0.0;  ///< over every time step
};

/// Uniform radial grid on [rho, R].
std::vector<double> radial_grid(const AnnulusGeometry& geom, std::size_t n_intervals);

/// The initial profile sampled on a grid; a node that coincides with r0 gets the midpoint 0.
std::vector<double> initial_profile(const AnnulusGeometry& geom, std::span<const double> grid);

/// 2 pi int f^2 r dr by the trapezoid rule, square-rooted.
double weighted_l2_norm(std::span<const double> grid, std::span<const double> values);

/// Crank-Nicolson in time, conservative centered differences in r, one
/// tridiagonal solve per step. Steps are shortened to land exactly on every
/// requested output time. Throws std::invalid_argument for nu <= 0, unsorted
/// output times, or times outside [0, T].
EvolutionRecord solve_parabolic(const ParabolicProblem& problem, std::span<const double> t_out);

struct ViscosityRow {
  double viscosity = 0.0;
  double distance = 0.0;  ///< |alpha_nu(., t_probe) - alpha0| in L^2(r dr) times 2 pi
};

struct ViscosityStudy {
  double t_probe = 0.0;
  std::vector<ViscosityRow> rows;
  std::optional<double> slope;  ///< fitted d log(distance) / d log(nu)
  bool strictly_decreasing = false;
};

/// Sweep over decreasing viscosities. Throws std::invalid_argument unless
/// nu_list has at least three strictly decreasing positive entries.
ViscosityStudy vanishing_viscosity_study(const AnnulusGeometry& geom, std::span<const double> nu_list, double t_probe,
                                         std::size_t n_intervals = 1000, double dt = 1e-3);

/// 2-D azimuthal velocity alpha(r)(sin theta, -cos theta) and pressure
/// int_rho^r alpha(s)^2 / s ds from a radial profile (linear interpolation).
class LiftedField {
 public:
  explicit LiftedField(RadialProfile profile);

  double alpha(double r) const;
  Vec2 velocity(Vec2 x) const;
  double pressure(double r) const;

 private:
  RadialProfile profile_;
  std::vector<double> pressure_;  ///< cumulative trapezoid of alpha^2 / r at grid nodes
};

LiftedField lift_to_2d(const RadialProfile& profile);

}  // namespace rotflow
