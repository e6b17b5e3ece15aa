#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "rotflow/domain.hpp"

namespace rotflow {

/// Radial profiles (alpha, beta, gamma, qbar) of the rotational subsolution at (r, t).
struct RadialComponents {
  double f = 0.0;      ///< Burgers rarefaction value r^2 alpha
  double alpha = 0.0;  ///< azimuthal speed
  double beta = 0.0;   ///< -alpha^2/2
  double gamma = 0.0;  ///< -(lambda/2)(1/r^2 - r^2 alpha^2)
  double qbar = 0.0;   ///< generalized pressure
};

/// Everything the subsolution defines at one space-time point.
struct SubsolutionSample {
  Vec2 x;
  double t = 0.0;
  Vec2 vbar;
  Mat2 ubar;  ///< symmetric, traceless
  double qbar = 0.0;
  double ebar = 0.0;
  double egen = 0.0;
  bool in_turbulent_region = false;
};

/// The expanding band U = {r0 - lambda t < |x| < r0 + lambda t}.
struct TurbulentRegion {
  double r0 = 0.0;
  double lambda = 0.0;

  bool contains(double r, double t) const;
  /// r in [r0 - lambda t, r0 + lambda t] with t > 0
  bool in_closure(double r, double t) const;
};

/// Initial azimuthal speed: -1/r^2 inside r0, +1/r^2 outside (0 on the circle r = r0).
double initial_alpha(double r, const AnnulusGeometry& geom);

/// v0(x) = -/+ x^perp / |x|^3.
Vec2 initial_velocity(Vec2 x, const AnnulusGeometry& geom);

/// (d/2) * largest eigenvalue of vbar (x) vbar - ubar with d = 2.
double generalized_energy(Vec2 vbar, const Mat2& ubar);

/// The explicit subsolution triple (vbar, ubar, qbar) with energy density ebar,
/// driven by the Burgers rarefaction fan of speed lambda.
class RotationalSubsolution {
 public:
  /// Throws std::invalid_argument if the geometry is invalid or (lambda, epsilon)
  /// violate the admissibility bounds. epsilon >= 1 is accepted.
  RotationalSubsolution(const AnnulusGeometry& geom, const SubsolutionParams& params);

  const AnnulusGeometry& geometry() const { return geom_; }
  const SubsolutionParams& params() const { return params_; }
  TurbulentRegion region() const { return {geom_.r0, params_.lambda}; }

  double f(double r, double t) const;
  double alpha(double r, double t) const;
  double beta(double r, double t) const;
  double gamma(double r, double t) const;

  /// alpha^2/2 + int_rho^r alpha(s,t)^2 / s ds, integrated by adaptive
  /// Gauss-Kronrod on panels split at the fan edges.
  double qbar(double r, double t) const;

  RadialComponents radial(double r, double t) const;

  Vec2 vbar(Vec2 x, double t) const;
  Mat2 ubar(Vec2 x, double t) const;

  /// Closed form (1/(2r^4)) [1 - (1 - r^2 lambda)(1 - f^2)].
  double egen(double r, double t) const;
  /// (1/(2r^4)) [1 - epsilon (1 - r^2 lambda)(1 - f^2)].
  double ebar(double r, double t) const;

  SubsolutionSample sample(Vec2 x, double t) const;

 private:
  AnnulusGeometry geom_;
  SubsolutionParams params_;
};

/// Stationary pressure alpha0^2/2 + (rho^-4 - r^-4)/4, the closed form of qbar at t = 0.
double stationary_qbar(double r, const AnnulusGeometry& geom);

/// Tensor sampling grid (r, theta, t), uniform and inclusive of the end points in r and t.
struct SampleGrid {
  std::size_t n_r = 100;
  std::size_t n_theta = 64;
  std::size_t n_t = 10;
  /// Optional sub-annulus (r_min, r_max) within [rho, R].
  std::optional<double> r_min;
  std::optional<double> r_max;
};

struct ConstraintViolation {
  double r = 0.0;
  double theta = 0.0;
  double t = 0.0;
  double egen = 0.0;
  double ebar = 0.0;
  std::string what;
};

struct ConstraintReport {
  std::size_t n_samples = 0;
  std::size_t n_turbulent = 0;   ///< samples inside U
  std::size_t n_quiescent = 0;   ///< samples outside U
  double min_strict_margin = 0.0;         ///< min (ebar - egen) over U; +inf if U unsampled
  double max_margin_formula_error = 0.0;  ///< vs (1-eps)(1-r^2 lambda)(1-f^2)/(2r^4)
  double max_equality_defect = 0.0;       ///< max |ebar - egen| outside U
  bool strictness_applicable = true;      ///< epsilon < 1
  bool passed = true;
  std::optional<ConstraintViolation> first_violation;
};

inline constexpr double kConstraintTolerance = 1e-13;

/// Sweep the grid over [rho', R'] x [0, 2pi) x [0, T] and check
/// egen < ebar in U (egen <= ebar when epsilon >= 1), egen = ebar outside U,
/// and 1/2 |vbar|^2 <= egen <= ebar <= 1/(2 r^4) everywhere.
ConstraintReport check_constraint_structure(const RotationalSubsolution& sub, const SampleGrid& grid);

}  // namespace rotflow
