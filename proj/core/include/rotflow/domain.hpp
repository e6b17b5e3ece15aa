#pragma once

#include <string>
#include <vector>

#include "rotflow/linalg.hpp"

namespace rotflow {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Annulus rho < |x| < R with the initial vortex-sheet radius r0 and a time horizon T.
struct AnnulusGeometry {
  double rho = 1.0;
  double R = 2.0;
  double r0 = 1.5;
  double T = 1.0;

  /// Throws std::invalid_argument unless 0 < rho < r0 < R < inf and T > 0.
  void validate() const;

  double area() const;
  bool contains(double r) const { return rho <= r && r <= R; }
};

/// Turbulent propagation speed and energy dissipation rate of the subsolution family.
struct SubsolutionParams {
  double lambda = 0.1;
  double epsilon = 0.5;
};

struct BoundViolation {
  std::string name;  ///< which inequality, e.g. "lambda < min{1/R^2, (r0-rho)/T, (R-r0)/T}"
  double value = 0.0;
  double bound = 0.0;
};

struct ValidationReport {
  double lambda_bound = 0.0;   ///< min{1/R^2, (r0-rho)/T, (R-r0)/T}
  double epsilon_bound = 0.0;  ///< 1/(1 - rho^2 lambda), +inf when lambda >= 1/rho^2
  std::vector<BoundViolation> violations;
  /// epsilon < 1: needed for e(vbar, ubar) < ebar inside the turbulent zone.
  /// Reported separately; a false value is a warning, not a violation.
  bool strict_inequality_holds = true;

  bool ok() const { return violations.empty(); }
};

/// Check the admissibility bounds on (lambda, epsilon) for the given annulus.
/// Throws std::invalid_argument for an invalid geometry.
ValidationReport validate_params(const AnnulusGeometry& geom, const SubsolutionParams& params);

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;  ///< normalized to [0, 2pi)
};

double normalize_angle(double theta);
PolarPoint to_polar(Vec2 x);
Vec2 to_cartesian(PolarPoint p);

/// Unit radial and azimuthal basis vectors e_r = (cos, sin), e_theta = (-sin, cos).
Vec2 radial_unit(double theta);
Vec2 azimuthal_unit(double theta);

enum class BoundaryComponent { inner, outer };

/// Nearest-boundary data for a point of the annulus.
///
/// `normal` is the inner unit normal at the nearest boundary point, so that
/// x = nearest + distance * normal, and `tangent` = (-normal.y, normal.x).
/// `curvature` is the Laplacian of the distance function at x (1/r on the
/// inner collar, -1/r on the outer one); it satisfies D_tau tau = -curvature * nu.
struct BoundaryFrame {
  double distance = 0.0;
  BoundaryComponent component = BoundaryComponent::inner;
  Vec2 nearest;
  Vec2 normal;
  Vec2 tangent;
  double curvature = 0.0;
};

/// Points on the medial circle |x| = (rho + R)/2 are assigned to the inner component.
/// Throws std::domain_error when |x| is outside [rho, R] or x is the origin.
BoundaryFrame boundary_distance(Vec2 x, const AnnulusGeometry& geom);

/// Value and derivatives of a scalar field given in polar coordinates.
struct PolarJet {
  double value = 0.0;
  double dr = 0.0;
  double dtheta = 0.0;
  double drr = 0.0;
  double drtheta = 0.0;
  double dthetatheta = 0.0;
};

/// Value, Cartesian gradient and Cartesian Hessian of a scalar field.
struct CartesianJet {
  double value = 0.0;
  Vec2 grad;
  Mat2 hess;
};

/// Chain rule from polar derivatives at (r, theta) to Cartesian ones.
CartesianJet to_cartesian_jet(const PolarJet& jet, double r, double theta);

/// Neumaier-compensated running sum; summation order is the call order.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace rotflow
