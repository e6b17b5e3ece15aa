#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rotflow/domain.hpp"

namespace rotflow {

/// Compactly supported 1-D bump on [center - half_width, center + half_width].
///
/// `polynomial` is (1 - z^2)^6, C^5 and exactly integrable by panel-aligned
/// Gauss rules; `smooth` is exp(1 - 1/(1 - z^2)), C-infinity. Both peak at 1.
struct Bump1D {
  enum class Kind { polynomial, smooth };

  double center = 0.0;
  double half_width = 1.0;
  Kind kind = Kind::polynomial;

  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }

  /// {value, first derivative, second derivative} at s.
  std::array<double, 3> eval(double s) const;
};

/// r-theta-t box containing the support of a test field.
struct SupportBox {
  double r_lo = 0.0;
  double r_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Scalar field P(r, theta) * tau(t) with P = bump(r) * (offset + cos(mode theta + phase)).
/// Without a time bump, tau == 1 (fixed-time use).
struct ScalarTestField {
  Bump1D radial;
  int mode = 0;
  double phase = 0.0;
  double offset = 1.0;
  std::optional<Bump1D> time;

  /// Spatial factor with Cartesian gradient and Hessian.
  CartesianJet spatial(double r, double theta) const;
  double time_factor(double t) const;
  double time_derivative(double t) const;

  double value(double r, double theta, double t) const { return spatial(r, theta).value * time_factor(t); }

  SupportBox support(const AnnulusGeometry& geom) const;
};

/// Vector test field built from a scalar one: either S * direction (generic)
/// or grad^perp S = (d_2 S, -d_1 S) (divergence-free).
struct VectorTestField {
  enum class Kind { fixed_direction, perp_gradient };

  ScalarTestField scalar;
  Kind kind = Kind::fixed_direction;
  Vec2 direction{1.0, 0.0};

  struct Jet {
    Vec2 value;
    Vec2 dt;
    Mat2 jacobian;  ///< jacobian(i, j) = d_j phi_i
    double divergence() const { return jacobian.trace(); }
  };

  Jet eval(double r, double theta, double t) const;
};

/// Throws std::invalid_argument unless the support keeps at least `margin`
/// away from both boundary circles and lies in (0, T) when time-dependent.
void require_interior_support(const SupportBox& box, const AnnulusGeometry& geom, double margin);

/// Five space-time vector test fields for the subsolution weak form:
/// one supported away from the fan (stationary branch), the rest crossing it.
std::vector<VectorTestField> vector_test_library(const AnnulusGeometry& geom, double lambda);

/// Time-independent scalar fields for divergence tests.
std::vector<ScalarTestField> scalar_test_library(const AnnulusGeometry& geom);

/// Random smooth time-independent scalar field with radial support inside the annulus.
ScalarTestField random_scalar_field(const AnnulusGeometry& geom, std::mt19937_64& rng);

}  // namespace rotflow
