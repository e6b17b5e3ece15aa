#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rotflow/quadrature.hpp"
#include "rotflow/subsolution.hpp"
#include "rotflow/test_fields.hpp"

namespace rotflow {

/// Default rule for weak residuals: 8 Gauss points per panel, panels aligned with the fan edges.
inline constexpr QuadSpec kDefaultWeakSpec{8, 2, 8, 4};

/// int int [vbar . d_t phi + ubar : grad phi + qbar div phi] dx dt over the support of phi.
/// Zero for a distributional solution of d_t vbar + div ubar + grad qbar = 0.
/// Throws std::invalid_argument if phi is not supported strictly inside the annulus and (0, T).
double weak_residual_linear_system(const RotationalSubsolution& sub, const VectorTestField& phi,
                                   const QuadSpec& spec = kDefaultWeakSpec);

using VelocityField = std::function<Vec2(Vec2)>;

/// int vbar . grad p dx at fixed time, radial panels split at `r_breaks`
/// (the support ends of p are added automatically).
double weak_residual_divergence(const VelocityField& v, const ScalarTestField& p, const AnnulusGeometry& geom,
                                std::span<const double> r_breaks, const QuadSpec& spec = kDefaultWeakSpec);

/// Residuals over a sequence of refinement levels with observed orders log2(r_k / r_{k+1}).
struct ResidualReport {
  std::vector<double> residuals;
  std::vector<std::optional<double>> orders;  ///< empty entries: both levels at roundoff

  /// Smallest observed order; empty when every pair is at roundoff.
  std::optional<double> min_order() const;
  bool at_roundoff(double floor) const;
};

/// weak_residual_linear_system on `levels` specs base.refined(2^k).
ResidualReport linear_system_refinement(const RotationalSubsolution& sub, const VectorTestField& phi,
                                        const QuadSpec& base, int levels = 3);

/// Centered finite differences of
///   res1 = d_r beta + (2/r) beta + d_r qbar,
///   res2 = d_t alpha + d_r gamma + (2/r) gamma.
/// Throws std::invalid_argument within 2h of a fan edge (space-time), or when the stencil
/// leaves [rho, R] x [0, T].
std::pair<double, double> radial_system_residual(const RotationalSubsolution& sub, double r, double t, double h);

/// Same residuals with exact derivatives, e.g. d_r qbar = alpha d_r alpha + alpha^2 / r.
std::pair<double, double> radial_system_residual_exact(const RotationalSubsolution& sub, double r, double t);

/// Space-time distance | |r - r0| - lambda t | to the fan edges.
double fan_edge_distance(const RotationalSubsolution& sub, double r, double t);

/// Closed form int_Omega |v0|^2 dx = pi (rho^-2 - R^-2).
double initial_energy_exact(const AnnulusGeometry& geom);

/// int_Omega 2 ebar(x, t) dx on a fan-aligned polar rule.
double energy_total(const RotationalSubsolution& sub, double t, const QuadSpec& spec = kDefaultWeakSpec);

/// int_Omega |v0|^2 dx by quadrature, split at r0.
double initial_energy_quadrature(const AnnulusGeometry& geom, const QuadSpec& spec = kDefaultWeakSpec);

struct AttainmentReport {
  std::vector<double> times;
  std::vector<double> l2_distance_sq;           ///< int |vbar(t) - v0|^2 dx
  std::vector<std::vector<double>> pairings;    ///< [field][time] |int (vbar(t) - v0) . phi dx|
  std::optional<double> l2_order;               ///< fitted slope of l2_distance_sq vs t
  std::vector<std::optional<double>> pairing_orders;
};

/// Weak (and strong) attainment of the initial datum as t -> 0. Fields are
/// used at a fixed time, so only their spatial factor matters.
AttainmentReport initial_data_attainment(const RotationalSubsolution& sub, const std::vector<double>& times,
                                         const std::vector<VectorTestField>& fields,
                                         const QuadSpec& spec = kDefaultWeakSpec);

}  // namespace rotflow
