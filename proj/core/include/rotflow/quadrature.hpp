#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rotflow/domain.hpp"

namespace rotflow {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on P_n; exact for polynomials of degree 2n-1.
/// Throws std::invalid_argument for order < 1.
GaussLegendre gauss_legendre(int order);

struct Node1D {
  double x = 0.0;
  double w = 0.0;
};

/// Composite Gauss rule over the segments of a sorted breakpoint list.
/// Each segment is cut into `panels_per_segment` equal panels. Repeated
/// breakpoints are collapsed.
std::vector<Node1D> composite_gauss(std::span<const double> breaks, int panels_per_segment, int order);

/// A quadrature node in (r, theta, t); `weight` already carries the polar
/// Jacobian r when the owning rule says so.
struct QuadNode {
  double r = 0.0;
  double theta = 0.0;
  double t = 0.0;
  double weight = 0.0;
};

struct QuadSpec {
  int order = 8;         ///< Gauss points per panel and direction
  int r_panels = 1;      ///< panels per radial segment between breakpoints
  int theta_panels = 8;  ///< panels over [0, 2pi)
  int t_panels = 4;      ///< panels over the time interval

  /// Same spec with every panel count multiplied by `factor`.
  QuadSpec refined(int factor) const;
};

struct QuadratureRule {
  std::vector<QuadNode> nodes;
  int order = 0;
  bool jacobian_applied = true;

  double total_weight() const;
};

/// Tensor rule on {rho <= r <= R} x [0, 2pi) at a single time, the radial
/// direction split at `r_breaks` (must include both ends of the interval).
QuadratureRule polar_rule(std::span<const double> r_breaks, const QuadSpec& spec, double t = 0.0);

/// Radial breakpoints that align panels with the rarefaction fan edges r0 -/+ lambda t
/// (plus any extra breakpoints), clipped to [rho, R], sorted and de-duplicated.
std::vector<double> fan_breaks(const AnnulusGeometry& geom, double lambda, double t,
                               std::span<const double> extra = {});

using RadialBreaks = std::function<std::vector<double>(double t)>;

/// Space-time rule on [t_lo, t_hi] x annulus. The radial panels follow
/// `breaks_at(t)` separately at every time node.
QuadratureRule spacetime_rule(double t_lo, double t_hi, const RadialBreaks& breaks_at, const QuadSpec& spec);

}  // namespace rotflow
