#include "rotflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotflow {

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  const int n = order;
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::vector<Node1D> composite_gauss(std::span<const double> breaks, int panels_per_segment, int order) {
  if (panels_per_segment < 1) throw std::invalid_argument("panel count must be positive");
  const GaussLegendre gl = gauss_legendre(order);
  std::vector<Node1D> out;
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double a = breaks[s];
    const double b = breaks[s + 1];
    if (!(b > a)) continue;
    const double h = (b - a) / panels_per_segment;
    for (int p = 0; p < panels_per_segment; ++p) {
      const double lo = a + p * h;
      const double mid = lo + 0.5 * h;
      for (int k = 0; k < order; ++k)
        out.push_back({mid + 0.5 * h * gl.nodes[k], 0.5 * h * gl.weights[k]});
    }
  }
  return out;
}

QuadSpec QuadSpec::refined(int factor) const {
  QuadSpec s = *this;
  s.r_panels *= factor;
  s.theta_panels *= factor;
  s.t_panels *= factor;
  return s;
}

double QuadratureRule::total_weight() const {
  CompensatedSum s;
  for (const auto& n : nodes) s.add(n.weight);
  return s.value();
}

QuadratureRule polar_rule(std::span<const double> r_breaks, const QuadSpec& spec, double t) {
  const auto radial = composite_gauss(r_breaks, spec.r_panels, spec.order);
  const double theta_breaks[] = {0.0, kTwoPi};
  const auto angular = composite_gauss(theta_breaks, spec.theta_panels, spec.order);
  QuadratureRule rule;
  rule.order = spec.order;
  rule.jacobian_applied = true;
  rule.nodes.reserve(radial.size() * angular.size());
  for (const auto& rn : radial)
    for (const auto& an : angular) rule.nodes.push_back({rn.x, an.x, t, rn.w * an.w * rn.x});
  return rule;
}

std::vector<double> fan_breaks(const AnnulusGeometry& geom, double lambda, double t,
                               std::span<const double> extra) {
  std::vector<double> b{geom.rho, geom.R, geom.r0 - lambda * t, geom.r0 + lambda * t};
  b.insert(b.end(), extra.begin(), extra.end());
  for (double& v : b) v = std::clamp(v, geom.rho, geom.R);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

QuadratureRule spacetime_rule(double t_lo, double t_hi, const RadialBreaks& breaks_at, const QuadSpec& spec) {
  const double t_breaks[] = {t_lo, t_hi};
  const auto temporal = composite_gauss(t_breaks, spec.t_panels, spec.order);
  QuadratureRule rule;
  rule.order = spec.order;
  rule.jacobian_applied = true;
  for (const auto& tn : temporal) {
    const auto rb = breaks_at(tn.x);
    const auto slice = polar_rule(rb, spec, tn.x);
    for (auto n : slice.nodes) {
      n.weight *= tn.w;
      rule.nodes.push_back(n);
    }
  }
  return rule;
}

}  // namespace rotflow
