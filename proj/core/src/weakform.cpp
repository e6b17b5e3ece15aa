#include "rotflow/weakform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rotflow/fit.hpp"

namespace rotflow {

namespace {

/// Breakpoints inside [lo, hi]: the end points plus any interior entries of `cuts`.
std::vector<double> clipped_breaks(double lo, double hi, std::initializer_list<double> cuts) {
  std::vector<double> b{lo, hi};
  for (double c : cuts)
    if (c > lo && c < hi) b.push_back(c);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace

double weak_residual_linear_system(const RotationalSubsolution& sub, const VectorTestField& phi,
                                   const QuadSpec& spec) {
  const AnnulusGeometry& geom = sub.geometry();
  const SupportBox box = phi.scalar.support(geom);
  require_interior_support(box, geom, 0.0);
  if (!phi.scalar.time) throw std::invalid_argument("space-time test field needs a time bump");

  const double lambda = sub.params().lambda;
  const RadialBreaks breaks = [&](double t) {
    return clipped_breaks(box.r_lo, box.r_hi, {geom.r0 - lambda * t, geom.r0 + lambda * t});
  };
  const QuadratureRule rule = spacetime_rule(box.t_lo, box.t_hi, breaks, spec);

  CompensatedSum acc;
  double cached_r = -1.0;
  double cached_t = -1.0;
  RadialComponents rc;
  for (const QuadNode& n : rule.nodes) {
    if (n.r != cached_r || n.t != cached_t) {
      rc = sub.radial(n.r, n.t);
      cached_r = n.r;
      cached_t = n.t;
    }
    const double c = std::cos(n.theta);
    const double s = std::sin(n.theta);
    const double c2 = std::cos(2.0 * n.theta);
    const double s2 = std::sin(2.0 * n.theta);
    const Vec2 vbar{rc.alpha * s, -rc.alpha * c};
    const double u11 = rc.beta * c2 + rc.gamma * s2;
    const double u12 = rc.beta * s2 - rc.gamma * c2;
    const Mat2 ubar{{{{u11, u12}, {u12, -u11}}}};
    const VectorTestField::Jet j = phi.eval(n.r, n.theta, n.t);
    acc.add(n.weight * (dot(vbar, j.dt) + contract(ubar, j.jacobian) + rc.qbar * j.divergence()));
  }
  return acc.value();
}

double weak_residual_divergence(const VelocityField& v, const ScalarTestField& p, const AnnulusGeometry& geom,
                                std::span<const double> r_breaks, const QuadSpec& spec) {
  const SupportBox box = p.support(geom);
  require_interior_support(box, geom, 0.0);
  std::vector<double> b{box.r_lo, box.r_hi};
  for (double c : r_breaks)
    if (c > box.r_lo && c < box.r_hi) b.push_back(c);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());

  const QuadratureRule rule = polar_rule(b, spec);
  CompensatedSum acc;
  for (const QuadNode& n : rule.nodes) {
    const CartesianJet jet = p.spatial(n.r, n.theta);
    acc.add(n.weight * dot(v(to_cartesian({n.r, n.theta})), jet.grad));
  }
  return acc.value();
}

std::optional<double> ResidualReport::min_order() const {
  std::optional<double> m;
  for (const auto& o : orders)
    if (o) m = m ? std::min(*m, *o) : *o;
  return m;
}

bool ResidualReport::at_roundoff(double floor) const {
  return std::all_of(residuals.begin(), residuals.end(), [floor](double r) { return std::abs(r) < floor; });
}

ResidualReport linear_system_refinement(const RotationalSubsolution& sub, const VectorTestField& phi,
                                        const QuadSpec& base, int levels) {
  if (levels < 3) throw std::invalid_argument("a refinement study needs at least three levels");
  ResidualReport rep;
  for (int k = 0; k < levels; ++k) rep.residuals.push_back(weak_residual_linear_system(sub, phi, base.refined(1 << k)));
  for (int k = 0; k + 1 < levels; ++k) rep.orders.push_back(halving_order(rep.residuals[k], rep.residuals[k + 1]));
  return rep;
}

double fan_edge_distance(const RotationalSubsolution& sub, double r, double t) {
  return std::abs(std::abs(r - sub.geometry().r0) - sub.params().lambda * t);
}

std::pair<double, double> radial_system_residual(const RotationalSubsolution& sub, double r, double t, double h) {
  const AnnulusGeometry& geom = sub.geometry();
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (r - h < geom.rho || r + h > geom.R || t - h < 0.0 || t + h > geom.T) {
    std::ostringstream why;
    why << "stencil around (r=" << r << ", t=" << t << ") with h=" << h << " leaves the space-time domain";
    throw std::invalid_argument(why.str());
  }
  if (fan_edge_distance(sub, r, t) < 2.0 * h) {
    std::ostringstream why;
    why << "(r=" << r << ", t=" << t << ") is within 2h of a fan edge";
    throw std::invalid_argument(why.str());
  }
  const double inv2h = 1.0 / (2.0 * h);
  const double dbeta = (sub.beta(r + h, t) - sub.beta(r - h, t)) * inv2h;
  const double dq = (sub.qbar(r + h, t) - sub.qbar(r - h, t)) * inv2h;
  const double res1 = dbeta + 2.0 / r * sub.beta(r, t) + dq;

  const double dalpha_t = (sub.alpha(r, t + h) - sub.alpha(r, t - h)) * inv2h;
  const double dgamma = (sub.gamma(r + h, t) - sub.gamma(r - h, t)) * inv2h;
  const double res2 = dalpha_t + dgamma + 2.0 / r * sub.gamma(r, t);
  return {res1, res2};
}

std::pair<double, double> radial_system_residual_exact(const RotationalSubsolution& sub, double r, double t) {
  const double lambda = sub.params().lambda;
  const double f = sub.f(r, t);
  double f_r = 0.0;
  double f_t = 0.0;
  if (sub.region().contains(r, t)) {
    f_r = 1.0 / (lambda * t);
    f_t = -f / t;
  }
  const double r2 = r * r;
  const double alpha = f / r2;
  const double alpha_r = f_r / r2 - 2.0 * f / (r2 * r);
  const double alpha_t = f_t / r2;
  const double beta = -0.5 * alpha * alpha;
  const double beta_r = -alpha * alpha_r;
  const double q_r = alpha * alpha_r + alpha * alpha / r;
  const double gamma = -0.5 * lambda * (1.0 - f * f) / r2;
  const double gamma_r = lambda * f * f_r / r2 + lambda * (1.0 - f * f) / (r2 * r);
  return {beta_r + 2.0 / r * beta + q_r, alpha_t + gamma_r + 2.0 / r * gamma};
}

double initial_energy_exact(const AnnulusGeometry& geom) {
  return kPi * (1.0 / (geom.rho * geom.rho) - 1.0 / (geom.R * geom.R));
}

double energy_total(const RotationalSubsolution& sub, double t, const QuadSpec& spec) {
  const auto breaks = fan_breaks(sub.geometry(), sub.params().lambda, t);
  const QuadratureRule rule = polar_rule(breaks, spec, t);
  CompensatedSum acc;
  double cached_r = -1.0;
  double e = 0.0;
  for (const QuadNode& n : rule.nodes) {
    if (n.r != cached_r) {
      e = sub.ebar(n.r, t);
      cached_r = n.r;
    }
    acc.add(n.weight * 2.0 * e);
  }
  return acc.value();
}

double initial_energy_quadrature(const AnnulusGeometry& geom, const QuadSpec& spec) {
  const double breaks[] = {geom.rho, geom.r0, geom.R};
  const QuadratureRule rule = polar_rule(breaks, spec);
  CompensatedSum acc;
  for (const QuadNode& n : rule.nodes) {
    const Vec2 v = initial_velocity(to_cartesian({n.r, n.theta}), geom);
    acc.add(n.weight * dot(v, v));
  }
  return acc.value();
}

AttainmentReport initial_data_attainment(const RotationalSubsolution& sub, const std::vector<double>& times,
                                         const std::vector<VectorTestField>& fields, const QuadSpec& spec) {
  const AnnulusGeometry& geom = sub.geometry();
  const double lambda = sub.params().lambda;
  AttainmentReport rep;
  rep.times = times;
  rep.pairings.assign(fields.size(), {});
  for (double t : times) {
    const double breaks_extra[] = {geom.r0};
    const auto breaks = fan_breaks(geom, lambda, t, breaks_extra);
    const QuadratureRule rule = polar_rule(breaks, spec, t);
    CompensatedSum dist;
    std::vector<CompensatedSum> pair(fields.size());
    for (const QuadNode& n : rule.nodes) {
      const Vec2 x = to_cartesian({n.r, n.theta});
      const Vec2 diff = sub.vbar(x, t) - initial_velocity(x, geom);
      dist.add(n.weight * dot(diff, diff));
      for (std::size_t k = 0; k < fields.size(); ++k) {
        const SupportBox box = fields[k].scalar.support(geom);
        if (n.r < box.r_lo || n.r > box.r_hi) continue;
        const CartesianJet s = fields[k].scalar.spatial(n.r, n.theta);
        Vec2 phi;
        if (fields[k].kind == VectorTestField::Kind::fixed_direction)
          phi = s.value * fields[k].direction;
        else
          phi = {s.grad.y, -s.grad.x};
        pair[k].add(n.weight * dot(diff, phi));
      }
    }
    rep.l2_distance_sq.push_back(dist.value());
    for (std::size_t k = 0; k < fields.size(); ++k) rep.pairings[k].push_back(std::abs(pair[k].value()));
  }
  rep.l2_order = loglog_slope(rep.times, rep.l2_distance_sq);
  for (const auto& p : rep.pairings) rep.pairing_orders.push_back(loglog_slope(rep.times, p));
  return rep;
}

}  // namespace rotflow
