#include "rotflow/subsolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rotflow/burgers.hpp"

namespace rotflow {

bool TurbulentRegion::contains(double r, double t) const {
  const double w = lambda * t;
  return w > 0.0 && r > r0 - w && r < r0 + w;
}

bool TurbulentRegion::in_closure(double r, double t) const {
  const double w = lambda * t;
  return w > 0.0 && r >= r0 - w && r <= r0 + w;
}

double initial_alpha(double r, const AnnulusGeometry& geom) {
  if (r < geom.r0) return -1.0 / (r * r);
  if (r > geom.r0) return 1.0 / (r * r);
  return 0.0;
}

Vec2 initial_velocity(Vec2 x, const AnnulusGeometry& geom) {
  const double r = norm(x);
  const double s = r < geom.r0 ? -1.0 : (r > geom.r0 ? 1.0 : 0.0);
  return (s / (r * r * r)) * perp(x);
}

double generalized_energy(Vec2 vbar, const Mat2& ubar) {
  return sym2_max_eigenvalue(outer(vbar, vbar) - ubar);
}

RotationalSubsolution::RotationalSubsolution(const AnnulusGeometry& geom, const SubsolutionParams& params)
    : geom_(geom), params_(params) {
  const ValidationReport rep = validate_params(geom, params);
  if (!rep.ok()) {
    std::ostringstream why;
    why << "invalid subsolution parameters:";
    for (const auto& v : rep.violations) why << " [" << v.name << ": value " << v.value << ", bound " << v.bound << "]";
    throw std::invalid_argument(why.str());
  }
}

double RotationalSubsolution::f(double r, double t) const {
  return rarefaction_f(r, t, geom_.r0, params_.lambda);
}

double RotationalSubsolution::alpha(double r, double t) const { return f(r, t) / (r * r); }

double RotationalSubsolution::beta(double r, double t) const {
  const double a = alpha(r, t);
  return -0.5 * a * a;
}

double RotationalSubsolution::gamma(double r, double t) const {
  const double fv = f(r, t);
  return -0.5 * params_.lambda * (1.0 - fv * fv) / (r * r);
}

double RotationalSubsolution::qbar(double r, double t) const {
  const double a = alpha(r, t);
  const auto integrand = [this, t](double s) {
    const double as = alpha(s, t);
    return as * as / s;
  };
  double breaks[] = {geom_.rho, geom_.r0 - params_.lambda * t, geom_.r0 + params_.lambda * t, r};
  for (double& b : breaks) b = std::clamp(b, geom_.rho, r);
  std::sort(std::begin(breaks), std::end(breaks));
  double integral = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (breaks[i + 1] > breaks[i])
      integral += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, breaks[i], breaks[i + 1],
                                                                               15, 1e-12);
  }
  return 0.5 * a * a + integral;
}

RadialComponents RotationalSubsolution::radial(double r, double t) const {
  RadialComponents c;
  c.f = f(r, t);
  c.alpha = c.f / (r * r);
  c.beta = -0.5 * c.alpha * c.alpha;
  c.gamma = -0.5 * params_.lambda * (1.0 - c.f * c.f) / (r * r);
  c.qbar = qbar(r, t);
  return c;
}

Vec2 RotationalSubsolution::vbar(Vec2 x, double t) const {
  const PolarPoint p = to_polar(x);
  const double a = alpha(p.r, t);
  return {a * std::sin(p.theta), -a * std::cos(p.theta)};
}

Mat2 RotationalSubsolution::ubar(Vec2 x, double t) const {
  const PolarPoint p = to_polar(x);
  const double a = alpha(p.r, t);
  const double b = -0.5 * a * a;
  const double g = gamma(p.r, t);
  const double c2 = std::cos(2.0 * p.theta);
  const double s2 = std::sin(2.0 * p.theta);
  const double u11 = b * c2 + g * s2;
  const double u12 = b * s2 - g * c2;
  return {{{{u11, u12}, {u12, -u11}}}};
}

double RotationalSubsolution::egen(double r, double t) const {
  const double fv = f(r, t);
  const double r4 = r * r * r * r;
  return (1.0 - (1.0 - r * r * params_.lambda) * (1.0 - fv * fv)) / (2.0 * r4);
}

double RotationalSubsolution::ebar(double r, double t) const {
  const double fv = f(r, t);
  const double r4 = r * r * r * r;
  return (1.0 - params_.epsilon * (1.0 - r * r * params_.lambda) * (1.0 - fv * fv)) / (2.0 * r4);
}

SubsolutionSample RotationalSubsolution::sample(Vec2 x, double t) const {
  const double r = norm(x);
  SubsolutionSample s;
  s.x = x;
  s.t = t;
  s.vbar = vbar(x, t);
  s.ubar = ubar(x, t);
  s.qbar = qbar(r, t);
  s.ebar = ebar(r, t);
  s.egen = egen(r, t);
  s.in_turbulent_region = region().contains(r, t);
  return s;
}

double stationary_qbar(double r, const AnnulusGeometry& geom) {
  const double a = initial_alpha(r, geom);
  const double rho4 = std::pow(geom.rho, 4);
  const double r4 = std::pow(r, 4);
  return 0.5 * a * a + 0.25 * (1.0 / rho4 - 1.0 / r4);
}

namespace {

double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
  if (n <= 1) return lo;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

ConstraintReport check_constraint_structure(const RotationalSubsolution& sub, const SampleGrid& grid) {
  const AnnulusGeometry& geom = sub.geometry();
  const SubsolutionParams& prm = sub.params();
  const double r_lo = grid.r_min.value_or(geom.rho);
  const double r_hi = grid.r_max.value_or(geom.R);
  if (!(geom.rho <= r_lo && r_lo < r_hi && r_hi <= geom.R)) {
    std::ostringstream why;
    why << "sub-annulus (" << r_lo << ", " << r_hi << ") is not inside (" << geom.rho << ", " << geom.R << ")";
    throw std::invalid_argument(why.str());
  }
  if (grid.n_r == 0 || grid.n_theta == 0 || grid.n_t == 0) throw std::invalid_argument("empty sampling grid");

  ConstraintReport rep;
  rep.strictness_applicable = prm.epsilon < 1.0;
  rep.min_strict_margin = std::numeric_limits<double>::infinity();
  const TurbulentRegion zone = sub.region();

  auto fail = [&rep](double r, double th, double t, double eg, double eb, const char* what) {
    rep.passed = false;
    if (!rep.first_violation) rep.first_violation = ConstraintViolation{r, th, t, eg, eb, what};
  };

  for (std::size_t k = 0; k < grid.n_t; ++k) {
    const double t = grid_point(0.0, geom.T, k, grid.n_t);
    for (std::size_t i = 0; i < grid.n_r; ++i) {
      const double r = grid_point(r_lo, r_hi, i, grid.n_r);
      const double fv = sub.f(r, t);
      const double r4 = r * r * r * r;
      const double eg = sub.egen(r, t);
      const double eb = sub.ebar(r, t);
      const double predicted = (1.0 - prm.epsilon) * (1.0 - r * r * prm.lambda) * (1.0 - fv * fv) / (2.0 * r4);
      const bool inside = zone.contains(r, t);
      for (std::size_t j = 0; j < grid.n_theta; ++j) {
        const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(grid.n_theta);
        ++rep.n_samples;
        const Vec2 v = sub.vbar(to_cartesian({r, th}), t);
        const double kinetic = 0.5 * dot(v, v);
        if (kinetic > eg + kConstraintTolerance) fail(r, th, t, eg, eb, "1/2|vbar|^2 > egen");
        if (prm.epsilon <= 1.0 && eb > 0.5 / r4 + kConstraintTolerance) fail(r, th, t, eg, eb, "ebar > 1/(2r^4)");
        if (inside) {
          ++rep.n_turbulent;
          const double margin = eb - eg;
          rep.min_strict_margin = std::min(rep.min_strict_margin, margin);
          rep.max_margin_formula_error = std::max(rep.max_margin_formula_error, std::abs(margin - predicted));
          if (std::abs(margin - predicted) > kConstraintTolerance)
            fail(r, th, t, eg, eb, "margin differs from (1-eps)(1-r^2 lambda)(1-f^2)/(2r^4)");
          if (rep.strictness_applicable ? !(margin > 0.0) : margin < -kConstraintTolerance)
            fail(r, th, t, eg, eb, rep.strictness_applicable ? "egen >= ebar inside U" : "egen > ebar inside U");
        } else {
          ++rep.n_quiescent;
          rep.max_equality_defect = std::max(rep.max_equality_defect, std::abs(eb - eg));
          if (std::abs(eb - eg) >= kConstraintTolerance) fail(r, th, t, eg, eb, "egen != ebar outside U");
        }
      }
    }
  }
  return rep;
}

}  // namespace rotflow
