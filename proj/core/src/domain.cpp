#include "rotflow/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rotflow {

void AnnulusGeometry::validate() const {
  std::ostringstream why;
  if (!(std::isfinite(rho) && std::isfinite(R) && std::isfinite(r0) && std::isfinite(T)))
    why << "geometry values must be finite";
  else if (!(rho > 0.0))
    why << "inner radius rho=" << rho << " must be positive";
  else if (!(rho < R))
    why << "inner radius rho=" << rho << " must be smaller than R=" << R;
  else if (!(rho < r0 && r0 < R))
    why << "interface radius r0=" << r0 << " must lie in (" << rho << ", " << R << ")";
  else if (!(T > 0.0))
    why << "time horizon T=" << T << " must be positive";
  if (!why.str().empty()) throw std::invalid_argument(why.str());
}

double AnnulusGeometry::area() const { return kPi * (R * R - rho * rho); }

ValidationReport validate_params(const AnnulusGeometry& geom, const SubsolutionParams& params) {
  geom.validate();
  ValidationReport rep;
  rep.lambda_bound =
      std::min({1.0 / (geom.R * geom.R), (geom.r0 - geom.rho) / geom.T, (geom.R - geom.r0) / geom.T});
  const double shrink = 1.0 - geom.rho * geom.rho * params.lambda;
  rep.epsilon_bound = shrink > 0.0 ? 1.0 / shrink : std::numeric_limits<double>::infinity();

  if (!(params.lambda > 0.0))
    rep.violations.push_back({"lambda > 0", params.lambda, 0.0});
  if (!(params.lambda < rep.lambda_bound))
    rep.violations.push_back(
        {"lambda < min{1/R^2, (r0-rho)/T, (R-r0)/T}", params.lambda, rep.lambda_bound});
  if (!(params.epsilon >= 0.0))
    rep.violations.push_back({"epsilon >= 0", params.epsilon, 0.0});
  if (!(params.epsilon < rep.epsilon_bound))
    rep.violations.push_back({"epsilon < 1/(1 - rho^2 lambda)", params.epsilon, rep.epsilon_bound});
  rep.strict_inequality_holds = params.epsilon < 1.0;
  return rep;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

PolarPoint to_polar(Vec2 x) { return {std::hypot(x.x, x.y), normalize_angle(std::atan2(x.y, x.x))}; }

Vec2 to_cartesian(PolarPoint p) { return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)}; }

Vec2 radial_unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
Vec2 azimuthal_unit(double theta) { return {-std::sin(theta), std::cos(theta)}; }

BoundaryFrame boundary_distance(Vec2 x, const AnnulusGeometry& geom) {
  const double r = norm(x);
  if (!(r > 0.0) || r < geom.rho || r > geom.R) {
    std::ostringstream why;
    why << "point at radius " << r << " is outside the annulus [" << geom.rho << ", " << geom.R << "]";
    throw std::domain_error(why.str());
  }
  const Vec2 er = (1.0 / r) * x;
  BoundaryFrame fr;
  const double d_inner = r - geom.rho;
  const double d_outer = geom.R - r;
  if (d_inner <= d_outer) {
    fr.distance = d_inner;
    fr.component = BoundaryComponent::inner;
    fr.nearest = geom.rho * er;
    fr.normal = er;
    fr.curvature = 1.0 / r;
  } else {
    fr.distance = d_outer;
    fr.component = BoundaryComponent::outer;
    fr.nearest = geom.R * er;
    fr.normal = -er;
    fr.curvature = -1.0 / r;
  }
  fr.tangent = {-fr.normal.y, fr.normal.x};
  return fr;
}

CartesianJet to_cartesian_jet(const PolarJet& jet, double r, double theta) {
  const Vec2 er = radial_unit(theta);
  const Vec2 et = azimuthal_unit(theta);
  CartesianJet out;
  out.value = jet.value;
  out.grad = jet.dr * er + (jet.dtheta / r) * et;
  const double h_rr = jet.drr;
  const double h_rt = jet.drtheta / r - jet.dtheta / (r * r);
  const double h_tt = jet.dr / r + jet.dthetatheta / (r * r);
  out.hess = h_rr * outer(er, er) + h_rt * (outer(er, et) + outer(et, er)) + h_tt * outer(et, et);
  return out;
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    carry_ += (sum_ - t) + v;
  else
    carry_ += (v - t) + sum_;
  sum_ = t;
}

}  // namespace rotflow
