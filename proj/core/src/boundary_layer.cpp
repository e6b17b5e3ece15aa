#include "rotflow/boundary_layer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rotflow/fit.hpp"
#include "rotflow/quadrature.hpp"

namespace rotflow {

namespace {

double unit_clamp(double s) { return std::clamp(s - 1.0, 0.0, 1.0); }

/// Jacobian of grad^perp phi from the Hessian of phi.
Mat2 perp_gradient_jacobian(const Mat2& h) { return {{{{h(1, 0), h(1, 1)}, {-h(0, 0), -h(0, 1)}}}}; }

double frame_derivative(const Mat2& jac, Vec2 along, Vec2 component) { return dot(component, jac * along); }

}  // namespace

double CutoffChi::value(double s) const {
  const double t = unit_clamp(s);
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double CutoffChi::d1(double s) const {
  const double t = unit_clamp(s);
  return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

double CutoffChi::d2(double s) const {
  const double t = unit_clamp(s);
  return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}

CutoffChi build_chi() { return {}; }

CartesianJet StreamFunction::jet(Vec2 x, double t) const {
  const PolarPoint p = to_polar(x);
  return to_cartesian_jet(eval_(p.r, p.theta, t), p.r, p.theta);
}

Vec2 StreamFunction::velocity(Vec2 x, double t) const { return perp(jet(x, t).grad); }

Mat2 StreamFunction::velocity_jacobian(Vec2 x, double t) const { return perp_gradient_jacobian(jet(x, t).hess); }

StreamFunction default_stream_function(const AnnulusGeometry& geom, double time_amplitude) {
  geom.validate();
  const double rho = geom.rho;
  const double k = kPi / (geom.R - geom.rho);
  return StreamFunction([=](double r, double theta, double t) {
    const double m = 1.0 + time_amplitude * std::sin(kTwoPi * t);
    const double s = std::sin(k * (r - rho));
    const double c = std::cos(k * (r - rho));
    const double a = m * (1.0 + 0.5 * std::cos(theta));
    const double a1 = -0.5 * m * std::sin(theta);
    const double a2 = -0.5 * m * std::cos(theta);
    PolarJet j;
    j.value = s * a;
    j.dr = k * c * a;
    j.drr = -k * k * s * a;
    j.dtheta = s * a1;
    j.drtheta = k * c * a1;
    j.dthetatheta = s * a2;
    return j;
  });
}

StreamFunction zero_stream_function() {
  return StreamFunction([](double, double, double) { return PolarJet{}; });
}

double HolderField::normal_component(const BoundaryFrame& fr, double theta) const {
  const auto& g = fr.component == BoundaryComponent::inner ? g_inner : g_outer;
  if (!g) return 0.0;
  return std::pow(fr.distance, holder_alpha) * g(theta);
}

double HolderField::tangential_component(double theta) const { return tangential ? tangential(theta) : 0.0; }

Vec2 HolderField::velocity(Vec2 x, const AnnulusGeometry& geom) const {
  const BoundaryFrame fr = boundary_distance(x, geom);
  const double theta = to_polar(x).theta;
  return normal_component(fr, theta) * fr.normal + tangential_component(theta) * fr.tangent;
}

HolderField default_holder_field(double holder_alpha) {
  if (!(holder_alpha > 0.0 && holder_alpha <= 1.0)) throw std::invalid_argument("holder exponent must lie in (0, 1]");
  HolderField v;
  v.holder_alpha = holder_alpha;
  v.g_inner = [](double th) { return 1.0 + 0.5 * std::sin(th); };
  v.g_outer = [](double th) { return 0.5 + 0.25 * std::cos(th); };
  v.tangential = [](double th) { return 1.0 + 0.3 * std::sin(th) + 0.2 * std::cos(th); };
  return v;
}

HolderField tangential_only_field() {
  HolderField v = default_holder_field();
  v.g_inner = nullptr;
  v.g_outer = nullptr;
  return v;
}

CutoffField::CutoffField(AnnulusGeometry geom, StreamFunction psi, CutoffChi chi, double eps)
    : geom_(geom), psi_(std::move(psi)), chi_(chi), eps_(eps) {
  geom_.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("cutoff width must be positive");
  if (!(4.0 * eps < geom_.R - geom_.rho)) {
    std::ostringstream why;
    why << "cutoff width " << eps << " too large: the collars of width 2 eps overlap (need eps < "
        << 0.25 * (geom_.R - geom_.rho) << ")";
    throw std::invalid_argument(why.str());
  }
}

Vec2 CutoffField::value(Vec2 x, double t) const {
  const BoundaryFrame fr = boundary_distance(x, geom_);
  const double s = fr.distance / eps_;
  const CartesianJet j = psi_.jet(x, t);
  return chi_.value(s) * perp(j.grad) + (chi_.d1(s) / eps_ * j.value) * perp(fr.normal);
}

Vec2 CutoffField::difference(Vec2 x, double t) const { return value(x, t) - psi_.velocity(x, t); }

Mat2 CutoffField::jacobian(Vec2 x, double t) const {
  const BoundaryFrame fr = boundary_distance(x, geom_);
  const double s = fr.distance / eps_;
  const double c0 = chi_.value(s);
  const double c1 = chi_.d1(s) / eps_;
  const double c2 = chi_.d2(s) / (eps_ * eps_);
  const CartesianJet j = psi_.jet(x, t);
  const Vec2 nu = fr.normal;
  const Mat2 hess = c0 * j.hess + c1 * (outer(nu, j.grad) + outer(j.grad, nu)) + (c2 * j.value) * outer(nu, nu) +
                    (c1 * j.value * fr.curvature) * outer(fr.tangent, fr.tangent);
  return perp_gradient_jacobian(hess);
}

Mat2 CutoffField::difference_jacobian(Vec2 x, double t) const {
  return jacobian(x, t) - psi_.velocity_jacobian(x, t);
}

FrameComponents CutoffField::components_projected(Vec2 x, double t) const {
  const BoundaryFrame fr = boundary_distance(x, geom_);
  const Vec2 d = difference(x, t);
  return {dot(d, fr.normal), dot(d, fr.tangent)};
}

FrameComponents CutoffField::components_closed(Vec2 x, double t) const {
  const BoundaryFrame fr = boundary_distance(x, geom_);
  const double s = fr.distance / eps_;
  const Vec2 w = psi_.velocity(x, t);
  const double c = chi_.value(s) - 1.0;
  return {c * dot(w, fr.normal), c * dot(w, fr.tangent) - chi_.d1(s) / eps_ * psi_.value(x, t)};
}

FrameDerivatives CutoffField::derivatives(Vec2 x, double t) const {
  const BoundaryFrame fr = boundary_distance(x, geom_);
  const double s = fr.distance / eps_;
  const double c = chi_.value(s) - 1.0;
  const double c1 = chi_.d1(s) / eps_;
  const double c2 = chi_.d2(s) / (eps_ * eps_);
  const CartesianJet j = psi_.jet(x, t);
  const Vec2 w = perp(j.grad);
  const Mat2 dw = perp_gradient_jacobian(j.hess);
  const Vec2 nu = fr.normal;
  const Vec2 tau = fr.tangent;
  const double w_nu = dot(w, nu);
  const double w_tau = dot(w, tau);

  FrameDerivatives out;
  out.nn = c1 * w_nu + c * frame_derivative(dw, nu, nu);
  out.nt = 2.0 * c1 * w_tau + c * frame_derivative(dw, nu, tau) - c2 * j.value;
  out.tn = c * frame_derivative(dw, tau, nu) + fr.curvature * c1 * j.value;
  out.tt = c * frame_derivative(dw, tau, tau) - c1 * w_nu;
  return out;
}

CutoffField build_w_eps(const AnnulusGeometry& geom, StreamFunction psi, CutoffChi chi, double eps) {
  return CutoffField(geom, std::move(psi), chi, eps);
}

std::vector<CollarNode> collar_nodes(const AnnulusGeometry& geom, double eps, const CollarQuadrature& quad) {
  if (quad.transition_nodes() < 32) {
    std::ostringstream why;
    why << "collar quadrature puts only " << quad.transition_nodes()
        << " radial nodes in the transition band; at least 32 are needed";
    throw std::invalid_argument(why.str());
  }
  if (quad.inner_panels < 1 || quad.theta_panels < 1) throw std::invalid_argument("panel counts must be positive");

  std::vector<Node1D> dn;
  const double u_breaks[] = {0.0, 1.0};
  for (const Node1D& n : composite_gauss(u_breaks, quad.inner_panels, quad.order))
    dn.push_back({eps * n.x * n.x, 2.0 * eps * n.x * n.w});
  const double d_breaks[] = {eps, 2.0 * eps};
  for (const Node1D& n : composite_gauss(d_breaks, quad.outer_panels, quad.order)) dn.push_back(n);

  const double th_breaks[] = {0.0, kTwoPi};
  const std::vector<Node1D> tn = composite_gauss(th_breaks, quad.theta_panels, quad.order);

  std::vector<CollarNode> out;
  out.reserve(2 * dn.size() * tn.size());
  for (int side = 0; side < 2; ++side) {
    for (const Node1D& d : dn) {
      const double r = side == 0 ? geom.rho + d.x : geom.R - d.x;
      for (const Node1D& th : tn) out.push_back({to_cartesian({r, th.x}), th.x, d.w * th.w * r});
    }
  }
  return out;
}

ITerms compute_I_terms(const HolderField& v, const CutoffField& w, double t, const CollarQuadrature& quad) {
  const AnnulusGeometry& geom = w.geometry();
  std::array<CompensatedSum, 4> acc;
  CompensatedSum direct;
  for (const CollarNode& n : collar_nodes(geom, w.eps(), quad)) {
    const BoundaryFrame fr = boundary_distance(n.x, geom);
    const double vn = v.normal_component(fr, n.theta);
    const double vt = v.tangential_component(n.theta);
    const FrameDerivatives dW = w.derivatives(n.x, t);
    acc[0].add(n.weight * vn * dW.nn * vn);
    acc[1].add(n.weight * vn * dW.nt * vt);
    acc[2].add(n.weight * vt * dW.tn * vn);
    acc[3].add(n.weight * vt * dW.tt * vt);
    const Vec2 vel = vn * fr.normal + vt * fr.tangent;
    direct.add(n.weight * dot(vel, w.difference_jacobian(n.x, t) * vel));
  }
  ITerms out;
  for (int k = 0; k < 4; ++k) out.terms[k] = acc[k].value();
  out.direct = direct.value();
  return out;
}

double cutoff_l2_distance(const CutoffField& w, double t, const CollarQuadrature& quad) {
  CompensatedSum acc;
  for (const CollarNode& n : collar_nodes(w.geometry(), w.eps(), quad)) {
    const Vec2 d = w.difference(n.x, t);
    acc.add(n.weight * dot(d, d));
  }
  return std::sqrt(acc.value());
}

DistanceConstants fit_distance_constants(const StreamFunction& psi, const AnnulusGeometry& geom, double band,
                                         std::span<const double> times, int n_d, int n_theta) {
  geom.validate();
  if (!(band > 0.0) || band > 0.5 * (geom.R - geom.rho)) throw std::invalid_argument("band must lie in (0, (R-rho)/2]");
  if (n_d < 1 || n_theta < 1) throw std::invalid_argument("sample counts must be positive");
  const double default_times[] = {0.0};
  if (times.empty()) times = default_times;
  DistanceConstants c;
  for (double t : times)
    for (int side = 0; side < 2; ++side)
      for (int i = 1; i <= n_d; ++i) {
        const double d = band * i / n_d;
        const double r = side == 0 ? geom.rho + d : geom.R - d;
        for (int k = 0; k < n_theta; ++k) {
          const Vec2 x = to_cartesian({r, kTwoPi * k / n_theta});
          const BoundaryFrame fr = boundary_distance(x, geom);
          const CartesianJet j = psi.jet(x, t);
          c.psi = std::max(c.psi, std::abs(j.value) / fr.distance);
          c.w_normal = std::max(c.w_normal, std::abs(dot(perp(j.grad), fr.normal)) / fr.distance);
        }
      }
  return c;
}

double holder_constant(const HolderField& v, const AnnulusGeometry& geom, int n_d, int n_theta) {
  geom.validate();
  const double band = std::min(v.band, 0.5 * (geom.R - geom.rho));
  double c = 0.0;
  for (int side = 0; side < 2; ++side)
    for (int i = 1; i <= n_d; ++i) {
      const double d = band * i / n_d;
      const double r = side == 0 ? geom.rho + d : geom.R - d;
      for (int k = 0; k < n_theta; ++k) {
        const double th = kTwoPi * k / n_theta;
        const BoundaryFrame fr = boundary_distance(to_cartesian({r, th}), geom);
        c = std::max(c, std::abs(v.normal_component(fr, th)) / std::pow(fr.distance, v.holder_alpha));
      }
    }
  return c;
}

std::array<double, 4> predicted_exponents(double a) { return {2.0 * a + 1.0, a, a + 1.0, 1.0}; }

bool ScalingReport::bound_satisfied(int k, double tolerance) const {
  const auto& s = slopes.at(static_cast<std::size_t>(k));
  return !s || *s >= predicted[static_cast<std::size_t>(k)] - tolerance;
}

bool ScalingReport::all_bounds_satisfied(double tolerance) const {
  for (int k = 0; k < 4; ++k)
    if (!bound_satisfied(k, tolerance)) return false;
  return true;
}

ScalingReport scaling_study(const HolderField& v, const StreamFunction& psi, const CutoffChi& chi,
                            const AnnulusGeometry& geom, std::span<const double> eps_grid,
                            std::span<const double> times, const CollarQuadrature& quad) {
  if (eps_grid.size() < 4) throw std::invalid_argument("a scaling study needs at least four cutoff widths");
  const double ratio = eps_grid[1] / eps_grid[0];
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("cutoff widths must be strictly decreasing");
  for (std::size_t k = 1; k < eps_grid.size(); ++k) {
    const double q = eps_grid[k] / eps_grid[k - 1];
    if (std::abs(q - ratio) > 1e-9 * ratio) throw std::invalid_argument("cutoff widths must form a geometric sequence");
  }
  const double default_times[] = {0.0};
  if (times.empty()) times = default_times;

  ScalingReport rep;
  rep.holder_alpha = v.holder_alpha;
  rep.predicted = predicted_exponents(v.holder_alpha);
  for (double eps : eps_grid) {
    const CutoffField w(geom, psi, chi, eps);
    std::array<double, 4> worst{};
    double decomposition = 0.0;
    double l2 = 0.0;
    for (double t : times) {
      const ITerms it = compute_I_terms(v, w, t, quad);
      for (int k = 0; k < 4; ++k) worst[k] = std::max(worst[k], std::abs(it.terms[k]));
      decomposition = std::max(decomposition, std::abs(it.sum() - it.direct));
      l2 = std::max(l2, cutoff_l2_distance(w, t, quad));
    }
    rep.eps.push_back(eps);
    rep.values.push_back(worst);
    rep.decomposition_error.push_back(decomposition);
    rep.l2_distance.push_back(l2);
  }
  for (int k = 0; k < 4; ++k) {
    std::vector<double> y;
    for (const auto& row : rep.values) y.push_back(row[k]);
    rep.slopes[k] = loglog_slope(rep.eps, y);
  }
  rep.l2_slope = loglog_slope(rep.eps, rep.l2_distance);
  return rep;
}

}  // namespace rotflow
