#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rotflow/domain.hpp"
#include "rotflow/linalg.hpp"

namespace rotflow {

/// Smooth transition chi: 0 on [0,1], 1 on [2,inf), quintic smoothstep in between.
struct CutoffChi {
  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;
};

CutoffChi build_chi();

/// Stream function psi(r, theta, t) vanishing on both boundary circles, given by its polar jet.
class StreamFunction {
 public:
  using PolarEvaluator = std::function<PolarJet(double r, double theta, double t)>;

  explicit StreamFunction(PolarEvaluator eval) : eval_(std::move(eval)) {}

  CartesianJet jet(Vec2 x, double t) const;
  double value(Vec2 x, double t) const { return jet(x, t).value; }
  /// w = grad^perp psi = (d_2 psi, -d_1 psi)
  Vec2 velocity(Vec2 x, double t) const;
  /// Jacobian of w, m[i][j] = d_j w_i.
  Mat2 velocity_jacobian(Vec2 x, double t) const;

 private:
  PolarEvaluator eval_;
};

/// sin(pi (r - rho)/(R - rho)) (1 + cos(theta)/2), optionally modulated by (1 + a sin(2 pi t)).
StreamFunction default_stream_function(const AnnulusGeometry& geom, double time_amplitude = 0.0);

/// psi = 0.
StreamFunction zero_stream_function();

/// Synthetic velocity near the boundary, written in the local frame:
/// v = v_nu nu + v_tau tau with v_nu = d^holder_alpha g(theta) and v_tau bounded.
/// The normal profile may differ between the two boundary circles.
struct HolderField {
  double holder_alpha = 0.5;
  double band = 0.25;  ///< width of the collar Gamma_delta the field is meant for
  std::function<double(double)> g_inner;
  std::function<double(double)> g_outer;
  std::function<double(double)> tangential;

  double normal_component(const BoundaryFrame& fr, double theta) const;
  double tangential_component(double theta) const;
  Vec2 velocity(Vec2 x, const AnnulusGeometry& geom) const;
};

/// g_inner = 1 + sin/2, g_outer = 1/2 + cos/4, v_tau = 1 + 0.3 sin + 0.2 cos.
HolderField default_holder_field(double holder_alpha = 0.5);

/// Same tangential profile, v_nu = 0.
HolderField tangential_only_field();

/// d_a W_b := e_b . (DW e_a) in the fixed frame of the nearest boundary point.
struct FrameDerivatives {
  double nn = 0.0;  ///< d_nu W_nu
  double nt = 0.0;  ///< d_nu W_tau
  double tn = 0.0;  ///< d_tau W_nu
  double tt = 0.0;  ///< d_tau W_tau
};

struct FrameComponents {
  double normal = 0.0;
  double tangential = 0.0;
};

/// w_eps = grad^perp(chi(d/eps) psi) on the annulus, and its difference W = w_eps - w.
class CutoffField {
 public:
  /// Throws std::invalid_argument unless 0 < eps and the two collars of width 2 eps are disjoint.
  CutoffField(AnnulusGeometry geom, StreamFunction psi, CutoffChi chi, double eps);

  double eps() const { return eps_; }
  const AnnulusGeometry& geometry() const { return geom_; }
  const StreamFunction& stream() const { return psi_; }

  /// chi grad^perp psi + (chi'/eps) psi grad^perp d
  Vec2 value(Vec2 x, double t) const;
  Vec2 difference(Vec2 x, double t) const;

  /// Jacobian of w_eps from the Cartesian Hessian of chi(d/eps) psi.
  Mat2 jacobian(Vec2 x, double t) const;
  Mat2 difference_jacobian(Vec2 x, double t) const;

  /// W_nu, W_tau projected from the product-rule value.
  FrameComponents components_projected(Vec2 x, double t) const;
  /// W_nu = (chi - 1) w_nu, W_tau = (chi - 1) w_tau - chi' psi / eps.
  FrameComponents components_closed(Vec2 x, double t) const;

  /// Closed-form fixed-frame derivatives of W.
  FrameDerivatives derivatives(Vec2 x, double t) const;

 private:
  AnnulusGeometry geom_;
  StreamFunction psi_;
  CutoffChi chi_;
  double eps_;
};

CutoffField build_w_eps(const AnnulusGeometry& geom, StreamFunction psi, CutoffChi chi, double eps);

/// Tensor Gauss rule on the two collars {d < 2 eps}. On [0, eps] the substitution
/// d = eps u^2 absorbs the d^alpha endpoint behaviour.
struct CollarQuadrature {
  int order = 16;
  int inner_panels = 2;  ///< panels on [0, eps] (in u)
  int outer_panels = 2;  ///< panels on [eps, 2 eps]
  int theta_panels = 16;

  int transition_nodes() const { return order * outer_panels; }
};

struct CollarNode {
  Vec2 x;
  double theta = 0.0;
  double weight = 0.0;  ///< includes the Jacobian r
};

/// Throws std::invalid_argument if the transition band gets fewer than 32 radial nodes.
std::vector<CollarNode> collar_nodes(const AnnulusGeometry& geom, double eps, const CollarQuadrature& quad);

struct ITerms {
  std::array<double, 4> terms{};  ///< I1..I4
  double direct = 0.0;            ///< single quadrature of (v . grad W) . v

  double sum() const { return terms[0] + terms[1] + terms[2] + terms[3]; }
};

ITerms compute_I_terms(const HolderField& v, const CutoffField& w, double t, const CollarQuadrature& quad = {});

/// |w_eps - w| in L^2 of the annulus (only the collars contribute).
double cutoff_l2_distance(const CutoffField& w, double t, const CollarQuadrature& quad = {});

/// Sup-ratio estimates of the constants in |psi| <= C d and |w_nu| <= C d.
struct DistanceConstants {
  double psi = 0.0;
  double w_normal = 0.0;
};

DistanceConstants fit_distance_constants(const StreamFunction& psi, const AnnulusGeometry& geom, double band,
                                         std::span<const double> times, int n_d = 40, int n_theta = 64);

/// sup |v_nu| / d^alpha over a sample of the band.
double holder_constant(const HolderField& v, const AnnulusGeometry& geom, int n_d = 40, int n_theta = 64);

struct ScalingReport {
  double holder_alpha = 0.0;
  std::vector<double> eps;
  std::vector<std::array<double, 4>> values;  ///< max over times of |I_k|
  std::vector<double> decomposition_error;     ///< max over times of |sum I_k - direct|
  std::vector<double> l2_distance;             ///< max over times
  std::array<std::optional<double>, 4> slopes;  ///< empty: I_k identically zero (vacuous bound)
  std::array<double, 4> predicted{};            ///< {2a+1, a, a+1, 1}
  std::optional<double> l2_slope;

  /// Slope k meets predicted - tolerance, or the fit is vacuous.
  bool bound_satisfied(int k, double tolerance = 0.15) const;
  bool all_bounds_satisfied(double tolerance = 0.15) const;
};

std::array<double, 4> predicted_exponents(double holder_alpha);

/// Throws std::invalid_argument unless eps_grid has at least four entries forming a
/// strictly decreasing geometric sequence, each admissible for the geometry.
ScalingReport scaling_study(const HolderField& v, const StreamFunction& psi, const CutoffChi& chi,
                            const AnnulusGeometry& geom, std::span<const double> eps_grid,
                            std::span<const double> times = {}, const CollarQuadrature& quad = {});

}  // namespace rotflow
