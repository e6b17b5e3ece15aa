#include "rotflow/viscosity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rotflow/fit.hpp"
#include "rotflow/subsolution.hpp"
#include "rotflow/tridiagonal.hpp"

namespace rotflow {

std::vector<double> radial_grid(const AnnulusGeometry& geom, std::size_t n_intervals) {
  if (n_intervals < 2) throw std::invalid_argument("radial grid needs at least two intervals");
  std::vector<double> r(n_intervals + 1);
  const double h = (geom.R - geom.rho) / static_cast<double>(n_intervals);
  for (std::size_t i = 0; i <= n_intervals; ++i) r[i] = geom.rho + h * static_cast<double>(i);
  r.back() = geom.R;
  return r;
}

std::vector<double> initial_profile(const AnnulusGeometry& geom, std::span<const double> grid) {
  const double h = grid.size() > 1 ? grid[1] - grid[0] : 1.0;
  std::vector<double> a(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    a[i] = std::abs(grid[i] - geom.r0) < 1e-9 * h ? 0.0 : initial_alpha(grid[i], geom);
  return a;
}

double weighted_l2_norm(std::span<const double> grid, std::span<const double> values) {
  if (grid.size() != values.size()) throw std::invalid_argument("weighted_l2_norm: size mismatch");
  CompensatedSum s;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = grid[i + 1] - grid[i];
    s.add(0.5 * h * (values[i] * values[i] * grid[i] + values[i + 1] * values[i + 1] * grid[i + 1]));
  }
  return std::sqrt(kTwoPi * s.value());
}

namespace {

/// Interior-node operator L a = (1/r)(r a_r)_r - a/r^2 with zero Dirichlet data.
struct RadialOperator {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;
  std::vector<double> r;  ///< interior radii
  std::vector<double> r_edge;  ///< all n edge midpoints r_{i+1/2}, i = 0..n-1
  double h = 0.0;

  RadialOperator(std::span<const double> grid) {
    const std::size_t n = grid.size() - 1;
    h = grid[1] - grid[0];
    const std::size_t m = n - 1;
    lower.resize(m);
    diag.resize(m);
    upper.resize(m);
    r.resize(m);
    r_edge.resize(n);
    for (std::size_t i = 0; i < n; ++i) r_edge[i] = 0.5 * (grid[i] + grid[i + 1]);
    for (std::size_t k = 0; k < m; ++k) {
      const double ri = grid[k + 1];
      const double rm = r_edge[k];
      const double rp = r_edge[k + 1];
      r[k] = ri;
      lower[k] = rm / (ri * h * h);
      upper[k] = rp / (ri * h * h);
      diag[k] = -(rm + rp) / (ri * h * h) - 1.0 / (ri * ri);
    }
  }

  std::size_t size() const { return diag.size(); }

  void apply(std::span<const double> a, std::span<double> out) const {
    const std::size_t m = size();
    for (std::size_t k = 0; k < m; ++k) {
      double v = diag[k] * a[k];
      if (k > 0) v += lower[k] * a[k - 1];
      if (k + 1 < m) v += upper[k] * a[k + 1];
      out[k] = v;
    }
  }

  /// 1/2 sum a^2 r h times 2 pi.
  double half_norm_sq(std::span<const double> a) const {
    CompensatedSum s;
    for (std::size_t k = 0; k < size(); ++k) s.add(a[k] * a[k] * r[k] * h);
    return 0.5 * kTwoPi * s.value();
  }

  /// 2 pi [sum r_{i+1/2} ((a_{i+1} - a_i)/h)^2 h + sum a_i^2 h / r_i], the discrete int |grad v|^2.
  double gradient_energy(std::span<const double> a) const {
    CompensatedSum s;
    const std::size_t m = size();
    for (std::size_t e = 0; e <= m; ++e) {
      const double left = e == 0 ? 0.0 : a[e - 1];
      const double right = e == m ? 0.0 : a[e];
      const double g = (right - left) / h;
      s.add(r_edge[e] * g * g * h);
    }
    for (std::size_t k = 0; k < m; ++k) s.add(a[k] * a[k] * h / r[k]);
    return kTwoPi * s.value();
  }
};

}  // namespace

EvolutionRecord solve_parabolic(const ParabolicProblem& problem, std::span<const double> t_out) {
  const AnnulusGeometry& geom = problem.geom;
  geom.validate();
  if (!(problem.viscosity > 0.0)) {
    std::ostringstream why;
    why << "viscosity must be positive (got " << problem.viscosity << "); study the limit by sweeping";
    throw std::invalid_argument(why.str());
  }
  if (!(problem.dt > 0.0)) throw std::invalid_argument("time step must be positive");
  for (std::size_t k = 0; k < t_out.size(); ++k) {
    if (t_out[k] < 0.0 || t_out[k] > geom.T) throw std::invalid_argument("output time outside [0, T]");
    if (k > 0 && !(t_out[k] > t_out[k - 1])) throw std::invalid_argument("output times must be strictly increasing");
  }

  const std::vector<double> grid = radial_grid(geom, problem.n_intervals);
  std::vector<double> alpha0(grid.size());
  if (problem.initial)
    for (std::size_t i = 0; i < grid.size(); ++i) alpha0[i] = problem.initial(grid[i]);
  else
    alpha0 = initial_profile(geom, grid);

  const RadialOperator op(grid);
  const std::size_t m = op.size();
  std::vector<double> a(alpha0.begin() + 1, alpha0.end() - 1);
  const double nu = problem.viscosity;

  EvolutionRecord rec;
  const double energy0 = op.half_norm_sq(a);
  CompensatedSum dissipated;
  for (double v : alpha0) rec.max_abs_alpha = std::max(rec.max_abs_alpha, std::abs(v));

  auto record = [&](double t, bool initial) {
    RadialProfile p;
    p.t = t;
    p.grid = grid;
    if (initial) {
      p.values = alpha0;
    } else {
      p.values.assign(grid.size(), 0.0);
      std::copy(a.begin(), a.end(), p.values.begin() + 1);
    }
    std::vector<double> diff(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) diff[i] = p.values[i] - alpha0[i];
    rec.distance_to_initial.push_back(weighted_l2_norm(grid, diff));
    rec.kinetic_energy.push_back(initial ? energy0 : op.half_norm_sq(a));
    rec.dissipated.push_back(dissipated.value());
    rec.snapshots.push_back(std::move(p));
  };

  TridiagonalMatrix lhs(m);
  std::vector<double> rhs(m);
  std::vector<double> la(m);
  std::vector<double> mid(m);
  double t = 0.0;
  double assembled_dt = -1.0;
  auto assemble = [&](double dt) {
    for (std::size_t k = 0; k < m; ++k) {
      lhs.lower[k] = -0.5 * dt * nu * op.lower[k];
      lhs.diag[k] = 1.0 - 0.5 * dt * nu * op.diag[k];
      lhs.upper[k] = -0.5 * dt * nu * op.upper[k];
    }
    assembled_dt = dt;
  };

  for (double target : t_out) {
    if (target == 0.0) {
      record(0.0, true);
      continue;
    }
    while (t < target) {
      double dt = std::min(problem.dt, target - t);
      if (target - t - dt < 1e-12 * problem.dt) dt = target - t;
      if (dt != assembled_dt) assemble(dt);
      op.apply(a, la);
      for (std::size_t k = 0; k < m; ++k) rhs[k] = a[k] + 0.5 * dt * nu * la[k];
      if (problem.source)
        for (std::size_t k = 0; k < m; ++k)
          rhs[k] += 0.5 * dt * (problem.source(op.r[k], t) + problem.source(op.r[k], t + dt));
      std::vector<double> next = solve_tridiagonal(lhs, rhs);
      for (std::size_t k = 0; k < m; ++k) mid[k] = 0.5 * (a[k] + next[k]);
      dissipated.add(dt * nu * op.gradient_energy(mid));
      a = std::move(next);
      for (double v : a) rec.max_abs_alpha = std::max(rec.max_abs_alpha, std::abs(v));
      t = (target - (t + dt) < 1e-12 * problem.dt) ? target : t + dt;
    }
    record(t, false);
  }
  return rec;
}

ViscosityStudy vanishing_viscosity_study(const AnnulusGeometry& geom, std::span<const double> nu_list, double t_probe,
                                         std::size_t n_intervals, double dt) {
  if (nu_list.size() < 3) throw std::invalid_argument("viscosity sweep needs at least three values");
  for (std::size_t k = 0; k < nu_list.size(); ++k) {
    if (!(nu_list[k] > 0.0)) throw std::invalid_argument("viscosities must be positive");
    if (k > 0 && !(nu_list[k] < nu_list[k - 1]))
      throw std::invalid_argument("viscosity list must be strictly decreasing");
  }
  ViscosityStudy study;
  study.t_probe = t_probe;
  std::vector<double> nus;
  std::vector<double> dists;
  for (double nu : nu_list) {
    ParabolicProblem p;
    p.geom = geom;
    p.viscosity = nu;
    p.n_intervals = n_intervals;
    p.dt = dt;
    const double times[] = {t_probe};
    const EvolutionRecord rec = solve_parabolic(p, times);
    study.rows.push_back({nu, rec.distance_to_initial.back()});
    nus.push_back(nu);
    dists.push_back(rec.distance_to_initial.back());
  }
  study.slope = loglog_slope(nus, dists);
  study.strictly_decreasing = true;
  for (std::size_t k = 1; k < dists.size(); ++k)
    if (!(dists[k] < dists[k - 1])) study.strictly_decreasing = false;
  return study;
}

LiftedField::LiftedField(RadialProfile profile) : profile_(std::move(profile)) {
  const auto& g = profile_.grid;
  const auto& v = profile_.values;
  if (g.size() < 2 || g.size() != v.size()) throw std::invalid_argument("lift_to_2d: malformed profile");
  pressure_.assign(g.size(), 0.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double left = v[i - 1] * v[i - 1] / g[i - 1];
    const double right = v[i] * v[i] / g[i];
    pressure_[i] = pressure_[i - 1] + 0.5 * (g[i] - g[i - 1]) * (left + right);
  }
}

double LiftedField::alpha(double r) const {
  const auto& g = profile_.grid;
  if (r <= g.front()) return profile_.values.front();
  if (r >= g.back()) return profile_.values.back();
  const auto it = std::upper_bound(g.begin(), g.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - g.begin()) - 1;
  const double w = (r - g[i]) / (g[i + 1] - g[i]);
  return (1.0 - w) * profile_.values[i] + w * profile_.values[i + 1];
}

Vec2 LiftedField::velocity(Vec2 x) const {
  const double r = norm(x);
  // alpha (sin, -cos) = alpha * x^perp / r
  return (alpha(r) / r) * perp(x);
}

double LiftedField::pressure(double r) const {
  const auto& g = profile_.grid;
  if (r <= g.front()) return 0.0;
  if (r >= g.back()) return pressure_.back();
  const auto it = std::upper_bound(g.begin(), g.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - g.begin()) - 1;
  const double a_i = profile_.values[i];
  const double left = a_i * a_i / g[i];
  const double ar = alpha(r);
  return pressure_[i] + 0.5 * (r - g[i]) * (left + ar * ar / r);
}

LiftedField lift_to_2d(const RadialProfile& profile) { return LiftedField(profile); }

}  // namespace rotflow
