#include "rotflow/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rotflow {

double rarefaction_f(double r, double t, double r0, double lambda) {
  const double half_width = lambda * t;
  if (!(half_width > 0.0)) {
    if (r < r0) return -1.0;
    if (r > r0) return 1.0;
    return 0.0;
  }
  if (r <= r0 - half_width) return -1.0;
  if (r >= r0 + half_width) return 1.0;
  return (r - r0) / half_width;
}

double FVState::total() const {
  CompensatedSum s;
  const double h = cell_width();
  for (double a : averages) s.add(a * h);
  return s.value();
}

double godunov_flux(double left, double right, double lambda) {
  const auto q = [lambda](double f) { return 0.5 * lambda * f * f; };
  if (left <= right) {
    if (left > 0.0) return q(left);
    if (right < 0.0) return q(right);
    return 0.0;
  }
  return std::max(q(left), q(right));
}

FVState riemann_initial_state(const AnnulusGeometry& geom, double lambda, std::size_t n_cells) {
  geom.validate();
  if (n_cells < 2) throw std::invalid_argument("need at least two cells");
  FVState s;
  s.lambda = lambda;
  s.edges.resize(n_cells + 1);
  const double h = (geom.R - geom.rho) / static_cast<double>(n_cells);
  for (std::size_t i = 0; i <= n_cells; ++i) s.edges[i] = geom.rho + h * static_cast<double>(i);
  s.edges.back() = geom.R;
  s.averages.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    const double a = s.edges[i];
    const double b = s.edges[i + 1];
    if (b <= geom.r0)
      s.averages[i] = -1.0;
    else if (a >= geom.r0)
      s.averages[i] = 1.0;
    else
      s.averages[i] = ((b - geom.r0) - (geom.r0 - a)) / (b - a);
  }
  return s;
}

double stable_dt(const FVState& state, double cfl) {
  double speed = 0.0;
  for (double a : state.averages) speed = std::max(speed, std::abs(state.lambda * a));
  if (speed == 0.0) return std::numeric_limits<double>::infinity();
  return cfl * state.cell_width() / speed;
}

FVState godunov_step(const FVState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const double h = state.cell_width();
  double speed = 0.0;
  for (double a : state.averages) speed = std::max(speed, std::abs(state.lambda * a));
  const double cfl = speed * dt / h;
  if (cfl > kMaxCfl * (1.0 + 1e-12)) {
    std::ostringstream why;
    why << "CFL number " << cfl << " exceeds " << kMaxCfl << "; split the step";
    throw std::invalid_argument(why.str());
  }

  const std::size_t n = state.size();
  std::vector<double> flux(n + 1);
  // zero-gradient ghosts: boundary flux is q(u_boundary)
  flux[0] = godunov_flux(state.averages.front(), state.averages.front(), state.lambda);
  flux[n] = godunov_flux(state.averages.back(), state.averages.back(), state.lambda);
  for (std::size_t i = 1; i < n; ++i)
    flux[i] = godunov_flux(state.averages[i - 1], state.averages[i], state.lambda);

  FVState next = state;
  const double ratio = dt / h;
  for (std::size_t i = 0; i < n; ++i) next.averages[i] -= ratio * (flux[i + 1] - flux[i]);
  next.time = state.time + dt;
  return next;
}

FVState godunov_advance(FVState state, double t_end, double cfl) {
  while (state.time < t_end) {
    double dt = std::min(stable_dt(state, cfl), t_end - state.time);
    if (t_end - state.time - dt < 1e-14 * std::max(1.0, t_end)) dt = t_end - state.time;
    state = godunov_step(state, dt);
    if (std::abs(state.time - t_end) < 1e-14 * std::max(1.0, t_end)) state.time = t_end;
  }
  return state;
}

RadialProfile godunov_solve(const AnnulusGeometry& geom, double lambda, double t_end, std::size_t n_cells) {
  const FVState s = godunov_advance(riemann_initial_state(geom, lambda, n_cells), t_end);
  RadialProfile p;
  p.t = s.time;
  p.values = s.averages;
  p.grid.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p.grid[i] = s.midpoint(i);
  return p;
}

FvComparison compare_exact_vs_fv(const AnnulusGeometry& geom, double lambda, double t, std::size_t n_cells) {
  const FVState s = godunov_advance(riemann_initial_state(geom, lambda, n_cells), t);
  const double h = s.cell_width();
  const double left_edge = geom.r0 - lambda * t;
  const double right_edge = geom.r0 + lambda * t;
  FvComparison out;
  out.n_cells = n_cells;
  CompensatedSum l1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double mid = s.midpoint(i);
    const double err = std::abs(s.averages[i] - rarefaction_f(mid, t, geom.r0, lambda));
    l1.add(err * h);
    const double gap = std::min(std::abs(mid - left_edge), std::abs(mid - right_edge));
    if (gap > 2.0 * h) out.linf = std::max(out.linf, err);
  }
  out.l1 = l1.value();
  return out;
}

}  // namespace rotflow
