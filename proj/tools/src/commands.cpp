#include "rotflow/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "rotflow/boundary_layer.hpp"
#include "rotflow/burgers.hpp"
#include "rotflow/cli/csv.hpp"
#include "rotflow/fit.hpp"
#include "rotflow/subsolution.hpp"
#include "rotflow/test_fields.hpp"
#include "rotflow/viscosity.hpp"
#include "rotflow/weakform.hpp"

#ifndef ROTFLOW_VERSION
#define ROTFLOW_VERSION "0.0.0"
#endif

namespace rotflow::cli {

namespace {

using nlohmann::json;

/// Named pass/fail checks collected by a command; any failure means exit 1.
class Checks {
 public:
  void add(const std::string& name, bool passed, json detail = json::object()) {
    json entry = std::move(detail);
    entry["passed"] = passed;
    list_[name] = entry;
    if (!passed) ok_ = false;
  }
  bool ok() const { return ok_; }
  const json& to_json() const { return list_; }

 private:
  json list_ = json::object();
  bool ok_ = true;
};

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
  if (n <= 1) return lo;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

json validation_json(const ValidationReport& rep) {
  json v = json::array();
  for (const auto& b : rep.violations) v.push_back({{"bound", b.name}, {"value", b.value}, {"limit", b.bound}});
  json out{{"ok", rep.ok()},
           {"lambda_bound", rep.lambda_bound},
           {"epsilon_bound", std::isfinite(rep.epsilon_bound) ? json(rep.epsilon_bound) : json(nullptr)},
           {"strict_inequality", rep.strict_inequality_holds},
           {"violations", v}};
  json warnings = json::array();
  if (!rep.strict_inequality_holds)
    warnings.push_back("epsilon >= 1: the constraint holds only with equality allowed inside U");
  out["warnings"] = warnings;
  return out;
}

/// Parameter validation every run starts with; returns false (and fills the result) when bounds fail.
bool require_valid_params(const RunConfig& cfg, CommandResult& res) {
  const ValidationReport rep = validate_params(cfg.geometry, cfg.params);
  if (rep.ok()) return true;
  res.exit_code = kExitCheckFailed;
  res.report["validation"] = validation_json(rep);
  return false;
}

std::filesystem::path out_file(const RunConfig& cfg, CommandResult& res, const std::string& name) {
  std::filesystem::create_directories(cfg.output_dir);
  auto p = cfg.output_dir / name;
  res.files.push_back(p);
  return p;
}

void finish(CommandResult& res, const Checks& checks) {
  res.report["checks"] = checks.to_json();
  if (!checks.ok()) res.exit_code = kExitCheckFailed;
}

std::vector<std::size_t> cell_counts(const std::vector<double>& cells) {
  std::vector<std::size_t> out;
  for (double c : cells) {
    if (!(c >= 2.0) || c != std::floor(c)) throw ConfigError("burgers.cells entries must be integers >= 2");
    out.push_back(static_cast<std::size_t>(c));
  }
  return out;
}

}  // namespace

std::string tool_version() { return ROTFLOW_VERSION; }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "subsolution", "energy",  "burgers",
                                              "residual", "viscosity",   "boundary"};
  return names;
}

CommandResult cmd_validate(const RunConfig& cfg) {
  CommandResult res;
  const ValidationReport rep = validate_params(cfg.geometry, cfg.params);
  res.report["validation"] = validation_json(rep);
  res.exit_code = rep.ok() ? kExitPass : kExitCheckFailed;
  return res;
}

CommandResult cmd_subsolution(const RunConfig& cfg) {
  CommandResult res;
  if (!require_valid_params(cfg, res)) return res;
  if (cfg.n_r == 0 || cfg.n_theta == 0 || cfg.n_t == 0) throw ConfigError("grid.n_r, grid.n_theta, grid.n_t must be positive");
  const RotationalSubsolution sub(cfg.geometry, cfg.params);
  const AnnulusGeometry& g = cfg.geometry;
  const TurbulentRegion zone = sub.region();

  CsvWriter csv(out_file(cfg, res, "subsolution.csv"),
                {"r", "theta", "t", "f", "alpha", "beta", "gamma", "qbar", "vbar_x", "vbar_y", "u11", "u12", "egen",
                 "ebar", "in_U"});
  std::size_t rows_ok = 0;
  std::size_t rows_t0_in_u = 0;
  for (std::size_t k = 0; k < cfg.n_t; ++k) {
    const double t = grid_point(0.0, g.T, k, cfg.n_t);
    for (std::size_t i = 0; i < cfg.n_r; ++i) {
      const double r = grid_point(g.rho, g.R, i, cfg.n_r);
      const RadialComponents rc = sub.radial(r, t);
      const double eg = sub.egen(r, t);
      const double eb = sub.ebar(r, t);
      const bool in_u = zone.contains(r, t);
      for (std::size_t j = 0; j < cfg.n_theta; ++j) {
        const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(cfg.n_theta);
        const Vec2 x = to_cartesian({r, th});
        const Vec2 v = sub.vbar(x, t);
        const Mat2 u = sub.ubar(x, t);
        csv.cell(r).cell(th).cell(t).cell(rc.f).cell(rc.alpha).cell(rc.beta).cell(rc.gamma).cell(rc.qbar);
        csv.cell(v.x).cell(v.y).cell(u(0, 0)).cell(u(0, 1)).cell(eg).cell(eb).cell(in_u);
        csv.end_row();
        if (eg <= eb + kConstraintTolerance) ++rows_ok;
        if (t == 0.0 && in_u) ++rows_t0_in_u;
      }
    }
  }

  const ConstraintReport rep = check_constraint_structure(sub, {cfg.n_r, cfg.n_theta, cfg.n_t, {}, {}});
  json constraint{{"n_samples", rep.n_samples},
                  {"n_turbulent", rep.n_turbulent},
                  {"n_quiescent", rep.n_quiescent},
                  {"min_strict_margin", std::isfinite(rep.min_strict_margin) ? json(rep.min_strict_margin) : json(nullptr)},
                  {"max_margin_formula_error", rep.max_margin_formula_error},
                  {"max_equality_defect", rep.max_equality_defect},
                  {"strictness_applicable", rep.strictness_applicable},
                  {"passed", rep.passed}};
  if (rep.first_violation) {
    const auto& v = *rep.first_violation;
    constraint["first_violation"] = {{"r", v.r}, {"theta", v.theta}, {"t", v.t}, {"egen", v.egen}, {"ebar", v.ebar},
                                     {"what", v.what}};
  }
  res.report["constraint"] = constraint;
  res.report["rows"] = csv.rows();

  Checks checks;
  checks.add("constraint_structure", rep.passed);
  checks.add("egen_le_ebar_all_rows", rows_ok == csv.rows(), {{"rows_ok", rows_ok}});
  checks.add("t0_outside_U", rows_t0_in_u == 0);
  finish(res, checks);
  return res;
}

CommandResult cmd_energy(const RunConfig& cfg) {
  CommandResult res;
  if (!require_valid_params(cfg, res)) return res;
  if (cfg.energy_samples < 2) throw ConfigError("energy.n_times must be at least 2");
  const AnnulusGeometry& g = cfg.geometry;
  QuadSpec spec = kDefaultWeakSpec;
  spec.order = cfg.quad_order;
  const double e0 = initial_energy_exact(g);
  const double e0_quad = initial_energy_quadrature(g, spec);

  std::vector<double> epsilons{cfg.params.epsilon};
  for (double e : cfg.epsilon_list)
    if (std::find(epsilons.begin(), epsilons.end(), e) == epsilons.end()) epsilons.push_back(e);

  Checks checks;
  checks.add("initial_energy_quadrature", std::abs(e0_quad - e0) <= 1e-10 * e0,
             {{"E0", e0}, {"quadrature", e0_quad}});

  CsvWriter main_csv(out_file(cfg, res, "energy.csv"), {"t", "energy_total", "E0", "deficit"});
  CsvWriter sweep_csv(out_file(cfg, res, "energy_sweep.csv"), {"epsilon", "t", "energy_total", "E0", "deficit"});
  json runs = json::array();
  for (std::size_t idx = 0; idx < epsilons.size(); ++idx) {
    SubsolutionParams p = cfg.params;
    p.epsilon = epsilons[idx];
    const ValidationReport vr = validate_params(g, p);
    if (!vr.ok()) {
      checks.add("sweep_epsilon_valid_" + std::to_string(idx), false, {{"epsilon", p.epsilon}});
      continue;
    }
    const RotationalSubsolution sub(g, p);
    std::vector<double> energies;
    double max_deficit = 0.0;
    for (std::size_t k = 0; k < cfg.energy_samples; ++k) {
      const double t = grid_point(0.0, g.T, k, cfg.energy_samples);
      const double e = energy_total(sub, t, spec);
      energies.push_back(e);
      max_deficit = std::max(max_deficit, std::abs(e0 - e));
      if (idx == 0) main_csv.cell(t).cell(e).cell(e0).cell(e0 - e).end_row();
      sweep_csv.cell(p.epsilon).cell(t).cell(e).cell(e0).cell(e0 - e).end_row();
    }
    std::size_t decreases = 0;
    for (std::size_t k = 1; k < energies.size(); ++k)
      if (energies[k] < energies[k - 1]) ++decreases;
    runs.push_back({{"epsilon", p.epsilon}, {"max_abs_deficit", max_deficit}, {"strict_decreases", decreases}});
    const std::string tag = "epsilon=" + format_double(p.epsilon);
    if (p.epsilon == 0.0)
      checks.add("conserved " + tag, max_deficit < 1e-10 * e0, {{"max_abs_deficit", max_deficit}});
    else
      checks.add("strictly_decreasing " + tag, decreases + 1 == energies.size(), {{"strict_decreases", decreases}});
  }
  res.report["E0"] = e0;
  res.report["E0_quadrature"] = e0_quad;
  res.report["runs"] = runs;
  finish(res, checks);
  return res;
}

CommandResult cmd_burgers(const RunConfig& cfg) {
  CommandResult res;
  if (!require_valid_params(cfg, res)) return res;
  const std::vector<std::size_t> cells = cell_counts(cfg.burgers_cells);
  if (cells.size() < 2) throw ConfigError("burgers.cells needs at least two meshes");
  const AnnulusGeometry& g = cfg.geometry;
  const double lambda = cfg.params.lambda;
  const double t = cfg.burgers_time;
  if (!(t > 0.0 && t <= g.T)) throw ConfigError("burgers.t must lie in (0, T]");

  Checks checks;
  CsvWriter csv(out_file(cfg, res, "burgers.csv"), {"n_cells", "h", "l1", "linf", "ratio", "order", "min", "max"});
  json rows = json::array();
  double prev = 0.0;
  bool ratios_ok = true;
  bool bounded = true;
  RadialProfile finest;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const FvComparison cmp = compare_exact_vs_fv(g, lambda, t, cells[k]);
    const RadialProfile prof = godunov_solve(g, lambda, t, cells[k]);
    const auto [lo, hi] = std::minmax_element(prof.values.begin(), prof.values.end());
    bounded = bounded && *lo >= -1.0 && *hi <= 1.0;
    const double h = (g.R - g.rho) / static_cast<double>(cells[k]);
    csv.cell(cells[k]).cell(h).cell(cmp.l1).cell(cmp.linf);
    json row{{"n_cells", cells[k]}, {"l1", cmp.l1}, {"linf", cmp.linf}, {"min", *lo}, {"max", *hi}};
    if (k == 0) {
      csv.cell(std::string_view{}).cell(std::string_view{});
    } else {
      const double ratio = prev / cmp.l1;
      const double nratio = static_cast<double>(cells[k]) / static_cast<double>(cells[k - 1]);
      csv.cell(ratio).cell(std::log(ratio) / std::log(nratio));
      row["ratio"] = ratio;
      if (!(ratio >= 1.7 && ratio <= 2.3) || nratio != 2.0) ratios_ok = false;
    }
    csv.cell(*lo).cell(*hi).end_row();
    rows.push_back(row);
    prev = cmp.l1;
    if (k + 1 == cells.size()) finest = prof;
  }
  CsvWriter prof_csv(out_file(cfg, res, "burgers_profile.csv"), {"r", "f_godunov", "f_exact"});
  for (std::size_t i = 0; i < finest.grid.size(); ++i)
    prof_csv.cell(finest.grid[i]).cell(finest.values[i]).cell(rarefaction_f(finest.grid[i], t, g.r0, lambda)).end_row();

  res.report["t"] = t;
  res.report["rows"] = rows;
  checks.add("l1_ratio_in_[1.7,2.3]_per_doubling", ratios_ok);
  checks.add("values_in_[-1,1]", bounded);
  finish(res, checks);
  return res;
}

CommandResult cmd_residual(const RunConfig& cfg) {
  CommandResult res;
  if (!require_valid_params(cfg, res)) return res;
  const AnnulusGeometry& g = cfg.geometry;
  const RotationalSubsolution sub(g, cfg.params);
  const double lambda = cfg.params.lambda;
  Checks checks;

  // weak form under quadrature refinement, from a deliberately coarse base rule
  const QuadSpec base{4, 2, 8, 4};
  const auto fields = vector_test_library(g, lambda);
  CsvWriter weak(out_file(cfg, res, "residual_weak.csv"), {"field", "level", "residual", "order"});
  json weak_json = json::array();
  bool weak_ok = true;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const ResidualReport rep = linear_system_refinement(sub, fields[f], base, 3);
    for (std::size_t l = 0; l < rep.residuals.size(); ++l) {
      weak.cell(f + 1).cell(l).cell(rep.residuals[l]);
      if (l == 0)
        weak.cell(std::string_view{});
      else if (rep.orders[l - 1])
        weak.cell(*rep.orders[l - 1]);
      else
        weak.cell(std::string_view{"roundoff"});
      weak.end_row();
    }
    bool field_ok = true;
    for (std::size_t l = 0; l < rep.orders.size(); ++l) {
      const bool decreased = std::abs(rep.residuals[l + 1]) < std::abs(rep.residuals[l]);
      if (rep.orders[l] ? (*rep.orders[l] < 2.0 || !decreased) : !rep.at_roundoff(1e-12)) field_ok = false;
    }
    weak_ok = weak_ok && field_ok;
    json orders = json::array();
    for (const auto& o : rep.orders) orders.push_back(optional_json(o));
    weak_json.push_back({{"field", f + 1}, {"residuals", rep.residuals}, {"orders", orders}, {"passed", field_ok}});
  }
  checks.add("weak_residual_order_ge_2", weak_ok);

  // divergence of vbar against scalar test fields
  QuadSpec div_spec = kDefaultWeakSpec;
  div_spec.order = cfg.quad_order;
  CsvWriter div(out_file(cfg, res, "residual_divergence.csv"), {"field", "t", "residual"});
  double div_max = 0.0;
  const auto scalars = scalar_test_library(g);
  for (double t : {0.0, 0.5 * g.T, g.T}) {
    const auto breaks = fan_breaks(g, lambda, t);
    const VelocityField v = [&sub, t](Vec2 x) { return sub.vbar(x, t); };
    for (std::size_t f = 0; f < scalars.size(); ++f) {
      const double r = weak_residual_divergence(v, scalars[f], g, breaks, div_spec);
      div.cell(f + 1).cell(t).cell(r).end_row();
      div_max = std::max(div_max, std::abs(r));
    }
  }
  checks.add("divergence_residual_lt_1e-10", div_max < 1e-10, {{"max_abs", div_max}});

  // reduced radial system by centred differences at random points
  std::vector<double> hs = cfg.residual_steps;
  if (hs.size() < 2) throw ConfigError("residual.h needs at least two step sizes");
  const double h_max = *std::max_element(hs.begin(), hs.end());
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ur(g.rho + 4.0 * h_max, g.R - 4.0 * h_max);
  std::uniform_real_distribution<double> ut(4.0 * h_max + 0.02 * g.T, g.T - 4.0 * h_max);
  std::vector<std::pair<double, double>> pts;
  std::size_t attempts = 0;
  while (pts.size() < cfg.residual_points) {
    if (++attempts > 1000 * (cfg.residual_points + 1)) throw std::runtime_error("could not place sample points away from the fan edges");
    const double r = ur(rng);
    const double t = ut(rng);
    if (fan_edge_distance(sub, r, t) < 8.0 * h_max) continue;
    pts.emplace_back(r, t);
  }
  CsvWriter fd(out_file(cfg, res, "residual_radial.csv"), {"h", "max_radial", "max_azimuthal", "ratio_radial", "ratio_azimuthal"});
  std::vector<std::array<double, 2>> maxima;
  for (double h : hs) {
    std::array<double, 2> m{};
    for (const auto& [r, t] : pts) {
      const auto [a, b] = radial_system_residual(sub, r, t, h);
      m[0] = std::max(m[0], std::abs(a));
      m[1] = std::max(m[1], std::abs(b));
    }
    maxima.push_back(m);
  }
  bool fd_ok = true;
  json fd_json = json::array();
  for (std::size_t k = 0; k < hs.size(); ++k) {
    fd.cell(hs[k]).cell(maxima[k][0]).cell(maxima[k][1]);
    json row{{"h", hs[k]}, {"max_radial", maxima[k][0]}, {"max_azimuthal", maxima[k][1]}};
    for (int c = 0; c < 2; ++c) {
      if (k == 0) {
        fd.cell(std::string_view{});
        continue;
      }
      if (maxima[k][c] < kExactZero && maxima[k - 1][c] < kExactZero) {
        fd.cell(std::string_view{"exact"});
        continue;
      }
      const double ratio = maxima[k - 1][c] / maxima[k][c];
      const double expected = std::pow(hs[k - 1] / hs[k], 2.0);
      fd.cell(ratio);
      row[c == 0 ? "ratio_radial" : "ratio_azimuthal"] = ratio;
      if (std::abs(ratio - expected) > 0.5 * expected / 4.0) fd_ok = false;
    }
    fd.end_row();
    fd_json.push_back(row);
  }
  checks.add("radial_system_order_2", fd_ok);

  res.report["weak"] = weak_json;
  res.report["divergence_max_abs"] = div_max;
  res.report["radial_system"] = fd_json;
  res.report["points"] = pts.size();
  finish(res, checks);
  return res;
}

CommandResult cmd_viscosity(const RunConfig& cfg) {
  CommandResult res;
  if (!require_valid_params(cfg, res)) return res;
  const AnnulusGeometry& g = cfg.geometry;
  const ViscosityStudy study =
      vanishing_viscosity_study(g, cfg.nu_list, cfg.viscosity_time, cfg.viscosity_intervals, cfg.viscosity_dt);

  CsvWriter csv(out_file(cfg, res, "viscosity.csv"), {"nu", "distance", "energy_identity_error", "max_abs_alpha"});
  CsvWriter prof(out_file(cfg, res, "viscosity_profiles.csv"), {"nu", "r", "alpha", "alpha0"});
  json rows = json::array();
  for (const ViscosityRow& row : study.rows) {
    ParabolicProblem p;
    p.geom = g;
    p.viscosity = row.viscosity;
    p.n_intervals = cfg.viscosity_intervals;
    p.dt = cfg.viscosity_dt;
    const double times[] = {0.0, cfg.viscosity_time};
    const EvolutionRecord rec = solve_parabolic(p, times);
    const double identity = std::abs(rec.kinetic_energy.back() + rec.dissipated.back() - rec.kinetic_energy.front());
    csv.cell(row.viscosity).cell(row.distance).cell(identity).cell(rec.max_abs_alpha).end_row();
    const RadialProfile& a0 = rec.snapshots.front();
    const RadialProfile& a1 = rec.snapshots.back();
    for (std::size_t i = 0; i < a1.grid.size(); ++i)
      prof.cell(row.viscosity).cell(a1.grid[i]).cell(a1.values[i]).cell(a0.values[i]).end_row();
    rows.push_back({{"nu", row.viscosity},
                    {"distance", row.distance},
                    {"energy_identity_error", identity},
                    {"max_abs_alpha", rec.max_abs_alpha}});
  }
  res.report["t_probe"] = study.t_probe;
  res.report["rows"] = rows;
  res.report["slope"] = optional_json(study.slope);
  Checks checks;
  checks.add("distance_strictly_decreasing", study.strictly_decreasing);
  finish(res, checks);
  return res;
}

CommandResult cmd_boundary(const RunConfig& cfg) {
  CommandResult res;
  if (!require_valid_params(cfg, res)) return res;
  const AnnulusGeometry& g = cfg.geometry;
  if (!(cfg.holder_alpha > 0.0 && cfg.holder_alpha <= 1.0)) throw ConfigError("boundary.holder_alpha must lie in (0, 1]");
  const HolderField v = default_holder_field(cfg.holder_alpha);
  const StreamFunction psi = default_stream_function(g);
  const ScalingReport rep = scaling_study(v, psi, build_chi(), g, cfg.eps_cutoff_list);

  CsvWriter csv(out_file(cfg, res, "boundary.csv"),
                {"eps", "I1", "I2", "I3", "I4", "decomposition_error", "l2_distance"});
  for (std::size_t k = 0; k < rep.eps.size(); ++k) {
    csv.cell(rep.eps[k]);
    for (double x : rep.values[k]) csv.cell(x);
    csv.cell(rep.decomposition_error[k]).cell(rep.l2_distance[k]).end_row();
  }
  json slopes = json::array();
  json vacuous = json::array();
  for (int k = 0; k < 4; ++k) {
    slopes.push_back(optional_json(rep.slopes[k]));
    vacuous.push_back(!rep.slopes[k].has_value());
  }
  const double band = 0.5 * (g.R - g.rho);
  const DistanceConstants dc = fit_distance_constants(psi, g, band, {});
  res.report["holder_alpha"] = rep.holder_alpha;
  res.report["eps"] = rep.eps;
  res.report["slopes"] = slopes;
  res.report["vacuous"] = vacuous;
  res.report["predicted_exponents"] = rep.predicted;
  res.report["tolerance"] = 0.15;
  res.report["l2_slope"] = optional_json(rep.l2_slope);
  res.report["l2_order_at_least_half"] = rep.l2_slope && *rep.l2_slope >= 0.5;
  res.report["constants"] = {{"psi_over_d", dc.psi}, {"w_normal_over_d", dc.w_normal},
                             {"holder", holder_constant(v, g)}};

  Checks checks;
  for (int k = 0; k < 4; ++k)
    checks.add("I" + std::to_string(k + 1) + "_slope_bound", rep.bound_satisfied(k),
               {{"slope", optional_json(rep.slopes[k])}, {"bound", rep.predicted[k] - 0.15}});
  const double dec = *std::max_element(rep.decomposition_error.begin(), rep.decomposition_error.end());
  checks.add("decomposition_consistency", dec < 1e-8, {{"max_abs", dec}});
  finish(res, checks);
  return res;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg) {
  static const std::map<std::string, std::function<CommandResult(const RunConfig&)>> table{
      {"validate", cmd_validate}, {"subsolution", cmd_subsolution}, {"energy", cmd_energy},
      {"burgers", cmd_burgers},   {"residual", cmd_residual},       {"viscosity", cmd_viscosity},
      {"boundary", cmd_boundary}};
  const auto start = std::chrono::steady_clock::now();
  CommandResult res;
  const auto it = table.find(name);
  if (it == table.end()) {
    res.exit_code = kExitUsage;
    res.report["error"] = "unknown command '" + name + "'";
    return res;
  }
  try {
    try {
      cfg.geometry.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    res = it->second(cfg);
  } catch (const ConfigError& e) {
    res = {};
    res.exit_code = kExitUsage;
    res.report["error"] = e.what();
  } catch (const std::exception& e) {
    res.exit_code = kExitCheckFailed;
    res.report["error"] = e.what();
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.report["command"] = name;
  res.report["exit_code"] = res.exit_code;
  res.report["provenance"] = {{"tool", "rotflow"},
                              {"version", tool_version()},
                              {"config", config_to_json(cfg)},
                              {"seed", cfg.seed},
                              {"wall_time_s", wall}};
  if (res.exit_code != kExitUsage) {
    try {
      std::filesystem::create_directories(cfg.output_dir);
      const auto path = cfg.output_dir / (name + ".json");
      std::ofstream out(path, std::ios::binary);
      out << res.report.dump(2) << '\n';
      res.files.push_back(path);
    } catch (const std::exception& e) {
      res.exit_code = kExitCheckFailed;
      res.report["error"] = std::string("cannot write report: ") + e.what();
    }
  }
  return res;
}

}  // namespace rotflow::cli
