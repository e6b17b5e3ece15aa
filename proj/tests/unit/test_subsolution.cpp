#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "rotflow/subsolution.hpp"

using namespace rotflow;

namespace {

// Largest eigenvalue from trace and determinant, written out independently.
// Largest eigenvalue after diagonalising with a Jacobi rotation.
double lambda_max(const Mat2& m) {
  const double a = m(0, 0), d = m(1, 1), b = 0.5 * (m(0, 1) + m(1, 0));
  const double phi = 0.5 * std::atan2(2.0 * b, a - d);
  const double c = std::cos(phi), s = std::sin(phi);
  return std::max(a * c * c + 2.0 * b * s * c + d * s * s, a * s * s - 2.0 * b * s * c + d * c * c);
}

// Composite Simpson rule of alpha^2 / s over [rho, r].
double qbar_oracle(const RotationalSubsolution& sub, double r, double t) {
  const double rho = sub.geometry().rho;
  const int n = 20000;
  const double h = (r - rho) / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = rho + i * h;
    const double a = sub.alpha(x, t);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * a * a / x;
  }
  const double a = sub.alpha(r, t);
  return 0.5 * a * a + s * h / 3.0;
}

}  // namespace

TEST_SUITE("subsolution") {
  const AnnulusGeometry geom;
  const SubsolutionParams params{0.1, 0.5};

  TEST_CASE("constructor enforces the parameter bounds") {
    CHECK_THROWS_AS(RotationalSubsolution(geom, {0.3, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(RotationalSubsolution(geom, {0.1, 2.0}), std::invalid_argument);
    CHECK_NOTHROW(RotationalSubsolution(geom, {0.1, 1.05}));
  }

  TEST_CASE("radial components") {
    const RotationalSubsolution sub(geom, params);
    const double r = 1.52;
    const double t = 0.5;
    const double f = 0.4;
    CHECK(sub.f(r, t) == doctest::Approx(f));
    CHECK(sub.alpha(r, t) == doctest::Approx(f / (r * r)));
    CHECK(sub.beta(r, t) == doctest::Approx(-0.5 * f * f / std::pow(r, 4)));
    CHECK(sub.gamma(r, t) == doctest::Approx(-0.05 * (1 - f * f) / (r * r)));
    CHECK(sub.gamma(1.2, t) == 0.0);
    CHECK(sub.alpha(1.2, 0.0) == doctest::Approx(-1.0 / 1.44));
  }

  TEST_CASE("turbulent region and its closure") {
    const TurbulentRegion u = RotationalSubsolution(geom, params).region();
    CHECK(u.contains(1.5, 0.5));
    CHECK_FALSE(u.contains(1.45, 0.5));
    CHECK(u.in_closure(1.45, 0.5));
    CHECK_FALSE(u.contains(1.5, 0.0));
    CHECK_FALSE(u.contains(1.7, 1.0));
  }

  TEST_CASE("ubar is symmetric and traceless, vbar azimuthal") {
    const RotationalSubsolution sub(geom, params);
    const Vec2 x = to_cartesian({1.53, 2.1});
    const Mat2 u = sub.ubar(x, 0.7);
    CHECK(u(0, 1) == doctest::Approx(u(1, 0)));
    CHECK(u.trace() == doctest::Approx(0.0).scale(1.0));
    CHECK(dot(sub.vbar(x, 0.7), x) == doctest::Approx(0.0).scale(1.0));
  }

  TEST_CASE("generalized energy closed form equals the eigenvalue oracle") {
    const RotationalSubsolution sub(geom, params);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(geom.rho, geom.R), ut(0.0, geom.T), uth(0.0, kTwoPi);
    for (int k = 0; k < 500; ++k) {
      const double r = ur(rng), t = ut(rng);
      const Vec2 x = to_cartesian({r, uth(rng)});
      const Vec2 v = sub.vbar(x, t);
      const double oracle = lambda_max(outer(v, v) - sub.ubar(x, t));
      CHECK(std::abs(sub.egen(r, t) - oracle) < 1e-12);
      CHECK(std::abs(generalized_energy(v, sub.ubar(x, t)) - oracle) < 1e-12);
    }
  }

  TEST_CASE("pressure against an independent integral") {
    const RotationalSubsolution sub(geom, params);
    CHECK(sub.qbar(1.7, 0.0) == doctest::Approx(stationary_qbar(1.7, geom)).epsilon(1e-12));
    for (double r : {1.2, 1.47, 1.5, 1.58, 1.9})
      CHECK(sub.qbar(r, 0.6) == doctest::Approx(qbar_oracle(sub, r, 0.6)).epsilon(1e-9));
  }

  TEST_CASE("constraint structure on the default grid") {
    const RotationalSubsolution sub(geom, params);
    const ConstraintReport rep = check_constraint_structure(sub, {});
    CHECK(rep.passed);
    CHECK(rep.n_turbulent > 0);
    CHECK(rep.n_samples == 100 * 64 * 10);
    CHECK(rep.min_strict_margin > 0.0);
    CHECK(rep.max_margin_formula_error < 1e-13);
  }

  TEST_CASE("epsilon = 0 saturates nothing, epsilon >= 1 loses strictness") {
    const RotationalSubsolution relaxed(geom, {0.1, 1.05});
    const ConstraintReport rep = check_constraint_structure(relaxed, {40, 8, 5, {}, {}});
    CHECK_FALSE(rep.strictness_applicable);
    CHECK(relaxed.ebar(1.5, 0.5) < relaxed.egen(1.5, 0.5));

    const RotationalSubsolution tight(geom, {0.1, 0.0});
    CHECK(tight.ebar(1.5, 0.5) == doctest::Approx(0.5 / std::pow(1.5, 4)));
  }

  TEST_CASE("kinetic energy never exceeds the generalized energy") {
    const RotationalSubsolution sub(geom, params);
    for (double r : {1.1, 1.45, 1.5, 1.55, 1.95}) {
      const Vec2 v = sub.vbar(to_cartesian({r, 0.3}), 0.5);
      CHECK(0.5 * dot(v, v) <= sub.egen(r, 0.5) + 1e-15);
    }
  }
}
