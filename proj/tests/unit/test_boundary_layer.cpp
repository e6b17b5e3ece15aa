#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "rotflow/boundary_layer.hpp"
#include "rotflow/test_fields.hpp"
#include "rotflow/weakform.hpp"

using namespace rotflow;

namespace {

Vec2 collar_point(const AnnulusGeometry& g, bool inner, double d, double theta) {
  return to_cartesian({inner ? g.rho + d : g.R - d, theta});
}

}  // namespace

TEST_SUITE("boundary_layer") {
  const AnnulusGeometry geom;

  TEST_CASE("cutoff plateaus and endpoint flatness") {
    const CutoffChi chi = build_chi();
    CHECK(chi.value(0.5) == 0.0);
    CHECK(chi.value(3.0) == 1.0);
    CHECK(chi.value(1.5) == doctest::Approx(0.5));
    for (double s : {1.0, 2.0}) {
      CHECK(chi.d1(s) == 0.0);
      CHECK(chi.d2(s) == 0.0);
    }
    const double h = 1e-6;
    for (double s : {1.1, 1.37, 1.8}) {
      CHECK(chi.d1(s) == doctest::Approx((chi.value(s + h) - chi.value(s - h)) / (2 * h)).epsilon(1e-7));
      CHECK(chi.d2(s) == doctest::Approx((chi.d1(s + h) - chi.d1(s - h)) / (2 * h)).epsilon(1e-7));
      CHECK(chi.value(s) >= 0.0);
      CHECK(chi.value(s) <= 1.0);
    }
  }

  TEST_CASE("default stream function vanishes on both circles") {
    const StreamFunction psi = default_stream_function(geom);
    for (double th : {0.0, 1.0, 4.0}) {
      CHECK(std::abs(psi.value(to_cartesian({geom.rho, th}), 0.0)) < 1e-15);
      CHECK(std::abs(psi.value(to_cartesian({geom.R, th}), 0.0)) < 1e-15);
      const Vec2 w = psi.velocity(to_cartesian({geom.R, th}), 0.0);
      CHECK(std::abs(dot(w, radial_unit(th))) < 1e-14);
    }
    const double times[] = {0.25, 0.5};
    const DistanceConstants c = fit_distance_constants(default_stream_function(geom, 0.3), geom, 0.5, times);
    CHECK(c.psi == doctest::Approx(1.5 * 1.3 * kPi).epsilon(0.02));
    CHECK(std::isfinite(c.w_normal));
  }

  TEST_CASE("cutoff field values away from and inside the layer") {
    const CutoffField w = build_w_eps(geom, default_stream_function(geom), build_chi(), 0.02);
    const StreamFunction psi = default_stream_function(geom);
    for (bool inner : {true, false}) {
      const Vec2 far = collar_point(geom, inner, 0.06, 0.9);
      CHECK(norm(w.value(far, 0.0) - psi.velocity(far, 0.0)) < 1e-15);
      const Vec2 near = collar_point(geom, inner, 0.01, 0.9);
      CHECK(norm(w.value(near, 0.0)) == 0.0);
    }
    CHECK_THROWS_AS(build_w_eps(geom, default_stream_function(geom), build_chi(), 0.3), std::invalid_argument);
    CHECK_THROWS_AS(build_w_eps(geom, default_stream_function(geom), build_chi(), 0.0), std::invalid_argument);
  }

  TEST_CASE("frame components agree between the two routes") {
    const CutoffField w = build_w_eps(geom, default_stream_function(geom), build_chi(), 0.03);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(0.0, 0.06), uth(0.0, kTwoPi);
    for (int k = 0; k < 200; ++k) {
      const Vec2 x = collar_point(geom, k % 2 == 0, ud(rng), uth(rng));
      const FrameComponents a = w.components_projected(x, 0.0);
      const FrameComponents b = w.components_closed(x, 0.0);
      CHECK(std::abs(a.normal - b.normal) < 1e-10);
      CHECK(std::abs(a.tangential - b.tangential) < 1e-10);
    }
  }

  TEST_CASE("closed-form derivatives against finite differences") {
    const CutoffField w = build_w_eps(geom, default_stream_function(geom), build_chi(), 0.03);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ud(0.002, 0.058), uth(0.0, kTwoPi);
    const double h = 1e-6;
    for (int k = 0; k < 100; ++k) {
      const Vec2 x = collar_point(geom, k % 2 == 0, ud(rng), uth(rng));
      const BoundaryFrame fr = boundary_distance(x, geom);
      auto comp = [&](Vec2 y, Vec2 e) { return dot(w.difference(y, 0.0), e); };
      auto fd = [&](Vec2 along, Vec2 e) { return (comp(x + h * along, e) - comp(x - h * along, e)) / (2 * h); };
      const FrameDerivatives d = w.derivatives(x, 0.0);
      const double pairs[4][2] = {{d.nn, fd(fr.normal, fr.normal)},
                                  {d.nt, fd(fr.normal, fr.tangent)},
                                  {d.tn, fd(fr.tangent, fr.normal)},
                                  {d.tt, fd(fr.tangent, fr.tangent)}};
      for (const auto& p : pairs) CHECK(std::abs(p[0] - p[1]) / std::max(1.0, std::abs(p[0])) < 1e-6);
    }
  }

  TEST_CASE("cutoff field is solenoidal") {
    const CutoffField w = build_w_eps(geom, default_stream_function(geom), build_chi(), 0.02);
    for (double d : {0.005, 0.025, 0.035}) {
      const Mat2 j = w.jacobian(collar_point(geom, true, d, 1.2), 0.0);
      CHECK(std::abs(j.trace()) < 1e-10);
    }
    const double breaks[] = {geom.rho + 0.02, geom.rho + 0.04, geom.R - 0.04, geom.R - 0.02};
    const VelocityField v = [&](Vec2 x) { return w.value(x, 0.0); };
    ScalarTestField p;
    p.radial = {1.5, 0.49, Bump1D::Kind::polynomial};
    p.mode = 2;
    p.phase = 0.3;
    QuadSpec spec = kDefaultWeakSpec;
    spec.r_panels = 4;
    CHECK(std::abs(weak_residual_divergence(v, p, geom, breaks, spec)) < 1e-10);
  }

  TEST_CASE("vanishing factors give vanishing terms") {
    const CutoffField w = build_w_eps(geom, default_stream_function(geom), build_chi(), 0.02);
    const ITerms t = compute_I_terms(tangential_only_field(), w, 0.0);
    CHECK(t.terms[0] == 0.0);
    CHECK(t.terms[1] == 0.0);
    CHECK(t.terms[2] == 0.0);
    CHECK(t.terms[3] != 0.0);

    const CutoffField zero = build_w_eps(geom, zero_stream_function(), build_chi(), 0.02);
    const ITerms z = compute_I_terms(default_holder_field(), zero, 0.0);
    for (double x : z.terms) CHECK(x == 0.0);
    CHECK(cutoff_l2_distance(zero, 0.0) == 0.0);
  }

  TEST_CASE("decomposition matches the direct integral") {
    const CutoffField w = build_w_eps(geom, default_stream_function(geom), build_chi(), 0.01);
    const ITerms t = compute_I_terms(default_holder_field(), w, 0.0);
    CHECK(std::abs(t.sum() - t.direct) < 1e-8);
  }

  TEST_CASE("collar quadrature needs 32 transition nodes") {
    CollarQuadrature q;
    q.order = 8;
    q.outer_panels = 2;
    CHECK_THROWS_AS(collar_nodes(geom, 0.02, q), std::invalid_argument);
    q.outer_panels = 4;
    double area = 0.0;
    for (const CollarNode& n : collar_nodes(geom, 0.02, q)) area += n.weight;
    const double exact = kPi * ((1.04 * 1.04 - 1.0) + (4.0 - 1.96 * 1.96));
    CHECK(area == doctest::Approx(exact).epsilon(1e-12));
  }

  TEST_CASE("holder field constants") {
    const HolderField v = default_holder_field(0.5);
    CHECK(holder_constant(v, geom) == doctest::Approx(1.5).epsilon(0.01));
    CHECK_THROWS_AS(default_holder_field(0.0), std::invalid_argument);
  }

  TEST_CASE("predicted exponents") {
    const auto half = predicted_exponents(0.5);
    CHECK(half[0] == 2.0);
    CHECK(half[1] == 0.5);
    CHECK(half[2] == 1.5);
    CHECK(half[3] == 1.0);
    const auto lip = predicted_exponents(1.0);
    CHECK(lip[0] == 3.0);
    CHECK(lip[1] == 1.0);
    CHECK(lip[2] == 2.0);
  }

  TEST_CASE("scaling study input checks and vacuous fits") {
    const StreamFunction psi = default_stream_function(geom);
    const double short_grid[] = {0.04, 0.02, 0.01};
    CHECK_THROWS_AS(scaling_study(default_holder_field(), psi, build_chi(), geom, short_grid), std::invalid_argument);
    const double uneven[] = {0.04, 0.02, 0.01, 0.004};
    CHECK_THROWS_AS(scaling_study(default_holder_field(), psi, build_chi(), geom, uneven), std::invalid_argument);

    const double grid[] = {0.04, 0.02, 0.01, 0.005};
    const ScalingReport rep = scaling_study(tangential_only_field(), psi, build_chi(), geom, grid);
    CHECK_FALSE(rep.slopes[0].has_value());
    CHECK(rep.bound_satisfied(0));
    REQUIRE(rep.slopes[3].has_value());
    CHECK(rep.all_bounds_satisfied());
  }

  TEST_CASE("lipschitz field meets the steeper bounds") {
    const double grid[] = {0.04, 0.02, 0.01, 0.005};
    const ScalingReport rep =
        scaling_study(default_holder_field(1.0), default_stream_function(geom), build_chi(), geom, grid);
    CHECK(rep.all_bounds_satisfied());
  }
}
