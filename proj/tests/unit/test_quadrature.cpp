#include <doctest.h>

#include <cmath>

#include "rotflow/quadrature.hpp"

using namespace rotflow;

TEST_SUITE("quadrature") {
  TEST_CASE("gauss-legendre integrates degree 2n-1 exactly") {
    for (int n : {1, 2, 3, 5, 8, 16}) {
      const GaussLegendre gl = gauss_legendre(n);
      for (int deg = 0; deg <= 2 * n - 1; ++deg) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += gl.weights[k] * std::pow(gl.nodes[k], deg);
        const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
        CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
      }
    }
    CHECK_THROWS(gauss_legendre(0));
  }

  TEST_CASE("composite rule collapses repeated breaks") {
    const double breaks[] = {0.0, 1.0, 1.0, 3.0};
    double s = 0.0;
    for (const Node1D& n : composite_gauss(breaks, 2, 8)) s += n.w * std::exp(n.x);
    CHECK(s == doctest::Approx(std::exp(3.0) - 1.0).epsilon(1e-10));
  }

  TEST_CASE("polar rule weight is the annulus area") {
    const double breaks[] = {1.0, 1.5, 2.0};
    const QuadratureRule rule = polar_rule(breaks, {});
    CHECK(rule.total_weight() == doctest::Approx(AnnulusGeometry{}.area()).epsilon(1e-13));
  }

  TEST_CASE("fan breaks are clipped and sorted") {
    const AnnulusGeometry g;
    const auto b = fan_breaks(g, 0.1, 1.0);
    REQUIRE(b.size() == 4);
    CHECK(b[1] == doctest::Approx(1.4));
    CHECK(b[2] == doctest::Approx(1.6));
    const auto b0 = fan_breaks(g, 0.1, 0.0);
    CHECK(b0.size() == 3);
  }

  TEST_CASE("space-time rule measures the space-time volume") {
    const AnnulusGeometry g;
    const QuadratureRule rule = spacetime_rule(0.2, 0.7, [&](double t) { return fan_breaks(g, 0.1, t); }, {});
    CHECK(rule.total_weight() == doctest::Approx(0.5 * g.area()).epsilon(1e-12));
  }
}
