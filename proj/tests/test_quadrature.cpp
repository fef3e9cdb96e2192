#include <cmath>

#include "automorph/formulas.hpp"
#include "automorph/quadrature.hpp"
#include "doctest.h"

using namespace automorph;

TEST_CASE("config validation") {
    QuadratureConfig c;
    c.nx = 4;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    QuadratureConfig d;
    d.height_cutoff = 1.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("integral of y^-1/2 over the fundamental domain") {
    // int_F y^{-1/2} dmu: x-integral of the arc part plus 2/3 Y0^{-3/2} above y = 1
    QuadratureConfig c;
    c.height_cutoff = 400.0;
    c.target_tol = 1e-6;
    c.cusp_tail = [](double Y) { return cplx(2.0 / 3.0 * std::pow(Y, -1.5), 0.0); };
    QuadResult q = integrate_fundamental([](double, double y) { return cplx(std::pow(y, -0.5), 0.0); }, c);
    // above y = 1: 2/3; below: 2 int_0^{1/2} int_{sqrt(1-x^2)}^1 y^{-5/2} dy dx
    double below = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double x = (i + 0.5) / n * 0.5;
        below += 2.0 * (2.0 / 3.0) * (std::pow(1.0 - x * x, -0.75) - 1.0) * (0.5 / n);
    }
    CHECK(std::abs(q.value.real() - (2.0 / 3.0 + below)) < 1e-6);
}

TEST_CASE("regularization rejects a y^1 growth term") {
    // E(z,3/4)^2 contains 2 phi(3/4) y
    QuadratureConfig c;
    EisensteinProduct F({cplx(0.75, 0), cplx(0.75, 0)});
    CHECK_THROWS_AS(regularized_integral(F, eisenstein_product_growth({cplx(0.75, 0), cplx(0.75, 0)}), c), InvalidGrowth);
}

TEST_CASE("Maass-Selberg closed form against quadrature at one pair") {
    QuadratureConfig c;
    c.height_cutoff = 8.0;
    c.breakpoints = {2.0};
    c.target_tol = 1e-5;
    QuadResult q = integrate_fundamental(TruncatedEisensteinNormSq(5.0, 2.0), c);
    double cf = maass_selberg_truncated_norm(5.0, 2.0);
    CHECK(std::abs(q.value.real() - cf) < 1e-3 * cf);
}
