#include <cmath>

#include "automorph/checks.hpp"
#include "automorph/formulas.hpp"
#include "doctest.h"

using namespace automorph;

TEST_CASE("Mellin-Barnes closed form against quadrature") {
    for (auto [s, t1, t2] : {std::tuple{2.0, 0.0, 0.0}, std::tuple{2.5, 1.0, 4.0}, std::tuple{5.0, 6.0, 6.0}}) {
        cplx a = mellin_barnes_bessel(s, cplx(0, t1), cplx(0, t2)), b = bessel_mellin_quadrature(s, t1, t2);
        CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));
    }
}

TEST_CASE("Zagier quotient at a pole raises") {
    CHECK_THROWS_AS(zagier_triple_product(0.25, 1.0 / 6, 1.0 / 12), PoleError);
}

TEST_CASE("Zagier numerator arguments are permutation invariant modulo s -> 1 - s") {
    auto a = zagier_numerator_arguments(0.3, 0.2, 0.1), b = zagier_numerator_arguments(0.1, 0.3, 0.2);
    auto key = [](cplx z) {
        if (z.real() < 0.5) z = 1.0 - z;
        return std::pair{std::round(z.real() * 1e12), std::round(z.imag() * 1e12)};
    };
    std::vector<std::pair<double, double>> ka, kb;
    for (auto z : a) ka.push_back(key(z));
    for (auto z : b) kb.push_back(key(z));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    CHECK(ka == kb);
}

TEST_CASE("L-value bundle inputs are required") {
    LValueBundle lv;
    CHECK_THROWS_AS(lv.validate(), std::invalid_argument);
    lv.sym2_at_1 = 1.0;
    CHECK_THROWS_AS(rankin_selberg_phi2_E(5.0, lv, 10.0), MissingInput);
}

TEST_CASE("c_0 is the Laurent constant") {
    const double g = 0.57721566490153286061;
    CHECK(xi_laurent_c0() == doctest::Approx(g / 2 - std::log(M_PI) / 2 - std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("QUE-shrinking identity at T = 0 reproduces zeta(3)^4/zeta(6)") {
    auto [l, r] = que_shrinking_dirichlet_identity(3.0, 0.0, 100000);
    CHECK(std::abs(l - r) <= 1e-8 * std::abs(r));
}

TEST_CASE("decorrelation main term") {
    CHECK(decorrelation_main_term(100.0, 100.0) == doctest::Approx(6 / M_PI * std::log(100.0)));
    double d = 0.3, tau = 50.0;
    CHECK(decorrelation_main_term(tau + d, tau) == doctest::Approx(6 / M_PI * std::sin(d * std::log(tau)) / d).epsilon(1e-13));
}
