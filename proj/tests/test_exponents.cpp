#include <cmath>
#include <random>

#include "automorph/exponents.hpp"
#include "doctest.h"

using namespace automorph;

TEST_CASE("P examples") {
    CHECK(p_exponent(7, 0, 10).value == 0.0);
    CHECK(p_exponent(25, 0, 10).value == doctest::Approx(10.0));
    // direct form value
    CHECK(p_exponent(1, -3, 10).value == doctest::Approx(4.0));
    CHECK(p_exponent_direct(1, -3, 10) == doctest::Approx(4.0));
}

TEST_CASE("Q examples") {
    CHECK(q_exponent(-1, 5, 10, 12).value == doctest::Approx(0.0));
    CHECK(q_exponent(0, 24, 10, 10).value == doctest::Approx(8.0));
    CHECK(q_exponent(0, 0, 10, 10).value == doctest::Approx(0.0));
    CHECK_THROWS_AS(q_exponent(10, 5, 3, 3), RegimeError);
}

TEST_CASE("P and Q match their direct forms and are nonnegative") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 5000; ++i) {
        double T = 50 * u(rng), t = T * (2 * u(rng) - 1), tj = (4 * T + 5) * u(rng);
        PiecewiseExponent p = p_exponent(tj, t, T);
        CHECK(std::abs(p.value - p_exponent_direct(tj, t, T)) < 1e-9);
        CHECK(p.value >= -1e-12);
        CHECK_FALSE(p.branch.empty());
        double tp = 4 + 80 * u(rng), T2 = tp * u(rng), t2 = T2 * (2 * u(rng) - 1), tj2 = (4 * tp + 5) * u(rng);
        try {
            PiecewiseExponent q = q_exponent(t2, tj2, T2, tp);
            CHECK(std::abs(q.value - q_exponent_direct(t2, tj2, T2, tp)) < 1e-9);
            CHECK(q.value >= -1e-12);
        } catch (const RegimeError&) {
        }
    }
}

TEST_CASE("gamma weights are finite and symmetric") {
    GammaWeights a = gamma_weight_exact(12.0, 1.0, 15.0, 40.0), b = gamma_weight_exact(-12.0, 1.0, 15.0, 40.0);
    CHECK(std::isfinite(a.log_H));
    CHECK(a.log_watson == doctest::Approx(b.log_watson));
    CHECK(a.value == doctest::Approx(std::exp(a.log_value())));
    GammaWeights far = gamma_weight_exact(2000.0, 0.0, 500.0, 900.0);
    CHECK(std::isfinite(far.log_value()));
}
