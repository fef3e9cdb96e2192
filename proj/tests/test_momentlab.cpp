#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "automorph/momentlab.hpp"
#include "doctest.h"

using namespace automorph;
using boost::multiprecision::cpp_int;

namespace {

cpp_int factorial(int n) {
    cpp_int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

TEST_CASE("b_{alpha,beta} equals alpha!(beta+1)/(((alpha-beta)/2)!((alpha+beta)/2+1)!) exactly") {
    for (int a = 0; a <= 40; ++a) {
        auto b = hecke_power_expand(a);
        REQUIRE(b.size() == std::size_t(a + 1));
        for (int be = 0; be <= a; ++be) {
            if ((a - be) % 2) {
                CHECK(b[be] == 0);
                continue;
            }
            cpp_int ref = factorial(a) * (be + 1) / (factorial((a - be) / 2) * factorial((a + be) / 2 + 1));
            CHECK(cpp_int(b[be]) == ref);
        }
    }
    CHECK_THROWS_AS(hecke_power_expand(41), RangeError);
}

TEST_CASE("coefficient identities at the trivial and pi/3 Satake points") {
    auto c = coefficient_identities(SatakePair{}, SatakePair{});
    CHECK(std::abs(c.lambda_p - 2.0) < 1e-15);
    CHECK(std::abs(c.lambda_p2 - 3.0) < 1e-15);
    auto d = coefficient_identities(SatakePair{}, SatakePair::from_angle(M_PI / 3));
    CHECK(std::abs(d.lambda_p - 1.0) < 1e-12);
    CHECK(std::abs(d.lambda_p2) < 1e-12);
}

TEST_CASE("SatakePair validation") {
    SatakePair bad{cplx(2, 0), cplx(2, 0)};
    CHECK_THROWS(bad.validate());
    SatakePair off{cplx(2, 0), cplx(0.5, 0)};
    CHECK_NOTHROW(off.validate(false));
    CHECK_THROWS(off.validate(true));
}

TEST_CASE("density functions") {
    CHECK(n_func(cplx(2, 0), 100.0) == 0.0);
    CHECK(n_func(0.5, 1e9) == doctest::Approx(std::log(2.0)));
    CHECK_THROWS(n_func(0.0, 5.0));
    double x = 1e30, ll = std::log(std::log(x));
    CHECK(m_func(0.0, cplx(0, 6), x) == ll);
    CHECK(v_func(0.0, cplx(0, 6), x) == doctest::Approx(6 * ll).epsilon(1e-15));
    CHECK(log_power_exponent({0.5, 0.5, 1}, {0, 0}, {0, 20}) == doctest::Approx(0.5));
    CHECK(log_power_exponent({0, 0, 2}, {0, 0}, {0, 10}) == doctest::Approx(2.0));
}

TEST_CASE("dirichlet_poly_coeff multinomials") {
    std::map<std::uint64_t, double> a{{2, 0.5}, {3, 2.0}, {7, -1.0}};
    CHECK(dirichlet_poly_coeff(1, 10, a, 4) == doctest::Approx(0.25));
    CHECK(dirichlet_poly_coeff(1, 10, a, 21) == doctest::Approx(-4.0));
    CHECK(dirichlet_poly_coeff(2, 10, a, 36) == doctest::Approx(6 * 0.25 * 4.0));
    CHECK(dirichlet_poly_coeff(3, 10, a, 2 * 2 * 2 * 3 * 7 * 7) == doctest::Approx(60 * 0.125 * 2.0 * 1.0));
    CHECK_THROWS(dirichlet_poly_coeff(1, 20, a, 11 * 2));
}

TEST_CASE("short Dirichlet sum needs coefficients up to x") {
    MaassFormRecord r;
    r.coefficients = {1.0, 0.3, -0.2};
    CHECK_THROWS_AS(short_dirichlet_sum(r, 50.0, 0.0), std::invalid_argument);
    SatakeSampler s(1, 100);
    CHECK_THROWS_AS(short_dirichlet_sum(s, 1000.0, 0.0), std::invalid_argument);
}

TEST_CASE("Gaussian moments") {
    CHECK(gaussian_moment(0) == 1);
    CHECK(gaussian_moment(4) == 3);
    CHECK(gaussian_moment(7) == 0);
    CHECK(to_string_u128(gaussian_moment(10)) == "945");
    CHECK_THROWS_AS(gaussian_moment(42), RangeError);
}
