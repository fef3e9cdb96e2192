#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "automorph/checks.hpp"
#include "automorph/specfun.hpp"
#include "doctest.h"

using namespace automorph;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

// K_{it}(x) = int_0^inf e^{-x cosh u} cos(t u) du, trapezoid in 50-digit arithmetic.
double bessel_k_mp(double t, double x) {
    const mp X(x), Tt(t);
    mp U = boost::multiprecision::acosh(mp(130) / X + 1) + 1;
    const mp h = mp(1) / (60 + 3 * t);
    mp sum = boost::multiprecision::exp(-X) / 2;
    for (mp u = h; u < U; u += h) sum += boost::multiprecision::exp(-X * boost::multiprecision::cosh(u)) * boost::multiprecision::cos(Tt * u);
    return static_cast<double>(sum * h);
}

}  // namespace

TEST_CASE("K_it(x) against a 50-digit quadrature oracle") {
    double worst = 0.0;
    for (double t : {0.0, 0.5, 3.0, 10.0, 25.0, 40.0, 50.0})
        for (double x : {0.01, 0.3, 2.0, 9.0, 20.0, 37.0, 50.0}) {
            double k = bessel_k_imag_order(t, x).value, o = bessel_k_mp(t, x);
            double rel = std::abs(k - o) / std::abs(o);
            CAPTURE(t);
            CAPTURE(x);
            CHECK(rel < 1e-9);
            worst = std::max(worst, rel);
        }
    MESSAGE("worst relative error " << worst);
}

TEST_CASE("K_it(x) large order stays finite and positive beyond the turning point") {
    for (double t : {100.0, 300.0, 500.0}) {
        BesselK k = bessel_k_imag_order(t, 0.5 * M_PI * t + 3 * t);
        CHECK(std::isfinite(k.value));
        CHECK(k.value >= 0.0);
    }
}

TEST_CASE("log_gamma and zeta reject poles") {
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
    CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("xi symmetry property") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> re(0.05, 0.95), im(-80, 80);
    for (int i = 0; i < 100; ++i) {
        cplx s(re(rng), im(rng));
        cplx a = xi_completed(s), b = xi_completed(1.0 - s);
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
    }
}

TEST_CASE("zeta matches the Hurwitz oracle at Hurwitz parameter 1") {
    for (cplx s : {cplx(1.5, 0.0), cplx(0.5, 100.0), cplx(4.0, -3.0)}) {
        cplx o = hurwitz_zeta_oracle(s, 1.0);
        CHECK(std::abs(zeta(s) - o) <= 1e-11 * std::abs(o));
    }
}

TEST_CASE("sieve invariants") {
    PrimeTable t = sieve(100000);
    CHECK(std::is_sorted(t.primes.begin(), t.primes.end()));
    CHECK(std::adjacent_find(t.primes.begin(), t.primes.end()) == t.primes.end());
    CHECK(t.primes.size() == 9592);
    CHECK(t.contains(99991));
    CHECK_FALSE(t.contains(99993));
}
