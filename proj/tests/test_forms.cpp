#include <cmath>
#include <random>

#include "automorph/checks.hpp"
#include "automorph/forms.hpp"
#include "automorph/ingest.hpp"
#include "doctest.h"

using namespace automorph;

TEST_CASE("reduction lands in the fundamental domain") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> xr(-20, 20), yr(0.001, 3);
    for (int i = 0; i < 2000; ++i) {
        UpperHalfPoint w = reduce_to_fundamental_domain({xr(rng), yr(rng)});
        CHECK(in_fundamental_domain(w, 1e-9));
    }
}

TEST_CASE("Eisenstein series against the lattice oracle") {
    for (auto [x, y, s] : {std::tuple{0.0, 2.0, cplx(1.5, 0)}, std::tuple{0.3, 1.1, cplx(2.2, 3.0)}, std::tuple{-0.4, 0.95, cplx(1.3, -1.0)}}) {
        cplx a = eisenstein_eval({x, y}, s).value, b = eisenstein_lattice_sum({x, y}, s);
        CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
    }
}

TEST_CASE("truncated series differs from E by the constant term above A") {
    const double A = 2.0, T = 4.0;
    UpperHalfPoint z{0.2, 3.0};
    cplx t = truncated_eisenstein_eval(z, EisensteinSpec{T, A, false}).value;
    cplx e = eisenstein_eval(z, cplx(0.5, T)).value;
    CHECK(std::abs(e - t - constant_term(3.0, T)) < 1e-12);
}

TEST_CASE("normalized Eisenstein series scales by the documented factor") {
    UpperHalfPoint z{0.1, 1.4};
    const double T = 6.0;
    cplx n = normalized_eisenstein_eval(z, T).value;
    cplx e = eisenstein_eval(z, cplx(0.5, T)).value;
    CHECK(std::abs(n - normalized_eisenstein_factor(T) * e) < 1e-12 * std::abs(n));
}

TEST_CASE("Maass form from the fixture is automorphic and decays in the cusp") {
    auto recs = load_fixture(default_fixture_file());
    REQUIRE(recs.size() == 3);
    const auto& r = recs[0];
    UpperHalfPoint z{0.1, 1.3};
    double v = maass_eval(r, z).value;
    CHECK(std::isfinite(v));
    CHECK(std::abs(maass_eval(r, apply_modular({1, 1, 0, 1}, z)).value - v) < 1e-9);
    CHECK(std::abs(maass_eval(r, apply_modular({0, -1, 1, 0}, z)).value - v) < 1e-6);
    CHECK(std::abs(maass_eval(r, {0.2, 40.0}).value) < 1e-10);
    CHECK(maass_rho1(r) > 0.0);
}

TEST_CASE("validate_record rejects lambda(1) != 1") {
    MaassFormRecord r;
    r.label = "x";
    r.spectral_parameter = 9.5;
    r.spectral_parameter_text = "9.5";
    r.coefficients = {2.0, 0.1};
    CHECK_THROWS_AS(validate_record(r), std::invalid_argument);
}
