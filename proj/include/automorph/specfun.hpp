#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace automorph {

using cplx = std::complex<double>;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NearZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// Value plus a companion absolute-error estimate.
struct Estimate {
    cplx value;
    double abs_err = 0.0;
};

struct RealEstimate {
    double value = 0.0;
    double abs_err = 0.0;
};

cplx log_gamma(cplx s);
cplx digamma(cplx s);

// Euler-Maclaurin zeta; Re(s) > 0, s != 1, |Im s| <= 1e7.
cplx zeta(cplx s);
Estimate zeta_estimate(cplx s);
// zeta'(s)/zeta(s)
cplx zeta_log_derivative(cplx s);

// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), extended to Re(s) <= 1/2 by xi(s) = xi(1-s).
cplx xi_completed(cplx s);
// log xi(s) (continuous branch through log_gamma and the principal log of zeta).
cplx log_xi(cplx s);
cplx xi_log_derivative(cplx s);

struct BesselK {
    double value = 0.0;
    double abs_err = 0.0;
    bool underflow = false;
};

struct BesselKComplex {
    cplx value;
    double abs_err = 0.0;
    bool underflow = false;
};

inline constexpr double kUnderflowThreshold = 1e-300;

// K_{it}(x) for real t, x > 0, |t| <= 500.
BesselK bessel_k_imag_order(double t, double x);
// e^{pi|t|/2} K_{it}(x), never underflows for x < |t|.
RealEstimate bessel_k_imag_scaled(double t, double x);
// e^{pi|Im nu|/2} K_nu(x) for complex order, |Re nu| <= 8.
Estimate bessel_k_scaled(cplx nu, double x);
BesselKComplex bessel_k(cplx nu, double x);

struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;
    bool contains(std::uint64_t n) const;
};

PrimeTable sieve(std::uint64_t limit);

double eta_coefficient(double T, std::uint64_t n);
cplx divisor_sigma(cplx s, std::uint64_t n);

// B_{2k}/(2k)! for k = 1..30.
const std::vector<double>& bernoulli_over_factorial();

}  // namespace automorph
