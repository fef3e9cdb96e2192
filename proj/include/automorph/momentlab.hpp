#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "automorph/forms.hpp"
#include "automorph/specfun.hpp"

namespace automorph {

struct SatakePair {
    cplx alpha{1.0, 0.0};
    cplx beta{1.0, 0.0};
    // Throws unless alpha beta = 1 (and |alpha| = 1 when grc is set).
    void validate(bool grc = true, double tol = 1e-12) const;
    static SatakePair from_angle(double theta);
};

struct CoefficientIdentities {
    // phi_j data
    cplx lambda_p;         // alpha + beta
    cplx lambda_p2;        // alpha^2 + alpha beta + beta^2
    cplx Lambda_p2;        // alpha^2 + beta^2
    cplx lambda_p_sq_minus_2;
    cplx lambda_p2_minus_1;
    cplx sym2_j;           // alpha^2 + 1 + beta^2
    cplx sym2_j_minus_1;
    // phi data
    cplx sym2_phi;         // alpha^2 + 1 + beta^2 for phi
    cplx sym4_phi;         // alpha^4 + alpha^2 + 1 + beta^2 + beta^4
    // Sym^2 phi x phi_j
    cplx Lambda_sym2xj_p;           // definition at p
    cplx sym2_phi_times_lambda_p;   // lambda_Sym2phi(p) lambda_j(p)
    cplx Lambda_sym2xj_p2;          // definition at p^2
    cplx sym2xj_p2_identity;        // (Sym4 - Sym2 + 1)(Sym2_j - 1)
    cplx sym2xj_p2_plus_one;         // (Sym4 - Sym2 + 1)(Sym2_j + 1)
};

// sp: Satake data of phi; sp_j: of phi_j.
CoefficientIdentities coefficient_identities(const SatakePair& sp, const SatakePair& sp_j);

double n_func(cplx z, double x);
double m_func(cplx z1, cplx z2, double x);
double v_func(cplx z1, cplx z2, double x);

cplx prime_sum_shifted(const PrimeTable& table, double x, cplx z);

// Random unit-circle Satake parameters, one angle per prime, reproducible from the seed.
class SatakeSampler {
public:
    SatakeSampler(std::uint64_t seed, std::uint64_t prime_limit);
    // Fixed angle for every prime (theta = 0 gives alpha = beta = 1).
    static SatakeSampler constant(double theta, std::uint64_t prime_limit);

    const PrimeTable& primes() const { return primes_; }
    double theta(std::uint64_t p) const;
    SatakePair satake(std::uint64_t p) const { return SatakePair::from_angle(theta(p)); }
    // lambda(p^k) = sin((k+1) theta)/sin(theta)
    double lambda_prime_power(std::uint64_t p, int k) const;
    // Multiplicative extension; n must factor over primes <= prime_limit.
    double lambda(std::uint64_t n) const;
    std::vector<double> coefficients(std::size_t count) const;

private:
    SatakeSampler() = default;
    PrimeTable primes_;
    std::map<std::uint64_t, double> theta_;
};

enum class DirichletWeight { sharp, log_smoothed };

// Re sum_{p^n <= x, n <= 2} Lambda(p^n) / (n p^{n(1/2 + 1/log x + z)}) w(p^n)
double short_dirichlet_sum(const MaassFormRecord& record, double x, cplx z,
                           DirichletWeight weight = DirichletWeight::log_smoothed);
double short_dirichlet_sum(const SatakeSampler& sampler, double x, cplx z,
                           DirichletWeight weight = DirichletWeight::log_smoothed);

// b_{alpha, beta} for beta = 0..alpha, exact.
std::vector<std::uint64_t> hecke_power_expand(int alpha);

// a_{2r,x}(n)
double dirichlet_poly_coeff(int r, double x, const std::map<std::uint64_t, double>& prime_values, std::uint64_t n);

struct MomentExponents {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0;
    void validate() const;
};

struct SigmaMu {
    double mu = 0.0;
    double sigma_sq = 0.0;
    // (l1(l1-1)/2 + l2(l2-1)/2) loglog X + l3(l1-1/2) M(X) + l3^2/8 V(X)
    double theorem16_exponent = 0.0;
    double log_power = 0.0;  // l1(l1-1)/2 + l2(l2-1)/2
};

// epsilon in mu(X) is taken as 0.
SigmaMu sigma_mu_exponent(const MomentExponents& e, cplx z1, cplx z2, double X, double t_phi);

// Shift z = a/log X + i b. N(z, X) is loglog X + O(1) when b = 0, O(1) otherwise.
struct ShiftFamily {
    double a = 0.0;
    double b = 0.0;
};

struct DensityCoefficients {
    int m = 0;  // M = m loglog X + O(1)
    int v = 0;  // V = v loglog X + O(1)
};

DensityCoefficients density_coefficients(ShiftFamily z1, ShiftFamily z2);
// Exponent of log X in the shifted moment bound.
double log_power_exponent(const MomentExponents& e, ShiftFamily z1, ShiftFamily z2);

unsigned __int128 gaussian_moment(int n);
std::string to_string_u128(unsigned __int128 v);

}  // namespace automorph
