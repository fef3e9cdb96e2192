#include "automorph/momentlab.hpp"

#include <cmath>

namespace automorph {

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
    return r;
}

// Chebyshev U_k(cos theta)
double chebyshev_u(double c, int k) {
    double um1 = 0.0, u = 1.0;
    for (int i = 0; i < k; ++i) {
        double un = 2.0 * c * u - um1;
        um1 = u;
        u = un;
    }
    return u;
}

template <class Lambda1>
double short_sum(const PrimeTable& primes, double x, cplx z, DirichletWeight w, Lambda1&& lambda_p) {
    if (!(x >= 2.0)) return 0.0;
    const double lx = std::log(x);
    const cplx e = 0.5 + 1.0 / lx + z;
    cplx s(0.0, 0.0);
    for (std::uint32_t p : primes.primes) {
        if (double(p) > x) break;
        const double lp = std::log(double(p));
        const double l1 = lambda_p(p);
        double wt = w == DirichletWeight::log_smoothed ? (lx - lp) / lx : 1.0;
        s += l1 * wt * std::exp(-e * lp);
        if (2.0 * lp <= lx) {
            double wt2 = w == DirichletWeight::log_smoothed ? (lx - 2.0 * lp) / lx : 1.0;
            s += (l1 * l1 - 2.0) / 2.0 * wt2 * std::exp(-2.0 * e * lp);
        }
    }
    return s.real();
}

}  // namespace

void SatakePair::validate(bool grc, double tol) const {
    if (std::abs(alpha * beta - 1.0) > tol) throw std::invalid_argument("SatakePair: alpha beta != 1");
    if (grc && std::abs(std::abs(alpha) - 1.0) > tol) throw std::invalid_argument("SatakePair: |alpha| != 1");
}

SatakePair SatakePair::from_angle(double theta) { return {std::polar(1.0, theta), std::polar(1.0, -theta)}; }

CoefficientIdentities coefficient_identities(const SatakePair& sp, const SatakePair& sj) {
    CoefficientIdentities r;
    const cplx a = sj.alpha, b = sj.beta;
    r.lambda_p = a + b;
    r.lambda_p2 = a * a + a * b + b * b;
    r.Lambda_p2 = a * a + b * b;
    r.lambda_p_sq_minus_2 = r.lambda_p * r.lambda_p - 2.0;
    r.lambda_p2_minus_1 = r.lambda_p2 - 1.0;
    r.sym2_j = a * a + 1.0 + b * b;
    r.sym2_j_minus_1 = r.sym2_j - 1.0;
    const cplx A = sp.alpha, B = sp.beta;
    const cplx A2 = A * A, B2 = B * B;
    r.sym2_phi = A2 + 1.0 + B2;
    r.sym4_phi = A2 * A2 + A2 + 1.0 + B2 + B2 * B2;
    r.Lambda_sym2xj_p = (A2 + 1.0 + B2) * (a + b);
    r.sym2_phi_times_lambda_p = r.sym2_phi * r.lambda_p;
    r.Lambda_sym2xj_p2 = (A2 * A2 + 1.0 + B2 * B2) * (a * a + b * b);
    r.sym2xj_p2_identity = (r.sym4_phi - r.sym2_phi + 1.0) * (r.sym2_j - 1.0);
    r.sym2xj_p2_plus_one = (r.sym4_phi - r.sym2_phi + 1.0) * (r.sym2_j + 1.0);
    return r;
}

double n_func(cplx z, double x) {
    if (!(x >= 10.0)) throw std::invalid_argument("n_func: x >= 10 required");
    const double r = std::abs(z);
    const double lx = std::log(x);
    if (r * lx <= 1.0) return std::log(lx);
    if (r <= 1.0) return -std::log(r);
    return 0.0;
}

double m_func(cplx z1, cplx z2, double x) { return n_func(z1, x) + n_func(z2, x); }

double v_func(cplx z1, cplx z2, double x) {
    return 2.0 * n_func(2.0 * z1, x) + 2.0 * n_func(2.0 * z2, x) + 2.0 * n_func(2.0 * z1.real(), x) +
           2.0 * n_func(2.0 * z2.real(), x) + 4.0 * n_func(z1 + z2, x) + 4.0 * n_func(z1 + std::conj(z2), x);
}

cplx prime_sum_shifted(const PrimeTable& table, double x, cplx z) {
    if (x > double(table.limit)) throw RangeError("prime_sum_shifted: x exceeds the prime table limit");
    cplx s(0.0, 0.0), c(0.0, 0.0);
    for (std::uint32_t p : table.primes) {
        if (double(p) > x) break;
        // compensated summation
        cplx y = std::exp(-(1.0 + z) * std::log(double(p))) - c;
        cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

SatakeSampler::SatakeSampler(std::uint64_t seed, std::uint64_t prime_limit) : primes_(sieve(prime_limit)) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, M_PI);
    for (std::uint32_t p : primes_.primes) theta_[p] = u(rng);
}

SatakeSampler SatakeSampler::constant(double theta, std::uint64_t prime_limit) {
    SatakeSampler s;
    s.primes_ = sieve(prime_limit);
    for (std::uint32_t p : s.primes_.primes) s.theta_[p] = theta;
    return s;
}

double SatakeSampler::theta(std::uint64_t p) const {
    auto it = theta_.find(p);
    if (it == theta_.end()) throw std::out_of_range("SatakeSampler: no Satake angle for " + std::to_string(p));
    return it->second;
}

double SatakeSampler::lambda_prime_power(std::uint64_t p, int k) const { return chebyshev_u(std::cos(theta(p)), k); }

double SatakeSampler::lambda(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("SatakeSampler::lambda: n >= 1 required");
    double v = 1.0;
    for (auto [p, e] : factorize(n)) v *= lambda_prime_power(p, e);
    return v;
}

std::vector<double> SatakeSampler::coefficients(std::size_t count) const {
    std::vector<double> c(count);
    for (std::size_t n = 1; n <= count; ++n) c[n - 1] = lambda(n);
    return c;
}

double short_dirichlet_sum(const MaassFormRecord& record, double x, cplx z, DirichletWeight weight) {
    const PrimeTable primes = sieve(std::uint64_t(std::max(2.0, x)));
    return short_sum(primes, x, z, weight, [&](std::uint32_t p) {
        if (p > record.coefficients.size())
            throw std::invalid_argument("short_dirichlet_sum: insufficient coefficients for x = " + std::to_string(x));
        return record.coefficients[p - 1];
    });
}

double short_dirichlet_sum(const SatakeSampler& sampler, double x, cplx z, DirichletWeight weight) {
    if (x > double(sampler.primes().limit))
        throw std::invalid_argument("short_dirichlet_sum: insufficient coefficients for x = " + std::to_string(x));
    return short_sum(sampler.primes(), x, z, weight,
                     [&](std::uint32_t p) { return 2.0 * std::cos(sampler.theta(p)); });
}

std::vector<std::uint64_t> hecke_power_expand(int alpha) {
    if (alpha < 0 || alpha > 40) throw RangeError("hecke_power_expand: 0 <= alpha <= 40 required");
    std::vector<std::uint64_t> b(alpha + 1, 0);
    // alpha!(beta+1)/(((alpha-beta)/2)!((alpha+beta)/2+1)!) = C(alpha,k) - C(alpha,k-1), k = (alpha-beta)/2
    for (int beta = alpha % 2; beta <= alpha; beta += 2) {
        int k = (alpha - beta) / 2;
        b[beta] = binom(alpha, k) - (k > 0 ? binom(alpha, k - 1) : 0);
    }
    return b;
}

double dirichlet_poly_coeff(int r, double x, const std::map<std::uint64_t, double>& prime_values, std::uint64_t n) {
    if (r < 1) throw std::invalid_argument("dirichlet_poly_coeff: r >= 1 required");
    if (n == 0) throw std::invalid_argument("dirichlet_poly_coeff: n >= 1 required");
    auto f = factorize(n);
    int total = 0;
    for (auto [p, e] : f) {
        if (double(p) > x) return 0.0;
        total += e;
    }
    if (total != 2 * r) return 0.0;
    double v = 1.0;
    int rem = 2 * r;
    for (auto [p, e] : f) {
        auto it = prime_values.find(p);
        if (it == prime_values.end())
            throw std::invalid_argument("dirichlet_poly_coeff: no value for prime " + std::to_string(p));
        v *= double(binom(rem, e)) * std::pow(it->second, e);
        rem -= e;
    }
    return v;
}

void MomentExponents::validate() const {
    if (l1 < 0.0 || l2 < 0.0 || l3 < 0.0) throw std::invalid_argument("MomentExponents: exponents must be >= 0");
}

SigmaMu sigma_mu_exponent(const MomentExponents& e, cplx z1, cplx z2, double X, double t_phi) {
    e.validate();
    if (!(X >= 10.0)) throw std::invalid_argument("sigma_mu_exponent: X >= 10 required");
    const double xs = X + t_phi;
    const double llxs = std::log(std::log(xs));
    SigmaMu r;
    const double M = m_func(z1, z2, xs);
    r.mu = -0.5 * (e.l1 + e.l2) * llxs - 0.5 * e.l3 * M;
    r.sigma_sq = (e.l1 * e.l1 + e.l2 * e.l2) * llxs + 0.25 * e.l3 * e.l3 * v_func(z1, z2, xs) + 2.0 * e.l1 * e.l3 * M;
    r.log_power = 0.5 * e.l1 * (e.l1 - 1.0) + 0.5 * e.l2 * (e.l2 - 1.0);
    r.theorem16_exponent = r.log_power * std::log(std::log(X)) + e.l3 * (e.l1 - 0.5) * m_func(z1, z2, X) +
                           e.l3 * e.l3 / 8.0 * v_func(z1, z2, X);
    return r;
}

DensityCoefficients density_coefficients(ShiftFamily z1, ShiftFamily z2) {
    auto n = [](double b) { return b == 0.0 ? 1 : 0; };
    DensityCoefficients d;
    d.m = n(z1.b) + n(z2.b);
    d.v = 2 * n(2.0 * z1.b) + 2 * n(2.0 * z2.b) + 2 + 2 + 4 * n(z1.b + z2.b) + 4 * n(z1.b - z2.b);
    return d;
}

double log_power_exponent(const MomentExponents& e, ShiftFamily z1, ShiftFamily z2) {
    e.validate();
    DensityCoefficients d = density_coefficients(z1, z2);
    return 0.5 * e.l1 * (e.l1 - 1.0) + 0.5 * e.l2 * (e.l2 - 1.0) + e.l3 * (e.l1 - 0.5) * d.m +
           e.l3 * e.l3 / 8.0 * d.v;
}

unsigned __int128 gaussian_moment(int n) {
    if (n < 0) throw std::invalid_argument("gaussian_moment: n >= 0 required");
    if (n > 40) throw RangeError("gaussian_moment: n <= 40 required");
    if (n % 2) return 0;
    unsigned __int128 v = 1;
    for (int k = n - 1; k > 1; k -= 2) v *= unsigned(k);
    return v;
}

std::string to_string_u128(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.insert(s.begin(), char('0' + int(v % 10)));
        v /= 10;
    }
    return s;
}

}  // namespace automorph
