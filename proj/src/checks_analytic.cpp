#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "automorph/checks.hpp"
#include "automorph/formulas.hpp"
#include "automorph/ingest.hpp"
#include "automorph/quadrature.hpp"

namespace automorph {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

std::string fmt(const char* f, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

template <class F>
Check guarded(const std::string& name, const std::string& oracle, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return bool_check(name, oracle, false, std::string("exception: ") + e.what());
    }
}

double arg_diff(double a, double b) {
    double d = a - b;
    return d - 2.0 * M_PI * std::round(d / (2.0 * M_PI));
}

// E(z,s) phi(z)^2 on rows, for the Rankin-Selberg unfolding check
class MaassSquareTimesEisenstein : public Integrand {
public:
    MaassSquareTimesEisenstein(const MaassFormRecord& rec, cplx s) : rec_(rec), s_(s) {}
    cplx at(double x, double y) const override {
        double p = maass_eval(rec_, {x, y}).value;
        return p * p * eisenstein_eval({x, y}, s_).value;
    }
    void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const override {
        FourierRow m = maass_row(rec_, y), e = eisenstein_row(y, s_);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double p = m.at(xs[i]).real();
            out[i] = p * p * e.at(xs[i]);
        }
    }

private:
    const MaassFormRecord& rec_;
    cplx s_;
};

class MaassLinear : public Integrand {
public:
    explicit MaassLinear(const MaassFormRecord& rec) : rec_(rec) {}
    cplx at(double x, double y) const override { return maass_eval(rec_, {x, y}).value; }
    void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const override {
        FourierRow m = maass_row(rec_, y);
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = m.at(xs[i]);
    }

private:
    const MaassFormRecord& rec_;
};

}  // namespace

// ---------------------------------------------------------------------------------------------

std::vector<Check> checks_specfun() {
    std::vector<Check> out;
    const char* closed = "closed form";
    out.push_back(compare_check("log_gamma(1/2) = log sqrt(pi)", closed, log_gamma(0.5), 0.5 * std::log(M_PI), 1e-13));
    out.push_back(compare_check("log_gamma(5) = log 24", closed, log_gamma(5.0), std::log(24.0), 1e-14));
    {
        double worst = 0.0;
        for (int i = 0; i < 60; ++i) {
            double x = 0.05 + 1.7 * i;
            worst = std::max(worst, std::abs(log_gamma(x).real() - std::lgamma(x)) / std::max(1.0, std::abs(std::lgamma(x))));
        }
        out.push_back(bound_check("log_gamma real axis", "libm lgamma", worst, 1e-12));
    }
    {
        cplx s(0.5, 30.0), prod(0.0, 0.0);
        for (int k = 0; k < 30; ++k) prod += std::log(s + double(k));
        cplx d = log_gamma(s + 30.0) - log_gamma(s) - prod;
        double err = std::abs(d - 2.0 * M_PI * cplx(0, std::round(d.imag() / (2.0 * M_PI))));
        out.push_back(bound_check("log_gamma(1/2+30i) recurrence x30", "Gamma(s+1) = s Gamma(s)", err, 1e-11));
    }
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> re(-3.0, 4.0), im(-40.0, 40.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            cplx s(re(rng), im(rng));
            cplx lhs = std::exp(log_gamma(s + 1.0) - log_gamma(s));
            worst = std::max(worst, std::abs(lhs - s) / std::abs(s));
        }
        out.push_back(bound_check("log_gamma random recurrence", "Gamma(s+1) = s Gamma(s)", worst, 1e-10));
        worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            cplx s(re(rng) / 4.0 + 0.5, im(rng) / 8.0);
            cplx lhs = std::exp(log_gamma(s) + log_gamma(1.0 - s));
            cplx rhs = M_PI / std::sin(M_PI * s);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        out.push_back(bound_check("Gamma reflection", "Gamma(s)Gamma(1-s) = pi/sin(pi s)", worst, 1e-11));
    }
    {
        double h = 1e-3;
        auto f = [](double x) { return log_gamma(x).real(); };
        double d1 = (f(1 + h) - f(1 - h)) / (2 * h), d2 = (f(1 + h / 2) - f(1 - h / 2)) / h;
        double fd = (4 * d2 - d1) / 3;
        out.push_back(compare_check("digamma(1)", "finite difference of log_gamma", digamma(1.0), fd, 1e-9));
        out.push_back(compare_check("digamma(1) = -gamma", "Euler-Mascheroni constant", digamma(1.0), -kEulerGamma, 1e-13));
        out.push_back(compare_check("digamma(2) = 1 - gamma", "psi(s+1) = psi(s) + 1/s", digamma(2.0), 1.0 - kEulerGamma, 1e-13));
        double e = std::abs(digamma(1000.0) - std::log(1000.0));
        out.push_back(bound_check("digamma(1000) - log 1000", "O(1/|s|) envelope", e, 1e-3));
    }
    out.push_back(compare_check("zeta(2) = pi^2/6", closed, zeta(2.0), M_PI * M_PI / 6.0, 1e-14));
    {
        double s = 0.0;
        const int N = 1000000;
        for (int n = N; n >= 1; --n) s += 1.0 / (double(n) * n * n);
        double tail = 1.0 / (2.0 * N * double(N)) - 1.0 / (2.0 * double(N) * N * N) + 1.0 / (4.0 * std::pow(N, 4));
        out.push_back(compare_check("zeta(3)", "direct sum to 1e6 + Euler-Maclaurin tail", zeta(3.0), s + tail, 1e-13));
    }
    {
        double worst = 0.0;
        for (double s = 1.1; s < 12.0; s += 0.37)
            worst = std::max(worst, std::abs(zeta(s).real() - std::riemann_zeta(s)) / std::riemann_zeta(s));
        out.push_back(bound_check("zeta real axis", "libstdc++ riemann_zeta", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (cplx s : {cplx(2.0, 5.0), cplx(2.5, -17.0), cplx(3.0, 100.0), cplx(2.0, 1000.0)}) {
            cplx o = hurwitz_zeta_oracle(s, 1.0);
            worst = std::max(worst, std::abs(zeta(s) - o) / std::abs(o));
        }
        out.push_back(bound_check("zeta Re(s) >= 2", "truncated Dirichlet series + Euler-Maclaurin tail", worst, 1e-12));
        worst = 0.0;
        for (cplx s : {cplx(0.5, 3.0), cplx(0.3, 25.0), cplx(0.8, -60.0), cplx(0.5, 500.0)}) {
            cplx o = hurwitz_zeta_oracle(s, 1.0);
            worst = std::max(worst, std::abs(zeta(s) - o) / std::abs(o));
        }
        out.push_back(bound_check("zeta critical strip", "Hurwitz Euler-Maclaurin oracle", worst, 1e-10));
    }
    out.push_back(bound_check("|zeta(1/2 + 14.134725i)|", "first zero ordinate", std::abs(zeta(cplx(0.5, 14.134725))), 1e-6));
    out.push_back(compare_check("xi(2) = pi/6", closed, xi_completed(2.0), M_PI / 6.0, 1e-14));
    {
        double worst = 0.0;
        auto direct = [](cplx s) { return std::exp(-0.5 * s * std::log(M_PI) + log_gamma(0.5 * s)) * zeta(s); };
        for (cplx s : {cplx(0.7, 3.0), cplx(0.6, -12.0), cplx(0.9, 40.0), cplx(0.55, 7.3), cplx(0.8, 0.1)}) {
            cplx a = direct(s), b = std::conj(direct(1.0 - std::conj(s)));
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
        out.push_back(bound_check("xi functional equation on the strip", "both sides from components", worst, 1e-9));
    }
    {
        cplx s(0.5, 7.3);
        out.push_back(compare_check("|xi(1/2+it)| = |xi(1/2-it)|", "conjugation", std::abs(xi_completed(s)),
                                    std::abs(xi_completed(std::conj(s))), 1e-12));
        auto lx = [](double x) { return log_xi(x).real(); };
        double h = 1e-3;
        double d1 = (lx(4 + h) - lx(4 - h)) / (2 * h), d2 = (lx(4 + h / 2) - lx(4 - h / 2)) / h;
        out.push_back(compare_check("xi'/xi(4)", "finite difference of log xi", xi_log_derivative(4.0), (4 * d2 - d1) / 3, 1e-9));
        cplx v = xi_log_derivative(cplx(1.0, 200.0));
        out.push_back(bound_check("Re xi'/xi(1+200i) - (1/2)log 100", "(1/2) log T growth", std::abs(v.real() - 0.5 * std::log(100.0)), 2.0,
                                  fmt("Re = %.6f", v.real())));
        cplx s2(0.5, 5.0);
        cplx other = -0.5 * std::log(M_PI) + 0.5 * digamma(0.5 * (1.0 - s2)) + zeta_log_derivative(1.0 - s2);
        out.push_back(bound_check("xi'/xi(s) + xi'/xi(1-s) at 1/2+5i", "functional equation, components", std::abs(xi_log_derivative(s2) + other), 1e-10));
    }
    {
        out.push_back(compare_check("K_0(1)", "libstdc++ cyl_bessel_k", bessel_k_imag_order(0.0, 1.0).value, std::cyl_bessel_k(0.0, 1.0), 1e-12));
        out.push_back(compare_check("K_0(1) = 0.4210244", "cosine-integral trapezoid", bessel_k_imag_order(0.0, 1.0).value, bessel_k_trapezoid(0.0, 1.0), 1e-12));
        double h = 1e-3;
        auto k0 = [](double x) { return bessel_k_imag_order(0.0, x).value; };
        double d1 = (k0(1 + h) - k0(1 - h)) / (2 * h), d2 = (k0(1 + h / 2) - k0(1 - h / 2)) / h;
        out.push_back(compare_check("K_0'(1) = -K_1(1)", "finite difference vs cyl_bessel_k(1)", -(4 * d2 - d1) / 3, std::cyl_bessel_k(1.0, 1.0), 1e-9));
        double worst = 0.0;
        for (double t : {0.0, 0.5, 1.0, 2.0, 3.5, 5.0, 6.5, 8.0})
            for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 7.5, 12.0, 20.0, 35.0, 50.0}) {
                double k = bessel_k_imag_order(t, x).value, o = bessel_k_trapezoid(t, x);
                double scale = std::abs(o) + 1e-3 * std::exp(-0.5 * M_PI * t) * std::min(1.0, std::exp(-x) * 10);
                worst = std::max(worst, std::abs(k - o) / scale);
            }
        out.push_back(bound_check("K_it(x) grid t<=8", "cosine-integral trapezoid", worst, 1e-9));
        double a = bessel_k_imag_order(5.0, 0.01).value, b = bessel_k_trapezoid(5.0, 0.01);
        out.push_back(compare_check("K_5i(0.01) oscillatory regime", "cosine-integral trapezoid", a, b, 1e-9));
        bool mono = true;
        double prev = INFINITY;
        for (double x = 0.5 * M_PI * 100 + 40; x < 0.5 * M_PI * 100 + 140; x += 5.0) {
            double v = bessel_k_imag_order(100.0, x).value;
            if (!(v < prev) && v != 0.0) mono = false;
            prev = v;
        }
        out.push_back(bool_check("K_100i monotone beyond pi t/2 + 40", "exponential regime", mono));
        BesselK u = bessel_k_imag_order(10.0, 900.0);
        out.push_back(bool_check("K underflow flushed with flag", "policy", u.underflow && u.value == 0.0));
    }
    {
        PrimeTable p10 = sieve(10);
        out.push_back(bool_check("sieve(10) = [2,3,5,7]", "trivial", p10.primes == std::vector<std::uint32_t>{2, 3, 5, 7}));
        out.push_back(bool_check("pi(100) = 25", "trivial", sieve(100).primes.size() == 25));
        out.push_back(bool_check("pi(10^6) = 78498", "published prime count", sieve(1000000).primes.size() == 78498));
        PrimeTable p = sieve(20000);
        std::vector<std::uint32_t> td;
        for (std::uint32_t n = 2; n <= 20000; ++n) {
            bool pr = true;
            for (std::uint32_t d = 2; d * d <= n; ++d)
                if (n % d == 0) {
                    pr = false;
                    break;
                }
            if (pr) td.push_back(n);
        }
        out.push_back(bool_check("sieve(2e4)", "trial division", p.primes == td));
    }
    {
        out.push_back(compare_check("eta_T(1) = 1", "trivial", eta_coefficient(3.7, 1), 1.0, 0.0, false));
        out.push_back(compare_check("eta_0(6) = 4", "divisor count", eta_coefficient(0.0, 6), 4.0, 1e-14, false));
        out.push_back(compare_check("eta_1(7) = 2 cos(log 7)", "two-divisor sum", eta_coefficient(1.0, 7), 2 * std::cos(std::log(7.0)), 1e-14, false));
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<std::uint64_t> d(1, 5000);
        std::uniform_real_distribution<double> tt(-30, 30);
        double worst = 0.0;
        int pairs = 0;
        while (pairs < 1000) {
            std::uint64_t m = d(rng), n = d(rng);
            if (std::gcd(m, n) != 1) continue;
            ++pairs;
            double T = tt(rng);
            worst = std::max(worst, std::abs(eta_coefficient(T, m * n) - eta_coefficient(T, m) * eta_coefficient(T, n)));
        }
        out.push_back(bound_check("eta multiplicative, 1000 coprime pairs", "eta_T(mn) = eta_T(m)eta_T(n)", worst, 1e-12));
        out.push_back(compare_check("sigma_1(6) = 12", "trivial", divisor_sigma(1.0, 6), 12.0, 1e-14));
        out.push_back(compare_check("sigma_0(12) = 6", "trivial", divisor_sigma(0.0, 12), 6.0, 1e-14));
        out.push_back(compare_check("sigma_{-1}(6) = 2", "trivial", divisor_sigma(-1.0, 6), 2.0, 1e-14));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

std::vector<Check> checks_forms_eisenstein() {
    std::vector<Check> out;
    auto same = [](UpperHalfPoint a, UpperHalfPoint b) { return std::abs(a.x - b.x) < 1e-12 && std::abs(a.y - b.y) < 1e-12; };
    out.push_back(bool_check("reduce (0,2)", "already in F", same(reduce_to_fundamental_domain({0.0, 2.0}), {0.0, 2.0})));
    out.push_back(bool_check("reduce (1.3,2)", "translation", same(reduce_to_fundamental_domain({1.3, 2.0}), {0.3, 2.0})));
    out.push_back(bool_check("reduce (0,0.5)", "inversion", same(reduce_to_fundamental_domain({0.0, 0.5}), {0.0, 2.0})));
    out.push_back(guarded("E((0,2), 3/2)", "lattice sum", [] {
        return compare_check("E((0,2), 3/2)", "lattice sum", eisenstein_eval({0.0, 2.0}, 1.5).value,
                             eisenstein_lattice_sum({0.0, 2.0}, 1.5), 1e-10);
    }));
    {
        cplx s(0.5, 5.0);
        Estimate e = eisenstein_eval({0.0, 50.0}, s);
        out.push_back(bound_check("E - constant term at y=50", "K-Bessel decay", std::abs(e.value - eisenstein_constant_term(50.0, s)), 1e-12));
        FourierRow r20 = eisenstein_row(20.0, cplx(0.75, 2.0)), r40 = eisenstein_row(40.0, cplx(0.75, 2.0));
        double a = std::abs(r20.nonconstant_at(0.1)), b = std::abs(r40.nonconstant_at(0.1));
        out.push_back(bound_check("cusp decay faster than y^-10", "ratio y=40 vs y=20", b / a, std::pow(2.0, -10)));
    }
    {
        UpperHalfPoint z{0.25, 1.1};
        cplx s(0.5, 4.0);
        UpperHalfPoint w = apply_modular({0, -1, 1, 0}, z);
        Estimate a = eisenstein_eval(z, s), b = eisenstein_eval(w, s);
        out.push_back(compare_check("E at (0.25,1.1) vs -1/z", "automorphy", b.value, a.value, 1e-10, false));
        cplx T(0.0, 6.0);
        Estimate p = eisenstein_eval({0.1, 1.3}, 0.5 + T), m = eisenstein_eval({0.1, 1.3}, 0.5 - T);
        out.push_back(compare_check("conj E(z,1/2+iT) = E(z,1/2-iT)", "conjugation", std::conj(p.value), m.value, 1e-12));
    }
    {
        double T = 3.0;
        cplx ratio = std::exp(log_xi(cplx(1.0, -2 * T)) - log_xi(cplx(1.0, 2 * T)));
        out.push_back(compare_check("constant_term(1,T) = 1 + ratio", "definition", constant_term(1.0, T), 1.0 + ratio, 1e-14));
        double worst = 0.0;
        for (double y : {0.9, 1.5, 4.0, 17.0, 300.0})
            for (double TT : {0.3, 1.0, 7.0, 40.0}) worst = std::max(worst, std::abs(constant_term(y, TT)) / (2.0 * std::sqrt(y)));
        out.push_back(bound_check("|e(y,1/2+iT)| <= 2 sqrt(y)", "unimodular scattering", worst, 1.0 + 1e-12));
        out.push_back(compare_check("constant_term(40,3) vs E((0,40),1/2+3i)", "cusp limit", constant_term(40.0, 3.0),
                                    eisenstein_eval({0.0, 40.0}, cplx(0.5, 3.0)).value, 1e-12));
        out.push_back(compare_check("|phi(1/2+iT)| = 1", "unitarity", std::abs(scattering_phi(cplx(0.5, 8.0))), 1.0, 1e-12));
    }
    {
        double A = 2.0, T = 10.0;
        EisensteinSpec sp{T, A, false};
        cplx full = eisenstein_eval({0.2, A / 2}, cplx(0.5, T)).value;
        out.push_back(compare_check("truncated at y = A/2", "full series below A", truncated_eisenstein_eval({0.2, A / 2}, sp).value, full, 1e-15));
        cplx above_A = truncated_eisenstein_eval({0.2, 2 * A}, sp).value;
        cplx expect = eisenstein_eval({0.2, 2 * A}, cplx(0.5, T)).value - constant_term(2 * A, T);
        out.push_back(compare_check("truncated at y = 2A", "E minus its constant term", above_A, expect, 1e-12, false));
        cplx below = truncated_eisenstein_eval({0.2, A}, sp).value;
        cplx above = truncated_eisenstein_eval({0.2, A * (1 + 1e-12)}, sp).value;
        out.push_back(compare_check("seam jump = |e(A)|", "definition", std::abs(below - above), std::abs(constant_term(A, T)), 1e-9));
        cplx f = normalized_eisenstein_factor(T);
        out.push_back(compare_check("|normalized/E|", "sqrt((pi/3)/log(1/4+T^2))", std::abs(f), std::sqrt(kVolume / std::log(0.25 + T * T)), 1e-14));
        cplx ph = std::exp(log_xi(cplx(1.0, 2 * T)));
        out.push_back(compare_check("normalization phase", "xi(1+2iT)/|xi(1+2iT)|", f / std::abs(f), ph / std::abs(ph), 1e-12));
    }
    return out;
}

std::vector<Check> checks_eisenstein_lattice(int points) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> sr(1.2, 3.0), si(-4.0, 4.0), xr(-0.5, 0.5), yr(0.0, 1.0);
    double worst = 0.0;
    std::string where;
    for (int i = 0; i < points; ++i) {
        cplx s(sr(rng), si(rng));
        double x = xr(rng);
        double y = std::sqrt(std::max(0.0, 1.0 - x * x)) + 2.0 * yr(rng);
        cplx a = eisenstein_eval({x, y}, s).value, b = eisenstein_lattice_sum({x, y}, s);
        double e = std::abs(a - b) / std::abs(b);
        if (e > worst) {
            worst = e;
            where = "worst at s=" + std::to_string(s.real()) + "+" + std::to_string(s.imag()) + "i";
        }
    }
    return {bound_check("Eisenstein Fourier vs lattice sum, " + std::to_string(points) + " points", "lattice direct sum", worst, 1e-8, where)};
}

std::vector<Check> checks_eisenstein_automorphy(int points) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> sr(0.55, 2.5), si(-12.0, 12.0), xr(-0.5, 0.5), yr(0.0, 1.5);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        cplx s(sr(rng), si(rng));
        double x = xr(rng);
        UpperHalfPoint z{x, std::sqrt(1.0 - x * x) + yr(rng)};
        UpperHalfPoint w = random_modular_image(z, rng, 0.2);
        Estimate a = eisenstein_eval(z, s), b = eisenstein_eval(w, s);
        double allowed = 10.0 * (a.abs_err + b.abs_err) + 1e-12 * std::abs(a.value);
        worst = std::max(worst, std::abs(a.value - b.value) / allowed);
    }
    return {bound_check("Eisenstein automorphy, " + std::to_string(points) + " random points", "E(gz) = E(z) within propagated error", worst, 1.0)};
}

std::vector<Check> checks_quadrature() {
    std::vector<Check> out;
    out.push_back(guarded("vol(F) with cusp tail", "pi/3", [] {
        QuadratureConfig cfg;
        cfg.height_cutoff = 1e4;
        cfg.target_tol = 1e-6;
        cfg.cusp_tail = [](double Y) { return cplx(1.0 / Y, 0.0); };
        QuadResult v = integrate_fundamental([](double, double) { return cplx(1.0, 0.0); }, cfg);
        return compare_check("vol(F) with cusp tail", "pi/3", v.value, kVolume, 1e-6);
    }));
    out.push_back(guarded("measure of C_A", "1/A", [] {
        double A = 3.0;
        QuadratureConfig cfg;
        cfg.height_cutoff = 1e4;
        cfg.target_tol = 1e-6;
        cfg.breakpoints = {A};
        cfg.cusp_tail = [](double Y) { return cplx(1.0 / Y, 0.0); };
        QuadResult c = integrate_fundamental([A](double, double y) { return cplx(y > A ? 1.0 : 0.0, 0.0); }, cfg);
        return compare_check("measure of C_A", "1/A", c.value, 1.0 / A, 1e-6);
    }));
    QuadratureConfig g;
    g.height_cutoff = 6.0;
    auto f1 = [](double x, double y) { return cplx(std::exp(-y) * std::cos(2 * M_PI * x), 0.0); };
    auto f2 = [](double x, double y) { return cplx(y * y * std::exp(-2 * y) + x * x, 0.3); };
    out.push_back(guarded("linearity", "same grid", [&] {
        cplx a = integrate_fundamental(f1, g).value, b = integrate_fundamental(f2, g).value;
        cplx ab = integrate_fundamental([&](double x, double y) { return f1(x, y) + f2(x, y); }, g).value;
        return compare_check("linearity", "same grid", ab, a + b, 1e-12);
    }));
    // the renormalized integral of a product of two Eisenstein series vanishes
    out.push_back(guarded("regularized E(.,0.8)E(.,0.7) = 0, stable in Y_max", "Zagier: R.N. of E E is 0", [] {
        std::vector<cplx> s{0.8, 0.7};
        EisensteinProduct F(s);
        GrowthSpec gr = eisenstein_product_growth(s);
        QuadratureConfig q1, q2;
        q1.height_cutoff = 6.0;
        q2.height_cutoff = 12.0;
        q1.target_tol = q2.target_tol = 1e-7;
        cplx r1 = regularized_integral(F, gr, q1).value, r2 = regularized_integral(F, gr, q2).value;
        Check c = bound_check("regularized E(.,0.8)E(.,0.7) = 0, stable in Y_max", "Zagier: R.N. of E E is 0",
                              std::max(std::abs(r1), std::abs(r2)), 1e-6);
        c.detail = fmt("Y=6: %.3e, Y=12: %.3e", r1.real(), r2.real());
        return c;
    }));
    return out;
}

Check check_maass_norm(const MaassFormRecord& rec) {
    return guarded("int_F phi^2 = 1 (" + rec.label + ")", "L^2 normalization via quadrature", [&] {
        QuadratureConfig cfg;
        cfg.height_cutoff = 6.0;
        cfg.nx = cfg.ny = 64;
        cfg.target_tol = 1e-5;
        QuadResult q = integrate_fundamental(MaassPower(rec, 2), cfg);
        Check c = compare_check("int_F phi^2 = 1 (" + rec.label + ")", "L^2 normalization via quadrature", q.value, 1.0, 0.05);
        c.detail += fmt(" quad_err=%.1e", q.abs_err);
        return c;
    });
}

std::vector<Check> checks_forms_maass(const std::vector<MaassFormRecord>& recs) {
    std::vector<Check> out;
    out.push_back(bool_check("fixture has 3 records", "shipped fixture", recs.size() == 3));
    bool enough = !recs.empty();
    for (const auto& r : recs) enough = enough && r.coefficients.size() >= 2000 && r.sym2_L_value.has_value();
    out.push_back(bool_check("fixtures carry >= 2000 coefficients and L(1,Sym^2)", "shipped fixture", enough));
    const double published[] = {13.7797513519, 17.7385633810, 19.4234814708};
    for (std::size_t i = 0; i < recs.size() && i < 3; ++i)
        out.push_back(compare_check("spectral parameter " + recs[i].label, "published eigenvalue", recs[i].spectral_parameter, published[i], 1e-9, false));
    if (recs.empty()) return out;
    for (const auto& r : recs) {
        double worst = 0.0;
        for (std::size_t m = 2; m <= 45; ++m)
            for (std::size_t n = 2; n <= 45; ++n)
                if (std::gcd(m, n) == 1 && m * n <= r.coefficients.size())
                    worst = std::max(worst, std::abs(r.lambda(m * n) - r.lambda(m) * r.lambda(n)));
        for (std::size_t p : {2, 3, 5, 7, 11, 13, 29, 31})
            worst = std::max(worst, std::abs(r.lambda(p * p) - r.lambda(p) * r.lambda(p) + 1.0));
        out.push_back(bound_check("Hecke relations " + r.label, "multiplicativity and lambda(p^2) = lambda(p)^2 - 1", worst, 1e-9));
    }
    for (const auto& r : recs) {
        out.push_back(guarded("automorphy " + r.label, "phi(gz) = phi(z)", [&] {
            std::mt19937_64 rng(99);
            std::uniform_real_distribution<double> xr(-0.5, 0.5), yr(0.0, 1.0);
            double worst = 0.0;
            for (int i = 0; i < 25; ++i) {
                double x = xr(rng);
                UpperHalfPoint z{x, std::sqrt(1.0 - x * x) + yr(rng)};
                UpperHalfPoint w = random_modular_image(z, rng, 0.15);
                worst = std::max(worst, std::abs(maass_eval(r, z).value - maass_eval(r, w).value));
            }
            return bound_check("automorphy " + r.label, "phi(gz) = phi(z)", worst, 1e-6);
        }));
    }
    const MaassFormRecord& r0 = recs.front();
    out.push_back(bound_check("|phi(0,50)| cusp decay", "cuspidality", std::abs(maass_eval(r0, {0.0, 50.0}).value), 1e-10));
    for (const auto& r : recs) out.push_back(check_maass_norm(r));
    out.push_back(guarded("<phi, 1> = 0", "cuspidality", [&] {
        QuadratureConfig cfg;
        cfg.height_cutoff = 6.0;
        cfg.target_tol = 1e-6;
        return compare_check("<phi, 1> = 0", "cuspidality", integrate_fundamental(MaassLinear(r0), cfg).value, 0.0, 1e-6, false);
    }));
    out.push_back(guarded("Rankin-Selberg unfolding at s = 4", "Dirichlet series x Mellin-Barnes", [&] {
        QuadratureConfig cfg;
        cfg.height_cutoff = 6.0;
        cfg.nx = cfg.ny = 64;
        cfg.target_tol = 1e-7;
        const double s = 4.0, t = r0.spectral_parameter;
        cplx q = integrate_fundamental(MaassSquareTimesEisenstein(r0, s), cfg).value;
        double ser = 0.0;
        for (std::size_t n = r0.coefficients.size(); n >= 1; --n) ser += r0.lambda(n) * r0.lambda(n) / std::pow(double(n), s);
        // 8 rho(1)^2 (2 pi)^{-s} sum lambda(n)^2 n^{-s} int_0^inf K_it(x)^2 x^{s-1} dx
        cplx mb = mellin_barnes_bessel(s, cplx(0, t), cplx(0, t));
        cplx rhs = 8.0 * std::cosh(M_PI * t) / (2.0 * *r0.sym2_L_value) * std::pow(2 * M_PI, -s) * ser * mb;
        return compare_check("Rankin-Selberg unfolding at s = 4", "Dirichlet series x Mellin-Barnes", q, rhs, 1e-6);
    }));
    out.push_back(guarded("phi^2 quadrature stable under refinement", "nx, ny, Y_max doubling", [&] {
        QuadratureConfig a, b;
        a.height_cutoff = 5.0;
        b.height_cutoff = 10.0;
        a.nx = a.ny = 48;
        b.nx = b.ny = 96;
        a.target_tol = b.target_tol = 1e-6;
        QuadResult qa = integrate_fundamental(MaassPower(r0, 2), a), qb = integrate_fundamental(MaassPower(r0, 2), b);
        return bound_check("phi^2 quadrature stable under refinement", "nx, ny, Y_max doubling",
                           std::abs(qa.value - qb.value), std::max(1e-12, 10.0 * (qa.abs_err + qb.abs_err)));
    }));
    {
        std::string text = serialize_fixture(recs);
        out.push_back(bool_check("fixture round trip byte-identical", "serialize(parse(file))",
                                 serialize_fixture(parse_fixture_text(text)) == text));
        std::string cut = text.substr(0, text.size() / 2);
        bool ok = false;
        std::string why;
        try {
            parse_fixture_text(cut);
        } catch (const ParseError& e) {
            ok = e.byte_offset > 0 && e.byte_offset <= cut.size() && e.line >= 1;
            why = e.what();
        }
        out.push_back(bool_check("truncated fixture -> parse error with byte offset", "ingest contract", ok, why));
        MaassFormRecord bad = r0;
        bad.coefficients[6] = 50.0;
        validate_record(bad);
        MaassFormRecord back = parse_record(serialize_record(bad));
        out.push_back(bool_check("Ramanujan soft check flags, record still loads", "ingest contract", back.ramanujan_warning && !r0.ramanujan_warning));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

std::vector<Check> checks_maass_selberg() {
    std::vector<Check> out;
    for (double T : {3.0, 5.0, 8.0})
        for (double A : {1.5, 2.0, 4.0}) {
            std::string name = fmt("Maass-Selberg T=%g A=%g", T, A);
            out.push_back(guarded(name, "quadrature of |E^A|^2", [&] {
                QuadratureConfig cfg;
                cfg.height_cutoff = std::max(8.0, 4.0 * A);
                cfg.breakpoints = {A};
                cfg.target_tol = 1e-5;
                QuadResult q = integrate_fundamental(TruncatedEisensteinNormSq(T, A), cfg);
                return compare_check(name, "quadrature of |E^A|^2", maass_selberg_truncated_norm(T, A), q.value, 1e-3);
            }));
        }
    double T = 50.0, A = 2.0;
    double d = maass_selberg_truncated_norm(T, A * A) - maass_selberg_truncated_norm(T, A) - 2.0 * std::log(A);
    out.push_back(bound_check("Maass-Selberg A -> A^2 shift", "2 log A + O(1/T)", std::abs(d), 2.0 / T));
    return out;
}

std::vector<Check> checks_mellin_barnes() {
    std::vector<Check> out;
    struct P {
        double s, t1, t2;
    };
    for (P p : {P{2, 0, 0}, P{3, 0, 0}, P{2, 1.5, 0.5}, P{3, 3, 2}, P{4, 2.5, 2.5}}) {
        std::string name = fmt("Mellin-Barnes s=%g t1=%g t2=%g", p.s, p.t1, p.t2);
        out.push_back(guarded(name, "Bessel product quadrature", [&] {
            cplx cf = mellin_barnes_bessel(p.s, cplx(0, p.t1), cplx(0, p.t2));
            return compare_check(name, "Bessel product quadrature", cf, bessel_mellin_quadrature(p.s, p.t1, p.t2), 1e-8);
        }));
    }
    out.push_back(compare_check("Mellin-Barnes s=2, mu=nu=0 equals 1/2", "closed form", mellin_barnes_bessel(2.0, 0.0, 0.0), 0.5, 1e-14));
    out.push_back(compare_check("Mellin-Barnes mu <-> nu", "symmetry", mellin_barnes_bessel(3.3, cplx(0, 1.2), cplx(0, 0.4)),
                                mellin_barnes_bessel(3.3, cplx(0, 0.4), cplx(0, 1.2)), 1e-14));
    return out;
}

std::vector<Check> checks_que_shrinking() {
    std::vector<Check> out;
    for (double T : {0.0, 2.0, 17.0}) {
        auto [l, r] = que_shrinking_dirichlet_identity(3.0, T, 100000);
        out.push_back(compare_check(fmt("QUE-shrinking identity T=%g", T), "truncated Dirichlet series N=1e5", l, r, 1e-8));
    }
    double z3 = hurwitz_zeta_oracle(3.0, 1.0).real(), z6 = hurwitz_zeta_oracle(6.0, 1.0).real();
    auto [l0, r0] = que_shrinking_dirichlet_identity(3.0, 0.0, 1000);
    out.push_back(compare_check("T=0 right side = zeta(3)^4/zeta(6)", "Ramanujan identity", r0, std::pow(z3, 4) / z6, 1e-12));
    (void)l0;
    double e3 = std::abs(que_shrinking_dirichlet_identity(3.0, 2.0, 1000).first - que_shrinking_dirichlet_identity(3.0, 2.0, 1000).second);
    double e4 = std::abs(que_shrinking_dirichlet_identity(3.0, 2.0, 10000).first - que_shrinking_dirichlet_identity(3.0, 2.0, 10000).second);
    double e5 = std::abs(que_shrinking_dirichlet_identity(3.0, 2.0, 100000).first - que_shrinking_dirichlet_identity(3.0, 2.0, 100000).second);
    out.push_back(bool_check("QUE-shrinking truncation error decreasing in N", "N = 1e3, 1e4, 1e5", e4 < e3 && e5 < e4,
                             fmt("%.2e %.2e %.2e", e3, e4, e5)));
    auto [lp, rp] = que_shrinking_dirichlet_identity(3.0, 2.0, 2000);
    auto [lm, rm] = que_shrinking_dirichlet_identity(3.0, -2.0, 2000);
    out.push_back(bool_check("QUE-shrinking symmetric in T", "eta_T real", lp == lm && std::abs(rp - rm) < 1e-14 * std::abs(rp)));
    return out;
}

Check check_zagier(cplx s1, cplx s2, cplx s3) {
    char nm[160];
    std::snprintf(nm, sizeof nm, "Zagier triple product (%g, %g, %g)", s1.real(), s2.real(), s3.real());
    const std::string name = nm, oracle = "regularized quadrature of E E E";
    try {
        cplx cf = zagier_triple_product(s1, s2, s3);
        std::vector<cplx> s{0.5 + s1, 0.5 + s2, 0.5 + s3};
        QuadratureConfig cfg;
        cfg.height_cutoff = 8.0;
        cfg.target_tol = 1e-5;
        QuadResult q = regularized_integral(EisensteinProduct(s), eisenstein_product_growth(s), cfg);
        QuadResult qt = regularized_integral_truncation(EisensteinProduct(s), eisenstein_product_growth(s), cfg);
        Check c = compare_check(name, oracle, q.value, cf, 1e-3);
        c.detail += " truncation_route=" + std::to_string(qt.value.real());
        if (std::abs(qt.value - q.value) > 1e-3 * std::abs(cf)) {
            c.pass = false;
            c.detail += " (routes disagree)";
        }
        return c;
    } catch (const std::exception& e) {
        return bool_check(name, oracle, false, std::string("undefined: ") + e.what());
    }
}

std::vector<Check> checks_identities_misc() {
    std::vector<Check> out;
    const double c0_closed = 0.5 * kEulerGamma - 0.5 * std::log(M_PI) - std::log(2.0);
    out.push_back(compare_check("Laurent constant c_0 of xi(s)/(s-1)", "closed form gamma/2 - log(pi)/2 - log 2", xi_laurent_c0(), c0_closed, 1e-8));
    out.push_back(compare_check("main term (6/pi) log(1/4 + t_phi^2 T^2) at (0,0)", "(6/pi) log(1/4)", main_term_theorem_1_1(0, 0), 6.0 / M_PI * std::log(0.25), 1e-14));
    out.push_back(compare_check("main term (6/pi) log(1/4 + t_phi^2 T^2) at (1e3,1e3)", "direct evaluation", main_term_theorem_1_1(1e3, 1e3), 6.0 / M_PI * std::log(0.25 + 1e6), 1e-14));
    out.push_back(compare_check("main term (6/pi) log(1/4 + t_phi^2 T^2) symmetric", "swap", main_term_theorem_1_1(3, 70), main_term_theorem_1_1(70, 3), 1e-15));
    {
        double t = 30.0, h = 1e-4;
        auto lg = [&](double s) { return sym2_log_gamma_factor(s, t).real(); };
        double d1 = (lg(1 + h) - lg(1 - h)) / (2 * h), d2 = (lg(1 + h / 2) - lg(1 - h / 2)) / h;
        out.push_back(compare_check("Lambda'/Lambda archimedean assembly", "finite difference of log gamma factor",
                                    sym2_completed_log_derivative(t, 0.0), (4 * d2 - d1) / 3, 1e-8));
    }
    {
        double tp = 1e4, T = 1e4;
        LValueBundle lv;
        lv.sym2_at_1 = 1.0;
        lv.sym2_log_derivative_at_1 = 0.0;
        lv.set_sym2(cplx(1, -2 * T), 1.0);
        lv.set_sym2(cplx(1, 2 * T), 1.0);
        MainTermParts p = r_main_term_parts(tp, T, lv);
        double lead = p.bracket / xi_completed(2.0).real();
        out.push_back(bound_check("R main term bracket vs closed main term", "leading bracket",
                                  std::abs(lead / main_term_theorem_1_1(tp, T) - 1.0), 0.2));
        out.push_back(bound_check("unfolding terms negligible for T = t_phi large", "Gamma decay", std::abs(p.unfolding), 1e-2));
    }
    {
        LValueBundle lv;
        lv.sym2_at_1 = 1.0;
        double worst = 0.0, lo = 1e9, hi = 0.0;
        for (double tp : {20.0, 55.0, 120.0, 200.0})
            for (double T : {20.0, 60.0, 130.0, 200.0}) {
                lv.set_sym2(cplx(1, -2 * T), 1.0);
                RankinSelbergValue v = rankin_selberg_phi2_E(T, lv, tp);
                double r = v.gamma_factor / v.envelope;
                lo = std::min(lo, r);
                hi = std::max(hi, r);
                worst = std::max(worst, std::max(r / 2.0, 0.5 / r));
            }
        out.push_back(bound_check("Rankin-Selberg envelope vs exact Gamma", "ratio within [0.5, 2]", worst, 1.0, fmt("ratio range [%.3f, %.3f]", lo, hi)));
        lv.set_sym2(cplx(1, -2 * 10.0), 1.0);
        RankinSelbergValue a = rankin_selberg_phi2_E(10.0, lv, 25.0);
        out.push_back(compare_check("envelope at T <= t_phi", "(1+T)^{-1/2}", a.envelope, 1.0 / std::sqrt(11.0), 1e-14));
        lv.set_sym2(cplx(1, -2 * 40.0), 1.0);
        RankinSelbergValue b = rankin_selberg_phi2_E(40.0, lv, 20.0);
        out.push_back(compare_check("envelope at T = 2 t_phi", "exp(-pi t_phi)(1+T)^{-1/2}", b.envelope, std::exp(-M_PI * 20.0) / std::sqrt(41.0), 1e-12));
    }
    {
        std::map<std::string, double> lam{{"Lambda(1/2,phi_j)", 0.7}, {"Lambda(1/2,Sym2phi x phi_j)", 1.3}};
        std::map<std::string, double> sy{{"Lambda(1,Sym2phi)", 0.4}, {"Lambda(1,Sym2phi_j)", 2.5}};
        double v = watson_cusp_rhs(lam, sy);
        out.push_back(compare_check("Watson quotient", "hand arithmetic", v, 0.7 * 1.3 / (8 * 0.16 * 2.5), 1e-15));
        sy["Lambda(1,Sym2phi)"] = 0.8;
        out.push_back(compare_check("Watson homogeneity", "doubling Lambda(1,Sym2phi) divides by 4", watson_cusp_rhs(lam, sy), v / 4, 1e-15));
        lam["Lambda(1/2,phi_j)"] = 0.0;
        out.push_back(compare_check("Watson vanishing central value", "trivial", watson_cusp_rhs(lam, sy), 0.0, 0.0, false));
    }
    {
        LValueBundle lv;
        lv.sym2_at_1 = 1.0;
        lv.set_sym2(cplx(0.5, -1.0), 1.0);
        ContinuousSpectrumParts p = continuous_spectrum_parts(1.0, 10.0, 20.0, lv);
        cplx s(0.5, 1.0);
        double z = std::abs(hurwitz_zeta_oracle(s, 1.0));
        double num = z * z * z * std::abs(hurwitz_zeta_oracle(s + cplx(0, 20), 1.0) * hurwitz_zeta_oracle(s - cplx(0, 20), 1.0));
        double den = 2.0 * std::pow(20.0, 0.25) * std::pow(40.0, 0.25);
        out.push_back(compare_check("continuous-spectrum integrand at (1,10,20)", "independent zeta recomputation", p.value, num / den, 1e-10));
        lv.set_sym2(cplx(0.5, 0.0), 1.0);
        out.push_back(compare_check("continuous-spectrum denominator at tau=0", "(1+2T)^{1/4}(1+2t_phi)^{1/4}",
                                    continuous_spectrum_parts(0.0, 10.0, 20.0, lv).denominator, std::pow(21.0, 0.25) * std::pow(41.0, 0.25), 1e-15));
    }
    {
        LValueBundle lv;
        lv.sym2_at_1 = 1.2;
        lv.sym2_log_derivative_at_1 = 0.4;
        double T = 3.0, tp = 13.78;
        lv.set_sym2(cplx(1, -2 * T), cplx(0.9, 0.2));
        lv.set_sym2(cplx(1, 2 * T), cplx(0.9, -0.2));
        ResidueTerms r = appendix_b_residues(tp, T, 2.0, lv);
        out.push_back(bound_check("J' real for conjugate inputs", "conjugate summands", std::abs(r.J_main.imag()), 1e-12 * std::max(1.0, std::abs(r.J_main))));
        LValueBundle lv2 = lv;
        lv2.sym2_log_derivative_at_1 = 1.4;
        ResidueTerms r2 = appendix_b_residues(tp, T, 2.0, lv2);
        out.push_back(compare_check("I' linear in L'/L", "slope 1/xi(2)", r2.I_main - r.I_main, 1.0 / xi_completed(2.0).real(), 1e-12));
        cplx pref = std::exp(log_xi(cplx(0, 2 * T)) - log_xi(cplx(1, 2 * T)));
        cplx w = cplx(1, -2 * T);
        cplx hand = std::exp(sym2_log_gamma_factor(w, tp) - sym2_log_gamma_factor(1.0, tp) + log_xi(w) - log_xi(2.0 * w)) *
                    cplx(0.9, 0.2) / (2.0 * 1.2);
        out.push_back(compare_check("J' assembled from xi components", "hand assembly", r.J_main, 2.0 * (pref * hand).real(), 1e-10));
    }
    {
        cplx s1(0.31, 0.4), s2(0.12, -0.7), s3(0.05, 1.1);
        cplx v = zagier_triple_product(s1, s2, s3);
        double worst = 0.0;
        cplx p[3] = {s1, s2, s3};
        std::sort(p, p + 3, [](cplx a, cplx b) { return a.real() < b.real(); });
        do {
            worst = std::max(worst, std::abs(zagier_triple_product(p[0], p[1], p[2]) - v) / std::abs(v));
        } while (std::next_permutation(p, p + 3, [](cplx a, cplx b) { return a.real() < b.real(); }));
        out.push_back(bound_check("Zagier quotient invariant under permutations", "xi(s) = xi(1-s) relabeling", worst, 1e-10));
        bool pole = false;
        std::string msg;
        try {
            zagier_triple_product(0.25, 1.0 / 6, 1.0 / 12);
        } catch (const PoleError& e) {
            pole = true;
            msg = e.what();
        }
        out.push_back(bool_check("Zagier pole configuration reported", "1/2 + s1 + s2 + s3 = 1", pole, msg));
        cplx q = zagier_triple_product(0.25, 0.25, 0.25);
        cplx hand = xi_completed(1.25) * xi_completed(0.75) * xi_completed(0.75) * xi_completed(0.25) / std::pow(xi_completed(1.5), 3);
        out.push_back(compare_check("Zagier at (1/4,1/4,1/4)", "xi components", q, hand, 1e-12));
    }
    {
        double x = 50.0, h = 1e-4;
        auto a = [](double u) { return log_xi(cplx(1.0, 2.0 * u)).imag(); };
        double d1 = arg_diff(a(x + h), a(x - h)) / (2 * h), d2 = arg_diff(a(x + h / 2), a(x - h / 2)) / h;
        out.push_back(compare_check("d/dx arg xi(1+2ix) at x=50", "finite difference", xi_phase_derivative(x).exact, (4 * d2 - d1) / 3, 1e-6, false));
        PhaseDerivative p = xi_phase_derivative(1e3);
        out.push_back(bound_check("phase derivative minus leading model at 1e3", "Vinogradov-Korobov envelope", std::abs(p.exact - p.leading), 10.0));
    }
    {
        UpperHalfPoint z{0.0, 1.2};
        double d[3];
        int i = 0;
        for (double T : {0.01, 0.005, 0.0025}) d[i++] = std::abs(eisenstein_eval(z, cplx(1.0, T)).value - eisenstein_near_one(T));
        cplx r1 = eisenstein_eval(z, cplx(1.0, 0.01)).value - eisenstein_near_one(0.01);
        cplx r2 = eisenstein_eval(z, cplx(1.0, 0.005)).value - eisenstein_near_one(0.005);
        cplx r3 = eisenstein_eval(z, cplx(1.0, 0.0025)).value - eisenstein_near_one(0.0025);
        out.push_back(bool_check("E(z,1+iT) - 3/(pi i T) bounded as T halves", "evaluation at T = 0.01, 0.005, 0.0025",
                                 d[2] < 2.0 * d[0] + 1.0 && std::abs(r3 - r2) < 0.75 * std::abs(r2 - r1),
                                 fmt("%.4f %.4f %.4f", d[0], d[1], d[2])));
        out.push_back(compare_check("3/(pi i T) at T = 0.01", "substitution", eisenstein_near_one(0.01), cplx(0, -300.0 / M_PI), 1e-14));
    }
    return out;
}

std::vector<Check> checks_decorrelation() {
    std::vector<Check> out;
    const double tau = 1e3;
    const double a0 = log_xi(cplx(1.0, 2.0 * tau)).imag();
    double worst = 0.0;
    for (int k = -20; k <= 20; ++k) {
        if (k == 0) continue;
        double d = k * 5e-5, t = tau + d;
        double exact = arg_diff(log_xi(cplx(1.0, 2.0 * t)).imag(), a0);  // arg xi(1+2it) + arg xi(1-2i tau)
        double model = d * std::log(tau);
        double err = std::abs(std::polar(1.0, model) - std::polar(1.0, exact));
        worst = std::max(worst, err / (std::abs(d) * std::log(t) * 0.5));
    }
    out.push_back(bound_check("phase model exp(i(t-tau)log tau), tau = 1e3", "exact xi-phase difference", worst, 1.0,
                              "measured is the error over |t-tau| log(t)/2"));
    const double f0 = decorrelation_main_term(tau, tau);
    double jump = std::max(std::abs(decorrelation_main_term(tau + 1e-10, tau) - f0), std::abs(decorrelation_main_term(tau - 1e-10, tau) - f0));
    out.push_back(bound_check("decorrelation continuous at t = tau", "left/right limits", jump / f0, 1e-12));
    double seam = 1e-4 / std::log(tau);
    double below = decorrelation_main_term(tau + seam * (1 - 1e-9), tau), above = decorrelation_main_term(tau + seam * (1 + 1e-9), tau);
    out.push_back(bound_check("decorrelation series/sine seam", "branch consistency", std::abs(below - above) / f0, 1e-12));
    out.push_back(compare_check("decorrelation at t = tau = e", "6/pi", decorrelation_main_term(M_E, M_E), 6.0 / M_PI, 1e-14));
    out.push_back(compare_check("decorrelation at t - tau = 1e-8, tau = 100", "series expansion", decorrelation_main_term(100 + 1e-8, 100),
                                6.0 / M_PI * std::log(100.0), 1e-12));
    double z = decorrelation_main_term(100 + M_PI / std::log(100.0), 100);
    out.push_back(bound_check("decorrelation zero at (t-tau) log tau = pi", "sine zero", std::abs(z), 1e-13));
    return out;
}

}  // namespace automorph
