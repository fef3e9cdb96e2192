#include "automorph/formulas.hpp"

#include <cmath>
#include <sstream>

#include "automorph/forms.hpp"

namespace automorph {

namespace {

constexpr double kSymTol = 1e-12;

std::string fmt(cplx z) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << z.real() << "," << z.imag() << ")";
    return os.str();
}

bool is_xi_pole(cplx s) { return std::abs(s) < 1e-14 || std::abs(s - 1.0) < 1e-14; }

cplx require_sym2(const LValueBundle& l, cplx s) {
    auto v = l.sym2_at(s);
    if (!v) throw MissingInput("L(s, Sym^2 phi) not supplied at s = " + fmt(s));
    return *v;
}

}  // namespace

void LValueBundle::validate() const {
    if (!(sym2_at_1 > 0.0)) throw std::invalid_argument("LValueBundle: sym2_at_1 must be positive");
}

std::optional<cplx> LValueBundle::sym2_at(cplx s) const {
    for (const auto& [k, v] : sym2_at_s)
        if (std::abs(k - s) <= kSymTol * (1.0 + std::abs(s))) return v;
    return std::nullopt;
}

void LValueBundle::set_sym2(cplx s, cplx value) {
    for (auto& kv : sym2_at_s)
        if (std::abs(kv.first - s) <= kSymTol * (1.0 + std::abs(s))) {
            kv.second = value;
            return;
        }
    sym2_at_s.emplace_back(s, value);
}

double main_term_theorem_1_1(double t_phi, double T) {
    return 3.0 / M_PI * (std::log(0.25 + t_phi * t_phi) + std::log(0.25 + T * T));
}

double xi_laurent_c0() {
    // symmetric part of xi(1+h) - 1/h is c_0 + O(h^2)
    auto g = [](double h) {
        double a = xi_completed(cplx(1.0 + h, 0.0)).real() - 1.0 / h;
        double b = xi_completed(cplx(1.0 - h, 0.0)).real() + 1.0 / h;
        return 0.5 * (a + b);
    };
    double h = 1e-2;
    double r0 = g(h), r1 = g(h / 2), r2 = g(h / 4);
    double e1 = (4.0 * r1 - r0) / 3.0, e2 = (4.0 * r2 - r1) / 3.0;
    return (16.0 * e2 - e1) / 15.0;
}

cplx sym2_log_gamma_factor(cplx s, double t_phi) {
    const cplx it(0.0, t_phi);
    return -1.5 * s * std::log(M_PI) + log_gamma(0.5 * s) + log_gamma(0.5 * s + it) + log_gamma(0.5 * s - it);
}

double sym2_completed_log_derivative(double t_phi, double l_log_derivative) {
    // -3/2 log pi + psi(1/2)/2 + Re psi(1/2 + i t)
    double arch = -1.5 * std::log(M_PI) + 0.5 * digamma(cplx(0.5, 0.0)).real() +
                  digamma(cplx(0.5, t_phi)).real();
    return l_log_derivative + arch;
}

RankinSelbergValue rankin_selberg_phi2_E(double T, const LValueBundle& lvals, double t_phi) {
    lvals.validate();
    const cplx w(1.0, -2.0 * T);
    const cplx Lw = require_sym2(lvals, w);
    RankinSelbergValue r;
    if (T == 0.0) throw PoleError("rankin_selberg_phi2_E: zeta(1-2iT) has a pole at T = 0");
    r.quotient = Lw * zeta(w) / (2.0 * lvals.sym2_at_1 * zeta(2.0 * w));
    // Lambda(w)xi(w)/xi(2w) = pi^{-w} Gamma(w/2)^2 Gamma(w/2 +- it)/Gamma(w) L(w) zeta(w)/zeta(2w);
    // Lambda(1) = L(1)/cosh(pi t).
    const cplx it(0.0, t_phi);
    cplx lg = -w * std::log(M_PI) + 2.0 * log_gamma(0.5 * w) + log_gamma(0.5 * w + it) +
              log_gamma(0.5 * w - it) - log_gamma(w);
    // log cosh(pi t) without overflow
    double a = M_PI * std::abs(t_phi);
    double lcosh = a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
    cplx g = std::exp(lg + lcosh);
    r.exact = g * r.quotient;
    r.gamma_factor = std::abs(g);
    double e = std::abs(T + t_phi) + std::abs(T - t_phi) - 2.0 * std::abs(t_phi);
    r.envelope = std::exp(-0.5 * M_PI * e) / std::sqrt(1.0 + std::abs(T));
    return r;
}

MainTermParts r_main_term_parts(double t_phi, double T, const LValueBundle& lvals) {
    lvals.validate();
    if (!lvals.sym2_log_derivative_at_1) throw MissingInput("r_main_term: L'/L(1, Sym^2 phi) not supplied");
    if (T == 0.0) throw PoleError("r_main_term: T = 0 is a pole of xi(2iT)");
    MainTermParts p;
    const cplx s(1.0, 2.0 * T);
    const double xi2 = xi_completed(2.0).real();
    p.bracket = sym2_completed_log_derivative(t_phi, *lvals.sym2_log_derivative_at_1) +
                2.0 * xi_log_derivative(s).real() - 2.0 * xi_log_derivative(2.0).real() + xi_laurent_c0();
    const cplx pref = std::exp(log_xi(cplx(0.0, 2.0 * T)) - log_xi(s));
    const cplx plus = rankin_selberg_phi2_E(T, lvals, t_phi).exact;    // <phi^2, E(., 1+2iT)>
    const cplx minus = rankin_selberg_phi2_E(-T, lvals, t_phi).exact;  // <phi^2, E(., 1-2iT)>
    p.unfolding = pref * plus + std::conj(pref) * minus;
    p.value = p.bracket / xi2 + p.unfolding;
    return p;
}

cplx r_main_term(double t_phi, double T, const LValueBundle& lvals) {
    return r_main_term_parts(t_phi, T, lvals).value;
}

double maass_selberg_truncated_norm(double T, double A) {
    if (!(T >= 1.0)) throw std::invalid_argument("maass_selberg_truncated_norm: T >= 1 required");
    if (!(A > 1.0)) throw std::invalid_argument("maass_selberg_truncated_norm: A > 1 required");
    const cplx phi = scattering_phi(cplx(0.5, -T));
    const cplx osc = phi * std::polar(1.0, 2.0 * T * std::log(A));
    return 2.0 * std::log(A) + 4.0 * xi_log_derivative(cplx(1.0, 2.0 * T)).real() + osc.imag() / T;
}

std::vector<cplx> zagier_numerator_arguments(cplx s1, cplx s2, cplx s3) {
    return {0.5 + s1 + s2 + s3, 0.5 + s1 - s2 + s3, 0.5 + s1 + s2 - s3, 0.5 + s1 - s2 - s3};
}

cplx zagier_triple_product(cplx s1, cplx s2, cplx s3) {
    auto num = zagier_numerator_arguments(s1, s2, s3);
    std::vector<cplx> den = {1.0 + 2.0 * s1, 1.0 + 2.0 * s2, 1.0 + 2.0 * s3};
    std::string bad;
    for (cplx a : num)
        if (is_xi_pole(a)) bad += " " + fmt(a);
    for (cplx a : den)
        if (is_xi_pole(a)) bad += " " + fmt(a);
    if (!bad.empty()) throw PoleError("zagier_triple_product: xi argument in {0,1}:" + bad);
    cplx l(0.0, 0.0);
    for (cplx a : num) l += log_xi(a);
    for (cplx a : den) l -= log_xi(a);
    return std::exp(l);
}

std::pair<cplx, cplx> que_shrinking_dirichlet_identity(cplx s, double T, std::uint64_t N) {
    if (!(s.real() >= 2.0)) throw std::invalid_argument("que_shrinking_dirichlet_identity: Re(s) >= 2 required");
    if (N == 0) throw std::invalid_argument("que_shrinking_dirichlet_identity: N must be positive");
    // eta_T(n) = sum_{ab=n} (a/b)^{iT}
    std::vector<double> eta(N + 1, 0.0);
    for (std::uint64_t a = 1; a <= N; ++a)
        for (std::uint64_t b = 1; a * b <= N; ++b)
            eta[a * b] += std::cos(T * std::log(double(a) / double(b)));
    cplx left(0.0, 0.0);
    for (std::uint64_t n = N; n >= 1; --n) left += eta[n] * eta[n] * std::exp(-s * std::log(double(n)));
    const cplx i2T(0.0, 2.0 * T);
    cplx z = zeta(s);
    cplx right = z * z * zeta(s + i2T) * zeta(s - i2T) / zeta(2.0 * s);
    return {left, right};
}

cplx mellin_barnes_bessel(cplx s, cplx mu, cplx nu) {
    if (!(s.real() > std::abs(mu.real()) + std::abs(nu.real())))
        throw std::invalid_argument("mellin_barnes_bessel: Re(s) > |Re mu| + |Re nu| required");
    cplx l = (s - 3.0) * std::log(2.0) - log_gamma(s);
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            cplx z = 0.5 * (s + double(a) * mu + double(b) * nu);
            if (std::abs(z - std::round(z.real())) < 1e-14 && z.real() <= 0.0)
                throw PoleError("mellin_barnes_bessel: Gamma pole at " + fmt(z));
            l += log_gamma(z);
        }
    return std::exp(l);
}

double watson_cusp_rhs(const std::map<std::string, double>& lambda_values,
                       const std::map<std::string, double>& sym2_values) {
    auto get = [](const std::map<std::string, double>& m, const char* key) {
        auto it = m.find(key);
        if (it == m.end()) throw MissingInput(std::string("watson_cusp_rhs: missing ") + key);
        return it->second;
    };
    double c = get(lambda_values, "Lambda(1/2,phi_j)");
    double tr = get(lambda_values, "Lambda(1/2,Sym2phi x phi_j)");
    double s = get(sym2_values, "Lambda(1,Sym2phi)");
    double sj = get(sym2_values, "Lambda(1,Sym2phi_j)");
    if (c < 0.0 || tr < 0.0) throw std::invalid_argument("watson_cusp_rhs: central values must be nonnegative");
    if (!(s > 0.0) || !(sj > 0.0)) throw std::invalid_argument("watson_cusp_rhs: edge values must be positive");
    return c * tr / (8.0 * s * s * sj);
}

ContinuousSpectrumParts continuous_spectrum_parts(double tau, double T, double t_phi, const LValueBundle& lvals) {
    if (std::abs(tau) > 2.0 * T + 1.0)
        throw std::invalid_argument("continuous_spectrum_integrand: |tau| <= 2T + t_phi^eps required");
    const cplx L = require_sym2(lvals, cplx(0.5, -tau));
    const cplx s(0.5, tau);
    double z = std::abs(zeta(s));
    ContinuousSpectrumParts p;
    p.numerator = std::abs(L) * z * z * z * std::abs(zeta(s + cplx(0.0, 2.0 * T)) * zeta(s - cplx(0.0, 2.0 * T)));
    p.denominator = (1.0 + std::abs(tau)) * std::pow(1.0 + std::abs(tau - 2.0 * T), 0.25) *
                    std::pow(1.0 + std::abs(tau - 2.0 * t_phi), 0.25);
    p.value = p.numerator / p.denominator;
    return p;
}

double continuous_spectrum_integrand(double tau, double T, double t_phi, const LValueBundle& lvals) {
    return continuous_spectrum_parts(tau, T, t_phi, lvals).value;
}

double decorrelation_main_term(double t, double tau) {
    if (!(tau > 1.0)) throw std::invalid_argument("decorrelation_main_term: tau > 1 required");
    const double lt = std::log(tau);
    const double d = t - tau;
    const double x = d * lt;
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 6.0 / M_PI * lt * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0));
    }
    return 6.0 / M_PI * std::sin(x) / d;
}

PhaseDerivative xi_phase_derivative(double x) {
    if (!(x >= 2.0)) throw std::invalid_argument("xi_phase_derivative: x >= 2 required");
    // d/dx arg xi(1+2ix) = 2 Re xi'/xi(1+2ix) = -log pi + Re psi(1/2+ix) + 2 Re zeta'/zeta(1+2ix)
    PhaseDerivative r;
    r.exact = -std::log(M_PI) + digamma(cplx(0.5, x)).real() + 2.0 * zeta_log_derivative(cplx(1.0, 2.0 * x)).real();
    r.leading = 0.5 * std::log(0.25 + x * x);
    return r;
}

cplx eisenstein_near_one(double T_small) {
    if (!(T_small != 0.0 && std::abs(T_small) <= 0.1))
        throw std::invalid_argument("eisenstein_near_one: 0 < |T| <= 0.1 required");
    return 3.0 / (M_PI * cplx(0.0, T_small));
}

ResidueTerms appendix_b_residues(double t_phi, double T, double A, const LValueBundle& lvals) {
    lvals.validate();
    if (!(A > 1.0)) throw std::invalid_argument("appendix_b_residues: A > 1 required");
    if (!lvals.sym2_log_derivative_at_1) throw MissingInput("appendix_b_residues: L'/L(1, Sym^2 phi) not supplied");
    ResidueTerms r;
    const double xi2 = xi_completed(2.0).real();
    r.I_main = sym2_completed_log_derivative(t_phi, *lvals.sym2_log_derivative_at_1) / xi2;
    if (T == 0.0) throw PoleError("appendix_b_residues: T = 0 is a pole of xi(2iT)");
    const cplx pref = std::exp(log_xi(cplx(0.0, 2.0 * T)) - log_xi(cplx(1.0, 2.0 * T)));
    r.J_main = pref * rankin_selberg_phi2_E(T, lvals, t_phi).exact +
               std::conj(pref) * rankin_selberg_phi2_E(-T, lvals, t_phi).exact;
    return r;
}

}  // namespace automorph
