#include "automorph/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace automorph {

namespace {

constexpr int kMaxTerms = 100000;

int divisor_count(std::size_t n) {
    int c = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
        if (n % d == 0) c += (d * d == n) ? 1 : 2;
    return c;
}

}  // namespace

UpperHalfPoint apply_modular(const ModularMatrix& g, UpperHalfPoint z) {
    if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("apply_modular: determinant must be 1");
    cplx w(z.x, z.y);
    cplx r = (double(g.a) * w + double(g.b)) / (double(g.c) * w + double(g.d));
    return {r.real(), r.imag()};
}

UpperHalfPoint reduce_to_fundamental_domain(UpperHalfPoint z) {
    if (!(z.y > 0.0)) throw std::invalid_argument("reduce_to_fundamental_domain: y must be positive");
    for (int step = 0; step < 10000; ++step) {
        z.x -= std::floor(z.x + 0.5);
        double r2 = z.x * z.x + z.y * z.y;
        if (r2 >= 1.0 - 1e-13) return z;
        z.x = -z.x / r2;
        z.y = z.y / r2;
    }
    throw std::runtime_error("reduce_to_fundamental_domain: no convergence after 1e4 steps");
}

bool in_fundamental_domain(UpperHalfPoint z, double tol) {
    return std::abs(z.x) <= 0.5 + tol && z.x * z.x + z.y * z.y >= 1.0 - tol && z.y > 0;
}

std::string to_string(DataSource s) {
    switch (s) {
        case DataSource::lmfdb: return "lmfdb";
        case DataSource::fixture: return "fixture";
        case DataSource::synthetic: return "synthetic";
    }
    return "fixture";
}

DataSource data_source_from_string(const std::string& s) {
    if (s == "lmfdb") return DataSource::lmfdb;
    if (s == "fixture") return DataSource::fixture;
    if (s == "synthetic") return DataSource::synthetic;
    throw std::invalid_argument("unknown data source '" + s + "'");
}

void validate_record(MaassFormRecord& r) {
    if (r.coefficients.empty()) throw std::invalid_argument("record " + r.label + ": no coefficients");
    if (std::abs(r.coefficients[0] - 1.0) > 1e-12)
        throw std::invalid_argument("record " + r.label + ": lambda(1) != 1");
    if (!(r.spectral_parameter > 0.0) || !std::isfinite(r.spectral_parameter))
        throw std::invalid_argument("record " + r.label + ": bad spectral parameter");
    if (r.sym2_L_value && !(*r.sym2_L_value > 0.0))
        throw std::invalid_argument("record " + r.label + ": L(1,Sym^2) must be positive");
    r.ramanujan_warning = false;
    for (std::size_t n = 1; n <= r.coefficients.size(); ++n) {
        double c = r.coefficients[n - 1];
        if (!std::isfinite(c)) throw std::invalid_argument("record " + r.label + ": non-finite coefficient");
        if (std::abs(c) > 1.2 * divisor_count(n)) r.ramanujan_warning = true;
    }
}

cplx FourierRow::at(double x) const { return constant + nonconstant_at(x); }

cplx FourierRow::nonconstant_at(double x) const {
    // cos(2 pi n x) by the Chebyshev recurrence
    const double c1 = std::cos(2.0 * M_PI * x);
    double cm1 = 1.0, c0 = c1;
    cplx s(0.0, 0.0);
    for (std::size_t n = 1; n <= cos_coeffs.size(); ++n) {
        s += cos_coeffs[n - 1] * c0;
        double cn = 2.0 * c1 * c0 - cm1;
        cm1 = c0;
        c0 = cn;
    }
    return s;
}

int default_fourier_cutoff(double t, double y) {
    return int(std::ceil((std::abs(t) + 10.0) / (2.0 * M_PI * y) * 1.5));
}

cplx scattering_phi(cplx s) {
    if (s == cplx(0.5, 0.0)) return -1.0;
    return std::exp(log_xi(2.0 * s - 1.0) - log_xi(2.0 * s));
}

cplx eisenstein_constant_term(double y, cplx s) {
    double ly = std::log(y);
    return std::exp(s * ly) + scattering_phi(s) * std::exp((1.0 - s) * ly);
}

FourierRow eisenstein_row(double y, cplx s, int fourier_cutoff) {
    if (!(y > 0.0)) throw std::invalid_argument("eisenstein_row: y must be positive");
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0)) throw PoleError("eisenstein: pole of the expansion at s in {0,1}");
    FourierRow row;
    if (s == cplx(0.5, 0.0)) return row;  // E(z,1/2) vanishes identically
    row.constant = eisenstein_constant_term(y, s);
    const cplx nu = s - 0.5;
    const double t = std::abs(nu.imag());
    // 2 * 2 sqrt(y) / xi(2s), with the e^{pi t/2} scale removed from K
    const cplx pre = 4.0 * std::sqrt(y) * std::exp(-log_xi(2.0 * s) - 0.5 * M_PI * t);
    const int n_req = std::max(fourier_cutoff, default_fourier_cutoff(t, y));
    double total = std::abs(row.constant);
    double err = 0.0;
    for (int n = 1;; ++n) {
        if (n > kMaxTerms) throw RangeError("eisenstein: Fourier cutoff exceeded (y too small)");
        double xarg = 2.0 * M_PI * n * y;
        Estimate k = bessel_k_scaled(nu, xarg);
        // n^{s-1/2} sigma_{1-2s}(n) = sum_{d|n} n^{s-1/2} d^{1-2s}
        cplx arith = std::exp(nu * std::log(double(n))) * divisor_sigma(1.0 - 2.0 * s, std::uint64_t(n));
        cplx c = pre * arith * k.value;
        row.cos_coeffs.push_back(c);
        double mag = std::abs(c);
        total += mag;
        err += std::abs(pre * arith) * k.abs_err;
        bool decayed = xarg > t + 2.0 * std::abs(nu.real()) + 5.0;
        if (n >= n_req && decayed && (mag < 1e-17 * total || mag < 1e-300)) {
            err += 2.0 * mag;
            break;
        }
    }
    row.abs_err = err + 1e-15 * total;
    return row;
}

Estimate eisenstein_eval(UpperHalfPoint z, cplx s, int fourier_cutoff) {
    FourierRow r = eisenstein_row(z.y, s, fourier_cutoff);
    return {r.at(z.x), r.abs_err};
}

cplx constant_term(double y, double T) {
    if (T == 0.0) throw PoleError("constant_term: T = 0 is degenerate");
    if (!(y > 0.0)) throw std::invalid_argument("constant_term: y must be positive");
    cplx ratio = std::exp(log_xi(cplx(1.0, -2.0 * T)) - log_xi(cplx(1.0, 2.0 * T)));
    double ly = std::log(y);
    return std::exp(cplx(0.5, T) * ly) + ratio * std::exp(cplx(0.5, -T) * ly);
}

Estimate truncated_eisenstein_eval(UpperHalfPoint z, const EisensteinSpec& spec, int fourier_cutoff) {
    if (!spec.truncation_A) throw std::invalid_argument("truncated_eisenstein_eval: truncation_A required");
    if (!(*spec.truncation_A > 1.0)) throw std::invalid_argument("truncated_eisenstein_eval: A must exceed 1");
    FourierRow r = eisenstein_row(z.y, cplx(0.5, spec.T), fourier_cutoff);
    cplx v = z.y <= *spec.truncation_A ? r.at(z.x) : r.nonconstant_at(z.x);
    if (spec.normalized) v *= normalized_eisenstein_factor(spec.T);
    return {v, r.abs_err};
}

cplx normalized_eisenstein_factor(double T) {
    if (!(std::abs(T) >= 1.0)) throw std::invalid_argument("normalized Eisenstein series requires |T| >= 1");
    double mod = std::sqrt(kVolume / std::log(0.25 + T * T));
    double arg = log_xi(cplx(1.0, 2.0 * T)).imag();
    return std::polar(mod, arg);
}

Estimate normalized_eisenstein_eval(UpperHalfPoint z, double T, int fourier_cutoff) {
    cplx f = normalized_eisenstein_factor(T);
    Estimate e = eisenstein_eval(z, cplx(0.5, T), fourier_cutoff);
    return {f * e.value, std::abs(f) * e.abs_err};
}

double maass_rho1(const MaassFormRecord& rec) {
    if (!rec.sym2_L_value) throw std::invalid_argument("maass: record " + rec.label + " lacks L(1,Sym^2)");
    return std::sqrt(std::cosh(M_PI * rec.spectral_parameter) / (2.0 * *rec.sym2_L_value));
}

FourierRow maass_row(const MaassFormRecord& rec, double y, int fourier_cutoff) {
    if (rec.parity != "even") throw std::invalid_argument("maass: unsupported parity '" + rec.parity + "'");
    if (!rec.sym2_L_value) throw std::invalid_argument("maass: record " + rec.label + " lacks L(1,Sym^2)");
    if (!(y > 0.0)) throw std::invalid_argument("maass: y must be positive");
    const double t = rec.spectral_parameter;
    const int avail = int(rec.coefficients.size());
    if (fourier_cutoff > avail)
        throw std::invalid_argument("maass: fourier_cutoff exceeds available coefficients");
    // rho(1) e^{-pi t/2}
    const double rho_scaled = std::sqrt((1.0 + std::exp(-2.0 * M_PI * t)) / (4.0 * *rec.sym2_L_value));
    const double pre = 4.0 * std::sqrt(y) * rho_scaled;
    const int n_req = std::max(fourier_cutoff, default_fourier_cutoff(t, y));
    FourierRow row;
    double total = 0.0, err = 0.0;
    for (int n = 1;; ++n) {
        double xarg = 2.0 * M_PI * n * y;
        RealEstimate k = bessel_k_imag_scaled(t, xarg);
        double bound = pre * divisor_count(n) * std::abs(k.value);
        if (n > avail) {
            if (bound < 1e-17 * total || bound < 1e-300) break;
            throw std::invalid_argument("maass: insufficient coefficients for y = " + std::to_string(y));
        }
        double c = pre * rec.coefficients[n - 1] * k.value;
        row.cos_coeffs.emplace_back(c, 0.0);
        total += std::abs(c);
        err += pre * std::abs(rec.coefficients[n - 1]) * k.abs_err;
        if (n >= n_req && xarg > t + 5.0 && (bound < 1e-17 * total || bound < 1e-300)) {
            err += 2.0 * bound;
            break;
        }
    }
    row.abs_err = err + 1e-15 * total;
    return row;
}

RealEstimate maass_eval(const MaassFormRecord& rec, UpperHalfPoint z, int fourier_cutoff) {
    FourierRow r = maass_row(rec, z.y, fourier_cutoff);
    return {r.at(z.x).real(), r.abs_err};
}

}  // namespace automorph
