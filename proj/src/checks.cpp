#include "automorph/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "automorph/ingest.hpp"
#include "gauss.hpp"

namespace automorph {

bool RunReport::passed() const { return failures() == 0; }

std::size_t RunReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string num(cplx v) {
    if (v.imag() == 0.0) return num(v.real());
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
    return buf;
}

}  // namespace

Check compare_check(const std::string& name, const std::string& oracle, cplx value, cplx reference, double tol,
                    bool relative) {
    Check c;
    c.name = name;
    c.oracle = oracle;
    double diff = std::abs(value - reference);
    c.measured = relative ? diff / std::max(std::abs(reference), 1e-300) : diff;
    c.tolerance = tol;
    c.pass = std::isfinite(c.measured) && c.measured <= tol;
    char buf[200];
    std::snprintf(buf, sizeof buf, "value=%s oracle=%s", num(value).c_str(), num(reference).c_str());
    c.detail = buf;
    return c;
}

Check bound_check(const std::string& name, const std::string& oracle, double measured, double tol,
                  const std::string& detail) {
    Check c;
    c.name = name;
    c.oracle = oracle;
    c.measured = measured;
    c.tolerance = tol;
    c.pass = std::isfinite(measured) && measured <= tol;
    c.detail = detail;
    return c;
}

Check bool_check(const std::string& name, const std::string& oracle, bool ok, const std::string& detail) {
    Check c;
    c.name = name;
    c.oracle = oracle;
    c.measured = ok ? 0.0 : 1.0;
    c.tolerance = 0.0;
    c.pass = ok;
    c.detail = detail;
    return c;
}

// ---------------------------------------------------------------------------------------------
// oracles

cplx hurwitz_zeta_oracle(cplx s, double q) {
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("hurwitz_zeta_oracle: pole at s = 1");
    if (!(q > 0.0)) throw std::invalid_argument("hurwitz_zeta_oracle: q > 0 required");
    // B_2 .. B_20
    static const double B[] = {1.0 / 6,         -1.0 / 30,     1.0 / 42,         -1.0 / 30,
                               5.0 / 66,        -691.0 / 2730, 7.0 / 6,          -3617.0 / 510,
                               43867.0 / 798,   -174611.0 / 330};
    const int N = 25 + int(std::abs(s));
    cplx sum(0.0, 0.0);
    for (int n = N - 1; n >= 0; --n) sum += std::exp(-s * std::log(q + n));
    const double a = q + N;
    const double la = std::log(a);
    sum += std::exp((1.0 - s) * la) / (s - 1.0) + 0.5 * std::exp(-s * la);
    // B_{2j}/(2j)! s(s+1)...(s+2j-2) a^{-s-2j+1}
    cplx rising = s;
    double fact = 2.0;
    cplx pw = std::exp(-(s + 1.0) * la);
    for (int j = 1; j <= 10; ++j) {
        sum += B[j - 1] / fact * rising * pw;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        fact *= double(2 * j + 1) * double(2 * j + 2);
        pw /= a * a;
    }
    return sum;
}

namespace {

// sum_{j >= 0} ((q + j)^2 + c^2)^{-s} for q > c, by the binomial series in c^2/(q+j)^2
cplx binomial_hurwitz_tail(cplx s, double q, double c) {
    cplx total(0.0, 0.0), binom(1.0, 0.0);
    double c2k = 1.0;
    for (int k = 0; k < 80; ++k) {
        cplx term = binom * c2k * hurwitz_zeta_oracle(2.0 * s + 2.0 * k, q);
        total += term;
        if (std::abs(term) < 1e-18 * std::abs(total)) break;
        binom *= (-s - double(k)) / double(k + 1);
        c2k *= c * c;
    }
    return total;
}

}  // namespace

cplx eisenstein_lattice_sum(UpperHalfPoint z, cplx s) {
    if (!(s.real() > 1.0)) throw std::invalid_argument("eisenstein_lattice_sum: Re(s) > 1 required");
    const double y = z.y;
    // Epstein sum over (m, n) != 0 of |m z + n|^{-2s}
    cplx Z = 2.0 * hurwitz_zeta_oracle(2.0 * s, 1.0);
    const int M = std::max(4, int(std::ceil(45.0 / (2.0 * M_PI * y))));
    cplx rows(0.0, 0.0);
    for (int m = 1; m <= M; ++m) {
        const double mx = m * z.x;
        const double r = mx - std::floor(mx);
        const double c = m * y;
        const int J = int(std::ceil(std::max(40.0, 8.0 * c)));
        cplx row(0.0, 0.0);
        for (int j = J; j >= -J; --j) {
            double u = r + j;
            row += std::exp(-s * std::log(u * u + c * c));
        }
        row += binomial_hurwitz_tail(s, r + J + 1.0, c);
        row += binomial_hurwitz_tail(s, J + 1.0 - r, c);
        rows += row;
    }
    // rows m > M: Poisson leading term sqrt(pi) Gamma(s-1/2)/Gamma(s) (m y)^{1-2s}
    cplx lead = std::sqrt(M_PI) * std::exp(log_gamma(s - 0.5) - log_gamma(s) + (1.0 - 2.0 * s) * std::log(y));
    rows += lead * hurwitz_zeta_oracle(2.0 * s - 1.0, M + 1.0);
    Z += 2.0 * rows;
    // E = y^s Z / (2 zeta(2s))
    return std::exp(s * std::log(y)) * Z / (2.0 * hurwitz_zeta_oracle(2.0 * s, 1.0));
}

double bessel_k_trapezoid(double t, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k_trapezoid: x > 0 required");
    const double U = std::acosh(std::max(1.0, 750.0 / x)) + 0.5;
    const double h = std::min(0.01, 0.2 / (1.0 + std::abs(t)));
    double s = 0.5 * std::exp(-x);
    for (double u = h; u <= U; u += h) s += std::exp(-x * std::cosh(u)) * std::cos(t * u);
    return s * h;
}

cplx bessel_mellin_quadrature(cplx s, double t1, double t2) {
    detail::PanelSum acc;
    const double lo = std::log(1e-9), hi = std::log(80.0);
    const int panels = int(std::ceil((hi - lo) / 0.2));
    const double w = (hi - lo) / panels;
    auto f = [&](double u) {
        double x = std::exp(u);
        double k1 = bessel_k_imag_order(t1, x).value;
        double k2 = t2 == t1 ? k1 : bessel_k_imag_order(t2, x).value;
        return cplx(k1 * k2) * std::exp(s * u);
    };
    for (int i = 0; i < panels; ++i) acc.add(f, lo + i * w, lo + (i + 1) * w);
    return acc.hi;
}

double stirling_log_abs_gamma(double sigma, double y) {
    double ay = std::abs(y);
    return 0.5 * std::log(2.0 * M_PI) + (sigma - 0.5) * std::log(ay) - 0.5 * M_PI * ay;
}

UpperHalfPoint random_modular_image(UpperHalfPoint z, std::mt19937_64& rng, double y_min) {
    std::uniform_int_distribution<int> shift(-2, 2), steps(1, 3);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        cplx w(z.x, z.y);
        int n = steps(rng);
        for (int i = 0; i < n; ++i) {
            w += double(shift(rng));
            w = -1.0 / w;
        }
        w += double(shift(rng));
        if (w.imag() >= y_min) return {w.real(), w.imag()};
    }
    return z;
}

// ---------------------------------------------------------------------------------------------
// suites

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"specfun", "forms", "identities", "exponents", "momentlab"};
    return names;
}

bool suite_needs_fixtures(const std::string& suite) { return suite == "forms" || suite == "all"; }

namespace {

std::vector<MaassFormRecord> load_required_fixtures(const SuiteOptions& opts) {
    std::filesystem::path p = opts.fixture_file.empty() ? default_fixture_file() : opts.fixture_file;
    if (!std::filesystem::exists(p)) throw FixtureMissing("fixture file not found: " + p.string());
    try {
        return load_fixture(p);
    } catch (const std::exception& e) {
        throw FixtureMissing("fixture file unusable: " + p.string() + ": " + e.what());
    }
}

void append(std::vector<Check>& out, std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
}

}  // namespace

RunReport run_suite(const std::string& suite, const SuiteOptions& opts) {
    RunReport r;
    r.suite = suite;
    std::vector<MaassFormRecord> recs;
    if (suite_needs_fixtures(suite)) recs = load_required_fixtures(opts);
    auto t0 = std::chrono::steady_clock::now();
    if (suite == "specfun") {
        append(r.checks, checks_specfun());
    } else if (suite == "forms") {
        append(r.checks, checks_forms_eisenstein());
        append(r.checks, checks_eisenstein_lattice());
        append(r.checks, checks_eisenstein_automorphy());
        append(r.checks, checks_quadrature());
        append(r.checks, checks_forms_maass(recs));
    } else if (suite == "identities") {
        append(r.checks, checks_maass_selberg());
        append(r.checks, checks_mellin_barnes());
        append(r.checks, checks_que_shrinking());
        r.checks.push_back(check_zagier(0.3, 0.2, 0.1));
        append(r.checks, checks_identities_misc());
        append(r.checks, checks_decorrelation());
    } else if (suite == "exponents") {
        append(r.checks, checks_exponent_tables());
        append(r.checks, checks_exponents_misc());
    } else if (suite == "momentlab") {
        append(r.checks, checks_hecke_combinatorics());
        append(r.checks, checks_density());
        append(r.checks, checks_prime_sums());
        append(r.checks, checks_momentlab_misc());
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string format_table(const RunReport& r) {
    std::size_t wn = 5, wo = 6;
    for (const auto& c : r.checks) {
        wn = std::max(wn, c.name.size());
        wo = std::max(wo, c.oracle.size());
    }
    std::ostringstream os;
    char buf[1024];
    std::snprintf(buf, sizeof buf, "suite %s: %zu checks, %zu failed, %.2f s\n", r.suite.c_str(), r.checks.size(),
                  r.failures(), r.wall_time);
    os << buf;
    std::snprintf(buf, sizeof buf, "  %-4s  %-*s  %-*s  %12s  %12s\n", "stat", int(wn), "check", int(wo), "oracle",
                  "measured", "tolerance");
    os << buf;
    for (const auto& c : r.checks) {
        std::snprintf(buf, sizeof buf, "  %-4s  %-*s  %-*s  %12.3e  %12.3e", c.pass ? "ok" : "FAIL", int(wn),
                      c.name.c_str(), int(wo), c.oracle.c_str(), c.measured, c.tolerance);
        os << buf;
        if (!c.pass && !c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    return os.str();
}

std::string reports_json(const std::vector<RunReport>& reports) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json jr;
        jr["suite"] = r.suite;
        jr["passed"] = r.passed();
        jr["wall_time"] = r.wall_time;
        jr["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["status"] = c.pass ? "pass" : "fail";
            jc["oracle"] = c.oracle;
            jc["measured"] = std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nlohmann::ordered_json();
            jc["tolerance"] = c.tolerance;
            jc["detail"] = c.detail;
            jr["checks"].push_back(jc);
        }
        j.push_back(jr);
    }
    return j.dump(2) + "\n";
}

}  // namespace automorph
