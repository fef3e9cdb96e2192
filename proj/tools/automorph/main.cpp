#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "automorph/checks.hpp"
#include "automorph/exponents.hpp"
#include "automorph/formulas.hpp"
#include "automorph/ingest.hpp"
#include "automorph/momentlab.hpp"
#include "automorph/quadrature.hpp"

using namespace automorph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitEnvironment = 2;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string git_revision() {
    if (const char* v = std::getenv("AUTOMORPH_GIT_REV"); v && *v) return v;
    std::string cmd = std::string("git -C \"") + AUTOMORPH_SOURCE_DIR + "\" rev-parse --short HEAD 2>/dev/null";
    std::string out;
    if (FILE* p = popen(cmd.c_str(), "r")) {
        char buf[128];
        while (std::fgets(buf, sizeof buf, p)) out += buf;
        pclose(p);
    }
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
    return out.empty() ? "unknown" : out;
}

// Rows are computed concurrently and written in index order.
template <class F>
std::vector<std::vector<std::string>> parallel_rows(std::size_t n, F&& f, unsigned threads) {
    std::vector<std::vector<std::string>> rows(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex m;
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                rows[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(m);
                if (!err) err = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(n)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return rows;
}

struct CsvOutput {
    std::string path;
    bool timestamp = true;

    void write(const std::string& target, const std::vector<std::pair<std::string, std::string>>& params,
               const std::string& formula, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) const {
        std::ostringstream os;
        os << "# automorph scan " << target << "\n";
        os << "# formula: " << formula << "\n";
        os << "# parameters:";
        for (const auto& [k, v] : params) os << " " << k << "=" << v;
        os << "\n# revision: " << git_revision() << "\n";
        if (timestamp) {
            std::time_t now = std::time(nullptr);
            char buf[64];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            os << "# generated: " << buf << "\n";
        }
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
        os << "\r\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "\r\n";
        }
        if (path.empty() || path == "-") {
            std::cout << os.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + path + " for writing");
            f << os.str();
            if (!f) throw std::runtime_error("write failed: " + path);
        }
    }
};

std::vector<double> grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) throw CLI::ValidationError("grid", "need step > 0 and max >= min");
    std::size_t n = std::size_t(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + double(i) * step;
    return v;
}

MaassFormRecord find_fixture_record(const std::string& label, const std::string& fixture_file) {
    std::filesystem::path p = fixture_file.empty() ? default_fixture_file() : std::filesystem::path(fixture_file);
    for (auto& r : load_fixture(p))
        if (r.label == label) return r;
    MaassCache cache(default_cache_dir());
    if (auto e = cache.find(label)) return e->payload;
    throw std::invalid_argument("no Maass form '" + label + "' in " + p.string() + " or the cache");
}

void print_estimate(cplx v, double err) {
    std::printf("value     %.15g %+.15gi\nabs_err   %.3e\n", v.real(), v.imag(), err);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphic forms numerics: verification suites, evaluation and parameter scans."};
    app.require_subcommand(1);
    std::string fixture_file;
    app.add_option("--fixtures", fixture_file, "Maass fixture file (default: AUTOMORPH_FIXTURE_DIR or data/fixtures)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::string json_out;
    bool quiet = false;
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
    verify->add_option("--json", json_out, "Also write the report as JSON to this file");
    verify->add_flag("--quiet", quiet, "Print only the summary line per suite");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate an automorphic form at a point");
    std::string object;
    double x = 0.0, y = 1.0, re_s = 0.5, im_s = 0.0, T = 0.0, A = 0.0;
    std::string label;
    int cutoff = 0;
    eval->add_option("object", object, "eisenstein | truncated | normalized | maass")
        ->required()
        ->check(CLI::IsMember({"eisenstein", "truncated", "normalized", "maass"}));
    eval->add_option("--x", x, "Re z");
    eval->add_option("--y", y, "Im z")->check(CLI::PositiveNumber);
    eval->add_option("--re-s", re_s, "Re s (eisenstein)");
    eval->add_option("--im-s", im_s, "Im s (eisenstein)");
    eval->add_option("--T", T, "Spectral parameter T for s = 1/2 + iT (truncated, normalized)");
    eval->add_option("--A", A, "Truncation height (truncated)");
    eval->add_option("--label", label, "Maass form label (maass)");
    eval->add_option("--cutoff", cutoff, "Fourier cutoff (0: automatic)");

    // scan
    auto* scan = app.add_subcommand("scan", "Tabulate a formula over a grid as CSV");
    std::string target, out_path;
    bool no_timestamp = false;
    double tau = 100.0, d_min = -0.5, d_max = 0.5, d_step = 0.01;
    std::vector<double> a_values{1.5, 2.0, 3.0, 4.0, 6.0, 8.0};
    double ms_T = 5.0;
    int decades_per = 4;
    double x_min = 1e3, x_max = 1e6;
    double e_t = 0.0, e_T = 10.0, e_tphi = 20.0, tj_min = 0.0, tj_max = 60.0, tj_step = 0.5;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    scan->add_option("target", target, "decorrelation | maass_selberg | prime_sums | exponent_P | exponent_Q")
        ->required()
        ->check(CLI::IsMember({"decorrelation", "maass_selberg", "prime_sums", "exponent_P", "exponent_Q"}));
    scan->add_option("--out", out_path, "Output CSV path (default stdout)");
    scan->add_flag("--no-timestamp", no_timestamp, "Omit the generated-at comment line");
    scan->add_option("--threads", threads, "Worker threads for independent rows");
    scan->add_option("--tau", tau, "decorrelation: tau");
    scan->add_option("--d-min", d_min, "decorrelation: smallest t - tau");
    scan->add_option("--d-max", d_max, "decorrelation: largest t - tau");
    scan->add_option("--d-step", d_step, "decorrelation: step in t - tau");
    scan->add_option("--A", a_values, "maass_selberg: truncation heights")->delimiter(',');
    scan->add_option("--T", ms_T, "maass_selberg: T; exponent_P/Q: T")->each([&](const std::string& v) { e_T = std::stod(v); });
    scan->add_option("--x-min", x_min, "prime_sums: smallest x");
    scan->add_option("--x-max", x_max, "prime_sums: largest x");
    scan->add_option("--per-decade", decades_per, "prime_sums: points per decade");
    scan->add_option("--t", e_t, "exponent_P/Q: t");
    scan->add_option("--t-phi", e_tphi, "exponent_Q: t_phi");
    scan->add_option("--tj-min", tj_min, "exponent_P/Q: smallest t_j");
    scan->add_option("--tj-max", tj_max, "exponent_P/Q: largest t_j");
    scan->add_option("--tj-step", tj_step, "exponent_P/Q: t_j step");

    // fetch
    auto* fetch = app.add_subcommand("fetch", "Fetch Maass forms from the LMFDB into the local cache");
    std::string f_label, f_fields;
    double f_tmin = NAN, f_tmax = NAN;
    int f_limit = 1;
    fetch->add_option("--label", f_label, "Exact label");
    fetch->add_option("--t-min", f_tmin, "Smallest spectral parameter");
    fetch->add_option("--t-max", f_tmax, "Largest spectral parameter");
    fetch->add_option("--limit", f_limit, "Maximum number of forms")->check(CLI::PositiveNumber);
    fetch->add_option("--field-map", f_fields, "Field map JSON (default config/lmfdb_fields.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitEnvironment;
    }

    try {
        if (*verify) {
            SuiteOptions opts;
            if (!fixture_file.empty()) opts.fixture_file = fixture_file;
            std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            std::vector<RunReport> reports;
            bool missing = false, failed = false;
            for (const auto& s : suites) {
                try {
                    RunReport r = run_suite(s, opts);
                    failed = failed || !r.passed();
                    if (quiet) {
                        std::printf("suite %s: %zu checks, %zu failed, %.2f s\n", r.suite.c_str(), r.checks.size(), r.failures(),
                                    r.wall_time);
                    } else {
                        std::cout << format_table(r) << "\n";
                    }
                    reports.push_back(std::move(r));
                } catch (const FixtureMissing& e) {
                    std::fprintf(stderr, "suite %s: %s\n", s.c_str(), e.what());
                    missing = true;
                }
            }
            if (!json_out.empty()) atomic_write(json_out, reports_json(reports));
            std::cout.flush();
            if (missing) return kExitEnvironment;
            return failed ? kExitCheckFailure : kExitOk;
        }
        if (*eval) {
            UpperHalfPoint z{x, y};
            if (object == "eisenstein") {
                Estimate e = eisenstein_eval(z, cplx(re_s, im_s), cutoff);
                print_estimate(e.value, e.abs_err);
            } else if (object == "truncated") {
                if (!(A > 1.0)) throw CLI::ValidationError("--A", "truncation height must exceed 1");
                Estimate e = truncated_eisenstein_eval(z, EisensteinSpec{T, A, false}, cutoff);
                print_estimate(e.value, e.abs_err);
            } else if (object == "normalized") {
                Estimate e = normalized_eisenstein_eval(z, T, cutoff);
                print_estimate(e.value, e.abs_err);
            } else {
                if (label.empty()) throw CLI::ValidationError("--label", "required for maass");
                MaassFormRecord rec = find_fixture_record(label, fixture_file);
                RealEstimate e = maass_eval(rec, z, cutoff);
                std::printf("value     %.15g\nabs_err   %.3e\n", e.value, e.abs_err);
            }
            return kExitOk;
        }
        if (*scan) {
            CsvOutput out{out_path, !no_timestamp};
            if (target == "decorrelation") {
                auto ds = grid(d_min, d_max, d_step);
                auto rows = parallel_rows(ds.size(), [&](std::size_t i) {
                    double d = ds[i];
                    return std::vector<std::string>{num(d), num(tau + d), num(decorrelation_main_term(tau + d, tau))};
                }, threads);
                out.write(target, {{"tau", num(tau)}, {"d_min", num(d_min)}, {"d_max", num(d_max)}, {"d_step", num(d_step)}},
                          "(6/pi) sin((t-tau) log tau)/(t-tau)", {"t_minus_tau", "t", "main_term"}, rows);
            } else if (target == "maass_selberg") {
                // quadrature is already multithreaded, so rows run one at a time
                auto rows = parallel_rows(a_values.size(), [&](std::size_t i) {
                    double a = a_values[i];
                    QuadratureConfig cfg;
                    cfg.height_cutoff = std::max(8.0, 4.0 * a);
                    cfg.breakpoints = {a};
                    cfg.target_tol = 1e-5;
                    QuadResult q = integrate_fundamental(TruncatedEisensteinNormSq(ms_T, a), cfg);
                    double cf = maass_selberg_truncated_norm(ms_T, a);
                    return std::vector<std::string>{num(a), num(ms_T), num(cf), num(q.value.real()), num(q.abs_err),
                                                    num(std::abs(cf - q.value.real()) / std::abs(cf))};
                }, 1);
                std::string as;
                for (double a : a_values) as += (as.empty() ? "" : ";") + num(a);
                out.write(target, {{"T", num(ms_T)}, {"A", as}},
                          "int_F |E^A(z,1/2+iT)|^2 dmu: closed form vs quadrature",
                          {"A", "T", "closed_form", "quadrature", "quad_abs_err", "rel_diff"}, rows);
            } else if (target == "prime_sums") {
                if (!(x_min >= 10.0) || !(x_max >= x_min) || decades_per < 1)
                    throw CLI::ValidationError("prime_sums", "need 10 <= x-min <= x-max and per-decade >= 1");
                std::vector<double> xs;
                double l0 = std::log10(x_min), l1 = std::log10(x_max);
                for (int k = 0;; ++k) {
                    double l = l0 + double(k) / decades_per;
                    if (l > l1 + 1e-12) break;
                    xs.push_back(std::round(std::pow(10.0, l)));
                }
                PrimeTable table = sieve(std::uint64_t(xs.back()));
                auto rows = parallel_rows(xs.size(), [&](std::size_t i) {
                    double s = prime_sum_shifted(table, xs[i], 0.0).real(), ll = std::log(std::log(xs[i]));
                    return std::vector<std::string>{num(xs[i]), num(s), num(ll), num(s - ll)};
                }, threads);
                out.write(target, {{"x_min", num(x_min)}, {"x_max", num(x_max)}, {"per_decade", std::to_string(decades_per)}},
                          "sum_{p<=x} 1/p against loglog x", {"x", "prime_sum", "loglog_x", "drift"}, rows);
            } else {
                auto tjs = grid(tj_min, tj_max, tj_step);
                bool isP = target == "exponent_P";
                auto rows = parallel_rows(tjs.size(), [&](std::size_t i) {
                    double tj = tjs[i];
                    if (isP) {
                        PiecewiseExponent p = p_exponent(tj, e_t, e_T);
                        return std::vector<std::string>{num(tj), num(p.value), num(p_exponent_direct(tj, e_t, e_T)), "\"" + p.branch + "\""};
                    }
                    PiecewiseExponent q = q_exponent(e_t, tj, e_T, e_tphi);
                    return std::vector<std::string>{num(tj), num(q.value), num(q_exponent_direct(e_t, tj, e_T, e_tphi)), "\"" + q.branch + "\""};
                }, threads);
                std::vector<std::pair<std::string, std::string>> params{{"t", num(e_t)}, {"T", num(e_T)}};
                if (!isP) params.emplace_back("t_phi", num(e_tphi));
                params.emplace_back("tj_min", num(tj_min));
                params.emplace_back("tj_max", num(tj_max));
                params.emplace_back("tj_step", num(tj_step));
                out.write(target, params,
                          isP ? "|t_j+t| + |t_j-t| + |t_j-2T+t| - t_j + t - 2T (case tables)"
                              : "|t_j-2t_phi|/2 + |t_j+t|/2 + |t_j-t|/2 + |t_j-2T+t|/2 + t/2 - t_phi - T (case tables)",
                          {"t_j", "piecewise", "direct", "branch"}, rows);
            }
            return kExitOk;
        }
        if (*fetch) {
            MaassQuery q;
            if (!f_label.empty()) q.label = f_label;
            if (!std::isnan(f_tmin)) q.t_min = f_tmin;
            if (!std::isnan(f_tmax)) q.t_max = f_tmax;
            q.limit = f_limit;
            FetchOptions fo;
            std::filesystem::path fm = f_fields.empty() ? std::filesystem::path(AUTOMORPH_SOURCE_DIR) / "config" / "lmfdb_fields.json"
                                                        : std::filesystem::path(f_fields);
            if (std::filesystem::exists(fm)) fo.fields = FieldMap::load(fm);
            MaassCache cache(default_cache_dir());
            for (const auto& r : fetch_maass_form(q, cache, fo))
                std::printf("%s  t=%s  coefficients=%zu  source=%s\n", r.label.c_str(), r.spectral_parameter_text.c_str(),
                            r.coefficients.size(), to_string(r.source).c_str());
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitEnvironment;
    } catch (const NetworkError& e) {
        std::fprintf(stderr, "network error: %s\n", e.what());
        return kExitEnvironment;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitEnvironment;
    }
    return kExitOk;
}
