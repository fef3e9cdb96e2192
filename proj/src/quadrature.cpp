#include "automorph/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace automorph {

namespace {

cplx pairwise_sum(const std::vector<cplx>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        cplx s(0.0, 0.0);
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

cplx pairwise_sum(const std::vector<cplx>& v) { return v.empty() ? cplx(0.0, 0.0) : pairwise_sum(v, 0, v.size()); }

struct Row {
    double y;
    double weight;  // multiplies the sum over xs
    std::vector<double> xs;
};

std::vector<int> segment_counts(const QuadratureConfig& cfg, std::vector<double>& cuts) {
    const double top = std::log(cfg.height_cutoff);
    cuts = {0.0};
    std::vector<double> bps = cfg.breakpoints;
    std::sort(bps.begin(), bps.end());
    for (double b : bps)
        if (b > 1.0 && b < cfg.height_cutoff) cuts.push_back(std::log(b));
    cuts.push_back(top);
    std::vector<int> counts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double frac = (cuts[i + 1] - cuts[i]) / top;
        counts.push_back(std::max(2, int(std::lround(cfg.ny * frac))));
    }
    return counts;
}

std::vector<Row> build_rows(const QuadratureConfig& cfg, int scale) {
    std::vector<Row> rows;
    const int nx = cfg.nx * scale;
    std::vector<double> cuts;
    std::vector<int> counts = segment_counts(cfg, cuts);
    std::vector<double> xs(nx);
    for (int i = 0; i < nx; ++i) xs[i] = -0.5 + (i + 0.5) / nx;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        int m = counts[s] * scale;
        double du = (cuts[s + 1] - cuts[s]) / m;
        for (int j = 0; j < m; ++j) {
            double u = cuts[s] + (j + 0.5) * du;
            rows.push_back({std::exp(u), du * std::exp(-u) / nx, xs});
        }
    }
    // arc region: y = cos(theta), theta in [0, pi/6], |x| in [sin(theta), 1/2]
    const int m_arc = std::max(4, cfg.ny / 4) * scale;
    const int m_x = std::max(2, cfg.nx / 2) * scale;
    const double dth = (M_PI / 6.0) / m_arc;
    for (int j = 0; j < m_arc; ++j) {
        double th = (j + 0.5) * dth;
        double y = std::cos(th), lo = std::sin(th), len = 0.5 - lo;
        Row r;
        r.y = y;
        r.weight = (len / m_x) * std::sin(th) / (y * y) * dth;
        for (int i = 0; i < m_x; ++i) {
            double x = lo + (i + 0.5) * len / m_x;
            r.xs.push_back(-x);
            r.xs.push_back(x);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

unsigned worker_count() {
    if (const char* v = std::getenv("AUTOMORPH_THREADS"); v && *v) return std::max(1, std::atoi(v));
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Level {
    cplx value;
    long evals;
};

Level integrate_level(const Integrand& f, const QuadratureConfig& cfg, int scale) {
    std::vector<Row> rows = build_rows(cfg, scale);
    std::vector<cplx> contrib(rows.size());
    std::atomic<std::size_t> next{0};
    std::atomic<long> evals{0};
    auto work = [&] {
        std::vector<cplx> out;
        for (std::size_t r = next++; r < rows.size(); r = next++) {
            out.assign(rows[r].xs.size(), cplx(0.0, 0.0));
            f.row(rows[r].y, rows[r].xs, out);
            contrib[r] = rows[r].weight * pairwise_sum(out);
            evals += long(out.size());
        }
    };
    std::mutex mu;
    std::exception_ptr err;
    auto guarded = [&] {
        try {
            work();
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err) err = std::current_exception();
            next = rows.size();
        }
    };
    const unsigned nt = std::min<unsigned>(worker_count(), unsigned(rows.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nt; ++i) pool.emplace_back(guarded);
    guarded();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return {pairwise_sum(contrib), evals.load()};
}

void add_scaled(FourierRow& acc, const FourierRow& r, cplx c) {
    acc.constant += c * r.constant;
    if (acc.cos_coeffs.size() < r.cos_coeffs.size()) acc.cos_coeffs.resize(r.cos_coeffs.size(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < r.cos_coeffs.size(); ++i) acc.cos_coeffs[i] += c * r.cos_coeffs[i];
    acc.abs_err += std::abs(c) * r.abs_err;
}

constexpr double kDiffStep = 1e-4;

// d^n/ds^n of a row-valued function by central differences with one Richardson step.
template <class G>
FourierRow differentiate_row(G&& g, cplx s, int n) {
    auto D = [&](double h) {
        FourierRow r;
        if (n == 1) {
            add_scaled(r, g(s + h), 0.5 / h);
            add_scaled(r, g(s - h), -0.5 / h);
        } else {
            add_scaled(r, g(s + h), 1.0 / (h * h));
            add_scaled(r, g(s), -2.0 / (h * h));
            add_scaled(r, g(s - h), 1.0 / (h * h));
        }
        return r;
    };
    FourierRow a = D(kDiffStep), b = D(0.5 * kDiffStep), out;
    add_scaled(out, b, 4.0 / 3.0);
    add_scaled(out, a, -1.0 / 3.0);
    return out;
}

template <class G>
cplx differentiate(G&& g, cplx s, int n) {
    if (n == 0) return g(s);
    auto D = [&](double h) {
        if (n == 1) return (g(s + h) - g(s - h)) / (2.0 * h);
        if (n == 2) return (g(s + h) - 2.0 * g(s) + g(s - h)) / (h * h);
        throw InvalidGrowth("growth terms support log powers n <= 2");
    };
    return (4.0 * D(0.5 * kDiffStep) - D(kDiffStep)) / 3.0;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_growth(const GrowthSpec& growth) {
    for (const auto& g : growth) {
        if (std::abs(g.alpha) < 1e-12 || std::abs(g.alpha - 1.0) < 1e-12)
            throw InvalidGrowth("regularization: growth exponent alpha in {0,1} is not allowed");
        if (g.n < 0 || g.n > 2) throw InvalidGrowth("regularization: log power n must be 0, 1 or 2");
    }
}

class Subtracted : public Integrand {
public:
    Subtracted(const Integrand& F, const GrowthSpec& g) : F_(F), g_(g) {}
    cplx at(double x, double y) const override { return F_.at(x, y) - growth_eisenstein_row(g_, y).at(x); }
    void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const override {
        F_.row(y, xs, out);
        FourierRow e = growth_eisenstein_row(g_, y);
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] -= e.at(xs[i]);
    }

private:
    const Integrand& F_;
    const GrowthSpec& g_;
};

}  // namespace

void QuadratureConfig::validate() const {
    if (nx < 8 || ny < 8) throw std::invalid_argument("QuadratureConfig: nx, ny must be >= 8");
    if (!(height_cutoff >= 2.0)) throw std::invalid_argument("QuadratureConfig: height_cutoff must be >= 2");
    if (!(target_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: target_tol must be positive");
    if (max_refinements < 0) throw std::invalid_argument("QuadratureConfig: max_refinements must be >= 0");
}

void Integrand::row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const {
    out.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = at(xs[i], y);
}

cplx EisensteinProduct::at(double x, double y) const {
    cplx p(1.0, 0.0);
    for (cplx s : s_) p *= eisenstein_row(y, s).at(x);
    return p;
}

void EisensteinProduct::row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const {
    out.assign(xs.size(), cplx(1.0, 0.0));
    for (cplx s : s_) {
        FourierRow r = eisenstein_row(y, s);
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] *= r.at(xs[i]);
    }
}

cplx TruncatedEisensteinNormSq::at(double x, double y) const {
    FourierRow r = eisenstein_row(y, cplx(0.5, T_));
    cplx v = y <= A_ ? r.at(x) : r.nonconstant_at(x);
    return std::norm(v);
}

void TruncatedEisensteinNormSq::row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const {
    FourierRow r = eisenstein_row(y, cplx(0.5, T_));
    out.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cplx v = y <= A_ ? r.at(xs[i]) : r.nonconstant_at(xs[i]);
        out[i] = std::norm(v);
    }
}

cplx MaassPower::at(double x, double y) const {
    return std::pow(maass_row(rec_, y).at(x).real(), p_);
}

void MaassPower::row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const {
    FourierRow r = maass_row(rec_, y);
    out.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::pow(r.at(xs[i]).real(), p_);
}

QuadResult integrate_fundamental(const Integrand& f, const QuadratureConfig& cfg) {
    cfg.validate();
    Level prev = integrate_level(f, cfg, 1);
    long evals = prev.evals;
    int scale = 1;
    QuadResult res;
    bool have_rich = false;
    cplx prev_rich(0.0, 0.0);
    for (int ref = 0; ref <= cfg.max_refinements; ++ref) {
        scale *= 2;
        Level next = integrate_level(f, cfg, scale);
        evals += next.evals;
        cplx rich = (4.0 * next.value - prev.value) / 3.0;
        res.value = rich;
        // first pair: error of the finer midpoint sum; afterwards: change of the extrapolant
        res.abs_err = have_rich ? std::abs(rich - prev_rich) : std::abs(next.value - prev.value) / 3.0;
        have_rich = true;
        prev_rich = rich;
        res.nx = cfg.nx * scale;
        res.ny = cfg.ny * scale;
        res.evaluations = evals;
        if (cfg.cusp_tail) res.value += cfg.cusp_tail(cfg.height_cutoff);
        if (res.abs_err <= cfg.target_tol * std::max(1.0, std::abs(rich))) return res;
        prev = next;
    }
    char msg[160];
    std::snprintf(msg, sizeof msg, "integrate_fundamental: error estimate %.3e above target %.3e after refinements",
                  res.abs_err, cfg.target_tol);
    throw NonConvergence(msg);
}

QuadResult integrate_fundamental(const std::function<cplx(double, double)>& f, const QuadratureConfig& cfg) {
    return integrate_fundamental(PointIntegrand(f), cfg);
}

QuadResult inner_product(const std::function<cplx(double, double)>& f,
                         const std::function<cplx(double, double)>& g, const QuadratureConfig& cfg) {
    return integrate_fundamental(PointIntegrand([&](double x, double y) { return f(x, y) * std::conj(g(x, y)); }),
                                 cfg);
}

GrowthSpec eisenstein_product_growth(const std::vector<cplx>& s) {
    GrowthSpec out{{cplx(1.0, 0.0), cplx(0.0, 0.0), 0}};
    for (cplx si : s) {
        cplx ph = scattering_phi(si);
        GrowthSpec next;
        for (const auto& g : out) {
            next.push_back({g.c, g.alpha + si, 0});
            next.push_back({g.c * ph, g.alpha + 1.0 - si, 0});
        }
        out = std::move(next);
    }
    // merge equal exponents
    GrowthSpec merged;
    for (const auto& g : out) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const GrowthTerm& m) { return std::abs(m.alpha - g.alpha) < 1e-12; });
        if (it == merged.end())
            merged.push_back(g);
        else
            it->c += g.c;
    }
    return merged;
}

FourierRow growth_eisenstein_row(const GrowthSpec& growth, double y) {
    FourierRow acc;
    for (const auto& g : growth) {
        if (!(g.alpha.real() > 0.5)) continue;
        cplx w = g.c / factorial(g.n);
        if (g.n == 0) {
            add_scaled(acc, eisenstein_row(y, g.alpha), w);
        } else {
            add_scaled(acc, differentiate_row([&](cplx s) { return eisenstein_row(y, s); }, g.alpha, g.n), w);
        }
    }
    return acc;
}

QuadResult regularized_integral(const Integrand& F, const GrowthSpec& growth, const QuadratureConfig& cfg) {
    check_growth(growth);
    const double Y = cfg.height_cutoff;
    const double lY = std::log(Y);
    Subtracted G(F, growth);
    QuadResult r = integrate_fundamental(G, cfg);
    cplx tail(0.0, 0.0);
    for (const auto& g : growth) {
        cplx w = g.c / factorial(g.n);
        if (g.alpha.real() > 0.5) {
            auto h = [&](cplx s) { return scattering_phi(s) * std::exp(-s * lY) / s; };
            tail -= w * differentiate(h, g.alpha, g.n);
        } else {
            auto h = [&](cplx a) { return std::exp((a - 1.0) * lY) / (1.0 - a); };
            tail += w * differentiate(h, g.alpha, g.n);
        }
    }
    r.value += tail;
    return r;
}

QuadResult regularized_integral_truncation(const Integrand& F, const GrowthSpec& growth,
                                           const QuadratureConfig& cfg) {
    check_growth(growth);
    const double lY = std::log(cfg.height_cutoff);
    QuadResult r = integrate_fundamental(F, cfg);
    for (const auto& g : growth) {
        auto h = [&](cplx a) { return std::exp((a - 1.0) * lY) / (a - 1.0); };
        r.value -= g.c / factorial(g.n) * differentiate(h, g.alpha, g.n);
    }
    return r;
}

}  // namespace automorph
