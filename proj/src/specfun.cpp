#include "automorph/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gauss.hpp"

namespace automorph {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.14472988584940017414;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

void require_finite(cplx s, const char* who) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw std::invalid_argument(std::string(who) + ": non-finite argument");
}

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

std::string fmt(cplx s) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << s.real() << "," << s.imag() << ")";
    return os.str();
}

double zeta_even(int k) {
    // zeta(2k) by direct summation plus Euler-Maclaurin tail, k >= 2.
    const int N = 50;
    double s = 0.0;
    for (int n = N - 1; n >= 1; --n) s += std::pow(double(n), -2.0 * k);
    double a = 2.0 * k;
    s += std::pow(double(N), 1.0 - a) / (a - 1.0) + 0.5 * std::pow(double(N), -a) +
         a / 12.0 * std::pow(double(N), -a - 1.0);
    return s;
}

}  // namespace

const std::vector<double>& bernoulli_over_factorial() {
    static const std::vector<double> table = [] {
        std::vector<double> b(31, 0.0);
        for (int k = 1; k <= 30; ++k) {
            double z;
            if (k == 1)
                z = kPi * kPi / 6.0;
            else if (k == 2)
                z = std::pow(kPi, 4) / 90.0;
            else if (k == 3)
                z = std::pow(kPi, 6) / 945.0;
            else
                z = zeta_even(k);
            double v = 2.0 * z / std::pow(2.0 * kPi, 2.0 * k);
            b[k] = (k % 2 == 1) ? v : -v;
        }
        return b;
    }();
    return table;
}

cplx log_gamma(cplx s) {
    require_finite(s, "log_gamma");
    if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at " + fmt(s));
    const auto& b = bernoulli_over_factorial();
    cplx z = s;
    cplx acc(0.0, 0.0);
    while (z.real() < 0.5 || std::abs(z) < 15.0) {
        acc += std::log(z);
        z += 1.0;
    }
    cplx r = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
    cplx zinv = 1.0 / z, zinv2 = zinv * zinv, p = zinv;
    double fact = 1.0;  // (2k-2)!
    for (int k = 1; k <= 12; ++k) {
        if (k > 1) fact *= double(2 * k - 3) * double(2 * k - 2);
        cplx term = b[k] * fact * p;
        r += term;
        if (std::abs(term) < 1e-18 * std::abs(r)) break;
        p *= zinv2;
    }
    return r - acc;
}

cplx digamma(cplx s) {
    require_finite(s, "digamma");
    if (is_nonpositive_integer(s)) throw PoleError("digamma: pole at " + fmt(s));
    const auto& b = bernoulli_over_factorial();
    cplx z = s;
    cplx acc(0.0, 0.0);
    while (z.real() < 0.5 || std::abs(z) < 15.0) {
        acc += 1.0 / z;
        z += 1.0;
    }
    cplx zinv = 1.0 / z, zinv2 = zinv * zinv, p = zinv2;
    cplx r = std::log(z) - 0.5 * zinv;
    double fact = 1.0;  // (2k-1)!
    for (int k = 1; k <= 12; ++k) {
        if (k > 1) fact *= double(2 * k - 2) * double(2 * k - 1);
        cplx term = b[k] * fact * p;
        r -= term;
        if (std::abs(term) < 1e-18 * std::abs(r)) break;
        p *= zinv2;
    }
    return r - acc;
}

namespace {

struct ZetaParts {
    cplx value;
    cplx deriv;
    double err;
};

ZetaParts zeta_em(cplx s, bool want_deriv) {
    const auto& b = bernoulli_over_factorial();
    const double N = std::max(20.0, std::ceil(std::abs(s.imag())));
    const long n_max = long(N);
    cplx sum(0.0, 0.0), dsum(0.0, 0.0);
    double mag = 0.0;
    for (long n = n_max - 1; n >= 1; --n) {
        double ln = std::log(double(n));
        cplx t = std::exp(-s * ln);
        sum += t;
        mag += std::abs(t);
        if (want_deriv) dsum -= ln * t;
    }
    const double lN = std::log(N);
    cplx Ns = std::exp(-s * lN);
    cplx tail = N * Ns / (s - 1.0) + 0.5 * Ns;
    cplx dtail(0.0, 0.0);
    if (want_deriv)
        dtail = -lN * N * Ns / (s - 1.0) - N * Ns / ((s - 1.0) * (s - 1.0)) - 0.5 * lN * Ns;
    cplx poch = s;      // s(s+1)...(s+2k-2)
    cplx dlog = 1.0 / s;  // sum 1/(s+j)
    cplx Npow = Ns / N;  // N^{-s-2k+1}
    double last = 0.0;
    for (int k = 1; k <= 30; ++k) {
        if (k > 1) {
            cplx f1 = s + double(2 * k - 3), f2 = s + double(2 * k - 2);
            poch *= f1 * f2;
            dlog += 1.0 / f1 + 1.0 / f2;
            Npow /= N * N;
        }
        cplx term = b[k] * poch * Npow;
        tail += term;
        if (want_deriv) dtail += term * (dlog - lN);
        last = std::abs(term);
        if (last < 1e-18 * std::abs(sum + tail)) break;
    }
    ZetaParts r;
    r.value = sum + tail;
    r.deriv = dsum + dtail;
    r.err = last + 2e-16 * (mag + 1.0 + std::abs(tail));
    return r;
}

void check_zeta_domain(cplx s, const char* who) {
    require_finite(s, who);
    if (s == cplx(1.0, 0.0)) throw PoleError(std::string(who) + ": pole at s = 1");
    if (!(s.real() > 0.0)) throw RangeError(std::string(who) + ": requires Re(s) > 0, got " + fmt(s));
    if (std::abs(s.imag()) > 1e7) throw RangeError(std::string(who) + ": |Im s| beyond 1e7");
}

}  // namespace

cplx zeta(cplx s) { return zeta_estimate(s).value; }

Estimate zeta_estimate(cplx s) {
    check_zeta_domain(s, "zeta");
    auto p = zeta_em(s, false);
    return {p.value, p.err};
}

cplx zeta_log_derivative(cplx s) {
    check_zeta_domain(s, "zeta_log_derivative");
    auto p = zeta_em(s, true);
    if (std::abs(p.value) < 1e-10) throw NearZeroError("zeta_log_derivative: zeta(s) ~ 0 at " + fmt(s));
    return p.deriv / p.value;
}

cplx log_xi(cplx s) {
    require_finite(s, "log_xi");
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0)) throw PoleError("xi: pole at " + fmt(s));
    if (s.real() < 0.5) return log_xi(1.0 - s);
    cplx z = zeta(s);
    if (z == cplx(0.0, 0.0)) throw NearZeroError("log_xi: zeta vanishes at " + fmt(s));
    return -0.5 * s * kLogPi + log_gamma(0.5 * s) + std::log(z);
}

cplx xi_completed(cplx s) {
    require_finite(s, "xi_completed");
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0)) throw PoleError("xi: pole at " + fmt(s));
    if (s.real() < 0.5) return xi_completed(1.0 - s);
    cplx g = std::exp(-0.5 * s * kLogPi + log_gamma(0.5 * s));
    cplx r = g * zeta(s);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw RangeError("xi_completed: overflow at " + fmt(s));
    return r;
}

cplx xi_log_derivative(cplx s) {
    require_finite(s, "xi_log_derivative");
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0)) throw PoleError("xi_log_derivative: pole at " + fmt(s));
    if (s.real() < 0.5) return -xi_log_derivative(1.0 - s);
    return -0.5 * kLogPi + 0.5 * digamma(0.5 * s) + zeta_log_derivative(s);
}

// ---------------------------------------------------------------- K-Bessel

namespace {

// sinh(v) - v*cosh(v), accurate near 0.
double sinh_minus_vcosh(double v) {
    if (std::abs(v) < 0.7) {
        double v2 = v * v, term = v, s = 0.0;
        double fact = 1.0;  // (2k+1)!
        for (int k = 1; k <= 12; ++k) {
            term *= v2;
            fact *= double(2 * k) * double(2 * k + 1);
            s -= 2.0 * k * term / fact;
        }
        return s;
    }
    return std::sinh(v) - v * std::cosh(v);
}

// sinh(v) - v, accurate near 0.
double sinh_minus_v(double v) {
    if (std::abs(v) < 0.7) {
        double v2 = v * v, term = v, s = 0.0, fact = 1.0;
        for (int k = 1; k <= 12; ++k) {
            term *= v2;
            fact *= double(2 * k) * double(2 * k + 1);
            s += term / fact;
        }
        return s;
    }
    return std::sinh(v) - v;
}

// x >= t >= 0: steepest-descent path u = v + i w(v), sin w = t v / (x sinh v).
Estimate k_descent(double a, double t, double x) {
    auto path = [&](double v, double& sinw, double& cosw, double& rest) {
        // rest = pi/2 - w
        if (v == 0.0) {
            sinw = t / x;
            double om = (x - t) / x;
            cosw = std::sqrt(std::max(0.0, om * (1.0 + sinw)));
        } else {
            double sh = std::sinh(v);
            sinw = t * v / (x * sh);
            double om = ((x - t) * sh + t * sinh_minus_v(v)) / (x * sh);
            cosw = std::sqrt(std::max(0.0, om * (1.0 + sinw)));
        }
        rest = std::atan2(cosw, sinw);
    };
    auto exponent = [&](double v) {
        double sw, cw, rest;
        path(v, sw, cw, rest);
        return -x * std::cosh(v) * cw + t * rest + std::abs(a) * v;
    };
    // Locate the truncation point where the integrand is e^{-50} below its peak.
    double peak = exponent(0.0);
    double V = 0.0;
    double step = 0.25;
    for (int it = 0; it < 4000; ++it) {
        V += step;
        double e = exponent(V);
        peak = std::max(peak, e);
        if (e < peak - 50.0 && x * std::sinh(V) > std::abs(a)) break;
        step = std::min(0.5, step * 1.05);
    }
    auto f = [&](double v) -> cplx {
        double sw, cw, rest;
        path(v, sw, cw, rest);
        double E = -x * std::cosh(v) * cw + t * rest;
        if (a == 0.0) return cplx(std::exp(E), 0.0);
        double w = 0.5 * M_PI - rest;
        double sh = std::sinh(v);
        double gp = (t / x) * sinh_minus_vcosh(v) / (sh * sh);
        double wp = cw > 0 ? gp / cw : -1.0 / std::sqrt(3.0);
        cplx ph = std::exp(cplx(0.0, a * w));
        return std::exp(E) * ph * cplx(std::cosh(a * v), wp * std::sinh(a * v));
    };
    detail::PanelSum acc;
    double width = std::min(0.5, 1.5 / std::sqrt(x));
    double first = std::min(width, V);
    double lo = first * std::ldexp(1.0, -8);
    acc.add(f, 0.0, lo);
    for (double b = lo; b < first;) {
        double nb = std::min(first, 2.0 * b);
        acc.add(f, b, nb);
        b = nb;
    }
    int n = std::max(1, int(std::ceil((V - first) / width)));
    double h = (V - first) / n;
    for (int i = 0; i < n && V > first; ++i) acc.add(f, first + i * h, first + (i + 1) * h);
    return {acc.hi, acc.error()};
}

// x < t: contour 0 -> i pi/2 -> V1 + i pi/2 -> V1 -> infinity (and its mirror image).
Estimate k_contour(cplx nu, double x) {
    const double a = nu.real(), t = nu.imag();
    const double half_pi_t = 0.5 * M_PI * t;
    double V1 = std::acosh((half_pi_t + 45.0) / x);
    V1 = std::acosh((half_pi_t + 45.0 + std::abs(a) * V1) / x);
    const cplx pre = std::exp(cplx(0.0, 0.5 * M_PI * a)) * 0.5;

    detail::PanelSum horiz;
    auto fh = [&](double v) -> cplx {
        double psi = t * v - x * std::sinh(v);
        if (a == 0.0) return cplx(std::cos(psi), 0.0) * 2.0 * pre;
        return pre * (std::exp(cplx(a * v, psi)) + std::exp(cplx(-a * v, -psi)));
    };
    auto freq = [&](double v) { return std::abs(t - x * std::cosh(v)) + std::abs(a); };
    for (double v = 0.0; v < V1;) {
        double h = std::min(0.5, M_PI / std::max(1.0, freq(v)));
        h = std::min(h, M_PI / std::max(1.0, freq(std::min(V1, v + h))));
        double nv = std::min(V1, v + h);
        if (V1 - nv < 1e-3 * h) nv = V1;
        horiz.add(fh, v, nv);
        v = nv;
    }

    const double chV = std::cosh(V1), shV = std::sinh(V1);
    detail::PanelSum vert;
    auto fv = [&](double w) -> cplx {
        double cw = std::cos(w), sw = std::sin(w);
        // upper: -i * exp(pi t/2 - x cosh(V1 + i w) + nu (V1 + i w))
        cplx eu(half_pi_t - x * chV * cw + a * V1 - t * w, -x * shV * sw + t * V1 + a * w);
        // lower: +i * exp(pi t/2 - x cosh(V1 - i w) - nu (V1 - i w))
        cplx el(half_pi_t - x * chV * cw - a * V1 - t * w, x * shV * sw - t * V1 + a * w);
        return 0.5 * (cplx(0.0, -1.0) * std::exp(eu) + cplx(0.0, 1.0) * std::exp(el));
    };
    int nvp = int(std::ceil((x * shV + t + std::abs(a) + 1.0) * 0.5)) + 2;
    for (int i = 0; i < nvp; ++i) vert.add(fv, 0.5 * M_PI * i / nvp, 0.5 * M_PI * (i + 1) / nvp);

    detail::PanelSum tail;
    double V2 = std::acosh(chV + 40.0 / x);
    auto ft = [&](double v) -> cplx {
        return std::exp(half_pi_t - x * std::cosh(v)) * std::cosh(nu * v);
    };
    int ntp = int(std::ceil((V2 - V1) * std::max(1.0, t) / M_PI)) + 1;
    for (int i = 0; i < ntp; ++i) tail.add(ft, V1 + (V2 - V1) * i / ntp, V1 + (V2 - V1) * (i + 1) / ntp);

    cplx v = horiz.hi + vert.hi + tail.hi;
    return {v, horiz.error() + vert.error() + tail.error() + 1e-15 * (horiz.mag + vert.mag)};
}

}  // namespace

Estimate bessel_k_scaled(cplx nu, double x) {
    require_finite(nu, "bessel_k");
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("bessel_k: x must be positive");
    if (nu.imag() < 0.0 || (nu.imag() == 0.0 && nu.real() < 0.0)) nu = -nu;
    if (nu.imag() > 500.0) throw RangeError("bessel_k: |Im nu| > 500");
    if (std::abs(nu.real()) > 8.0) throw RangeError("bessel_k: |Re nu| > 8");
    const double t = nu.imag();
    if (x >= t) {
        Estimate e = k_descent(nu.real(), t, x);
        // descent exponent omits the e^{-pi t/2} scale already
        return e;
    }
    return k_contour(nu, x);
}

RealEstimate bessel_k_imag_scaled(double t, double x) {
    Estimate e = bessel_k_scaled(cplx(0.0, std::abs(t)), x);
    return {e.value.real(), e.abs_err};
}

BesselKComplex bessel_k(cplx nu, double x) {
    Estimate e = bessel_k_scaled(nu, x);
    double sc = std::exp(-0.5 * M_PI * std::abs(nu.imag()));
    BesselKComplex r;
    r.value = e.value * sc;
    r.abs_err = e.abs_err * sc;
    if (std::abs(r.value) < kUnderflowThreshold) {
        r.value = 0.0;
        r.underflow = true;
    }
    return r;
}

BesselK bessel_k_imag_order(double t, double x) {
    if (std::abs(t) > 500.0) throw RangeError("bessel_k_imag_order: |t| > 500");
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k_imag_order: x must be positive");
    RealEstimate e = bessel_k_imag_scaled(t, x);
    double sc = std::exp(-0.5 * M_PI * std::abs(t));
    BesselK r;
    r.value = e.value * sc;
    r.abs_err = e.abs_err * sc;
    if (std::abs(r.value) < kUnderflowThreshold) {
        r.value = 0.0;
        r.underflow = true;
    }
    return r;
}

// ---------------------------------------------------------------- arithmetic

bool PrimeTable::contains(std::uint64_t n) const {
    if (n > limit) throw RangeError("PrimeTable::contains beyond limit");
    return std::binary_search(primes.begin(), primes.end(), std::uint32_t(n));
}

PrimeTable sieve(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
    if (limit > 1000000000ULL) throw RangeError("sieve: limit too large (max 1e9)");
    PrimeTable t;
    t.limit = limit;
    // odd-only sieve: index i represents 2i+1
    std::vector<bool> comp((limit + 1) / 2 + 1, false);
    t.primes.push_back(2);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (comp[i]) continue;
        std::uint64_t p = 2 * i + 1;
        t.primes.push_back(std::uint32_t(p));
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) comp[m / 2] = true;
    }
    return t;
}

double eta_coefficient(double T, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("eta_coefficient: n >= 1");
    double s = 0.0;
    const double ln = std::log(double(n));
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        std::uint64_t e = n / d;
        if (d == e)
            s += 1.0;
        else
            s += 2.0 * std::cos(T * (2.0 * std::log(double(d)) - ln));
    }
    return s;
}

cplx divisor_sigma(cplx s, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisor_sigma: n >= 1");
    cplx acc(0.0, 0.0);
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        std::uint64_t e = n / d;
        acc += std::exp(s * std::log(double(d)));
        if (e != d) acc += std::exp(s * std::log(double(e)));
    }
    return acc;
}

}  // namespace automorph
