#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace automorph::detail {

struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

inline GaussRule make_gauss_legendre(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        r.x[i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return r;
}

inline const GaussRule& gauss16() {
    static const GaussRule r = make_gauss_legendre(16);
    return r;
}

inline const GaussRule& gauss8() {
    static const GaussRule r = make_gauss_legendre(8);
    return r;
}

// Accumulates a panel integral with a 16-point rule and an 8-point companion.
struct PanelSum {
    std::complex<double> hi{0.0, 0.0};
    std::complex<double> lo{0.0, 0.0};
    double mag = 0.0;

    template <class F>
    void add(F&& f, double a, double b) {
        const auto& g16 = gauss16();
        const auto& g8 = gauss8();
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        std::complex<double> s16{0.0, 0.0}, s8{0.0, 0.0};
        for (std::size_t i = 0; i < g16.x.size(); ++i) {
            std::complex<double> v = f(c + h * g16.x[i]);
            s16 += g16.w[i] * v;
            mag += g16.w[i] * std::abs(v) * std::abs(h);
        }
        for (std::size_t i = 0; i < g8.x.size(); ++i) s8 += g8.w[i] * f(c + h * g8.x[i]);
        hi += h * s16;
        lo += h * s8;
    }

    double error() const {
        double d = std::abs(hi - lo);
        double m = mag > 0 ? mag : 1e-300;
        return d * std::min(1.0, d / m) + 4e-16 * mag;
    }
};

}  // namespace automorph::detail
