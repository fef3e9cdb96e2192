#include "automorph/exponents.hpp"

#include <cmath>

namespace automorph {

namespace {

PiecewiseExponent make(double v, const char* b) { return {v, b}; }

void check_pole(cplx z, double eps) {
    double k = std::round(z.real());
    if (k <= 0.0 && std::abs(z - k) < eps) throw PoleError("gamma_weight_exact: Gamma argument near a pole");
}

double lgam_abs(cplx z, double eps) {
    check_pole(z, eps);
    return log_gamma(z).real();
}

}  // namespace

double p_exponent_direct(double tj, double t, double T) {
    return std::abs(tj + t) + std::abs(tj - t) + std::abs(tj - 2.0 * T + t) - tj + t - 2.0 * T;
}

double p_exponent_stirling(double tj, double t, double T) {
    return std::abs(t + tj) + std::abs(t - tj) + std::abs(t - 2.0 * T + tj) + std::abs(t - 2.0 * T - tj) -
           2.0 * tj - 2.0 * T - 2.0 * std::abs(t - T);
}

PiecewiseExponent p_exponent(double tj, double t, double T) {
    if (tj < 0.0 || T < 0.0) throw std::invalid_argument("p_exponent: t_j >= 0 and T >= 0 required");
    if (t > T) return make(p_exponent_stirling(tj, t, T), "beyond-table");
    if (t >= 0.0) {
        if (tj >= 2.0 * T - t) return make(2.0 * tj + 2.0 * t - 4.0 * T, "t_j >= 2T-t");
        if (tj >= t) return make(0.0, "t <= t_j <= 2T-t");
        return make(2.0 * t - 2.0 * tj, "0 <= t_j <= t");
    }
    if (tj >= 2.0 * T - t) return make(2.0 * tj + 2.0 * t - 4.0 * T, "t_j >= 2T-t");
    if (tj >= -t) return make(0.0, "-t <= t_j <= 2T-t");
    return make(-2.0 * t - 2.0 * tj, "0 <= t_j <= -t");
}

double q_exponent_direct(double t, double tj, double T, double tp) {
    return 0.5 * (std::abs(tj - 2.0 * tp) + std::abs(tj + t) + std::abs(tj - t) + std::abs(tj - 2.0 * T + t)) +
           0.5 * t - tp - T;
}

double q_exponent_stirling(double t, double tj, double T, double tp) {
    return tj + 0.5 * (tj + 2.0 * tp) + 0.5 * std::abs(tj - 2.0 * tp) + 0.5 * std::abs(tj + t) +
           0.5 * std::abs(tj - t) + 0.5 * (std::abs(t - 2.0 * T + tj) + std::abs(t - 2.0 * T - tj)) - 2.0 * tj -
           2.0 * tp - T - std::abs(t - T);
}

PiecewiseExponent q_exponent(double t, double tj, double T, double tp) {
    if (tj < 0.0) throw std::invalid_argument("q_exponent: t_j >= 0 required");
    const double L = std::pow(std::log(tp), 20);
    const bool large = t >= 0.0 && t <= L;
    const bool middle = !large && t >= 2.0 * T - 2.0 * tp && t <= 0.0;
    const bool small = !large && !middle && t >= -L && t <= 2.0 * T - 2.0 * tp;
    if (!large && !middle && !small) throw RegimeError("q_exponent: t lies in none of the three regimes");
    if (std::abs(t) > T || T > tp || T < 0.0) return make(q_exponent_stirling(t, tj, T, tp), "beyond-table");
    if (large) {
        if (tj >= 2.0 * tp) return make(2.0 * tj - 2.0 * tp + t - 2.0 * T, "t_j >= 2t_phi");
        if (tj >= 2.0 * T - t) return make(tj - 2.0 * T + t, "2T-t <= t_j <= 2t_phi");
        if (tj >= t) return make(0.0, "t <= t_j <= 2T-t");
        return make(t - tj, "t_j <= t");
    }
    if (middle) {
        if (tj >= 2.0 * tp) return make(2.0 * tj - 2.0 * tp + t - 2.0 * T, "t_j >= 2t_phi");
        if (tj >= 2.0 * T - t) return make(tj - 2.0 * T + t, "2T-t <= t_j <= 2t_phi");
        if (tj >= -t) return make(0.0, "-t <= t_j <= 2T-t");
        return make(-t - tj, "t_j <= -t");
    }
    if (tj >= 2.0 * T - t) return make(2.0 * tj - 2.0 * tp + t - 2.0 * T, "t_j >= 2T-t");
    if (tj >= 2.0 * tp) return make(tj - 2.0 * tp, "2t_phi <= t_j <= 2T-t");
    if (tj >= -t) return make(0.0, "-t <= t_j <= 2t_phi");
    return make(-t - tj, "t_j <= -t");
}

double log_h_weight(double tj, double t, double T, double log_tphi) {
    if (!(log_tphi > 0.0)) throw std::invalid_argument("h_weight: log t_phi must be positive");
    const double d = 1.0 / log_tphi;
    double l = (0.5 + d) * (std::log1p(std::abs(t + tj)) + std::log1p(std::abs(t - tj)) +
                            std::log1p(std::abs(t - 2.0 * T + tj)) + std::log1p(std::abs(t - 2.0 * T - tj)));
    l += d * std::log1p(std::abs(t - T));
    return l - 0.5 * M_PI * p_exponent(tj, t, T).value;
}

double h_weight(double tj, double t, double T, double log_tphi) {
    return std::exp(log_h_weight(tj, t, T, log_tphi));
}

GammaWeights gamma_weight_exact(double tj, double t, double T, double tp, double eps, bool squared_H) {
    if (!(tp > 1.0)) throw std::invalid_argument("gamma_weight_exact: t_phi > 1 required");
    const double d = 1.0 / std::log(tp);
    const double a = 0.5 + d;
    GammaWeights w;
    double num = 0.0;
    for (double sg : {1.0, -1.0}) {
        num += lgam_abs(0.5 * cplx(a, t + sg * tj), eps);
        num += lgam_abs(0.5 * cplx(a, t - 2.0 * T + sg * tj), eps);
    }
    double den = lgam_abs(cplx(0.5, tj), eps) + lgam_abs(cplx(0.5, T), eps) + lgam_abs(cplx(a, t - T), eps);
    w.log_H1 = num - den;
    w.log_H = (squared_H ? 2.0 : 1.0) * w.log_H1;
    w.log_H2 = 2.0 * lgam_abs(cplx(0.25, 0.5 * tj), eps) + lgam_abs(0.5 * cplx(0.5, 2.0 * tp + tj), eps) +
               lgam_abs(0.5 * cplx(0.5, 2.0 * tp - tj), eps) - lgam_abs(cplx(0.5, tj), eps) -
               2.0 * lgam_abs(cplx(0.5, tp), eps);
    double wn = 0.0;
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) wn += 2.0 * lgam_abs(0.5 * cplx(0.5, T + s1 * tp + s2 * tj), eps);
    w.log_watson = wn - 2.0 * (lgam_abs(cplx(0.5, T), eps) + lgam_abs(cplx(0.5, tp), eps) + lgam_abs(cplx(0.5, tj), eps));
    w.value = std::exp(w.log_value());
    return w;
}

}  // namespace automorph
