#pragma once

#include <string>

#include "automorph/specfun.hpp"

namespace automorph {

struct PiecewiseExponent {
    double value = 0.0;
    std::string branch;
};

struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// P(t_j, t, T) from the case tables; outside |t| <= T the first-line Stirling form, branch "beyond-table".
PiecewiseExponent p_exponent(double t_j, double t, double T);
// |t_j+t| + |t_j-t| + |t_j-2T+t| - t_j + t - 2T
double p_exponent_direct(double t_j, double t, double T);
// sum_{+-}(|t +- t_j| + |t-2T +- t_j|) - 2t_j - 2T - 2|t-T|
double p_exponent_stirling(double t_j, double t, double T);

// Q(t, t_j, T, t_phi); regime guards use (log t_phi)^20.
PiecewiseExponent q_exponent(double t, double t_j, double T, double t_phi);
double q_exponent_direct(double t, double t_j, double T, double t_phi);
double q_exponent_stirling(double t, double t_j, double T, double t_phi);

// Polynomial factors times exp(-pi/2 P).
double h_weight(double t_j, double t, double T, double log_tphi);
double log_h_weight(double t_j, double t, double T, double log_tphi);

struct GammaWeights {
    double log_H = 0.0;       // log of the H display (squared when requested)
    double log_H1 = 0.0;      // log |H_1(t_j, t, T)|
    double log_H2 = 0.0;      // log |H_2(t_j, t_phi)|
    double log_watson = 0.0;  // log of the Watson factor gamma(t_j, t_phi, T)
    double value = 0.0;       // |H_1 H_2|

    double log_value() const { return log_H1 + log_H2; }
};

// Gamma arguments carry the shift 1/log t_phi; requires t_phi > 1.
GammaWeights gamma_weight_exact(double t_j, double t, double T, double t_phi, double eps = 1e-8,
                                bool squared_H = true);

}  // namespace automorph
