#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "automorph/specfun.hpp"

namespace automorph {

struct MissingInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Degree >= 2 L-values enter only through this bundle.
struct LValueBundle {
    double sym2_at_1 = 0.0;                           // L(1, Sym^2 phi)
    std::optional<double> sym2_log_derivative_at_1;   // L'/L(1, Sym^2 phi)
    std::vector<std::pair<cplx, cplx>> sym2_at_s;     // (s, L(s, Sym^2 phi))
    std::map<std::string, double> central_values;     // e.g. "L(1/2,phi_j)"

    void validate() const;
    std::optional<cplx> sym2_at(cplx s) const;
    void set_sym2(cplx s, cplx value);
};

double main_term_theorem_1_1(double t_phi, double T);

// Laurent constant c_0 in xi(s)/(s-1) = 1/(s-1)^2 + c_0/(s-1) + O(1), by a Richardson limit.
double xi_laurent_c0();

// Lambda'/Lambda(1, Sym^2 phi) from L'/L plus the archimedean digamma terms.
double sym2_completed_log_derivative(double t_phi, double l_log_derivative);
// log of pi^{-3s/2} Gamma(s/2) Gamma((s+2it)/2) Gamma((s-2it)/2)
cplx sym2_log_gamma_factor(cplx s, double t_phi);

struct RankinSelbergValue {
    cplx exact;       // Lambda(1-2iT,Sym^2)xi(1-2iT) / (2 Lambda(1,Sym^2) xi(2-4iT))
    cplx quotient;    // L(1-2iT,Sym^2) zeta(1-2iT) / (2 L(1,Sym^2) zeta(2-4iT))
    double gamma_factor = 0.0;  // |exact / quotient|
    double envelope = 0.0;      // exp(-pi/2 (|T+t|+|T-t|-2t)) (1+|T|)^{-1/2}
};

// <phi^2, E(., 1+2iT)>
RankinSelbergValue rankin_selberg_phi2_E(double T, const LValueBundle& lvals, double t_phi);

struct MainTermParts {
    cplx value;
    double bracket = 0.0;   // Lambda'/Lambda + 2 Re xi'/xi(1+2iT) - 2 xi'(2)/xi(2) + a_0
    cplx unfolding;         // the two <phi^2, E(., 1 +- 2iT)> terms
};

MainTermParts r_main_term_parts(double t_phi, double T, const LValueBundle& lvals);
cplx r_main_term(double t_phi, double T, const LValueBundle& lvals);

double maass_selberg_truncated_norm(double T, double A);

cplx zagier_triple_product(cplx s1, cplx s2, cplx s3);
// 1/2 + s1 +- s2 +- s3 in the order of the numerator.
std::vector<cplx> zagier_numerator_arguments(cplx s1, cplx s2, cplx s3);

std::pair<cplx, cplx> que_shrinking_dirichlet_identity(cplx s, double T, std::uint64_t N);

cplx mellin_barnes_bessel(cplx s, cplx mu, cplx nu);

// lambda_values: "Lambda(1/2,phi_j)", "Lambda(1/2,Sym2phi x phi_j)";
// sym2_values: "Lambda(1,Sym2phi)", "Lambda(1,Sym2phi_j)".
double watson_cusp_rhs(const std::map<std::string, double>& lambda_values,
                       const std::map<std::string, double>& sym2_values);

struct ContinuousSpectrumParts {
    double value = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
};

ContinuousSpectrumParts continuous_spectrum_parts(double tau, double T, double t_phi, const LValueBundle& lvals);
double continuous_spectrum_integrand(double tau, double T, double t_phi, const LValueBundle& lvals);

double decorrelation_main_term(double t, double tau);

struct PhaseDerivative {
    double exact = 0.0;
    double leading = 0.0;
};

// d/dx arg xi(1+2ix) and the model log|1/2+ix|
PhaseDerivative xi_phase_derivative(double x);

cplx eisenstein_near_one(double T_small);

struct ResidueTerms {
    cplx I_main;
    cplx J_main;
};

ResidueTerms appendix_b_residues(double t_phi, double T, double A, const LValueBundle& lvals);

}  // namespace automorph
