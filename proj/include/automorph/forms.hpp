#pragma once

#include <optional>
#include <string>
#include <vector>

#include "automorph/specfun.hpp"

namespace automorph {

struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;
};

struct ModularMatrix {
    long long a = 1, b = 0, c = 0, d = 1;
};

UpperHalfPoint apply_modular(const ModularMatrix& g, UpperHalfPoint z);
UpperHalfPoint reduce_to_fundamental_domain(UpperHalfPoint z);
bool in_fundamental_domain(UpperHalfPoint z, double tol = 1e-12);

enum class DataSource { lmfdb, fixture, synthetic };

std::string to_string(DataSource s);
DataSource data_source_from_string(const std::string& s);

struct MaassFormRecord {
    std::string label;
    double spectral_parameter = 0.0;
    // All published digits, kept verbatim for round-trips.
    std::string spectral_parameter_text;
    std::string parity = "even";
    // coefficients[n-1] = lambda(n)
    std::vector<double> coefficients;
    std::optional<double> sym2_L_value;
    DataSource source = DataSource::fixture;
    std::string provenance;
    bool ramanujan_warning = false;

    double lambda(std::size_t n) const { return coefficients.at(n - 1); }
};

// Throws std::invalid_argument if lambda(1) != 1 or the record is malformed.
// Sets ramanujan_warning when some |lambda(n)| exceeds 1.2 d(n).
void validate_record(MaassFormRecord& r);

struct EisensteinSpec {
    double T = 0.0;
    std::optional<double> truncation_A;
    bool normalized = false;
};

// Fourier data at a fixed height: value(x) = constant + sum_n cos_coeffs[n-1] cos(2 pi n x).
struct FourierRow {
    cplx constant{0.0, 0.0};
    std::vector<cplx> cos_coeffs;
    double abs_err = 0.0;
    cplx at(double x) const;
    cplx nonconstant_at(double x) const;
};

int default_fourier_cutoff(double t, double y);

// phi(s) = xi(2s-1)/xi(2s)
cplx scattering_phi(cplx s);
// y^s + phi(s) y^{1-s}
cplx eisenstein_constant_term(double y, cplx s);

FourierRow eisenstein_row(double y, cplx s, int fourier_cutoff = 0);
Estimate eisenstein_eval(UpperHalfPoint z, cplx s, int fourier_cutoff = 0);

cplx constant_term(double y, double T);
Estimate truncated_eisenstein_eval(UpperHalfPoint z, const EisensteinSpec& spec, int fourier_cutoff = 0);
// sqrt((pi/3)/log(1/4+T^2)) xi(1+2iT)/|xi(1+2iT)|
cplx normalized_eisenstein_factor(double T);
Estimate normalized_eisenstein_eval(UpperHalfPoint z, double T, int fourier_cutoff = 0);

// 4 sqrt(y) rho(1) lambda(n) K_{it}(2 pi n y) with rho(1) > 0 from the record's L(1,Sym^2).
FourierRow maass_row(const MaassFormRecord& rec, double y, int fourier_cutoff = 0);
RealEstimate maass_eval(const MaassFormRecord& rec, UpperHalfPoint z, int fourier_cutoff = 0);
double maass_rho1(const MaassFormRecord& rec);

inline constexpr double kVolume = 1.04719755119659774615;  // pi/3

}  // namespace automorph
