#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "automorph/forms.hpp"
#include "automorph/specfun.hpp"

namespace automorph {

// One verification line: a measured discrepancy against a named oracle.
struct Check {
    std::string name;
    std::string oracle;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;  // both sides of the comparison
};

struct RunReport {
    std::string suite;
    std::vector<Check> checks;
    double wall_time = 0.0;  // seconds

    bool passed() const;
    std::size_t failures() const;
};

struct FixtureMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteOptions {
    std::filesystem::path fixture_file;  // empty: default_fixture_file()
};

const std::vector<std::string>& suite_names();
bool suite_needs_fixtures(const std::string& suite);
// Throws FixtureMissing when the suite needs Maass data that cannot be loaded.
RunReport run_suite(const std::string& suite, const SuiteOptions& opts = {});

std::string format_table(const RunReport& r);
std::string reports_json(const std::vector<RunReport>& reports);

Check compare_check(const std::string& name, const std::string& oracle, cplx value, cplx reference, double tol,
                    bool relative = true);
Check bound_check(const std::string& name, const std::string& oracle, double measured, double tol,
                  const std::string& detail = {});
Check bool_check(const std::string& name, const std::string& oracle, bool ok, const std::string& detail = {});

// Individual check groups; the acceptance binary and the suites share these.
std::vector<Check> checks_specfun();
std::vector<Check> checks_forms_eisenstein();
std::vector<Check> checks_eisenstein_lattice(int points = 50);
std::vector<Check> checks_eisenstein_automorphy(int points = 1000);
std::vector<Check> checks_quadrature();
std::vector<Check> checks_forms_maass(const std::vector<MaassFormRecord>& records);
Check check_maass_norm(const MaassFormRecord& rec);
std::vector<Check> checks_maass_selberg();
std::vector<Check> checks_mellin_barnes();
std::vector<Check> checks_que_shrinking();
Check check_zagier(cplx s1, cplx s2, cplx s3);
std::vector<Check> checks_identities_misc();
std::vector<Check> checks_decorrelation();
std::vector<Check> checks_exponent_tables(int samples = 10000);
std::vector<Check> checks_exponents_misc();
std::vector<Check> checks_hecke_combinatorics();
std::vector<Check> checks_density();
std::vector<Check> checks_prime_sums();
std::vector<Check> checks_momentlab_misc();

// Oracles built from first principles, independent of the routines they test.
cplx hurwitz_zeta_oracle(cplx s, double q);
// E(z,s) from the lattice sum over (m,n): rows m <= M summed in n with binomial-Hurwitz tails,
// rows m > M by their Poisson leading term (error below e^{-2 pi M y}). Re(s) > 1.
cplx eisenstein_lattice_sum(UpperHalfPoint z, cplx s);
// int_0^inf e^{-x cosh u} cos(t u) du by the trapezoidal rule.
double bessel_k_trapezoid(double t, double x);
// int_0^inf K_{i t1}(x) K_{i t2}(x) x^{s-1} dx by Gauss-Legendre panels in log x.
cplx bessel_mellin_quadrature(cplx s, double t1, double t2);
// Stirling: log|Gamma(sigma + i y)| ~ log sqrt(2 pi) + (sigma - 1/2) log|y| - pi|y|/2
double stirling_log_abs_gamma(double sigma, double y);
// Random element of SL(2,Z) applied to z, with Im of the image at least y_min.
UpperHalfPoint random_modular_image(UpperHalfPoint z, std::mt19937_64& rng, double y_min);

}  // namespace automorph
