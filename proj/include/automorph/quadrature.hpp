#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "automorph/forms.hpp"

namespace automorph {

struct QuadratureConfig {
    int nx = 32;
    int ny = 32;
    double height_cutoff = 10.0;
    double target_tol = 1e-6;
    // Heights above 1 where the integrand may jump (e.g. a truncation height).
    std::vector<double> breakpoints;
    int max_refinements = 2;
    // Optional analytic contribution of the cusp above height_cutoff, given Y = height_cutoff.
    std::function<cplx(double)> cusp_tail;
    void validate() const;
};

struct QuadResult {
    cplx value;
    double abs_err = 0.0;
    int nx = 0;
    int ny = 0;
    long evaluations = 0;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGrowth : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integrand sampled on rows of constant y. Implementations must be safe to call concurrently.
class Integrand {
public:
    virtual ~Integrand() = default;
    virtual cplx at(double x, double y) const = 0;
    virtual void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const;
};

class PointIntegrand : public Integrand {
public:
    explicit PointIntegrand(std::function<cplx(double, double)> f) : f_(std::move(f)) {}
    cplx at(double x, double y) const override { return f_(x, y); }

private:
    std::function<cplx(double, double)> f_;
};

// prod_i E(z, s_i)
class EisensteinProduct : public Integrand {
public:
    explicit EisensteinProduct(std::vector<cplx> s) : s_(std::move(s)) {}
    cplx at(double x, double y) const override;
    void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const override;

private:
    std::vector<cplx> s_;
};

// |E^A(z, 1/2+iT)|^2
class TruncatedEisensteinNormSq : public Integrand {
public:
    TruncatedEisensteinNormSq(double T, double A) : T_(T), A_(A) {}
    cplx at(double x, double y) const override;
    void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const override;

private:
    double T_, A_;
};

// phi(z)^p for an L^2-normalised Maass form
class MaassPower : public Integrand {
public:
    MaassPower(const MaassFormRecord& rec, int power) : rec_(rec), p_(power) {}
    cplx at(double x, double y) const override;
    void row(double y, const std::vector<double>& xs, std::vector<cplx>& out) const override;

private:
    const MaassFormRecord& rec_;
    int p_;
};

QuadResult integrate_fundamental(const Integrand& f, const QuadratureConfig& cfg);
QuadResult integrate_fundamental(const std::function<cplx(double, double)>& f, const QuadratureConfig& cfg);
QuadResult inner_product(const std::function<cplx(double, double)>& f,
                         const std::function<cplx(double, double)>& g, const QuadratureConfig& cfg);

struct GrowthTerm {
    cplx c;
    cplx alpha;
    int n = 0;
};
using GrowthSpec = std::vector<GrowthTerm>;

// Growth of prod_i E(z, s_i): all products of y^{s_i} and phi(s_i) y^{1-s_i}.
GrowthSpec eisenstein_product_growth(const std::vector<cplx>& s);

// sum_j c_j/n_j! d^{n_j}/ds^{n_j} E(z,s) at s = alpha_j over terms with Re(alpha_j) > 1/2.
FourierRow growth_eisenstein_row(const GrowthSpec& growth, double y);

// Subtraction route: int_X (F - E_Phi) dmu, with the cusp part above cfg.height_cutoff done analytically.
QuadResult regularized_integral(const Integrand& F, const GrowthSpec& growth, const QuadratureConfig& cfg);
// Truncation route: int_{F_Y} F dmu - sum_j c_j/n_j! d^n/dalpha^n [Y^{alpha-1}/(alpha-1)].
QuadResult regularized_integral_truncation(const Integrand& F, const GrowthSpec& growth,
                                           const QuadratureConfig& cfg);

}  // namespace automorph
