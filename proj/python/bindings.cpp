#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "automorph/checks.hpp"
#include "automorph/exponents.hpp"
#include "automorph/formulas.hpp"
#include "automorph/forms.hpp"
#include "automorph/ingest.hpp"
#include "automorph/momentlab.hpp"
#include "automorph/specfun.hpp"

namespace py = pybind11;
using namespace automorph;

PYBIND11_MODULE(automorph, m) {
    m.doc() = "Eisenstein series, Maass forms and moment bookkeeping on SL(2,Z)\\H";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
    py::register_exception<MissingInput>(m, "MissingInput", PyExc_ValueError);
    py::register_exception<FixtureMissing>(m, "FixtureMissing", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("value", &Estimate::value)
        .def_readonly("abs_err", &Estimate::abs_err)
        .def("__repr__", [](const Estimate& e) {
            return "Estimate(" + py::repr(py::cast(e.value)).cast<std::string>() + ", abs_err=" + std::to_string(e.abs_err) + ")";
        });
    py::class_<RealEstimate>(m, "RealEstimate")
        .def_readonly("value", &RealEstimate::value)
        .def_readonly("abs_err", &RealEstimate::abs_err);
    py::class_<BesselK>(m, "BesselK")
        .def_readonly("value", &BesselK::value)
        .def_readonly("abs_err", &BesselK::abs_err)
        .def_readonly("underflow", &BesselK::underflow);

    m.def("log_gamma", &log_gamma, py::arg("s"));
    m.def("digamma", &digamma, py::arg("s"));
    m.def("zeta", &zeta, py::arg("s"));
    m.def("xi", &xi_completed, py::arg("s"));
    m.def("log_xi", &log_xi, py::arg("s"));
    m.def("bessel_k_imag_order", &bessel_k_imag_order, py::arg("t"), py::arg("x"));

    py::class_<UpperHalfPoint>(m, "UpperHalfPoint")
        .def(py::init([](double x, double y) { return UpperHalfPoint{x, y}; }), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &UpperHalfPoint::x)
        .def_readwrite("y", &UpperHalfPoint::y);
    py::class_<MaassFormRecord>(m, "MaassFormRecord")
        .def_readonly("label", &MaassFormRecord::label)
        .def_readonly("spectral_parameter", &MaassFormRecord::spectral_parameter)
        .def_readonly("parity", &MaassFormRecord::parity)
        .def_readonly("coefficients", &MaassFormRecord::coefficients)
        .def_readonly("sym2_L_value", &MaassFormRecord::sym2_L_value);

    m.def("eisenstein", [](double x, double y, cplx s) { return eisenstein_eval({x, y}, s); }, py::arg("x"), py::arg("y"), py::arg("s"));
    m.def("normalized_eisenstein", [](double x, double y, double T) { return normalized_eisenstein_eval({x, y}, T); },
          py::arg("x"), py::arg("y"), py::arg("T"));
    m.def("maass", [](const MaassFormRecord& r, double x, double y) { return maass_eval(r, {x, y}); }, py::arg("record"),
          py::arg("x"), py::arg("y"));
    m.def("load_fixture", [](const std::string& p) { return load_fixture(p.empty() ? default_fixture_file() : std::filesystem::path(p)); },
          py::arg("path") = "");

    m.def("maass_selberg_truncated_norm", &maass_selberg_truncated_norm, py::arg("T"), py::arg("A"));
    m.def("zagier_triple_product", &zagier_triple_product, py::arg("s1"), py::arg("s2"), py::arg("s3"));
    m.def("mellin_barnes_bessel", &mellin_barnes_bessel, py::arg("s"), py::arg("mu"), py::arg("nu"));
    m.def("decorrelation_main_term", &decorrelation_main_term, py::arg("t"), py::arg("tau"));

    m.def("p_exponent", [](double tj, double t, double T) { return p_exponent(tj, t, T).value; }, py::arg("t_j"), py::arg("t"), py::arg("T"));
    m.def("q_exponent", [](double t, double tj, double T, double tp) { return q_exponent(t, tj, T, tp).value; }, py::arg("t"),
          py::arg("t_j"), py::arg("T"), py::arg("t_phi"));

    m.def("hecke_power_expand", &hecke_power_expand, py::arg("alpha"));
    m.def("m_func", &m_func, py::arg("z1"), py::arg("z2"), py::arg("x"));
    m.def("v_func", &v_func, py::arg("z1"), py::arg("z2"), py::arg("x"));

    m.def("suite_names", &suite_names);
    m.def("verify", [](const std::string& suite) {
        RunReport r = run_suite(suite);
        py::list failed;
        for (const auto& c : r.checks)
            if (!c.pass) failed.append(c.name);
        return py::make_tuple(r.checks.size(), failed);
    }, py::arg("suite"), "Run a check suite; returns (number of checks, names of failed checks).");
}
