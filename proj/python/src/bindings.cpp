#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "diffinv/composite.hpp"
#include "diffinv/contour.hpp"
#include "diffinv/errors.hpp"
#include "diffinv/oracle.hpp"
#include "diffinv/physics.hpp"
#include "diffinv/schemes.hpp"
#include "diffinv/series.hpp"
#include "diffinv/tables.hpp"

namespace py = pybind11;
using namespace diffinv;

namespace {

contour::QuadratureSpec spec_for(double tol) {
    contour::QuadratureSpec q;
    q.tol = tol;
    return q;
}

SchemeId scheme_arg(const std::string& name) { return parse_scheme(name); }

py::dict column_dict(const std::array<double, tables::kColumns.size()>& values) {
    py::dict d;
    for (std::size_t i = 0; i < values.size(); ++i) d[py::str(std::string(scheme_name(tables::kColumns[i])))] = values[i];
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Inversion of I(a) = c and the drainage and infiltration inverse problems";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", domain.ptr());
    py::register_exception<ToleranceError>(m, "ToleranceError", base.ptr());

    m.def("schemes", [] {
        std::vector<std::string> names;
        for (const SchemeId id : all_schemes()) names.emplace_back(scheme_name(id));
        return names;
    }, "Canonical scheme names");

    m.def("eval_I", [](double a, double tol) { return contour::eval_I(a, spec_for(tol)); }, py::arg("a"),
          py::arg("tol") = 1e-12, "I(a) on the hyperbolic contour");
    m.def("I_fourier", [](double a) { return series::I_fourier(a); }, py::arg("a"));
    m.def("I_erfc_sum", [](double a) { return series::I_erfc_sum(a); }, py::arg("a"));
    m.def("eval_h", [](double x, double t, double h0, double d, double L, double A, double tol) {
        DrainageScenario s;
        s.h0 = h0;
        s.d = d;
        s.L = L;
        s.A = A;
        return contour::eval_h(x, t, s, spec_for(tol));
    }, py::arg("x"), py::arg("t"), py::arg("h0"), py::arg("d"), py::arg("L"), py::arg("A"), py::arg("tol") = 1e-12,
          "Water-table height above the impervious layer, m");
    m.def("eval_theta", [](double x, double t, double theta0, double theta1, double L, double D0, double tol) {
        InfiltrationScenario s;
        s.theta0 = theta0;
        s.theta1 = theta1;
        s.L = L;
        s.D0 = D0;
        return contour::eval_theta(x, t, s, spec_for(tol));
    }, py::arg("x"), py::arg("t"), py::arg("theta0"), py::arg("theta1"), py::arg("L"), py::arg("D0"),
          py::arg("tol") = 1e-12, "Moisture content, cm³/cm³");

    m.def("estimate_a", [](double c, const std::string& scheme, double tol) {
        return estimate_a(c, scheme_arg(scheme), spec_for(tol));
    }, py::arg("c"), py::arg("scheme") = "perfect-match", py::arg("tol") = 1e-12);
    m.def("true_a", [](double c, double tol_a) {
        oracle::RootFindSpec spec;
        spec.tol_a = tol_a;
        return oracle::true_a(c, spec);
    }, py::arg("c"), py::arg("tol_a") = 1e-13, "Root of I(a) = c");
    m.def("relative_error", [](double c, double a) { return composite::relative_error(c, a).re_percent; },
          py::arg("c"), py::arg("a"), "100·|I(a) - c|/c");

    m.def("reduce_drainage", [](double h0, double d, double H) {
        DrainageScenario s;
        s.h0 = h0;
        s.d = d;
        s.H = H;
        return physics::reduce_drainage(s);
    }, py::arg("h0"), py::arg("d"), py::arg("H"));
    m.def("reduce_infiltration", [](double theta0, double theta1, double Theta) {
        InfiltrationScenario s;
        s.theta0 = theta0;
        s.theta1 = theta1;
        s.Theta = Theta;
        return physics::reduce_infiltration(s);
    }, py::arg("theta0"), py::arg("theta1"), py::arg("Theta"));
    m.def("diffusion_from_soil", &diffusion_from_soil, py::arg("K"), py::arg("S_y"), py::arg("d"),
          py::arg("h0"));

    m.def("drain_spacing", [](double h0, double d, double H, double A, double T, const std::string& scheme) {
        DrainageScenario s;
        s.h0 = h0;
        s.d = d;
        s.H = H;
        s.A = A;
        s.T = T;
        return 2.0 * physics::solve_drain_spacing(s, scheme_arg(scheme));
    }, py::arg("h0"), py::arg("d"), py::arg("H"), py::arg("A"), py::arg("T"), py::arg("scheme") = "perfect-match",
          "Drain spacing 2L, m");
    m.def("drain_time", [](double h0, double d, double H, double A, double spacing, const std::string& scheme) {
        DrainageScenario s;
        s.h0 = h0;
        s.d = d;
        s.H = H;
        s.A = A;
        s.L = 0.5 * spacing;
        return physics::solve_drain_time(s, scheme_arg(scheme));
    }, py::arg("h0"), py::arg("d"), py::arg("H"), py::arg("A"), py::arg("spacing"),
          py::arg("scheme") = "perfect-match", "Drain time, days");
    m.def("diffusivity", [](double theta0, double theta1, double L, double Theta, double T, const std::string& scheme) {
        InfiltrationScenario s;
        s.theta0 = theta0;
        s.theta1 = theta1;
        s.L = L;
        s.Theta = Theta;
        s.T = T;
        return physics::solve_diffusivity(s, scheme_arg(scheme));
    }, py::arg("theta0"), py::arg("theta1"), py::arg("L"), py::arg("Theta"), py::arg("T"),
          py::arg("scheme") = "perfect-match", "D0, cm²/h");

    m.def("simulate_moisture", [](std::uint64_t seed, int n, const std::vector<double>& times) {
        py::list out;
        for (const auto& s : physics::simulate_moisture(seed, n, times)) {
            py::dict d;
            d["T"] = *s.T;
            d["D0"] = *s.D0;
            d["theta0"] = s.theta0;
            d["theta1"] = s.theta1;
            d["L"] = s.L;
            d["Theta"] = *s.Theta;
            out.append(d);
        }
        return out;
    }, py::arg("seed"), py::arg("n"), py::arg("times"));

    m.def("threshold_table", [] {
        py::list out;
        for (const auto& r : tables::threshold_table()) {
            py::dict d;
            d["N"] = r.N;
            d["c_min"] = r.c_min;
            d["a_min"] = r.a_min;
            out.append(d);
        }
        return out;
    });
    m.def("spacing_table", [] {
        py::list out;
        for (const auto& r : tables::spacing_table(tables::field_records(), tables::kFieldH0, std::nullopt)) {
            py::dict d;
            d["T"] = r.T;
            d["c1"] = r.c1;
            d["spacing_true"] = r.spacing_true;
            d["spacing"] = column_dict(r.spacing);
            out.append(d);
        }
        return out;
    }, "Drain spacing for the built-in field records");
    m.def("time_table", [] {
        py::list out;
        for (const auto& r :
             tables::time_table(tables::field_records(), tables::field_spacings(), tables::kFieldH0, std::nullopt)) {
            py::dict d;
            d["spacing"] = r.spacing;
            d["T_true"] = r.T_true;
            d["T"] = column_dict(r.T);
            out.append(d);
        }
        return out;
    }, "Drain time for the built-in field records");
    m.def("diffusivity_table", [] {
        py::list out;
        for (const auto& r : tables::diffusivity_table(tables::moisture_records())) {
            py::dict d;
            d["T"] = r.T;
            d["D0_true"] = r.D0_true;
            d["Theta"] = r.Theta;
            d["c2"] = r.c2;
            d["D0"] = column_dict(r.D0);
            out.append(d);
        }
        return out;
    }, "Diffusivity for the built-in moisture records");

    m.attr("__version__") = DIFFINV_VERSION;
}
