#include "semitoric/abelian.hpp"
#include "semitoric/elliptic.hpp"
#include "semitoric/global_inv.hpp"
#include "semitoric/report.hpp"
#include "semitoric/series.hpp"
#include "semitoric/taylor.hpp"
#include "semitoric/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace semitoric;

PYBIND11_MODULE(_semitoric, m) {
    m.doc() = "Semitoric invariants of the coupled angular momenta";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<NumericError>(m, "NumericError");

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double, double>(), py::arg("r1"), py::arg("r2"), py::arg("t"))
        .def_readonly("r1", &ModelParams::R1)
        .def_readonly("r2", &ModelParams::R2)
        .def_readonly("t", &ModelParams::t)
        .def("ratio", &ModelParams::ratio)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(r1=" + std::to_string(p.R1) + ", r2=" + std::to_string(p.R2) +
                   ", t=" + std::to_string(p.t) + ")";
        });

    py::enum_<FixedPointClass>(m, "FixedPointClass")
        .value("FocusFocus", FixedPointClass::FocusFocus)
        .value("EllipticElliptic", FixedPointClass::EllipticElliptic)
        .value("Degenerate", FixedPointClass::Degenerate);

    py::class_<CriticalInterval>(m, "CriticalInterval")
        .def_readonly("t_minus", &CriticalInterval::t_minus)
        .def_readonly("t_plus", &CriticalInterval::t_plus);

    py::class_<ParamChart>(m, "ParamChart")
        .def(py::init([](double u, double v, double kappa) {
                 return ParamChart{u, v, kappa};
             }),
             py::arg("u"), py::arg("v"), py::arg("kappa") = 1.0)
        .def_readonly("u", &ParamChart::u)
        .def_readonly("v", &ParamChart::v)
        .def_readonly("kappa", &ParamChart::kappa);

    m.def("critical_interval", &critical_interval);
    m.def("discriminant_root", [](const ModelParams& p) { return discriminant_root(p).rA; });
    m.def("classify_fixed_point", &classify_fixed_point);
    m.def("ff_count", &ff_count);
    m.def("to_chart", &to_chart);
    m.def("from_chart", &from_chart);
    m.def("reverse_map", &reverse_map);

    py::class_<taylor::TaylorInvariant>(m, "TaylorInvariant")
        .def_readonly("c_l", &taylor::TaylorInvariant::c_l)
        .def_readonly("c_j", &taylor::TaylorInvariant::c_j)
        .def_readonly("c_ll", &taylor::TaylorInvariant::c_ll)
        .def_readonly("c_lj", &taylor::TaylorInvariant::c_lj)
        .def_readonly("c_jj", &taylor::TaylorInvariant::c_jj)
        .def("__repr__", [](const taylor::TaylorInvariant& t) {
            return "TaylorInvariant(c_l=" + std::to_string(t.c_l) +
                   ", c_j=" + std::to_string(t.c_j) + ", c_ll=" + std::to_string(t.c_ll) +
                   ", c_lj=" + std::to_string(t.c_lj) + ", c_jj=" + std::to_string(t.c_jj) + ")";
        });

    m.def("taylor_closed_form", &taylor::closed_form);
    m.def("taylor_recover", &taylor::recover_coefficients, py::arg("params"),
          py::arg("sample_radius") = 1e-2, py::arg("n_samples") = 64);
    m.def("kepler_form", &taylor::kepler_form, py::arg("n"), py::arg("t"));

    m.def("height_closed_form",
          [](const ModelParams& p) { return globalinv::height_closed_form(p).h; });
    m.def("height_numeric",
          [](const ModelParams& p) { return globalinv::height_numeric(p).h; });

    py::class_<globalinv::WeightedPolygon>(m, "WeightedPolygon")
        .def_readonly("epsilon", &globalinv::WeightedPolygon::epsilon)
        .def_readonly("k", &globalinv::WeightedPolygon::k)
        .def_readonly("lambda_", &globalinv::WeightedPolygon::lambda)
        .def_property_readonly("vertices", [](const globalinv::WeightedPolygon& poly) {
            py::list out;
            for (const auto& v : poly.vertices) out.append(py::make_tuple(v.x, v.y));
            return out;
        });

    m.def("polygon_representative", &globalinv::polygon_representative, py::arg("params"),
          py::arg("epsilon") = 1, py::arg("k") = 0);
    m.def("twisting_index",
          [](const ModelParams& p, int n_theta, int n_z) {
              return globalinv::twisting_index_single(p, n_theta, n_z, nullptr);
          },
          py::arg("params"), py::arg("n_theta") = 8, py::arg("n_z") = 17);

    // scaled reduced-system and integral layer
    m.def("period", [](double l, double h, const ModelParams& p) {
        return abelian::period({l, h}, p);
    });
    m.def("rotation_number", [](double l, double h, const ModelParams& p) {
        return abelian::rotation_number({l, h}, p);
    });
    m.def("imaginary_action", [](double l, double h, const ModelParams& p) {
        return abelian::imaginary_action({l, h}, p);
    });
    m.def("imaginary_period", [](double l, double h, const ModelParams& p) {
        return abelian::imaginary_period({l, h}, p);
    });
    m.def("action", [](double l, double h, const ModelParams& p) {
        return abelian::action({l, h}, p).value;
    });
    m.def("birkhoff", &series::birkhoff, py::arg("l"), py::arg("j"), py::arg("params"));

    m.def("complete_K", [](double k) {
        return elliptic::complete_K(elliptic::EllipticModulus::from_k(k));
    });
    m.def("complete_E", [](double k) {
        return elliptic::complete_E(elliptic::EllipticModulus::from_k(k));
    });
    m.def("complete_Pi", [](double n, double k) {
        const auto mod = elliptic::EllipticModulus::from_k(k);
        return elliptic::complete_Pi(elliptic::characteristic(n, mod), mod);
    });
    m.def("heuman_lambda", [](double theta, double k) {
        return elliptic::heuman_lambda(theta, elliptic::EllipticModulus::from_k(k));
    });

    m.def("invariants_json", [](const ModelParams& p) {
        return report::to_json(report::build_report(p));
    });

    m.def("run_verification", [](const std::string& suite, std::uint64_t seed) {
        py::list out;
        for (const auto& r : verify::run_suite(suite, seed))
            out.append(py::make_tuple(r.name, r.pass, r.detail));
        return out;
    }, py::arg("suite") = "all", py::arg("seed") = 1);
}
