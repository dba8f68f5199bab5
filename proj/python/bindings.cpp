#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ribbon/batch.hpp"
#include "ribbon/certificate.hpp"
#include "ribbon/codes.hpp"
#include "ribbon/goeritz.hpp"
#include "ribbon/search.hpp"

namespace py = pybind11;
using namespace ribbon;

PYBIND11_MODULE(_ribbon, m) {
    m.doc() = "ribbon disks for alternating knots";

    py::class_<PlanarDiagram>(m, "Diagram")
        .def_property_readonly("crossings", &PlanarDiagram::crossings)
        .def_property_readonly("circles", &PlanarDiagram::circles)
        .def_property_readonly("regions", &PlanarDiagram::region_count)
        .def("dt", [](const PlanarDiagram& d) { return minimal_dt(d); })
        .def("__repr__", [](const PlanarDiagram& d) {
            return "<Diagram crossings=" + std::to_string(d.crossings()) +
                   " circles=" + std::to_string(d.circles()) + ">";
        });

    m.def("parse_dt", [](const std::vector<int>& code) { return parse_dt(code); }, py::arg("code"));
    m.def("parse_pd", &parse_pd, py::arg("text"));
    m.def("two_bridge", &two_bridge_diagram, py::arg("a"));
    m.def("mirror", &mirror);
    m.def("square_determinant", &has_square_determinant, py::arg("diagram"));
    m.def("minimally_nonalternating", &is_minimally_nonalternating, py::arg("diagram"));

    py::enum_<VerdictKind>(m, "VerdictKind")
        .value("NonSlice", VerdictKind::NonSlice)
        .value("AlgorithmicallyRibbon", VerdictKind::AlgorithmicallyRibbon)
        .value("AlgorithmicallyNonRibbon", VerdictKind::AlgorithmicallyNonRibbon)
        .value("BudgetExceeded", VerdictKind::BudgetExceeded);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("kind", &Verdict::kind)
        .def_readonly("band_count", &Verdict::band_count)
        .def_property_readonly("certificate", [](const Verdict& v) {
            return v.kind == VerdictKind::AlgorithmicallyRibbon
                       ? py::object(py::cast(serialize_certificate(v.certificate)))
                       : py::object(py::none());
        })
        .def("__repr__", [](const Verdict& v) { return "<Verdict " + to_string(v.kind) + ">"; });

    m.def(
        "classify",
        [](const PlanarDiagram& d, int max_bands, unsigned long long max_nodes) {
            SearchConfig cfg;
            cfg.max_bands = max_bands;
            cfg.max_nodes = max_nodes;
            return classify(d, cfg);
        },
        py::arg("diagram"), py::arg("max_bands") = 4, py::arg("max_nodes") = 1'000'000);

    m.def("verify_certificate", [](const std::string& text) {
        auto r = verify_certificate(parse_certificate(text));
        return py::make_tuple(r.ok, r.diagnostic);
    });
    m.def("render_text", [](const std::string& text) { return render_text(parse_certificate(text)); });
    m.def("render_svg", [](const std::string& text) { return render_svg(parse_certificate(text)); });
}
