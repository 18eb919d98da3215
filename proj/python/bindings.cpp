#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptl/bicho.hpp"
#include "ptl/oruga.hpp"
#include "ptl/permutree.hpp"
#include "ptl/s_weak_order.hpp"
#include "ptl/serialize.hpp"
#include "ptl/weak_order.hpp"

namespace py = pybind11;
using namespace ptl;

namespace {

// Structured results cross the boundary as the same JSON the CLI prints.
py::object as_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FramedGraph graph_for(const std::string& kind, const std::string& arg) {
    if (kind == "example") return example_graph();
    if (kind == "oru") return build_oru(parse_composition(arg)).g;
    if (kind == "bic") return build_bic(Decoration::parse(arg)).g;
    throw ValidationError("graph kind must be example, oru or bic");
}

}  // namespace

PYBIND11_MODULE(permutree_lab, m) {
    m.doc() = "Permutrees, the s-weak order and flow polytope triangulations";
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);

    m.def("count_permutrees", [](const std::string& delta) { return count_permutrees(Decoration::parse(delta)); });
    m.def("insert", [](const std::vector<int>& pi, const std::string& delta) {
        return as_python(to_json(insert(pi, Decoration::parse(delta))));
    });
    m.def("rotation_lattice", [](const std::string& delta, int cap) {
        return as_python(to_json(rotation_lattice(Decoration::parse(delta), cap)));
    }, py::arg("delta"), py::arg("cap") = -1);
    m.def("permutree_sort", [](const std::vector<int>& pi, const std::vector<int>& U, const std::vector<int>& D) {
        return as_python(to_json(permutree_sort(pi, U, D)));
    });

    m.def("count_s_permutations", [](const std::vector<int>& s) { return count_s_trees(s); });
    m.def("s_hasse", [](const std::vector<int>& s, int cap) { return as_python(to_json(s_hasse(s, cap), s)); },
          py::arg("s"), py::arg("cap") = -1);
    m.def("realize", [](const std::vector<int>& s, const std::string& eps, int cap) {
        auto r = eps.empty() ? realize(s, cap) : realize(s, parse_rational(eps), cap);
        return as_python(to_json(r));
    }, py::arg("s"), py::arg("epsilon") = "", py::arg("cap") = -1);
    m.def("lidskii_identities", [](const std::vector<int>& s) { return as_python(to_json(lidskii_identities(s), s)); });

    m.def("kostant", [](const std::string& kind, const std::string& arg) {
        auto g = graph_for(kind, arg);
        return kostant(g, shifted_indegrees(g));
    }, py::arg("kind") = "example", py::arg("arg") = "");
    m.def("volume", [](const std::string& kind, const std::string& arg) {
        auto g = graph_for(kind, arg);
        return lidskii_volume(g, unit_netflow(g)).get_str();
    }, py::arg("kind") = "example", py::arg("arg") = "");
    m.def("max_cliques", [](const std::string& kind, const std::string& arg) {
        auto g = graph_for(kind, arg);
        auto rs = routes(g);
        return py::make_tuple(rs, max_cliques(g, rs));
    }, py::arg("kind") = "example", py::arg("arg") = "");

    m.def("bicho_graph", [](const std::string& delta) { return as_python(to_json(build_bic(Decoration::parse(delta)))); });
    m.def("check_conjectures", [](const std::string& delta) {
        return as_python(to_json(check_conjectures(Decoration::parse(delta))));
    });
    m.def("verify_bicho", [](const std::string& delta) { return verify_bicho(Decoration::parse(delta)).ok(); });
}
