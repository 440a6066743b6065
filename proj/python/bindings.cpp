#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polypair/characterize.hpp"
#include "polypair/constructions.hpp"
#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"
#include "polypair/io.hpp"
#include "polypair/seeds.hpp"
#include "polypair/witness.hpp"

namespace py = pybind11;
using namespace polypair;

namespace {

std::string big(const BigInt& x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

PairKind kind_of(const std::string& text) {
    auto kind = parse_pair_kind(text);
    if (!kind) throw py::value_error("unknown pair kind " + text);
    return *kind;
}

py::dict status_dict(const PairStatus& s) {
    py::dict d;
    d["verdict"] = std::string(to_string(s.verdict));
    d["reason"] = s.reason;
    d["witness"] = s.witness_hint;
    return d;
}

} // namespace

PYBIND11_MODULE(_polypair, m) {
    m.doc() = "Face and flag vector pairs of polytopes";

    py::register_exception<Error>(m, "PolypairError");

    py::class_<VertexFacetIncidence>(m, "Polytope")
        .def(py::init<int, std::vector<Facet>>(), py::arg("dim"), py::arg("facets"))
        .def_property_readonly("dim", &VertexFacetIncidence::dim)
        .def_property_readonly("num_vertices", &VertexFacetIncidence::num_vertices)
        .def_property_readonly("num_facets", &VertexFacetIncidence::num_facets)
        .def_property_readonly("facets", &VertexFacetIncidence::facets)
        .def("pair", &VertexFacetIncidence::pair)
        .def("dual", [](const VertexFacetIncidence& p) { return dualize(p); })
        .def("f_vector", [](const VertexFacetIncidence& p) { return build_face_lattice(p).f_vector(); })
        .def("flag_vector", [](const VertexFacetIncidence& p) { return flag_vector(build_face_lattice(p)).values(); })
        .def("check", [](const VertexFacetIncidence& p) { return check_polytope(p).all_pass(); })
        .def("serialize", [](const VertexFacetIncidence& p) { return serialize(p); })
        .def("__eq__", [](const VertexFacetIncidence& a, const VertexFacetIncidence& b) { return a == b; })
        .def("__repr__", [](const VertexFacetIncidence& p) {
            return "<Polytope dim=" + std::to_string(p.dim()) + " f0=" + std::to_string(p.num_vertices()) +
                   " facets=" + std::to_string(p.num_facets()) + ">";
        });

    m.def("parse", [](const std::string& text) { return parse_facet_list(text); }, py::arg("text"));
    m.def("seed", [](const std::string& name) { return load_seed(name).incidence; }, py::arg("name"));
    m.def("seed_names", &seed_names);
    m.def("cyclic_polytope", &cyclic_polytope, py::arg("d"), py::arg("n"));
    m.def("cyclic_facet_count", [](int d, int n) { return big(cyclic_facet_count(d, n)); }, py::arg("d"), py::arg("n"));
    m.def("generalized_stack", &generalized_stack, py::arg("i"), py::arg("n"));
    m.def("delta_star", &delta_star, py::arg("k"), py::arg("i"), py::arg("n"));
    m.def("stack", &stack_beyond_facet, py::arg("p"), py::arg("facet"));
    m.def("truncate", &truncate_simple_vertex, py::arg("p"), py::arg("vertex"));

    m.def("check", [](const std::string& kind, std::int64_t a, std::int64_t b) {
        return status_dict(membership4(kind_of(kind), a, b));
    }, py::arg("kind"), py::arg("a"), py::arg("b"));
    m.def("check_high", [](int d, std::int64_t n, std::int64_t mm, bool refined) {
        return status_dict(membership_high(d, n, mm, refined));
    }, py::arg("d"), py::arg("n"), py::arg("m"), py::arg("refined") = true);

    m.def("plan", [](std::int64_t f0, std::int64_t f03) { return plan(f0, f03).to_json(); }, py::arg("f0"),
          py::arg("f03"));
    m.def("witness", [](std::int64_t f0, std::int64_t f03) {
        auto ex = execute(plan(f0, f03));
        if (!ex.ok()) throw Error(ErrorCode::StepPreconditionFailure, "witness failed verification");
        return ex.polytope;
    }, py::arg("f0"), py::arg("f03"));
    m.def("execute", [](const std::string& recipe_json) {
        auto ex = execute(Recipe::from_json(recipe_json));
        return py::make_tuple(ex.polytope, ex.ok());
    }, py::arg("recipe_json"));
}
