#include "speclab/canonical.hpp"
#include "speclab/constructors.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/error.hpp"
#include "speclab/graph6.hpp"
#include "speclab/minor.hpp"
#include "speclab/search.hpp"
#include "speclab/serialize.hpp"
#include "speclab/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace speclab;

namespace {

py::object to_py(const Json& j)
{
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& item : j)
            out.append(to_py(item));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

VertexSet to_set(const Graph& g, const std::vector<Vertex>& members)
{
    return VertexSet::from_members(g.order(), members);
}

StructureMode mode_of(const std::string& m)
{
    if (m == "fs")
        return StructureMode::Fs;
    if (m == "qt")
        return StructureMode::Qt;
    throw Error(ErrorCode::InvalidSpec, "mode must be 'fs' or 'qt'");
}

}  // namespace

PYBIND11_MODULE(_speclab, m)
{
    m.doc() = "Graph minors, spectral radii and small-n extremal search";

    static py::exception<Error> error(m, "SpeclabError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_g6", [](const std::string& s) { return g6_decode(s); })
        .def("g6", [](const Graph& g) { return g6_encode(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("construct", [](const std::string& spec) { return construct(FamilySpec::parse(spec)).graph; },
          py::arg("spec"), "Graph of a family spec such as 'friendship:s=2'.");
    m.def("layout", [](const std::string& spec) { return to_py(to_json(construct(FamilySpec::parse(spec)).layout)); },
          py::arg("spec"));
    m.def("canonical_code", &canonical_code, py::arg("g"));
    m.def("enumerate_connected", &enumerate_connected, py::arg("n"));
    m.def("contract_edge", &contract_edge);
    m.def("delete_vertex", &delete_vertex);
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);

    m.def(
        "spectral_radius",
        [](const Graph& g, double tol, std::size_t max_iter) { return to_py(to_json(spectral_radius(g, tol, max_iter))); },
        py::arg("g"), py::arg("tol") = kDefaultTolerance, py::arg("max_iter") = kDefaultMaxIter);
    m.def("rho_closed_form", [](const std::string& spec) { return rho_closed_form(FamilySpec::parse(spec)); },
          py::arg("spec"));
    m.def(
        "perron_audit",
        [](const Graph& g, double tol) { return to_py(to_json(verify_perron_bound(g, spectral_radius(g), tol))); },
        py::arg("g"), py::arg("tol") = 1e-8);

    m.def(
        "has_fs_minor", [](const Graph& g, int s, std::uint64_t budget) { return to_py(to_json(has_fs_minor(g, s, budget))); },
        py::arg("g"), py::arg("s"), py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "has_qt_minor", [](const Graph& g, int t, std::uint64_t budget) { return to_py(to_json(has_qt_minor(g, t, budget))); },
        py::arg("g"), py::arg("t"), py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "find_minor_model",
        [](const Graph& host, const Graph& pattern, std::uint64_t budget) {
            return to_py(to_json(find_minor_model(host, pattern, budget)));
        },
        py::arg("host"), py::arg("pattern"), py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "verify_certificate",
        [](const Graph& host, const py::dict& cert) {
            const auto text = py::module_::import("json").attr("dumps")(cert).cast<std::string>();
            return verify_model(host, certificate_from_json(Json::parse(text)));
        },
        py::arg("host"), py::arg("certificate"));

    m.def(
        "fs_subgraph_witness",
        [](const Graph& g, int s) -> py::object {
            const auto w = fs_subgraph_witness(g, s);
            return w ? to_py(to_json(*w)) : py::none();
        },
        py::arg("g"), py::arg("s"));
    m.def(
        "qt_subgraph_witness",
        [](const Graph& g, int t, std::uint64_t budget) -> py::object {
            const auto a = qt_subgraph_witness(g, t, budget);
            if (a.status == MinorStatus::Exhausted)
                throw Error(ErrorCode::PreconditionFailed, "node budget exhausted");
            return a.witness ? to_py(to_json(*a.witness)) : py::none();
        },
        py::arg("g"), py::arg("t"), py::arg("node_budget") = kDefaultNodeBudget);

    m.def(
        "check_structure",
        [](const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b, const std::string& mode) {
            const auto sa = to_set(g, a);
            const auto sb = to_set(g, b);
            return to_py(to_json(mode_of(mode) == StructureMode::Fs ? check_structure_fs(g, sa, sb)
                                                                    : check_structure_qt(g, sa, sb)));
        },
        py::arg("g"), py::arg("A"), py::arg("B"), py::arg("mode") = "fs");
    m.def(
        "clique_closure_check",
        [](const Graph& g, const std::vector<Vertex>& a, const std::string& mode, int param) {
            return to_py(to_json(clique_closure_check(g, to_set(g, a), {mode_of(mode), param})));
        },
        py::arg("g"), py::arg("A"), py::arg("mode"), py::arg("param"));

    m.def(
        "extremal_search",
        [](std::size_t n, const std::string& constraint, std::size_t workers, std::uint64_t budget) {
            SearchOptions opt;
            opt.workers = workers;
            opt.node_budget = budget;
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = extremal_search(n, Constraint::parse(constraint), opt);
            }
            return to_py(to_json(r));
        },
        py::arg("n"), py::arg("constraint"), py::arg("workers") = 1, py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "edge_bound_audit",
        [](const std::vector<std::string>& specs, int param, const std::string& mode, double c) {
            std::vector<FamilySpec> parsed;
            for (const auto& s : specs)
                parsed.push_back(FamilySpec::parse(s));
            return to_py(to_json(edge_bound_audit(parsed, param, mode_of(mode), c)));
        },
        py::arg("specs"), py::arg("param"), py::arg("mode") = "fs", py::arg("c") = 0.0);
}
