#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sniplab/constructions.hpp"
#include "sniplab/error.hpp"
#include "sniplab/json_io.hpp"
#include "sniplab/xixi.hpp"

namespace py = pybind11;
using namespace sniplab;

namespace {

using PyMatrix = std::vector<std::vector<py::object>>;

// Entries may be int, fractions.Fraction or "p/q" strings; floats are rejected.
Matrix to_matrix(const PyMatrix& rows)
{
    const std::size_t n = rows.size();
    const std::size_t m = n == 0 ? 0 : rows[0].size();
    Matrix a(n, m);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != m) {
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
        }
        for (std::size_t c = 0; c < m; ++c) {
            const py::handle v = rows[r][c];
            if (py::isinstance<py::float_>(v)) {
                throw Error(ErrorKind::InvalidArgument, "float entries are not exact; use Fraction");
            }
            a(r, c) = parse_rational(py::str(v).cast<std::string>());
        }
    }
    return a;
}

py::object to_fraction(const Rational& q)
{
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

py::list from_matrix(const Matrix& a)
{
    py::list rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            row.append(to_fraction(a(r, c)));
        }
        rows.append(row);
    }
    return rows;
}

py::object from_json(const Json& j)
{
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

py::tuple from_pair(const NullityPair& p)
{
    return py::make_tuple(p.k, p.l);
}

Family family_from_name(const std::string& name)
{
    for (Family f : {Family::Complete, Family::Star, Family::Path, Family::Paw, Family::S211,
                     Family::T3_K4, Family::T3_K23, Family::T3_T, Family::T3_T1, Family::T3_T2,
                     Family::T3_T3}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family \"" + name + "\"");
}

WitnessMatrix witness_from_name(const std::string& name)
{
    for (WitnessMatrix id : all_witness_matrices()) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown witness matrix \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_sniplab, m)
{
    m.doc() = "Exact i-nullity pairs, SNIP and rooted minors of small graphs";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&] { return py::object(py::exception<Error>(m, "SniplabError", PyExc_ValueError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            const py::object& type = error_type.get_stored();
            py::object inst = type(e.what());
            inst.attr("kind") = std::string(e.name());
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    py::class_<RootedGraph>(m, "RootedGraph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges, Vertex root) {
                 return RootedGraph(n, edges, root);
             }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{}, py::arg("root") = 0)
        .def_property_readonly("n", &RootedGraph::n)
        .def_property_readonly("root", &RootedGraph::root)
        .def_property_readonly("edges", &RootedGraph::edges)
        .def("with_root", &RootedGraph::with_root, py::arg("root"))
        .def("has_edge", &RootedGraph::has_edge)
        .def("to_graph6", [](const RootedGraph& g) { return to_graph6(g); })
        .def_static("from_graph6",
                    [](const std::string& text, Vertex root) { return from_graph6(text, root); },
                    py::arg("text"), py::arg("root") = 0)
        .def(py::self == py::self)
        .def("__repr__", [](const RootedGraph& g) {
            return "RootedGraph(n=" + std::to_string(g.n()) + ", edges=" +
                   std::to_string(g.edge_count()) + ", root=" + std::to_string(g.root()) + ")";
        });

    m.def("family", [](const std::string& name, std::size_t size) {
        return family(family_from_name(name), size);
    }, py::arg("name"), py::arg("size") = 0);
    m.def("complement", &complement);
    m.def("extend_root", &extend_root);
    m.def("support_graph", [](const PyMatrix& a, Vertex root) {
        return support_graph(to_matrix(a), root);
    }, py::arg("matrix"), py::arg("root") = 0);

    m.def("nullity_pair", [](const PyMatrix& a, std::size_t i) {
        return from_pair(nullity_pair(to_matrix(a), i));
    }, py::arg("matrix"), py::arg("i"));
    m.def("index_type", [](const PyMatrix& a, std::size_t i) {
        return std::string(to_string(index_type(to_matrix(a), i)));
    }, py::arg("matrix"), py::arg("i"));
    m.def("neutral_shift", [](const PyMatrix& a, std::size_t i) {
        return to_fraction(neutral_shift(to_matrix(a), i));
    }, py::arg("matrix"), py::arg("i"));
    m.def("has_sap", [](const PyMatrix& a, const RootedGraph& g) {
        return has_sap(to_matrix(a), g);
    }, py::arg("matrix"), py::arg("graph"));
    m.def("has_isnip", [](const PyMatrix& a, const RootedGraph& g, const std::string& method) {
        const Matrix mat = to_matrix(a);
        if (method == "direct") {
            return has_isnip_direct(mat, g, g.root());
        }
        if (method == "cases") {
            return has_isnip_cases(mat, g, g.root());
        }
        if (method == "recipe") {
            return has_isnip_recipe(mat, g, g.root());
        }
        throw Error(ErrorKind::InvalidArgument, "method must be direct, cases or recipe");
    }, py::arg("matrix"), py::arg("graph"), py::arg("method") = "direct");
    m.def("certify", [](const PyMatrix& a, const RootedGraph& g) {
        return from_json(certificate_to_json(certify(to_matrix(a), g)));
    }, py::arg("matrix"), py::arg("graph"));
    m.def("schur_complement", [](const PyMatrix& a, const IndexSet& alpha) {
        return from_matrix(schur_complement(to_matrix(a), alpha));
    }, py::arg("matrix"), py::arg("alpha"));

    m.def("paper_matrix", [](const std::string& name) {
        auto [g, a] = paper_matrix(witness_from_name(name));
        return py::make_tuple(g, from_matrix(a));
    }, py::arg("name"));
    m.def("sw_step", [](const PyMatrix& a, std::size_t i) {
        return from_json(step_to_json(sw_step(to_matrix(a), i)));
    }, py::arg("matrix"), py::arg("i"));
    m.def("west_step", [](const PyMatrix& a, std::size_t i, const py::object& eps) {
        return from_json(step_to_json(
            west_step(to_matrix(a), i, parse_rational(py::str(eps).cast<std::string>()))));
    }, py::arg("matrix"), py::arg("i"), py::arg("eps") = 1);
    m.def("south_step", [](const PyMatrix& a, std::size_t i) {
        return from_json(step_to_json(south_step(to_matrix(a), i)));
    }, py::arg("matrix"), py::arg("i"));

    m.def("contains_rooted_minor", [](const RootedGraph& host, const RootedGraph& pattern) {
        return contains_rooted_minor(host, pattern);
    }, py::arg("host"), py::arg("pattern"));
    m.def("minor_value", [](const RootedGraph& g) { return minor_value(g); }, py::arg("graph"));
    m.def("xixi", [](const RootedGraph& g) {
        py::gil_scoped_release release;
        const XiXiReport r = xixi_minor_based(g);
        py::gil_scoped_acquire acquire;
        return from_json(report_to_json(r));
    }, py::arg("graph"));
    m.def("enumerate_pairs", [](const RootedGraph& g) {
        std::set<PairFlag> flags;
        {
            py::gil_scoped_release release;
            flags = enumerate_pairs(g, default_grid(g));
        }
        py::list out;
        for (const auto& f : flags) {
            out.append(py::make_tuple(from_pair(f.pair), f.snip));
        }
        return out;
    }, py::arg("graph"));
}
