#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radiopath/oracle.hpp"
#include "radiopath/serialize.hpp"
#include "radiopath/verify.hpp"

namespace py = pybind11;
using namespace radiopath;

namespace {

py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<int64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

}  // namespace

PYBIND11_MODULE(radiopath, mod) {
    mod.doc() = "Radio k-colorings of path powers: optimal construction, closed-form "
                "spans, verification and an exact branch-and-bound certifier";

    py::register_exception<HypothesisError>(mod, "HypothesisError", PyExc_ValueError);

    py::class_<PathPowerGraph>(mod, "PathPowerGraph")
        .def(py::init<int, int>(), py::arg("n"), py::arg("m"))
        .def_readonly("n", &PathPowerGraph::n)
        .def_readonly("m", &PathPowerGraph::m)
        .def("vertex_count", &PathPowerGraph::vertex_count)
        .def("distance", &PathPowerGraph::distance, py::arg("u"), py::arg("v"))
        .def("diameter", &PathPowerGraph::diameter)
        .def("__repr__", [](const PathPowerGraph& g) {
            return "PathPowerGraph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.m) + ")";
        });

    py::class_<Layering>(mod, "Layering")
        .def(py::init<const PathPowerGraph&>(), py::arg("graph"))
        .def_property_readonly("q", &Layering::q)
        .def_property_readonly("diam", &Layering::diam)
        .def_property_readonly("diam_even", &Layering::diam_even)
        .def_property_readonly("s_layer", &Layering::s_layer)
        .def_property_readonly("s_mod", &Layering::s_mod)
        .def_property_readonly("layers", &Layering::layers)
        .def("layer_of", &Layering::layer_of, py::arg("v"))
        .def("central", &Layering::central, py::arg("t"))
        .def("left", &Layering::left, py::arg("i"), py::arg("j"))
        .def("right", &Layering::right, py::arg("i"), py::arg("j"))
        .def("to_dict", [](const Layering& ly) { return json_to_py(layering_json(ly)); });

    py::class_<RadioColoring>(mod, "RadioColoring")
        .def(py::init([](int k, std::vector<int64_t> colors) {
                 return RadioColoring{k, std::move(colors)};
             }),
             py::arg("k"), py::arg("colors"))
        .def_readonly("k", &RadioColoring::k)
        .def_readonly("colors", &RadioColoring::colors)
        .def("span", &RadioColoring::span)
        .def("to_dict", [](const RadioColoring& c, const PathPowerGraph& g) {
                 return json_to_py(coloring_json(g, c));
             },
             py::arg("graph"));

    mod.def("build_graph", &build_graph, py::arg("n"), py::arg("m"));
    mod.def("build_layering", &build_layering, py::arg("graph"));

    mod.def("case_of", [](int n, int m) { return to_string(case_of(n, m)); }, py::arg("n"),
            py::arg("m"));
    mod.def("hypothesis_holds", &hypothesis_holds, py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("hypothesis_min_k", &hypothesis_min_k, py::arg("n"), py::arg("m"));
    mod.def("alpha1", &alpha1, py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("alpha2_lower_bound", &alpha2_lower_bound, py::arg("n"), py::arg("m"));
    mod.def(
        "closed_form_span",
        [](int n, int m, int k, const std::string& variant, bool checked) {
            return json_to_py(
                formula_json(closed_form_span(n, m, k, variant_from_string(variant), checked)));
        },
        py::arg("n"), py::arg("m"), py::arg("k"), py::arg("variant") = "consistent",
        py::arg("checked") = true);

    mod.def(
        "case_sequence",
        [](int n, int m) {
            const PathPowerGraph g(n, m);
            return case_sequence(g, Layering(g)).order;
        },
        py::arg("n"), py::arg("m"));
    mod.def("special_chain", &special_chain, py::arg("layering"));
    mod.def("reverse_chain", &reverse_chain, py::arg("layering"));
    mod.def(
        "greedy_color",
        [](const PathPowerGraph& g, const std::vector<int>& order, int k) {
            return greedy_color(g, ColorSequence{order, ColorSequence::Provenance::Constructed},
                                k);
        },
        py::arg("graph"), py::arg("order"), py::arg("k"));
    mod.def("construct_optimal", &construct_optimal, py::arg("n"), py::arg("m"), py::arg("k"),
            py::arg("checked") = true);

    mod.def(
        "check_coloring",
        [](const PathPowerGraph& g, const RadioColoring& c) {
            return json_to_py(report_json(check_coloring(g, c)));
        },
        py::arg("graph"), py::arg("coloring"));
    mod.def("sequence_of", [](const RadioColoring& c) { return sequence_of(c).order; },
            py::arg("coloring"));
    mod.def(
        "decompose",
        [](const PathPowerGraph& g, const RadioColoring& c) {
            return json_to_py(decomposition_json(decompose(g, Layering(g), c)));
        },
        py::arg("graph"), py::arg("coloring"));
    mod.def(
        "lower_bound_certificate",
        [](const PathPowerGraph& g, const RadioColoring& c) {
            return lower_bound_certificate(g, Layering(g), c);
        },
        py::arg("graph"), py::arg("coloring"));

    mod.def("greedy_span_of_order", &greedy_span_of_order, py::arg("graph"), py::arg("order"),
            py::arg("k"));
    mod.def(
        "rc_exact",
        [](const PathPowerGraph& g, int k, int max_vertices, int64_t max_nodes) {
            const OracleResult res = rc_exact(g, k, SearchLimits{max_vertices, max_nodes});
            py::dict out;
            out["status"] = res.status == SearchStatus::Exact ? "exact" : "inconclusive";
            out["value"] = res.value;
            out["lower_bound"] = res.lower_bound;
            out["witness"] = res.witness;
            out["nodes"] = res.nodes;
            return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("max_vertices") = 11,
        py::arg("max_nodes") = int64_t{100'000'000});

    mod.def(
        "certify_grid",
        [](const std::vector<std::tuple<int, int, int>>& instances, const std::string& variant,
           bool oracle, int max_vertices, int64_t max_nodes) {
            GridOptions opts;
            opts.variant = variant_from_string(variant);
            opts.oracle = oracle;
            opts.limits = SearchLimits{max_vertices, max_nodes};
            std::vector<Instance> grid;
            grid.reserve(instances.size());
            for (const auto& [n, m, k] : instances) grid.push_back({n, m, k});
            return json_to_py(rows_json(certify_grid(grid, opts)));
        },
        py::arg("instances"), py::arg("variant") = "consistent", py::arg("oracle") = true,
        py::arg("max_vertices") = 11, py::arg("max_nodes") = int64_t{100'000'000});

    mod.attr("__version__") = "0.1.0";
}
