#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gent/code_search.hpp>
#include <gent/entropy_bounds.hpp>
#include <gent/errors.hpp>
#include <gent/network.hpp>
#include <gent/serialization.hpp>

namespace py = pybind11;
using namespace gent;

namespace {

py::object to_py_int(const Integer& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_fraction(const Rational& r) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(r.get_num()), to_py_int(r.get_den()));
}

IneqSelector make_selector(const std::string& ineq, const std::string& groups,
                           const py::object& file_text) {
    ZYPolicy policy = groups == "upto2" ? ZYPolicy::SingletonsAndPairs : ZYPolicy::Singletons;
    if (ineq == "shannon") return IneqSelector::shannon();
    if (ineq == "zy") return IneqSelector::zy(policy);
    if (ineq == "custom") {
        if (file_text.is_none())
            throw py::value_error("custom inequalities need file_text=");
        return IneqSelector::custom_set(load_inequality_set(file_text.cast<std::string>()));
    }
    throw py::value_error("ineq must be 'shannon', 'zy', or 'custom'");
}

py::list words_to_py(const Code& code) {
    py::list out;
    for (const auto& w : code.words) {
        if (code.s <= 10)
            out.append(word_to_string(w));
        else {
            py::list letters;
            for (auto c : w.letters) letters.append(int(c));
            out.append(letters);
        }
    }
    return out;
}

Code code_from_py(const DirectedGraph& g, int s, const py::list& words) {
    Code code;
    code.n = g.n();
    code.s = s;
    for (const auto& item : words) {
        if (py::isinstance<py::str>(item))
            code.words.push_back(word_from_string(item.cast<std::string>(), s));
        else {
            Word w;
            for (const auto& x : item.cast<py::list>())
                w.letters.push_back(std::uint8_t(x.cast<int>()));
            code.words.push_back(std::move(w));
        }
    }
    std::sort(code.words.begin(), code.words.end());
    return code;
}

VertexSet set_from_py(const py::object& vertices) {
    VertexSet b = 0;
    for (const auto& v : vertices) b |= vertex_bit(v.cast<int>());
    return b;
}

}  // namespace

PYBIND11_MODULE(gent, m) {
    m.doc() = "exact guessing numbers, graph entropies, index codes, and "
              "network-coding solvability for directed graphs";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

    py::class_<DirectedGraph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return DirectedGraph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &DirectedGraph::n)
        .def_property_readonly("edges", &DirectedGraph::edges)
        .def("in_neighbors", &DirectedGraph::in_neighbors, py::arg("vertex"))
        .def("has_edge", &DirectedGraph::has_edge)
        .def(py::self == py::self)
        .def("__repr__", [](const DirectedGraph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", edges=" +
                   std::to_string(g.edges().size()) + ")";
        });

    py::class_<LogValue>(m, "LogValue")
        .def_property_readonly("count", [](const LogValue& v) { return to_py_int(v.count); })
        .def_readonly("base", &LogValue::base)
        .def("__float__", &LogValue::to_double)
        .def("is_integer", &LogValue::is_integer)
        .def("integer_value", &LogValue::integer_value)
        .def("__repr__", [](const LogValue& v) { return to_string(v); })
        .def("__eq__",
             [](const LogValue& a, const LogValue& b) { return compare(a, b) == 0; })
        .def("__lt__", [](const LogValue& a, const LogValue& b) { return compare(a, b) < 0; })
        .def("__le__", [](const LogValue& a, const LogValue& b) { return compare(a, b) <= 0; });

    py::class_<Network>(m, "Network")
        .def_property_readonly("k", &Network::k)
        .def_readonly("pairs", &Network::pairs)
        .def_property_readonly("graph", [](const Network& n) { return n.graph; })
        .def("__repr__", [](const Network& n) {
            return "Network(n=" + std::to_string(n.graph.n()) +
                   ", k=" + std::to_string(n.k()) + ")";
        });

    // graph construction and structure
    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("graph_text", [](const DirectedGraph& g) { return to_text(g); });
    m.def("is_acyclic", &is_acyclic);
    m.def("reverse_graph", &reverse);
    m.def("shift_graph", &shift, py::arg("graph"), py::arg("t"));
    m.def("bidirected_cycle", &bidirected_cycle);
    m.def("directed_cycle", &directed_cycle);
    m.def("bidirected_complete", &bidirected_complete);
    m.def("max_induced_acyclic", [](const DirectedGraph& g) {
        auto r = max_induced_acyclic(g);
        return py::make_tuple(r.size, set_members(r.witness));
    });
    m.def("minimal_split",
          [](const DirectedGraph& g) { return set_members(minimal_split(g)); });
    m.def("enumerate_tournaments", &enumerate_tournaments, py::arg("n"));
    m.def("isomorphic", &isomorphic);

    // code search
    m.def(
        "guessing_number",
        [](const DirectedGraph& g, int s) { return guessing_number(g, s).value; },
        py::arg("graph"), py::arg("s"));
    m.def(
        "guessing_number_sandwich",
        [](const DirectedGraph& g, int s) {
            auto res = guessing_number(g, s, GuessMode::Sandwich);
            py::dict out;
            out["exact"] = res.exact;
            out["lower"] = res.value;
            out["upper"] = to_fraction(*res.upper);
            if (res.exact) out["value"] = to_fraction(*res.upper);
            out["witness"] = words_to_py(res.witness);
            return out;
        },
        py::arg("graph"), py::arg("s"));
    m.def(
        "max_graph_code",
        [](const DirectedGraph& g, int s, bool exact) {
            return words_to_py(
                max_graph_code(g, s, exact ? SearchMode::Exact : SearchMode::LowerBoundOnly));
        },
        py::arg("graph"), py::arg("s"), py::arg("exact") = true);
    m.def(
        "validate_code",
        [](const DirectedGraph& g, const py::list& words, int s) {
            return validate_code(g, code_from_py(g, s, words));
        },
        py::arg("graph"), py::arg("words"), py::arg("s"));
    m.def(
        "code_entropy",
        [](const DirectedGraph& g, const py::list& words, int s, const py::object& subset) {
            return code_entropy(code_from_py(g, s, words), set_from_py(subset));
        },
        py::arg("graph"), py::arg("words"), py::arg("s"), py::arg("subset"));
    m.def(
        "min_index_code",
        [](const DirectedGraph& g, int s, bool exact) {
            auto res =
                min_index_code(g, s, exact ? IndexMode::Exact : IndexMode::UpperBoundOnly);
            py::dict out;
            out["length"] = res.length;
            out["colors"] = res.coloring.num_colors;
            return out;
        },
        py::arg("graph"), py::arg("s"), py::arg("exact") = true);
    m.def(
        "public_guessing_number",
        [](const DirectedGraph& g, int s) {
            auto pub = public_guessing_number(g, s);
            return py::make_tuple(pub.n, pub.index_count);
        },
        py::arg("graph"), py::arg("s"));

    // entropy-like LP bounds
    m.def(
        "entropy_bound",
        [](const DirectedGraph& g, const std::string& ineq, const std::string& groups,
           const py::object& file_text) {
            return to_fraction(entropy_bound(g, make_selector(ineq, groups, file_text)));
        },
        py::arg("graph"), py::arg("ineq") = "shannon", py::arg("groups") = "singletons",
        py::arg("file_text") = py::none());
    m.def(
        "index_code_bound",
        [](const DirectedGraph& g, const std::string& ineq, const std::string& groups,
           const py::object& file_text) {
            return to_fraction(index_code_bound(g, make_selector(ineq, groups, file_text)));
        },
        py::arg("graph"), py::arg("ineq") = "shannon", py::arg("groups") = "singletons",
        py::arg("file_text") = py::none());

    // networks
    m.def("parse_network", &parse_network, py::arg("text"));
    m.def("network_text", [](const Network& n) { return to_text(n); });
    m.def(
        "split_graph",
        [](const DirectedGraph& g, const py::object& b) { return split_graph(g, set_from_py(b)); },
        py::arg("graph"), py::arg("b"));
    m.def("identify", &identify, py::arg("network"));
    m.def(
        "is_solvable",
        [](const Network& net, int s) -> py::object {
            switch (is_solvable(net, s)) {
                case Solvable::Yes: return py::bool_(true);
                case Solvable::No: return py::bool_(false);
                default: return py::none();
            }
        },
        py::arg("network"), py::arg("s"));
    m.def(
        "coding_capacity_11",
        [](const Network& net, const std::string& ineq, const std::string& groups,
           const py::object& file_text) {
            return coding_capacity_11(net, make_selector(ineq, groups, file_text));
        },
        py::arg("network"), py::arg("ineq") = "shannon", py::arg("groups") = "singletons",
        py::arg("file_text") = py::none());

#ifdef GENT_VERSION
    m.attr("__version__") = GENT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
