// Python bindings for the main operations: graph generation, the colouring
// constructions, verification, the exact oracle, and JSON round trips.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthocolour/circulant_colourings.hpp"
#include "orthocolour/colouring.hpp"
#include "orthocolour/cycle_colourings.hpp"
#include "orthocolour/errors.hpp"
#include "orthocolour/graph.hpp"
#include "orthocolour/numeric.hpp"
#include "orthocolour/oracle.hpp"
#include "orthocolour/paley.hpp"
#include "orthocolour/products.hpp"
#include "orthocolour/serialize.hpp"

namespace py = pybind11;
using namespace orthocolour;

namespace {

std::vector<Colouring> as_colourings(const OrthogonalSet& s) {
    return s.colourings();
}

// JSON syntax errors surface as ValueError, matching the other bad-input paths.
nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Orthogonal colourings of Cayley graphs: constructions, verifier, and "
        "exact oracle";

    py::register_exception<NoApplicableConstruction>(m, "NoApplicableConstruction",
                                                     PyExc_ValueError);
    py::register_exception<VerificationFailure>(m, "VerificationFailure",
                                                PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                           PyExc_RuntimeError);

    // ----- graphs -----------------------------------------------------------
    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbours", &Graph::neighbours, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("cycle", &cycle, py::arg("n"));
    m.def("complete", &complete, py::arg("q"));
    m.def(
        "circulant",
        [](int n, const std::set<int>& generators) {
            return circulant(n, generators);
        },
        py::arg("n"), py::arg("generators"));
    m.def("cartesian_product", &cartesian_product, py::arg("g"), py::arg("h"));
    m.def("complement", &complement, py::arg("g"));
    m.def("hamming", &hamming, py::arg("d"), py::arg("q"));

    // ----- colourings ---------------------------------------------------------
    py::class_<Colouring>(m, "Colouring")
        .def(py::init([](int colour_count, std::vector<int> colours) {
                 Colouring c{colour_count, std::move(colours)};
                 validate_colouring(c);
                 return c;
             }),
             py::arg("colour_count"), py::arg("colours"))
        .def_readonly("colour_count", &Colouring::colour_count)
        .def_readonly("colours", &Colouring::colours)
        .def_property_readonly("vertex_count", &Colouring::vertex_count)
        .def("__eq__",
             [](const Colouring& a, const Colouring& b) { return a == b; })
        .def("__repr__", [](const Colouring& c) {
            return "Colouring(" + std::to_string(c.colour_count) + " colours, " +
                   std::to_string(c.vertex_count()) + " vertices)";
        });

    m.def("is_proper", &is_proper, py::arg("graph"), py::arg("colouring"));
    m.def("are_orthogonal",
          py::overload_cast<const Colouring&, const Colouring&>(&are_orthogonal),
          py::arg("a"), py::arg("b"));
    m.def(
        "find_violation",
        [](const Graph& g, const std::vector<Colouring>& cs)
            -> std::optional<std::string> {
            if (auto v = find_violation(g, cs)) return v->message;
            return std::nullopt;
        },
        py::arg("graph"), py::arg("colourings"),
        "Message for the first broken rule, or None if the set verifies");
    m.def("orthogonal_lower_bound", &orthogonal_lower_bound, py::arg("n"));

    // ----- constructions -------------------------------------------------------
    m.def("orthogonal_cycle_pair", &orthogonal_cycle_pair, py::arg("n"));
    m.def("orthogonal_cycle_family",
          [](int n) { return as_colourings(orthogonal_cycle_family(n)); },
          py::arg("n"));
    m.def(
        "colour_circulant",
        [](int p, const std::set<int>& generators) {
            return colour_circulant_prime_square(p,
                                                 CirculantSpec{p * p, generators});
        },
        py::arg("p"), py::arg("generators"),
        "Orthogonal p-colour pair on a circulant with p^2 vertices");
    m.def(
        "paley_colourings",
        [](int p, int r, bool on_complement) {
            PaleySpec spec = make_paley_spec(p, r);
            OrthogonalSet s = paley_orthogonal_set(spec);
            if (!on_complement) s = transfer_to_paley_graph(spec, s);
            return as_colourings(s);
        },
        py::arg("p"), py::arg("r"), py::arg("on_complement") = false);
    m.def(
        "paley_graph",
        [](int p, int r) { return paley_graph(make_paley_spec(p, r)); },
        py::arg("p"), py::arg("r"));
    m.def("hamming_even_pair", &hamming_even_pair, py::arg("d"), py::arg("q"));
    m.def("four_cube_pair", &four_cube_pair);
    m.def("four_cube_power_pair", &four_cube_power_pair, py::arg("d"));

    // ----- Latin squares ---------------------------------------------------------
    py::class_<LatinSquare>(m, "LatinSquare")
        .def(py::init([](std::vector<std::vector<int>> cells) {
                 LatinSquare l{static_cast<int>(cells.size()), std::move(cells)};
                 validate_latin(l);
                 return l;
             }),
             py::arg("cells"))
        .def_readonly("order", &LatinSquare::order)
        .def_readonly("cells", &LatinSquare::cells);
    m.def("orthogonal_latin_pair", &orthogonal_latin_pair, py::arg("q"));
    m.def("latin_are_orthogonal",
          py::overload_cast<const LatinSquare&, const LatinSquare&>(&are_orthogonal),
          py::arg("a"), py::arg("b"));

    // ----- oracle ------------------------------------------------------------------
    py::enum_<SearchStatus>(m, "SearchStatus")
        .value("Witness", SearchStatus::Witness)
        .value("Infeasible", SearchStatus::Infeasible)
        .value("BudgetExceeded", SearchStatus::BudgetExceeded);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("status", &SearchResult::status)
        .def_readonly("nodes", &SearchResult::nodes)
        .def_property_readonly("witness",
                               [](const SearchResult& r)
                                   -> std::optional<std::vector<Colouring>> {
                                   if (!r.witness) return std::nullopt;
                                   return as_colourings(*r.witness);
                               });

    m.def(
        "search_orthogonal",
        [](const Graph& g, int k, int t, std::int64_t budget, bool symmetry) {
            return search_orthogonal(g, k, t, SearchConfig{budget, symmetry});
        },
        py::arg("graph"), py::arg("k"), py::arg("t"),
        py::arg("node_budget") = SearchConfig{}.node_budget,
        py::arg("symmetry_breaking") = true);
    m.def(
        "exact_orthochromatic",
        [](const Graph& g, int k, std::int64_t budget, bool symmetry) {
            return exact_orthochromatic(g, k, SearchConfig{budget, symmetry});
        },
        py::arg("graph"), py::arg("k"),
        py::arg("node_budget") = SearchConfig{}.node_budget,
        py::arg("symmetry_breaking") = true);

    // ----- serialization --------------------------------------------------------------
    m.def("graph_to_json", [](const Graph& g) { return dump_json(graph_to_json(g)); },
          py::arg("graph"));
    m.def("graph_from_json",
          [](const std::string& text) {
              return graph_from_json(parse_json_text(text));
          },
          py::arg("text"));
    m.def("colourings_to_json",
          [](const std::vector<Colouring>& cs) {
              return dump_json(orthogonal_set_to_json(OrthogonalSet(cs)));
          },
          py::arg("colourings"),
          "Canonical orthogonal-set document; validates the set first");
    m.def("colourings_from_json",
          [](const std::string& text) {
              return as_colourings(
                  orthogonal_set_from_json(parse_json_text(text)));
          },
          py::arg("text"));
    m.def("graph_to_dot", &graph_to_dot, py::arg("graph"));
}
