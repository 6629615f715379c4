#include "orthocolour/serialize.hpp"

#include <stdexcept>

namespace orthocolour {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* origin) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string(origin) + ": missing \"" + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key, const char* origin) {
    const json& value = require_field(j, key, origin);
    if (!value.is_number_integer())
        throw std::invalid_argument(std::string(origin) + ": \"" + key +
                                    "\" must be an integer");
    return value.get<int>();
}

std::vector<int> int_vector(const json& value, const char* origin) {
    if (!value.is_array())
        throw std::invalid_argument(std::string(origin) + ": expected an array of integers");
    std::vector<int> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_number_integer())
            throw std::invalid_argument(std::string(origin) + ": expected an integer entry");
        out.push_back(item.get<int>());
    }
    return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    int n = int_field(j, "vertex_count", "graph");
    const json& edges = require_field(j, "edges", "graph");
    if (!edges.is_array()) throw std::invalid_argument("graph: \"edges\" must be an array");
    std::vector<Edge> parsed;
    parsed.reserve(edges.size());
    for (const auto& e : edges) {
        std::vector<int> pair = int_vector(e, "graph edge");
        if (pair.size() != 2)
            throw std::invalid_argument("graph: each edge needs exactly two endpoints");
        parsed.push_back({pair[0], pair[1]});
    }
    return Graph(n, std::move(parsed));
}

json colouring_to_json(const Colouring& c) {
    return json{{"colour_count", c.colour_count}, {"colours", c.colours}};
}

Colouring colouring_from_json(const json& j) {
    Colouring c{int_field(j, "colour_count", "colouring"),
                int_vector(require_field(j, "colours", "colouring"), "colouring")};
    validate_colouring(c);
    return c;
}

json orthogonal_set_to_json(const OrthogonalSet& s) {
    json colourings = json::array();
    for (const auto& c : s.colourings()) colourings.push_back(c.colours);
    return json{{"k", s.k()},
                {"colour_count", s.colour_count()},
                {"colourings", std::move(colourings)}};
}

OrthogonalSet orthogonal_set_from_json(const json& j) {
    int k = int_field(j, "k", "orthogonal set");
    int colour_count = int_field(j, "colour_count", "orthogonal set");
    const json& colourings = require_field(j, "colourings", "orthogonal set");
    if (!colourings.is_array())
        throw std::invalid_argument("orthogonal set: \"colourings\" must be an array");
    if (static_cast<int>(colourings.size()) != k)
        throw std::invalid_argument("orthogonal set: \"k\" does not match the array length");
    std::vector<Colouring> parsed;
    parsed.reserve(colourings.size());
    for (const auto& c : colourings)
        parsed.push_back(Colouring{colour_count, int_vector(c, "orthogonal set")});
    return OrthogonalSet(std::move(parsed));  // re-validates orthogonality
}

json field_to_json(const FiniteField& f) {
    return json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

json latin_to_json(const LatinSquare& l) {
    return json{{"order", l.order}, {"cells", l.cells}};
}

LatinSquare latin_from_json(const json& j) {
    int order = int_field(j, "order", "latin square");
    const json& cells = require_field(j, "cells", "latin square");
    if (!cells.is_array())
        throw std::invalid_argument("latin square: \"cells\" must be an array of rows");
    LatinSquare l{order, {}};
    l.cells.reserve(cells.size());
    for (const auto& row : cells) l.cells.push_back(int_vector(row, "latin square"));
    validate_latin(l);
    return l;
}

std::string graph_to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "  v" + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string dump_json(const json& j) { return j.dump() + "\n"; }

}  // namespace orthocolour
