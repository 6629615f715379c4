#pragma once

#include <string>

#include <json.hpp>

#include "orthocolour/colouring.hpp"
#include "orthocolour/finite_field.hpp"
#include "orthocolour/graph.hpp"
#include "orthocolour/products.hpp"

namespace orthocolour {

// JSON wire formats.  nlohmann::json objects keep keys sorted, so dumps are
// canonical and byte-stable.  All *_from_json functions throw
// std::invalid_argument on malformed documents.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j);

nlohmann::json orthogonal_set_to_json(const OrthogonalSet& s);
OrthogonalSet orthogonal_set_from_json(const nlohmann::json& j);

nlohmann::json field_to_json(const FiniteField& f);

nlohmann::json latin_to_json(const LatinSquare& l);
LatinSquare latin_from_json(const nlohmann::json& j);

// Graphviz text: undirected graph with vertices named v0..v{n-1}, every
// vertex declared, edges in sorted order.
std::string graph_to_dot(const Graph& g);

// Canonical single-line dump with trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace orthocolour
