#include <doctest.h>

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "orthocolour/colouring.hpp"
#include "orthocolour/finite_field.hpp"
#include "orthocolour/graph.hpp"
#include "orthocolour/products.hpp"
#include "orthocolour/serialize.hpp"

using namespace orthocolour;
using nlohmann::json;

TEST_CASE("graph json round trip and exact shape") {
    Graph k3 = complete(3);
    json j = graph_to_json(k3);
    CHECK(dump_json(j) == "{\"edges\":[[0,1],[0,2],[1,2]],\"vertex_count\":3}\n");
    CHECK(graph_from_json(j) == k3);

    Graph c5 = cycle(5);
    CHECK(graph_from_json(graph_to_json(c5)) == c5);

    Graph lonely(4, {});
    CHECK(graph_from_json(graph_to_json(lonely)) == lonely);
}

TEST_CASE("graph json rejects malformed input") {
    CHECK_THROWS(graph_from_json(json::parse(R"({"vertex_count": 3})")));
    CHECK_THROWS(graph_from_json(json::parse(R"({"edges": []})")));
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": [[0,5]], "vertex_count": 3})")),
                    std::invalid_argument);
    CHECK_THROWS(graph_from_json(json::parse(R"({"edges": [[0]], "vertex_count": 3})")));
    CHECK_THROWS(graph_from_json(json::parse("[1,2,3]")));
}

TEST_CASE("colouring json round trip") {
    Colouring c{3, {0, 1, 2, 1, 2, 0, 2, 0, 1}};
    json j = colouring_to_json(c);
    CHECK(j["colour_count"] == 3);
    CHECK(j["colours"].size() == 9);
    CHECK(colouring_from_json(j) == c);
    CHECK_THROWS(colouring_from_json(json::parse(R"({"colours": [0,1]})")));
    CHECK_THROWS_AS(
        colouring_from_json(json::parse(R"({"colour_count": 2, "colours": [0, 3]})")),
        std::invalid_argument);
}

TEST_CASE("orthogonal set json round trip") {
    OrthogonalSet set({Colouring{3, {0, 1, 2, 0, 1, 2, 0, 1, 2}},
                       Colouring{3, {0, 1, 2, 1, 2, 0, 2, 0, 1}}});
    json j = orthogonal_set_to_json(set);
    CHECK(j["k"] == 2);
    CHECK(j["colour_count"] == 3);
    OrthogonalSet back = orthogonal_set_from_json(j);
    CHECK(back.k() == 2);
    CHECK(back[0] == set[0]);
    CHECK(back[1] == set[1]);

    // Parsing re-validates: a tampered payload is rejected.
    j["colourings"][1] = j["colourings"][0];
    CHECK_THROWS_AS(orthogonal_set_from_json(j), std::invalid_argument);
}

TEST_CASE("field description json") {
    auto f9 = FiniteField::make(3, 2);
    CHECK(dump_json(field_to_json(*f9)) == "{\"k\":2,\"modulus\":[1,0,1],\"p\":3}\n");
    auto f5 = FiniteField::make(5, 1);
    json j = field_to_json(*f5);
    CHECK(j["p"] == 5);
    CHECK(j["k"] == 1);
}

TEST_CASE("latin square json round trip") {
    auto [l1, l2] = orthogonal_latin_pair(4);
    json j = latin_to_json(l1);
    CHECK(j["order"] == 4);
    LatinSquare back = latin_from_json(j);
    CHECK(back.cells == l1.cells);
    CHECK_THROWS(latin_from_json(json::parse(R"({"order": 2})")));
    CHECK_THROWS_AS(latin_from_json(json::parse(R"({"order": 2, "cells": [[0,0],[1,1]]})")),
                    std::invalid_argument);
}

TEST_CASE("dot output for a triangle") {
    std::string expected =
        "graph G {\n"
        "  v0;\n"
        "  v1;\n"
        "  v2;\n"
        "  v0 -- v1;\n"
        "  v0 -- v2;\n"
        "  v1 -- v2;\n"
        "}\n";
    CHECK(graph_to_dot(complete(3)) == expected);
    // Isolated vertices still get declared.
    std::string lonely = graph_to_dot(Graph(2, {}));
    CHECK(lonely == "graph G {\n  v0;\n  v1;\n}\n");
}

TEST_CASE("dump_json is canonical and newline terminated") {
    json j = json::parse(R"({"b": 1, "a": [1, 2]})");
    CHECK(dump_json(j) == "{\"a\":[1,2],\"b\":1}\n");
}
