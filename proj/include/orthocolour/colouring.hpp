#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orthocolour/graph.hpp"

namespace orthocolour {

// Vertex colouring with colours 0..colour_count-1; colours[v] is the colour
// of vertex v.  Not necessarily proper: properness is a predicate, not an
// invariant of the type.
struct Colouring {
    int colour_count = 0;
    std::vector<int> colours;

    int vertex_count() const { return static_cast<int>(colours.size()); }
    bool operator==(const Colouring&) const = default;
};

using ColouringPair = std::pair<Colouring, Colouring>;

// Throws std::invalid_argument unless colour_count >= 1 and every entry lies
// in [0, colour_count).
void validate_colouring(const Colouring& c);

// True iff no edge of g joins two vertices of the same colour.
bool is_proper(const Graph& g, const Colouring& c);

// True iff v -> (a.colours[v], b.colours[v]) is injective.  Requires equal
// vertex counts.
bool are_orthogonal(const Colouring& a, const Colouring& b);

// A set of k >= 1 colourings of one vertex set, sharing a colour count and
// pairwise orthogonal.  The constructor validates eagerly and throws
// std::invalid_argument on any violation; instances never hold unchecked data.
class OrthogonalSet {
public:
    explicit OrthogonalSet(std::vector<Colouring> colourings);

    int k() const { return static_cast<int>(colourings_.size()); }
    int colour_count() const { return colourings_.front().colour_count; }
    int vertex_count() const { return colourings_.front().vertex_count(); }
    const std::vector<Colouring>& colourings() const { return colourings_; }
    const Colouring& operator[](int i) const { return colourings_[i]; }

private:
    std::vector<Colouring> colourings_;
};

// First rule broken by a candidate set of colourings against a graph, if any.
struct Violation {
    std::string message;
};

// Checks, in order: non-empty, shapes match the graph, shared colour count,
// pair capacity t*t >= n when k >= 2, properness of every member, pairwise
// orthogonality.  Returns the first failure found.
std::optional<Violation> find_violation(const Graph& g,
                                        std::span<const Colouring> colourings);

bool verify_orthogonal_set(const Graph& g, const OrthogonalSet& s);
bool verify_pair(const Graph& g, const Colouring& a, const Colouring& b);

// Smallest t with t*t >= n: no pair of orthogonal colourings of an n-vertex
// graph can use fewer colours.  Requires n >= 1.
int orthogonal_lower_bound(std::int64_t n);

}  // namespace orthocolour
