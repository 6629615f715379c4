#include "orthocolour/colouring.hpp"

#include <set>
#include <stdexcept>

#include "orthocolour/numeric.hpp"

namespace orthocolour {

void validate_colouring(const Colouring& c) {
    if (c.colour_count < 1) throw std::invalid_argument("colouring: colour_count must be >= 1");
    for (int colour : c.colours)
        if (colour < 0 || colour >= c.colour_count)
            throw std::invalid_argument("colouring: colour out of range");
}

bool is_proper(const Graph& g, const Colouring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw std::invalid_argument("is_proper: colouring size does not match graph");
    for (const auto& [u, v] : g.edges())
        if (c.colours[u] == c.colours[v]) return false;
    return true;
}

bool are_orthogonal(const Colouring& a, const Colouring& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("are_orthogonal: colouring sizes differ");
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (!seen.insert({a.colours[v], b.colours[v]}).second) return false;
    return true;
}

OrthogonalSet::OrthogonalSet(std::vector<Colouring> colourings)
    : colourings_(std::move(colourings)) {
    if (colourings_.empty())
        throw std::invalid_argument("orthogonal set: need at least one colouring");
    int n = colourings_.front().vertex_count();
    int t = colourings_.front().colour_count;
    for (const auto& c : colourings_) {
        validate_colouring(c);
        if (c.vertex_count() != n)
            throw std::invalid_argument("orthogonal set: vertex counts differ");
        if (c.colour_count != t)
            throw std::invalid_argument("orthogonal set: colour counts differ");
    }
    for (size_t i = 0; i < colourings_.size(); ++i)
        for (size_t j = i + 1; j < colourings_.size(); ++j)
            if (!are_orthogonal(colourings_[i], colourings_[j]))
                throw std::invalid_argument("orthogonal set: colourings " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " are not orthogonal");
}

std::optional<Violation> find_violation(const Graph& g,
                                        std::span<const Colouring> colourings) {
    if (colourings.empty()) return Violation{"no colourings supplied"};
    int n = g.vertex_count();
    int t = colourings.front().colour_count;
    for (size_t i = 0; i < colourings.size(); ++i) {
        const auto& c = colourings[i];
        if (c.colour_count < 1)
            return Violation{"colouring " + std::to_string(i) + " has no colours"};
        if (c.vertex_count() != n)
            return Violation{"colouring " + std::to_string(i) + " covers " +
                             std::to_string(c.vertex_count()) + " vertices, graph has " +
                             std::to_string(n)};
        if (c.colour_count != t)
            return Violation{"colouring " + std::to_string(i) + " uses " +
                             std::to_string(c.colour_count) + " colours, colouring 0 uses " +
                             std::to_string(t)};
        for (int v = 0; v < n; ++v)
            if (c.colours[v] < 0 || c.colours[v] >= t)
                return Violation{"colouring " + std::to_string(i) + " gives vertex " +
                                 std::to_string(v) + " an out-of-range colour"};
    }
    if (colourings.size() >= 2 && static_cast<std::int64_t>(t) * t < n)
        return Violation{"capacity: " + std::to_string(t) + "*" + std::to_string(t) +
                         " colour pairs cannot cover " + std::to_string(n) + " vertices"};
    for (size_t i = 0; i < colourings.size(); ++i) {
        for (const auto& [u, v] : g.edges())
            if (colourings[i].colours[u] == colourings[i].colours[v])
                return Violation{"colouring " + std::to_string(i) + " gives adjacent vertices " +
                                 std::to_string(u) + " and " + std::to_string(v) +
                                 " the same colour"};
    }
    for (size_t i = 0; i < colourings.size(); ++i)
        for (size_t j = i + 1; j < colourings.size(); ++j)
            if (!are_orthogonal(colourings[i], colourings[j]))
                return Violation{"pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") repeats a colour combination"};
    return std::nullopt;
}

bool verify_orthogonal_set(const Graph& g, const OrthogonalSet& s) {
    return !find_violation(g, s.colourings()).has_value();
}

bool verify_pair(const Graph& g, const Colouring& a, const Colouring& b) {
    std::vector<Colouring> both{a, b};
    return !find_violation(g, both).has_value();
}

int orthogonal_lower_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("orthogonal_lower_bound: need n >= 1");
    return ceil_sqrt(n);
}

}  // namespace orthocolour
