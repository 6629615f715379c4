#include "orthocolour/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthocolour/errors.hpp"
#include "orthocolour/numeric.hpp"

namespace orthocolour {

namespace {

// Depth-first search over assignments colour[i][v], vertex-major so that all
// k coordinates of a vertex are decided before the next vertex starts.
struct Searcher {
    const Graph& g;
    int k, t, n;
    std::int64_t budget;
    bool sym;

    std::int64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<int>> colour;        // [coordinate][vertex], -1 unset
    std::vector<std::vector<char>> pair_used;    // [a*k+b][x*t+y] for a < b
    int max_first = -1;  // largest colour coordinate 0 has used so far

    Searcher(const Graph& graph, int coords, int colours, const SearchConfig& cfg)
        : g(graph),
          k(coords),
          t(colours),
          n(graph.vertex_count()),
          budget(cfg.node_budget),
          sym(cfg.symmetry_breaking),
          colour(coords, std::vector<int>(graph.vertex_count(), -1)),
          pair_used(static_cast<size_t>(coords) * coords,
                    std::vector<char>(static_cast<size_t>(colours) * colours, 0)) {}

    bool feasible(int v, int i, int a) const {
        for (int u : g.neighbours(v)) {
            if (u >= v) break;  // later vertices are unassigned
            if (colour[i][u] == a) return false;
        }
        for (int prev = 0; prev < i; ++prev)
            if (pair_used[prev * k + i][colour[prev][v] * t + a]) return false;
        return true;
    }

    void mark(int v, int i, int a, char value) {
        for (int prev = 0; prev < i; ++prev)
            pair_used[prev * k + i][colour[prev][v] * t + a] = value;
    }

    bool place(int v, int i) {
        if (v == n) return true;
        int next_v = i + 1 < k ? v : v + 1;
        int next_i = i + 1 < k ? i + 1 : 0;

        int limit = t;
        if (sym && v == 0)
            limit = 1;  // the first vertex is pinned to the all-zero tuple
        else if (sym && i == 0)
            limit = std::min(t, max_first + 2);  // first-use order of colours

        for (int a = 0; a < limit; ++a) {
            if (nodes >= budget) {
                out_of_budget = true;
                return false;
            }
            ++nodes;
            if (!feasible(v, i, a)) continue;
            colour[i][v] = a;
            mark(v, i, a, 1);
            int saved = max_first;
            if (i == 0 && a > max_first) max_first = a;
            if (place(next_v, next_i)) return true;
            max_first = saved;
            mark(v, i, a, 0);
            colour[i][v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult search_orthogonal(const Graph& g, int k, int t, const SearchConfig& cfg) {
    if (k < 1) throw std::invalid_argument("orthogonal search: need at least one colouring");
    if (t < 1) throw std::invalid_argument("orthogonal search: need at least one colour");
    int n = g.vertex_count();
    if (k >= 2 && static_cast<std::int64_t>(t) * t < n)
        return {SearchStatus::Infeasible, std::nullopt, 0};

    Searcher searcher(g, k, t, cfg);
    if (searcher.place(0, 0)) {
        std::vector<Colouring> colourings;
        colourings.reserve(k);
        for (int i = 0; i < k; ++i) colourings.push_back(Colouring{t, searcher.colour[i]});
        OrthogonalSet witness(std::move(colourings));
        if (auto v = find_violation(g, witness.colourings()))
            throw VerificationFailure("orthogonal search: witness rejected: " + v->message);
        return {SearchStatus::Witness, std::move(witness), searcher.nodes};
    }
    if (searcher.out_of_budget)
        return {SearchStatus::BudgetExceeded, std::nullopt, searcher.nodes};
    return {SearchStatus::Infeasible, std::nullopt, searcher.nodes};
}

int exact_orthochromatic(const Graph& g, int k, const SearchConfig& cfg) {
    if (k < 1) throw std::invalid_argument("orthogonal search: need at least one colouring");
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("orthogonal search: need at least one vertex");
    int start = k >= 2 ? orthogonal_lower_bound(n) : 1;
    int last_decided = -1;
    for (int t = start; t <= n; ++t) {
        SearchResult result = search_orthogonal(g, k, t, cfg);
        switch (result.status) {
            case SearchStatus::Witness:
                return t;
            case SearchStatus::Infeasible:
                last_decided = t;
                break;
            case SearchStatus::BudgetExceeded:
                throw BudgetExceeded("exact orthochromatic number: node budget of " +
                                         std::to_string(cfg.node_budget) +
                                         " exhausted at " + std::to_string(t) + " colours",
                                     last_decided);
        }
    }
    // Unreachable: t = n always admits the identity colourings, where every
    // vertex is its own colour class.
    throw std::logic_error("orthogonal search: scan passed the identity colouring");
}

}  // namespace orthocolour
