#pragma once

#include <cstdint>
#include <optional>

#include "orthocolour/colouring.hpp"
#include "orthocolour/graph.hpp"

namespace orthocolour {

struct SearchConfig {
    // Candidate assignments examined before giving up.  A budget result is a
    // value, not an error.
    std::int64_t node_budget = 100'000'000;
    // Fix vertex 0 to the all-zero tuple and introduce colours of the first
    // coordinate in first-use order.  Sound: any witness can be renamed,
    // coordinate by coordinate, into this canonical form.
    bool symmetry_breaking = true;
};

enum class SearchStatus { Witness, Infeasible, BudgetExceeded };

struct SearchResult {
    SearchStatus status;
    std::optional<OrthogonalSet> witness;  // present iff status == Witness
    std::int64_t nodes = 0;                // assignments examined
};

// Exhaustive backtracking search for k mutually orthogonal proper
// t-colourings of g.  Tries vertices in natural order and colours ascending,
// so results are deterministic.  Infeasible is only reported on a complete
// proof: full exhaustion, or the pair-capacity bound t*t < n when k >= 2.
// Witnesses are re-checked by the shared verifier before being returned.
SearchResult search_orthogonal(const Graph& g, int k, int t,
                               const SearchConfig& cfg = {});

// Smallest t admitting k mutually orthogonal proper t-colourings of g, found
// by scanning t upward from the lower bound (ceil(sqrt(n)) when k >= 2, else
// 1).  The budget applies per candidate t; on exhaustion throws
// BudgetExceeded carrying the last t whose status was decided.
int exact_orthochromatic(const Graph& g, int k, const SearchConfig& cfg = {});

}  // namespace orthocolour
