#include "orthocolour/cycle_colourings.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "orthocolour/errors.hpp"
#include "orthocolour/graph.hpp"
#include "orthocolour/numeric.hpp"

namespace orthocolour {

namespace {

void check_on_cycle(int n, const ColouringPair& pair, const char* origin) {
    std::vector<Colouring> both{pair.first, pair.second};
    if (auto v = find_violation(cycle(n), both))
        throw VerificationFailure(std::string(origin) + ": " + v->message);
}

// The two wrap-around formula colourings, unconditionally: orthogonality
// holds for every n, properness only under the divisibility conditions.
ColouringPair formula_pair(int n, int width) {
    Colouring c1{width, {}}, c2{width, {}};
    c1.colours.reserve(n);
    c2.colours.reserve(n);
    for (int i = 0; i < n; ++i) {
        c1.colours.push_back(i % width);
        c2.colours.push_back((i + i / width) % width);
    }
    return {std::move(c1), std::move(c2)};
}

}  // namespace

ColouringPair cycle_base_pair(int n) {
    if (n <= 4) throw std::invalid_argument("cycle pair: need more than 4 vertices");
    int width = ceil_sqrt(n);
    if ((n - 1) % width == 0)
        throw std::invalid_argument("cycle pair: width divides n-1, wrap edge conflicts");
    if ((n - 1 + (n - 1) / width) % width == 0)
        throw std::invalid_argument(
            "cycle pair: width divides the shifted wrap value, second colouring conflicts");
    ColouringPair pair = formula_pair(n, width);
    check_on_cycle(n, pair, "cycle base pair");
    return pair;
}

ColouringPair cycle_patched_pair(int n) {
    if (n <= 16) throw std::invalid_argument("patched cycle pair: need more than 16 vertices");
    int width = ceil_sqrt(n);
    bool first_wraps = (n - 1) % width == 0;
    bool second_wraps = (n - 1 + (n - 1) / width) % width == 0;
    if (!first_wraps && !second_wraps)
        throw std::invalid_argument("patched cycle pair: base formulas already apply");

    // Re-colour the final vertex as if it sat one position further along the
    // sequence, unless that value collides around the wrap too, in which case
    // use two positions further.  Exactly one branch fires per order.
    bool one_ahead;
    if (first_wraps)
        one_ahead = (n + n / width) % width != 0;
    else
        one_ahead = n % width != 0;

    ColouringPair pair = formula_pair(n, width);
    int shifted = one_ahead ? n : n + 1;
    pair.first.colours[n - 1] = shifted % width;
    pair.second.colours[n - 1] = (shifted + shifted / width) % width;
    check_on_cycle(n, pair, "patched cycle pair");
    return pair;
}

ColouringPair cycle_small_pair(int n) {
    struct Row {
        int colour_count;
        std::vector<int> c1, c2;
    };
    // Hand-checked pairs for the orders the formulas miss; the 4-cycle row is
    // exhaustive-search output.
    static const std::map<int, Row> table = {
        {3, {3, {0, 1, 2}, {0, 1, 2}}},
        {4, {3, {0, 1, 0, 2}, {0, 1, 2, 1}}},
        {6, {3, {0, 1, 2, 0, 1, 2}, {0, 1, 2, 1, 2, 1}}},
        {7, {3, {0, 1, 2, 0, 2, 1, 2}, {0, 1, 2, 1, 0, 2, 1}}},
        {8, {3, {0, 1, 2, 0, 1, 2, 0, 2}, {0, 1, 2, 1, 2, 0, 2, 1}}},
        {11, {4, {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 3}, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 1}}},
        {13,
         {4,
          {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 3, 2, 3},
          {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 1, 0, 2}}},
        {14,
         {4,
          {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 2},
          {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 1}}},
    };
    auto it = table.find(n);
    if (it == table.end())
        throw std::invalid_argument("small cycle pair: no table entry for " + std::to_string(n));
    const Row& row = it->second;
    ColouringPair pair{Colouring{row.colour_count, row.c1}, Colouring{row.colour_count, row.c2}};
    check_on_cycle(n, pair, "small cycle pair");
    return pair;
}

ColouringPair orthogonal_cycle_pair(int n) {
    if (n < 3) throw std::invalid_argument("cycle pair: need at least 3 vertices");
    switch (n) {
        case 3:
        case 4:
        case 6:
        case 7:
        case 8:
        case 11:
        case 13:
        case 14:
            return cycle_small_pair(n);
        default:
            break;
    }
    int width = ceil_sqrt(n);
    if ((n - 1) % width != 0 && (n - 1 + (n - 1) / width) % width != 0)
        return cycle_base_pair(n);
    return cycle_patched_pair(n);
}

OrthogonalSet orthogonal_cycle_family(int n) {
    if (n <= 4) throw std::invalid_argument("cycle family: need more than 4 vertices");
    int p = ceil_sqrt(n);
    if (!is_prime(p))
        throw NoApplicableConstruction("cycle family: ceil(sqrt(" + std::to_string(n) +
                                       ")) = " + std::to_string(p) + " is not prime");
    Graph g = cycle(n);
    std::vector<Colouring> survivors;
    for (int shift = 0; shift < p; ++shift) {
        Colouring c{p, {}};
        c.colours.reserve(n);
        for (int i = 0; i < n; ++i)
            c.colours.push_back(static_cast<int>(
                (i + static_cast<std::int64_t>(shift) * (i / p)) % p));
        if (is_proper(g, c)) survivors.push_back(std::move(c));
    }
    OrthogonalSet set(std::move(survivors));
    if (auto v = find_violation(g, set.colourings()))
        throw VerificationFailure("cycle family: " + v->message);
    return set;
}

}  // namespace orthocolour
