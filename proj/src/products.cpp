#include "orthocolour/products.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "orthocolour/errors.hpp"
#include "orthocolour/finite_field.hpp"
#include "orthocolour/numeric.hpp"

namespace orthocolour {

namespace {

// Maximal prime-power factors of q, ascending by value.
std::vector<std::pair<int, int>> prime_power_factors(int q) {
    std::vector<std::pair<int, int>> factors;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d != 0) continue;
        int k = 0;
        while (q % d == 0) {
            q /= d;
            ++k;
        }
        factors.push_back({d, k});
    }
    if (q > 1) factors.push_back({q, 1});
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        std::int64_t va = 1, vb = 1;
        for (int i = 0; i < a.second; ++i) va *= a.first;
        for (int i = 0; i < b.second; ++i) vb *= b.first;
        return va < vb;
    });
    return factors;
}

// Field pair of prime-power order: rows index the first summand.  The two
// squares i+j and lambda*i+j are orthogonal because lambda != 1.
LatinPair field_latin_pair(int p, int k) {
    auto field = FiniteField::make(p, k);
    int q = static_cast<int>(field->order());
    FieldElement lambda = field->element(2);  // smallest element outside {0, 1}
    LatinSquare l1{q, std::vector<std::vector<int>>(q, std::vector<int>(q))};
    LatinSquare l2 = l1;
    for (int i = 0; i < q; ++i) {
        FieldElement ei = field->element(i);
        FieldElement li = lambda * ei;
        for (int j = 0; j < q; ++j) {
            FieldElement ej = field->element(j);
            l1.cells[i][j] = static_cast<int>((ei + ej).index());
            l2.cells[i][j] = static_cast<int>((li + ej).index());
        }
    }
    return {std::move(l1), std::move(l2)};
}

LatinSquare kronecker(const LatinSquare& a, const LatinSquare& b) {
    int qa = a.order, qb = b.order, q = qa * qb;
    LatinSquare out{q, std::vector<std::vector<int>>(q, std::vector<int>(q))};
    for (int i1 = 0; i1 < qa; ++i1)
        for (int i2 = 0; i2 < qb; ++i2)
            for (int j1 = 0; j1 < qa; ++j1)
                for (int j2 = 0; j2 < qb; ++j2)
                    out.cells[i1 * qb + i2][j1 * qb + j2] =
                        a.cells[i1][j1] * qb + b.cells[i2][j2];
    return out;
}

void check_pair_on(const Graph& g, const ColouringPair& pair, const char* origin) {
    std::vector<Colouring> both{pair.first, pair.second};
    if (auto v = find_violation(g, both))
        throw VerificationFailure(std::string(origin) + ": " + v->message);
}

}  // namespace

void validate_latin(const LatinSquare& l) {
    if (l.order < 1) throw std::invalid_argument("latin square: order must be >= 1");
    auto q = static_cast<size_t>(l.order);
    if (l.cells.size() != q) throw std::invalid_argument("latin square: wrong number of rows");
    for (const auto& row : l.cells) {
        if (row.size() != q) throw std::invalid_argument("latin square: wrong row length");
        std::set<int> seen;
        for (int x : row) {
            if (x < 0 || x >= l.order)
                throw std::invalid_argument("latin square: symbol out of range");
            if (!seen.insert(x).second)
                throw std::invalid_argument("latin square: repeated symbol in a row");
        }
    }
    for (int j = 0; j < l.order; ++j) {
        std::set<int> seen;
        for (int i = 0; i < l.order; ++i)
            if (!seen.insert(l.cells[i][j]).second)
                throw std::invalid_argument("latin square: repeated symbol in a column");
    }
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order != b.order) throw std::invalid_argument("latin orthogonality: orders differ");
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < a.order; ++j) seen.insert({a.cells[i][j], b.cells[i][j]});
    return seen.size() == static_cast<size_t>(a.order) * a.order;
}

LatinPair orthogonal_latin_pair(int q) {
    if (q < 1) throw std::invalid_argument("latin pair: order must be >= 1");
    if (q == 1 || q == 2 || q == 6)
        throw NoApplicableConstruction("latin pair: no orthogonal pair of order " +
                                       std::to_string(q) + " exists");
    if (q % 4 == 2)
        throw NoApplicableConstruction(
            "latin pair: order " + std::to_string(q) +
            " is 2 mod 4, outside the field and product constructions");
    auto factors = prime_power_factors(q);
    LatinPair pair = field_latin_pair(factors[0].first, factors[0].second);
    for (size_t i = 1; i < factors.size(); ++i) {
        LatinPair next = field_latin_pair(factors[i].first, factors[i].second);
        pair = {kronecker(pair.first, next.first), kronecker(pair.second, next.second)};
    }
    return pair;
}

void validate_labelling(const PairLabelling& l) {
    if (l.m < 1) throw std::invalid_argument("pair labelling: grid size must be >= 1");
    if (l.labels.size() != static_cast<size_t>(l.m) * l.m)
        throw std::invalid_argument("pair labelling: wrong number of labels");
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : l.labels) {
        if (i < 0 || i >= l.m || j < 0 || j >= l.m)
            throw std::invalid_argument("pair labelling: label out of range");
        if (!seen.insert({i, j}).second)
            throw std::invalid_argument("pair labelling: repeated label");
    }
}

PairLabelling natural_pair_labelling(int q) {
    if (q < 1) throw std::invalid_argument("pair labelling: grid size must be >= 1");
    PairLabelling l{q, {}};
    l.labels.reserve(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) l.labels.push_back({a, b});
    return l;
}

PairLabelling labelling_from_pair(const Colouring& a, const Colouring& b) {
    int m = a.colour_count;
    if (b.colour_count != m)
        throw std::invalid_argument("pair labelling: colour counts differ");
    if (a.vertex_count() != b.vertex_count() || a.vertex_count() != m * m)
        throw std::invalid_argument("pair labelling: need exactly m^2 vertices");
    PairLabelling l{m, {}};
    l.labels.reserve(a.colours.size());
    for (int v = 0; v < a.vertex_count(); ++v) l.labels.push_back({a.colours[v], b.colours[v]});
    validate_labelling(l);
    return l;
}

ColouringPair compose_product(const Graph& g, const ColouringPair& f, const Graph& h,
                              const PairLabelling& labels) {
    std::vector<Colouring> both{f.first, f.second};
    if (auto v = find_violation(g, both))
        throw std::invalid_argument("product composition: input pair does not verify: " +
                                    v->message);
    int n = f.first.colour_count;
    if (static_cast<std::int64_t>(n) * n != g.vertex_count())
        throw std::invalid_argument(
            "product composition: colour count squared must equal the vertex count");
    validate_labelling(labels);
    if (labels.labels.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument(
            "product composition: labelling does not cover the second factor");
    int m = labels.m;
    if (m > n)
        throw std::invalid_argument(
            "product composition: labelling grid exceeds the colour count");

    int nh = h.vertex_count();
    int total = g.vertex_count() * nh;
    ColouringPair out{Colouring{n * m, std::vector<int>(total)},
                      Colouring{n * m, std::vector<int>(total)}};
    for (int k = 0; k < g.vertex_count(); ++k)
        for (int u = 0; u < nh; ++u) {
            auto [i, j] = labels.labels[u];
            int v = k * nh + u;
            out.first.colours[v] = (f.first.colours[k] + j) % n + i * n;
            out.second.colours[v] = (f.second.colours[k] + i) % n + j * n;
        }
    check_pair_on(cartesian_product(g, h), out, "product composition");
    return out;
}

ColouringPair h2_colouring_from_latin(const LatinSquare& l1, const LatinSquare& l2) {
    validate_latin(l1);
    validate_latin(l2);
    if (l1.order != l2.order)
        throw std::invalid_argument("rook colouring: latin square orders differ");
    if (!are_orthogonal(l1, l2))
        throw std::invalid_argument("rook colouring: latin squares are not orthogonal");
    int q = l1.order;
    ColouringPair out{Colouring{q, std::vector<int>(q * q)},
                      Colouring{q, std::vector<int>(q * q)}};
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            out.first.colours[a * q + b] = l1.cells[a][b];
            out.second.colours[a * q + b] = l2.cells[a][b];
        }
    check_pair_on(hamming(2, q), out, "rook colouring");
    return out;
}

ColouringPair hamming_even_pair(int d, int q) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("hamming pair: dimension must be even and >= 2");
    if (q == 2)
        throw NoApplicableConstruction(
            "hamming pair: no orthogonal pair of order-2 latin squares; binary dimensions "
            "go through the 4-cube construction");
    auto [l1, l2] = orthogonal_latin_pair(q);
    ColouringPair pair = h2_colouring_from_latin(l1, l2);
    Graph block = hamming(2, q);
    Graph carrier = block;
    PairLabelling labels = natural_pair_labelling(q);
    for (int used = 2; used < d; used += 2) {
        pair = compose_product(carrier, pair, block, labels);
        carrier = cartesian_product(carrier, block);
    }
    check_pair_on(hamming(d, q), pair, "hamming pair");
    return pair;
}

ColouringPair four_cube_pair() {
    ColouringPair out{Colouring{4, std::vector<int>(16)}, Colouring{4, std::vector<int>(16)}};
    for (int v = 0; v < 16; ++v) {
        int x1 = (v >> 3) & 1, x2 = (v >> 2) & 1, x3 = (v >> 1) & 1, x4 = v & 1;
        out.first.colours[v] = 2 * (x1 ^ x3) + (x2 ^ x4);
        out.second.colours[v] = 2 * (x2 ^ x3) + (x1 ^ x2 ^ x4);
    }
    check_pair_on(hamming(4, 2), out, "4-cube pair");
    return out;
}

ColouringPair four_cube_power_pair(int d) {
    if (d < 1) throw std::invalid_argument("4-cube power pair: need d >= 1");
    ColouringPair base = four_cube_pair();
    PairLabelling labels = labelling_from_pair(base.first, base.second);
    Graph block = hamming(4, 2);
    ColouringPair pair = base;
    Graph carrier = block;
    for (int used = 1; used < d; ++used) {
        pair = compose_product(carrier, pair, block, labels);
        carrier = cartesian_product(carrier, block);
    }
    check_pair_on(hamming(4 * d, 2), pair, "4-cube power pair");
    return pair;
}

}  // namespace orthocolour
