#include "orthocolour/paley.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "orthocolour/errors.hpp"
#include "orthocolour/numeric.hpp"

namespace orthocolour {

namespace {

std::set<std::int64_t> square_indices(const FiniteField& field) {
    std::set<std::int64_t> squares;
    for (const auto& e : field.quadratic_residues()) squares.insert(e.index());
    return squares;
}

}  // namespace

std::int64_t PaleySpec::sub_order() const {
    std::int64_t m = 1;
    for (int i = 0; i < r; ++i) m *= p;
    return m;
}

PaleySpec make_paley_spec(int p, int r) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("paley spec: characteristic must be an odd prime");
    if (r < 1) throw std::invalid_argument("paley spec: exponent must be >= 1");
    PaleySpec spec;
    spec.p = p;
    spec.r = r;
    spec.field = FiniteField::make(p, 2 * r);
    return spec;
}

Graph paley_graph(const PaleySpec& spec) {
    const FiniteField& field = *spec.field;
    auto squares = square_indices(field);
    int n = static_cast<int>(field.order());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        FieldElement eu = field.element(u);
        for (int v = u + 1; v < n; ++v) {
            std::int64_t diff = (eu - field.element(v)).index();
            if (squares.count(diff)) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

std::set<std::int64_t> scaled_subfield(const PaleySpec& spec, int i) {
    std::int64_t m = spec.sub_order();
    if (i < 0 || 2 * i >= m + 1)
        throw std::invalid_argument("scaled subfield: scale index outside 0..(p^r-1)/2");
    const FiniteField& field = *spec.field;
    FieldElement generator = field.primitive_element();
    // The subfield's multiplicative group is generated by the (p^r + 1)-th
    // power of the primitive element; scaling by an even power keeps every
    // nonzero member a square.
    FieldElement step = generator.pow(m + 1);
    FieldElement scale = generator.pow(2 * i);
    std::set<std::int64_t> members{0};
    FieldElement cur = scale;
    for (std::int64_t j = 0; j < m - 1; ++j) {
        members.insert(cur.index());
        cur = cur * step;
    }
    return members;
}

Colouring coset_colouring(const PaleySpec& spec, int i) {
    const FiniteField& field = *spec.field;
    auto subgroup = scaled_subfield(spec, i);
    int n = static_cast<int>(field.order());
    Colouring c{static_cast<int>(spec.sub_order()), std::vector<int>(n, -1)};
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (c.colours[v] != -1) continue;
        FieldElement base = field.element(v);
        for (std::int64_t h : subgroup) {
            std::int64_t member = (base + field.element(h)).index();
            c.colours[static_cast<size_t>(member)] = next;
        }
        ++next;
    }
    if (next != c.colour_count)
        throw VerificationFailure("coset colouring: cosets do not partition the field");
    return c;
}

OrthogonalSet paley_orthogonal_set(const PaleySpec& spec) {
    int count = static_cast<int>((spec.sub_order() + 1) / 2);
    std::vector<Colouring> colourings;
    colourings.reserve(count);
    for (int i = 0; i < count; ++i) colourings.push_back(coset_colouring(spec, i));
    OrthogonalSet set(std::move(colourings));
    if (auto v = find_violation(complement(paley_graph(spec)), set.colourings()))
        throw VerificationFailure("paley orthogonal set: " + v->message);
    return set;
}

OrthogonalSet transfer_to_paley_graph(const PaleySpec& spec, const OrthogonalSet& s) {
    Graph g = paley_graph(spec);
    if (auto v = find_violation(complement(g), s.colourings()))
        throw std::invalid_argument("paley transfer: input does not verify on the complement: " +
                                    v->message);
    const FiniteField& field = *spec.field;
    auto squares = square_indices(field);
    FieldElement scale = field.zero();
    for (std::int64_t idx = 1; idx < field.order(); ++idx) {
        if (!squares.count(idx)) {
            scale = field.element(idx);
            break;
        }
    }
    FieldElement unscale = scale.inverse();
    int n = static_cast<int>(field.order());
    std::vector<Colouring> moved;
    moved.reserve(s.k());
    for (const auto& c : s.colourings()) {
        Colouring out{c.colour_count, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) {
            std::int64_t pre = (unscale * field.element(v)).index();
            out.colours[v] = c.colours[static_cast<size_t>(pre)];
        }
        moved.push_back(std::move(out));
    }
    OrthogonalSet result(std::move(moved));
    if (auto v = find_violation(g, result.colourings()))
        throw VerificationFailure("paley transfer: " + v->message);
    return result;
}

}  // namespace orthocolour
