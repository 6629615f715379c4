#pragma once

#include <cstdint>
#include <set>

#include "orthocolour/colouring.hpp"
#include "orthocolour/finite_field.hpp"
#include "orthocolour/graph.hpp"

namespace orthocolour {

// Parameters of a Paley graph on GF(p^{2r}): p an odd prime, r >= 1.  The
// square order q = p^{2r} is 1 mod 4, so adjacency by quadratic residues is
// well defined.
struct PaleySpec {
    int p = 0;
    int r = 0;
    FieldPtr field;

    std::int64_t q() const { return field->order(); }
    std::int64_t sub_order() const;  // p^r
};

PaleySpec make_paley_spec(int p, int r);

// Vertices are field elements by canonical index; u ~ v iff u - v is a
// nonzero square.
Graph paley_graph(const PaleySpec& spec);

// The additive subgroup H_i = alpha^{2i} * GF(p^r), i.e. the multiplicative
// coset of the subfield's nonzero elements scaled by an even power of the
// primitive element, plus zero.  Returned as canonical indices; |H_i| = p^r,
// and every nonzero member is a square.
std::set<std::int64_t> scaled_subfield(const PaleySpec& spec, int i);

// Colouring whose classes are the additive cosets of H_i, coloured in order
// of first appearance by vertex index.  Proper on the complement of the Paley
// graph; uses p^r colours.
Colouring coset_colouring(const PaleySpec& spec, int i);

// The (p^r + 1)/2 coset colourings for i = 0..(p^r-1)/2, mutually orthogonal
// and verified against the complement of the Paley graph.
OrthogonalSet paley_orthogonal_set(const PaleySpec& spec);

// Carries a set verified on the complement over to the Paley graph itself via
// the multiplication map x -> beta*x, beta the smallest non-residue: each
// colouring c becomes x -> c(beta^{-1} x).  Output verified on paley_graph.
OrthogonalSet transfer_to_paley_graph(const PaleySpec& spec, const OrthogonalSet& s);

}  // namespace orthocolour
