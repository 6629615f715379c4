#pragma once

#include <cstdint>
#include <set>

#include "orthocolour/colouring.hpp"
#include "orthocolour/graph.hpp"

namespace orthocolour {

// Placement of the colour pair (i,j) into Z_{p^2}, written as a residue digit
// plus a block offset: ((alpha*(j-i)) mod p) + p*((2i-j) mod p), all mod p^2.
// Requires 1 <= alpha <= p-1 and 0 <= i,j < p.
std::int64_t residue_block_code(int p, int alpha, int i, int j);

// Colouring pair obtained by inverting residue_block_code: the vertex
// residue_block_code(p, alpha, i, j) gets first colour i and second colour j.
// The code is a bijection, so the pair is orthogonal by construction.
ColouringPair residue_block_pair(int p, int alpha);

// Vertex differences of Z_{p^2} that join two vertices sharing a colour in
// the first (resp. second) colouring of residue_block_pair(p, alpha).
// Each set has exactly p-1 elements.
struct ConflictSets {
    std::set<std::int64_t> first;
    std::set<std::int64_t> second;
};
ConflictSets conflict_sets(int p, int alpha);

// Orthogonal p-colour pair for a circulant on Z_{p^2} whose generating set
// has fewer than (p-1)/2 elements: scan alpha = 1..p-1 ascending and take the
// first whose conflict sets avoid the generators.  Output verified.
ColouringPair colour_circulant_small_generators(int p, const CirculantSpec& spec);

// Placement (i*p + j*alpha) mod p^2.  Requires gcd(alpha, p^2) = 1 and
// 0 <= i,j < p.
std::int64_t linear_code(int p, std::int64_t alpha, int i, int j);

// Orthogonal p-colour pair for a circulant on Z_{p^2} whose generating set
// has fewer than p elements, none a multiple of p: scan units of Z_{p^2}
// ascending and take the first alpha with x*alpha mod p^2 outside the
// generators for every x = 1..p-1.  Output verified.
ColouringPair colour_circulant_no_p_multiples(int p, const CirculantSpec& spec);

// Dispatcher for circulants on p^2 vertices: tries the multiple-free
// construction first, then the small-generating-set one; throws
// NoApplicableConstruction naming both unmet hypotheses if neither applies.
ColouringPair colour_circulant_prime_square(int p, const CirculantSpec& spec);

}  // namespace orthocolour
