#pragma once

#include <utility>
#include <vector>

#include "orthocolour/colouring.hpp"
#include "orthocolour/graph.hpp"

namespace orthocolour {

// Latin square of a given order: cells[i][j] in 0..order-1, every row and
// every column a permutation.
struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> cells;
};

// Throws std::invalid_argument unless the square is Latin.
void validate_latin(const LatinSquare& l);

// True iff superimposing the two squares yields every ordered pair once.
// Requires equal orders.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

using LatinPair = std::pair<LatinSquare, LatinSquare>;

// Pair of orthogonal Latin squares of order q.  Prime powers use the field
// pair (i+j, lambda*i+j) with lambda the smallest element outside {0,1};
// other admissible orders are composed factor-by-factor with the Kronecker
// product.  Orders 1, 2, 6 (no such pair exists) and orders = 2 mod 4 beyond
// 6 (outside this construction) are rejected with distinct errors.
LatinPair orthogonal_latin_pair(int q);

// Assignment of a distinct grid position (i,j), 0 <= i,j < m, to every vertex
// of an m^2-vertex graph.  Only bijectivity is required.
struct PairLabelling {
    int m = 0;
    std::vector<std::pair<int, int>> labels;
};

void validate_labelling(const PairLabelling& l);

// Labelling of H(2,q): vertex a*q+b gets (a,b).
PairLabelling natural_pair_labelling(int q);

// Labelling read off an orthogonal pair that uses m colours on m^2 vertices:
// vertex v gets (a.colours[v], b.colours[v]).
PairLabelling labelling_from_pair(const Colouring& a, const Colouring& b);

// Product composition: given a verified orthogonal pair f on g with n colours
// and n^2 = |V(g)| vertices, and a pair labelling of h with m <= n, produces
// a verified orthogonal pair with n*m colours on the Cartesian product g x h.
// Vertex (k,u) of the product gets
//   first  colour  (f1[k] + j) mod n + i*n
//   second colour  (f2[k] + i) mod n + j*n      where (i,j) = labels[u].
ColouringPair compose_product(const Graph& g, const ColouringPair& f,
                              const Graph& h, const PairLabelling& labels);

// Orthogonal q-colour pair on H(2,q) from two orthogonal Latin squares:
// vertex a*q+b gets colours (l1[a][b], l2[a][b]).  Output verified.
ColouringPair h2_colouring_from_latin(const LatinSquare& l1, const LatinSquare& l2);

// Orthogonal pair on H(d,q) with q^{d/2} colours for even d >= 2 and
// admissible q, by composing the H(2,q) pair with itself along the product
// structure.  Output verified.
ColouringPair hamming_even_pair(int d, int q);

// Orthogonal 4-colour pair on the 4-cube H(4,2) built from coordinate
// parities: with vertex bits x1..x4 (x1 most significant), the colours are
// (x1^x3, x2^x4) and (x2^x3, x1^x2^x4) read as two-bit numbers.  Each edge
// flips one bit of every colour, and the four parity functionals are linearly
// independent, so the sixteen colour pairs are all distinct.  Verified on
// every call.
ColouringPair four_cube_pair();

// Orthogonal pair on H(4d,2) with 4^d colours, by composing the 4-cube pair
// with itself d-1 times; the 4-cube pair doubles as the pair labelling of
// each new factor.  Output verified.
ColouringPair four_cube_power_pair(int d);

}  // namespace orthocolour
