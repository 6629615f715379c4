#pragma once

#include "orthocolour/colouring.hpp"

namespace orthocolour {

// Orthogonal pair on the cycle C_n from the two wrap-around formulas
// c1[i] = i mod N, c2[i] = (i + floor(i/N)) mod N with N = ceil(sqrt(n)).
// Requires n > 4, N not dividing n-1, and N not dividing
// n-1 + floor((n-1)/N); the output is verified before returning.
ColouringPair cycle_base_pair(int n);

// Variant for the cases the base formulas miss: every vertex except the last
// keeps the base colours and vertex n-1 is re-coloured as if it sat one (or
// two) positions further along.  Requires n > 16 and one of the divisibility
// cases to hold.
ColouringPair cycle_patched_pair(int n);

// Fixed verified tables for the small exceptional orders 3, 4, 6, 7, 8, 11,
// 13, 14 where the formula pairs fail.
ColouringPair cycle_small_pair(int n);

// Dispatcher covering every n >= 3: small table, then base formulas, then the
// patched variant.  Uses ceil(sqrt(n)) colours for n > 4 and 3 colours for
// n in {3,4}.
ColouringPair orthogonal_cycle_pair(int n);

// Family of mutually orthogonal proper p-colourings of C_n, available when
// p = ceil(sqrt(n)) is prime and n > 4.  Candidate k is
// c_k[i] = (i + k*floor(i/p)) mod p for k = 0..p-1; candidates that are not
// proper on C_n are dropped.  At least p-2 members survive.
OrthogonalSet orthogonal_cycle_family(int n);

}  // namespace orthocolour
