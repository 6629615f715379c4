#pragma once

#include <cstdint>

namespace orthocolour {

// Floor modulus: result lies in [0, m) for m > 0, regardless of the sign of a.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Largest r with r*r <= n.  Requires n >= 0.
std::int64_t isqrt_floor(std::int64_t n);

// Smallest r with r*r >= n.  Requires n >= 0.
int ceil_sqrt(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace orthocolour
