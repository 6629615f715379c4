#include "orthocolour/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace orthocolour {

std::int64_t isqrt_floor(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative input");
    if (n < 2) return n;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    // std::sqrt can be off by one in either direction near perfect squares.
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int ceil_sqrt(std::int64_t n) {
    std::int64_t r = isqrt_floor(n);
    if (r * r < n) ++r;
    return static_cast<int>(r);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace orthocolour
