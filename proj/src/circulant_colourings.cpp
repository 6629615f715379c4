#include "orthocolour/circulant_colourings.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "orthocolour/errors.hpp"
#include "orthocolour/numeric.hpp"

namespace orthocolour {

namespace {

void require_prime_square(int p, const CirculantSpec& spec, const char* origin) {
    if (!is_prime(p))
        throw std::invalid_argument(std::string(origin) + ": modulus root must be prime");
    if (static_cast<std::int64_t>(p) * p != spec.n)
        throw std::invalid_argument(std::string(origin) + ": circulant order is not the square of " +
                                    std::to_string(p));
}

ColouringPair verified_on(const CirculantSpec& spec, ColouringPair pair, const char* origin) {
    std::vector<Colouring> both{pair.first, pair.second};
    if (auto v = find_violation(circulant(spec), both))
        throw VerificationFailure(std::string(origin) + ": " + v->message);
    return pair;
}

}  // namespace

std::int64_t residue_block_code(int p, int alpha, int i, int j) {
    if (p < 2) throw std::invalid_argument("residue block code: modulus root must be >= 2");
    if (alpha < 1 || alpha >= p)
        throw std::invalid_argument("residue block code: alpha outside 1..p-1");
    if (i < 0 || i >= p || j < 0 || j >= p)
        throw std::invalid_argument("residue block code: colour index outside 0..p-1");
    std::int64_t n = static_cast<std::int64_t>(p) * p;
    std::int64_t residue = floor_mod(static_cast<std::int64_t>(alpha) * (j - i), p);
    return floor_mod(residue + static_cast<std::int64_t>(p) * (2 * i - j), n);
}

ColouringPair residue_block_pair(int p, int alpha) {
    int n = p * p;
    Colouring c1{p, std::vector<int>(n)}, c2{p, std::vector<int>(n)};
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            auto v = static_cast<size_t>(residue_block_code(p, alpha, i, j));
            c1.colours[v] = i;
            c2.colours[v] = j;
        }
    return {std::move(c1), std::move(c2)};
}

ConflictSets conflict_sets(int p, int alpha) {
    if (alpha < 1 || alpha >= p)
        throw std::invalid_argument("conflict sets: alpha outside 1..p-1");
    std::int64_t n = static_cast<std::int64_t>(p) * p;
    ConflictSets cs;
    for (int x = 1; x < p; ++x) {
        std::int64_t ax = static_cast<std::int64_t>(alpha) * x;
        cs.first.insert(floor_mod(floor_mod(ax, p) - static_cast<std::int64_t>(p) * x, n));
        cs.second.insert(floor_mod(floor_mod(-ax, p) + 2 * static_cast<std::int64_t>(p) * x, n));
    }
    return cs;
}

ColouringPair colour_circulant_small_generators(int p, const CirculantSpec& spec) {
    require_prime_square(p, spec, "small-set circulant colouring");
    if (2 * static_cast<int>(spec.generators.size()) >= p - 1)
        throw std::invalid_argument(
            "small-set circulant colouring: generating set must have fewer than (p-1)/2 "
            "elements, got " +
            std::to_string(spec.generators.size()));
    for (int alpha = 1; alpha < p; ++alpha) {
        ConflictSets cs = conflict_sets(p, alpha);
        bool clear = true;
        for (int s : spec.generators)
            if (cs.first.count(s) || cs.second.count(s)) {
                clear = false;
                break;
            }
        if (clear)
            return verified_on(spec, residue_block_pair(p, alpha),
                               "small-set circulant colouring");
    }
    // With 2|S| < p-1 each generator rules out at most two alpha values, so
    // the scan cannot exhaust.
    throw std::logic_error("small-set circulant colouring: no admissible alpha found");
}

std::int64_t linear_code(int p, std::int64_t alpha, int i, int j) {
    if (p < 2) throw std::invalid_argument("linear code: modulus root must be >= 2");
    std::int64_t n = static_cast<std::int64_t>(p) * p;
    if (std::gcd(floor_mod(alpha, n), n) != 1)
        throw std::invalid_argument("linear code: alpha must be a unit modulo p^2");
    if (i < 0 || i >= p || j < 0 || j >= p)
        throw std::invalid_argument("linear code: colour index outside 0..p-1");
    return floor_mod(static_cast<std::int64_t>(i) * p + static_cast<std::int64_t>(j) * alpha, n);
}

ColouringPair colour_circulant_no_p_multiples(int p, const CirculantSpec& spec) {
    require_prime_square(p, spec, "multiple-free circulant colouring");
    if (static_cast<int>(spec.generators.size()) >= p)
        throw std::invalid_argument(
            "multiple-free circulant colouring: generating set must have fewer than p "
            "elements, got " +
            std::to_string(spec.generators.size()));
    std::int64_t n = static_cast<std::int64_t>(p) * p;
    for (int s : spec.generators)
        if (s % p == 0)
            throw std::invalid_argument("multiple-free circulant colouring: generator " +
                                        std::to_string(s) + " is a multiple of " +
                                        std::to_string(p));
    for (std::int64_t alpha = 1; alpha < n; ++alpha) {
        if (alpha % p == 0) continue;  // not a unit
        bool clear = true;
        for (int x = 1; x < p && clear; ++x)
            if (spec.generators.count(static_cast<int>(floor_mod(alpha * x, n)))) clear = false;
        if (!clear) continue;
        Colouring c1{p, std::vector<int>(static_cast<size_t>(n))};
        Colouring c2{p, std::vector<int>(static_cast<size_t>(n))};
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                auto v = static_cast<size_t>(linear_code(p, alpha, i, j));
                c1.colours[v] = i;
                c2.colours[v] = j;
            }
        return verified_on(spec, {std::move(c1), std::move(c2)},
                           "multiple-free circulant colouring");
    }
    // At most |S|(p-1) < p^2 - p units are ever excluded, so the scan cannot
    // exhaust.
    throw std::logic_error("multiple-free circulant colouring: no admissible unit found");
}

ColouringPair colour_circulant_prime_square(int p, const CirculantSpec& spec) {
    require_prime_square(p, spec, "circulant colouring");
    bool has_multiple = false;
    for (int s : spec.generators)
        if (s % p == 0) has_multiple = true;
    auto size = static_cast<int>(spec.generators.size());
    if (!has_multiple && size < p) return colour_circulant_no_p_multiples(p, spec);
    if (2 * size < p - 1) return colour_circulant_small_generators(p, spec);
    throw NoApplicableConstruction(
        "circulant colouring: generating set " +
        std::string(has_multiple ? "contains a multiple of " + std::to_string(p)
                                 : "has " + std::to_string(size) + " elements, not fewer than " +
                                       std::to_string(p)) +
        ", and its " + std::to_string(size) + " elements are not fewer than (" +
        std::to_string(p) + "-1)/2");
}

}  // namespace orthocolour
