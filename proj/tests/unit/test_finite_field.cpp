#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "orthocolour/finite_field.hpp"

using namespace orthocolour;

namespace {

// Independent little polynomial arithmetic over Z_p, used only to cross-check
// the library's modulus choice and the divisibility invariant.
using Poly = std::vector<int>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Reduce by the monic modulus.
    int k = static_cast<int>(modulus.size()) - 1;
    for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int idx = d - k + i;
            prod[idx] = ((prod[idx] - c * modulus[i]) % p + p) % p;
        }
    }
    prod.resize(k);
    return prod;
}

// X^e mod modulus over Z_p.
Poly x_pow_mod(std::int64_t e, const Poly& modulus, int p) {
    int k = static_cast<int>(modulus.size()) - 1;
    Poly result(k, 0);
    result[0] = 1;  // 1
    Poly base(k, 0);
    if (k == 1) {
        // modulus is X: X == 0 in the quotient ring, matching the plain
        // residue convention only through the trivial case below.
        base[0] = 0;
    } else {
        base[1] = 1;  // X
    }
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, base, modulus, p);
        base = poly_mul_mod(base, base, modulus, p);
        e >>= 1;
    }
    return result;
}

// Degree <= 3 polynomials over Z_p are irreducible iff they have no roots.
bool rootfree(const Poly& poly, int p) {
    for (int x = 0; x < p; ++x) {
        std::int64_t val = 0, xp = 1;
        for (int c : poly) {
            val = (val + c * xp) % p;
            xp = (xp * x) % p;
        }
        if (val == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("canonical modulus for GF(9) is X^2+1") {
    auto f = FiniteField::make(3, 2);
    CHECK(f->characteristic() == 3);
    CHECK(f->degree() == 2);
    CHECK(f->order() == 9);
    CHECK(f->modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("modulus is the lexicographically first irreducible (low degree first)") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}, {7, 2}}) {
        auto f = FiniteField::make(p, k);
        Poly found;
        // Enumerate monic degree-k candidates in low-degree-first lexicographic
        // order: c0 is the most significant comparison position.
        std::int64_t total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (std::int64_t m = 0; m < total && found.empty(); ++m) {
            Poly cand(k + 1, 0);
            cand[k] = 1;
            std::int64_t rem = m, place = total / p;
            for (int i = 0; i < k; ++i) {
                cand[i] = static_cast<int>(rem / place);
                rem %= place;
                place = place == 1 ? 1 : place / p;
            }
            if (rootfree(cand, p)) found = cand;  // valid test for k <= 3
        }
        REQUIRE(!found.empty());
        CHECK(f->modulus() == found);
    }
}

TEST_CASE("degree-1 fields are plain residues with modulus X") {
    auto f = FiniteField::make(5, 1);
    CHECK(f->order() == 5);
    CHECK(f->modulus() == std::vector<int>{0, 1});
    CHECK((f->element(2) + f->element(4)).index() == 1);
    CHECK((f->element(2) * f->element(4)).index() == 3);
    CHECK((f->element(2) - f->element(4)).index() == 3);
}

TEST_CASE("make rejects bad parameters") {
    CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(2, 40), std::invalid_argument);  // too large
}

TEST_CASE("element construction and indexing") {
    auto f = FiniteField::make(3, 3);
    for (std::int64_t i = 0; i < f->order(); ++i) CHECK(f->element(i).index() == i);
    CHECK_THROWS_AS(f->element(-1), std::invalid_argument);
    CHECK_THROWS_AS(f->element(27), std::invalid_argument);
    CHECK(f->from_coefficients({1, 2, 0}).index() == 1 + 2 * 3);
    CHECK_THROWS_AS(f->from_coefficients({1, 2}), std::invalid_argument);     // wrong length
    CHECK_THROWS_AS(f->from_coefficients({1, 3, 0}), std::invalid_argument);  // out of range
    CHECK(f->zero().is_zero());
    CHECK(f->one().index() == 1);
}

TEST_CASE("GF(9) multiplication: X*X = -1") {
    auto f = FiniteField::make(3, 2);
    FieldElement x = f->element(3);  // X
    CHECK((x * x).index() == 2);     // 2 == -1 mod 3
    FieldElement x1 = f->element(4);  // X+1
    CHECK((x1 * x1).index() == 6);    // (X+1)^2 = 2X
}

TEST_CASE("inverses and powers") {
    auto f25 = FiniteField::make(5, 2);
    for (std::int64_t i = 1; i < f25->order(); ++i) {
        FieldElement a = f25->element(i);
        CHECK((a * a.inverse()) == f25->one());
    }
    CHECK_THROWS_AS(f25->zero().inverse(), std::invalid_argument);

    auto f49 = FiniteField::make(7, 2);
    for (std::int64_t i = 1; i < f49->order(); ++i)
        CHECK(f49->element(i).pow(48) == f49->one());
    CHECK(f49->element(3).pow(0) == f49->one());
    CHECK(f49->zero().pow(5).is_zero());
    // Negative exponents go through the inverse.
    FieldElement a = f49->element(10);
    CHECK(a.pow(-1) == a.inverse());
    CHECK(a.pow(-3) == a.inverse().pow(3));
}

TEST_CASE("primitive elements") {
    CHECK(FiniteField::make(3, 1)->primitive_element().index() == 2);
    CHECK(FiniteField::make(5, 1)->primitive_element().index() == 2);
    CHECK(FiniteField::make(2, 1)->primitive_element().index() == 1);
    // GF(9): 1, 2 and X have orders 1, 2, 4; X+1 (index 4) is first with order 8.
    auto f9 = FiniteField::make(3, 2);
    CHECK(f9->primitive_element().index() == 4);

    // The primitive element really has full order.
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 1}, {7, 1}, {2, 4}, {3, 3}}) {
        auto f = FiniteField::make(p, k);
        FieldElement g = f->primitive_element();
        std::set<std::int64_t> orbit;
        FieldElement cur = f->one();
        for (std::int64_t i = 0; i < f->order() - 1; ++i) {
            orbit.insert(cur.index());
            cur = cur * g;
        }
        CHECK(static_cast<std::int64_t>(orbit.size()) == f->order() - 1);
        CHECK(cur == f->one());
    }
}

TEST_CASE("quadratic residues") {
    auto f5 = FiniteField::make(5, 1);
    std::set<std::int64_t> got;
    for (const auto& e : f5->quadratic_residues()) got.insert(e.index());
    CHECK(got == std::set<std::int64_t>{1, 4});

    auto f13 = FiniteField::make(13, 1);
    got.clear();
    for (const auto& e : f13->quadratic_residues()) got.insert(e.index());
    CHECK(got == std::set<std::int64_t>{1, 3, 4, 9, 10, 12});

    // GF(9): even powers of the primitive element X+1.
    auto f9 = FiniteField::make(3, 2);
    got.clear();
    for (const auto& e : f9->quadratic_residues()) got.insert(e.index());
    CHECK(got == std::set<std::int64_t>{1, 2, 3, 6});
    CHECK(got.size() == (9 - 1) / 2);

    CHECK_THROWS_AS(FiniteField::make(2, 2)->quadratic_residues(), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        auto f = FiniteField::make(p, k);
        std::int64_t q = f->order();
        std::vector<FieldElement> el;
        el.reserve(q);
        for (std::int64_t i = 0; i < q; ++i) el.push_back(f->element(i));
        for (std::int64_t a = 0; a < q; ++a) {
            CHECK((el[a] + f->zero()) == el[a]);
            CHECK((el[a] * f->one()) == el[a]);
            CHECK((el[a] - el[a]).is_zero());
            for (std::int64_t b = 0; b < q; ++b) {
                CHECK((el[a] + el[b]) == (el[b] + el[a]));
                CHECK((el[a] * el[b]) == (el[b] * el[a]));
                for (std::int64_t c = 0; c < q; ++c) {
                    CHECK(((el[a] + el[b]) + el[c]) == (el[a] + (el[b] + el[c])));
                    CHECK(((el[a] * el[b]) * el[c]) == (el[a] * (el[b] * el[c])));
                    CHECK((el[a] * (el[b] + el[c])) == (el[a] * el[b] + el[a] * el[c]));
                }
            }
        }
    }
}

TEST_CASE("modulus divides X^(p^k) - X") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4}, {3, 3}, {7, 2}, {3, 4}}) {
        auto f = FiniteField::make(p, k);
        if (k == 1) continue;  // modulus X is metadata for the residue convention
        Poly xq = x_pow_mod(f->order(), f->modulus(), p);
        Poly x(static_cast<size_t>(k), 0);
        x[1] = 1;
        CHECK(xq == x);
    }
}

TEST_CASE("elements from different field instances interoperate by value") {
    auto f1 = FiniteField::make(3, 2);
    auto f2 = FiniteField::make(3, 2);
    CHECK(*f1 == *f2);
    CHECK((f1->element(4) * f2->element(4)).index() == 6);
    auto g = FiniteField::make(5, 1);
    CHECK_THROWS_AS(f1->element(1) + g->element(1), std::invalid_argument);
}
