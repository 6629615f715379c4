#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "orthocolour/graph.hpp"
#include "orthocolour/numeric.hpp"

using namespace orthocolour;

TEST_CASE("graph constructor canonicalizes and validates") {
    Graph g(3, {{2, 0}, {0, 1}, {1, 2}, {0, 2}});  // unordered + duplicate
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 0));

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);   // loop
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);  // negative
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);         // empty vertex set
}

TEST_CASE("cycle basics") {
    Graph c9 = cycle(9);
    CHECK(c9.vertex_count() == 9);
    CHECK(c9.edge_count() == 9);
    for (int v = 0; v < 9; ++v) CHECK(c9.degree(v) == 2);
    CHECK(c9.has_edge(0, 8));
    CHECK(c9.has_edge(3, 4));
    CHECK_FALSE(c9.has_edge(0, 2));

    CHECK(cycle(3) == complete(3));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("complete graphs") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete(1).vertex_count() == 1);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("circulant adjacency matches the difference rule") {
    std::set<int> s{1, 2, 7, 8};
    Graph g = circulant(9, s);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(g.degree(v) == 4);
    // Independent adjacency check straight from the definition.
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) {
            bool expect = s.count((v - u) % 9) > 0 || s.count((9 - (v - u) % 9) % 9) > 0;
            CHECK(g.has_edge(u, v) == expect);
        }
}

TEST_CASE("circulant validates its generating set") {
    CHECK_THROWS_AS(circulant(9, std::set<int>{1}), std::invalid_argument);      // not inverse-closed
    CHECK_THROWS_AS(circulant(9, std::set<int>{0, 1, 8}), std::invalid_argument);  // zero
    CHECK_THROWS_AS(circulant(9, std::set<int>{1, 8, 9}), std::invalid_argument);  // out of range
    CHECK(circulant(9, std::set<int>{}).edge_count() == 0);  // edgeless is fine
    // Self-paired generator n/2 for even n.
    CHECK(circulant(8, std::set<int>{4}).edge_count() == 4);
    // Orders 1 and 2 only carry the empty generating set.
    CHECK(circulant(1, std::set<int>{}).edge_count() == 0);
    CHECK(circulant(2, std::set<int>{}).edge_count() == 0);
    CHECK_THROWS_AS(circulant(2, std::set<int>{1}), std::invalid_argument);
}

TEST_CASE("circulant neighbourhoods exhaustively for small orders") {
    for (int n : {5, 12, 36, 49, 100}) {
        std::set<int> s;
        for (int g : {1, 3, 5}) {
            if (g < n) {
                s.insert(g);
                s.insert(n - g);
            }
        }
        Graph g = circulant(n, s);
        for (int u = 0; u < n; ++u) {
            std::set<int> expect;
            for (int d : s) expect.insert((u + d) % n);
            std::set<int> got(g.neighbours(u).begin(), g.neighbours(u).end());
            CHECK(got == expect);
        }
    }
}

TEST_CASE("cartesian product shape and edge rule") {
    Graph p1 = cartesian_product(complete(3), complete(3));
    CHECK(p1.vertex_count() == 9);
    CHECK(p1.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(p1.degree(v) == 4);

    Graph p2 = cartesian_product(cycle(4), complete(2));
    CHECK(p2.vertex_count() == 8);
    CHECK(p2.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(p2.degree(v) == 3);
    // vertex (a,b) -> a*2+b: copy edges within a fibre, fibre edges across.
    CHECK(p2.has_edge(0, 1));   // (0,0)-(0,1): K2 edge
    CHECK(p2.has_edge(0, 2));   // (0,0)-(1,0): C4 edge
    CHECK_FALSE(p2.has_edge(0, 3));  // (0,0)-(1,1): neither
    CHECK(p2.has_edge(0, 6));   // (0,0)-(3,0): C4 wrap edge
}

TEST_CASE("degree sum equals twice the edge count") {
    for (const Graph& g :
         {cycle(17), complete(6), hamming(3, 3), cartesian_product(cycle(5), complete(3))}) {
        int sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("complement of the 5-cycle is again a 5-cycle") {
    Graph c = complement(cycle(5));
    CHECK(c.vertex_count() == 5);
    CHECK(c.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
    // Connected 2-regular on 5 vertices is exactly C5.
    std::vector<bool> seen(5, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : c.neighbours(u))
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    CHECK(reached == 5);
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(12345);
    for (int round = 0; round < 20; ++round) {
        int n = 2 + static_cast<int>(rng() % 12);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.push_back({u, v});
        Graph g(n, edges);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("hamming graphs") {
    Graph h23 = hamming(2, 3);
    CHECK(h23.vertex_count() == 9);
    CHECK(h23.edge_count() == 18);

    Graph h42 = hamming(4, 2);
    CHECK(h42.vertex_count() == 16);
    CHECK(h42.edge_count() == 32);

    CHECK(hamming(1, 5) == complete(5));

    // d(q-1)-regular.
    for (auto [d, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
        Graph h = hamming(d, q);
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(h.degree(v) == d * (q - 1));
    }

    // Left-fold structure: splitting off the last factor reproduces the graph.
    CHECK(hamming(3, 3) == cartesian_product(hamming(2, 3), complete(3)));
    CHECK(hamming(4, 2) == cartesian_product(hamming(2, 2), hamming(2, 2)));

    // Adjacency iff base-q strings differ in exactly one digit.
    Graph h32 = hamming(3, 2);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
            int x = u ^ v;
            bool one_digit = x == 1 || x == 2 || x == 4;
            CHECK(h32.has_edge(u, v) == one_digit);
        }

    CHECK_THROWS_AS(hamming(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(hamming(2, 0), std::invalid_argument);
    CHECK(hamming(2, 1) == complete(1));  // one-letter alphabet: a single word
}

TEST_CASE("integer square roots") {
    CHECK(isqrt_floor(0) == 0);
    CHECK(isqrt_floor(1) == 1);
    CHECK(isqrt_floor(99) == 9);
    CHECK(isqrt_floor(100) == 10);
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(2) == 2);
    CHECK(ceil_sqrt(9) == 3);
    CHECK(ceil_sqrt(10) == 4);
    // Brute-force cross-check over the full supported test range.
    for (std::int64_t n = 1; n <= 1'000'000; ++n) {
        std::int64_t r = isqrt_floor(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("primality by trial division") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(169));
    CHECK(is_prime(9973));
}
