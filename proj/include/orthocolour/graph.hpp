#pragma once

#include <set>
#include <utility>
#include <vector>

namespace orthocolour {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.  Edges are stored sorted
// lexicographically with u < v; loops are rejected and duplicates collapsed.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Connection set of a circulant graph on Z_n: non-empty generators in 1..n-1,
// closed under s -> n-s.  Validated by circulant().
struct CirculantSpec {
    int n = 0;
    std::set<int> generators;
};

Graph cycle(int n);                                   // n >= 3
Graph complete(int q);                                // q >= 1
Graph circulant(const CirculantSpec& spec);           // empty generator set allowed
Graph circulant(int n, const std::set<int>& generators);
Graph cartesian_product(const Graph& g, const Graph& h);  // vertex (a,b) -> a*|V(h)|+b
Graph complement(const Graph& g);
Graph hamming(int d, int q);  // d-fold Cartesian power of K_q, d >= 1, q >= 1

}  // namespace orthocolour
