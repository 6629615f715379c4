#include "orthocolour/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orthocolour {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (n_ < 1) throw std::invalid_argument("graph: vertex count must be positive");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

const std::vector<int>& Graph::neighbours(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("graph: vertex out of range");
    if (u == v) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph complete(int q) {
    if (q < 1) throw std::invalid_argument("complete: need at least 1 vertex");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(q) * (q - 1) / 2);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) edges.push_back({u, v});
    return Graph(q, std::move(edges));
}

Graph circulant(const CirculantSpec& spec) {
    int n = spec.n;
    if (n < 1) throw std::invalid_argument("circulant: need at least 1 vertex");
    if (n <= 2 && !spec.generators.empty())
        throw std::invalid_argument(
            "circulant: orders 1 and 2 admit only the empty generating set");
    for (int s : spec.generators) {
        if (s < 1 || s >= n)
            throw std::invalid_argument("circulant: generator " + std::to_string(s) +
                                        " outside 1.." + std::to_string(n - 1));
        if (!spec.generators.count(n - s))
            throw std::invalid_argument("circulant: generator set not closed under negation");
    }
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int s : spec.generators) edges.push_back({v, (v + s) % n});
    return Graph(n, std::move(edges));
}

Graph circulant(int n, const std::set<int>& generators) {
    return circulant(CirculantSpec{n, generators});
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) * nh +
                  static_cast<size_t>(h.edge_count()) * ng);
    for (const auto& [a, b] : g.edges())
        for (int u = 0; u < nh; ++u) edges.push_back({a * nh + u, b * nh + u});
    for (int a = 0; a < ng; ++a)
        for (const auto& [u, v] : h.edges()) edges.push_back({a * nh + u, a * nh + v});
    return Graph(ng * nh, std::move(edges));
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph hamming(int d, int q) {
    if (d < 1) throw std::invalid_argument("hamming: need at least 1 dimension");
    if (q < 1) throw std::invalid_argument("hamming: alphabet must have at least 1 letter");
    Graph result = complete(q);
    for (int i = 1; i < d; ++i) result = cartesian_product(result, complete(q));
    return result;
}

}  // namespace orthocolour
