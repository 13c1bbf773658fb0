#pragma once

// Simple undirected graphs over dense vertex ids 0..n-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kloc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

inline Edge normalized(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

/// Immutable simple undirected graph. Adjacency lists are sorted; the edge
/// list holds each edge once as (min, max), sorted lexicographically.
class Graph {
public:
    Graph() : Graph(1, {}) {}

    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        if (n == 0) throw GraphError("graph must have at least one vertex");
        edges_.reserve(edges.size());
        for (const auto& e : edges) {
            if (e.first >= n || e.second >= n)
                throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
            if (e.first == e.second) throw GraphError("self-loop " + to_string(e));
            edges_.push_back(normalized(e));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (const auto& [u, v] : edges_) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= size() || v >= size()) return false;
        const auto& nbrs = adjacency_[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    std::size_t max_degree() const noexcept {
        std::size_t d = 0;
        for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.size() == b.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Returns g without edge e. Connectivity of the result is not checked.
inline Graph delete_edge(const Graph& g, Edge e) {
    e = normalized(e);
    if (!g.has_edge(e.first, e.second)) throw GraphError("edge " + to_string(e) + " is not in the graph");
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - 1);
    for (const auto& f : g.edges())
        if (f != e) kept.push_back(f);
    return Graph(g.size(), kept);
}

/// BFS hop counts from a single source; unreachable vertices get `unreachable`.
template <typename Dist>
void bfs_distances(const Graph& g, Vertex source, std::span<Dist> out, Dist unreachable) {
    std::fill(out.begin(), out.end(), unreachable);
    std::deque<Vertex> queue{source};
    out[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (out[w] != unreachable) continue;
            out[w] = static_cast<Dist>(out[u] + 1);
            queue.push_back(w);
        }
    }
}

inline bool is_connected(const Graph& g) {
    std::vector<std::uint32_t> dist(g.size());
    bfs_distances<std::uint32_t>(g, 0, dist, UINT32_MAX);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == UINT32_MAX; });
}

inline bool is_tree(const Graph& g) { return g.edge_count() + 1 == g.size() && is_connected(g); }

/// True for P_n (n >= 1) under any labeling.
inline bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

inline bool is_complete(const Graph& g) { return g.edge_count() * 2 == g.size() * (g.size() - 1); }

/// An edge whose removal disconnects g.
inline bool is_bridge(const Graph& g, Edge e) { return !is_connected(delete_edge(g, e)); }

/// Partition of V(G) into maximal classes of pairwise twins, where x and y
/// are twins when N(x) - {y} = N(y) - {x}.
class TwinPartition {
public:
    explicit TwinPartition(const Graph& g) : class_of_(g.size()) {
        const std::size_t n = g.size();
        std::vector<Vertex> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto unite = [&](Vertex a, Vertex b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        };

        // Non-adjacent twins share N(v); adjacent twins share N[v].
        std::map<std::vector<Vertex>, Vertex> open_key, closed_key;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> open(g.neighbors(v).begin(), g.neighbors(v).end());
            std::vector<Vertex> closed = open;
            closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
            if (auto [it, fresh] = open_key.emplace(std::move(open), v); !fresh) unite(it->second, v);
            if (auto [it, fresh] = closed_key.emplace(std::move(closed), v); !fresh) unite(it->second, v);
        }

        std::map<Vertex, std::size_t> index_of_root;
        for (Vertex v = 0; v < n; ++v) {
            Vertex r = find(v);
            auto [it, fresh] = index_of_root.emplace(r, classes_.size());
            if (fresh) classes_.emplace_back();
            classes_[it->second].push_back(v);
            class_of_[v] = it->second;
        }
    }

    /// Classes ordered by smallest member; members ascending.
    const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
    std::size_t class_of(Vertex v) const { return class_of_.at(v); }
    bool are_twins(Vertex x, Vertex y) const { return x != y && class_of(x) == class_of(y); }

private:
    std::vector<std::vector<Vertex>> classes_;
    std::vector<std::size_t> class_of_;
};

inline TwinPartition twin_classes(const Graph& g) { return TwinPartition(g); }

/// Direct test of the twin condition, independent of TwinPartition.
inline bool twin_condition(const Graph& g, Vertex x, Vertex y) {
    if (x == y) return false;
    auto strip = [&](Vertex a, Vertex b) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(a))
            if (w != b) out.push_back(w);
        return out;
    };
    return strip(x, y) == strip(y, x);
}

}  // namespace kloc
