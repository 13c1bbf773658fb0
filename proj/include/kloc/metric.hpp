#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kloc/graph.hpp"

namespace kloc {

using Level = std::uint32_t;
using Hops = std::uint16_t;

inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

/// All-pairs hop counts computed by one BFS per vertex.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g) : n_(g.size()), hops_(g.size() * g.size()) {
        if (n_ >= kUnreachable) throw GraphError("graph too large for the distance matrix");
        for (Vertex v = 0; v < n_; ++v)
            bfs_distances<Hops>(g, v, std::span<Hops>(hops_.data() + v * n_, n_), kUnreachable);
    }

    std::size_t size() const noexcept { return n_; }
    Hops operator()(Vertex u, Vertex v) const { return hops_[u * n_ + v]; }

    /// Largest pairwise distance, or nullopt when the graph is disconnected.
    std::optional<std::uint32_t> diameter() const {
        Hops d = 0;
        for (Hops h : hops_) {
            if (h == kUnreachable) return std::nullopt;
            d = std::max(d, h);
        }
        return d;
    }

private:
    std::size_t n_;
    std::vector<Hops> hops_;
};

/// Distance matrix read through the k-truncation d_k(u,v) = min(d(u,v), k+1).
/// Copies share the underlying matrix, so switching levels is cheap.
class TruncatedMetric {
public:
    TruncatedMetric(const Graph& g, Level k)
        : TruncatedMetric(std::make_shared<const DistanceMatrix>(g), k) {}

    TruncatedMetric(std::shared_ptr<const DistanceMatrix> dist, Level k) : dist_(std::move(dist)), k_(k) {
        if (k_ < 1) throw std::invalid_argument("truncation level must be at least 1");
    }

    Level k() const noexcept { return k_; }
    std::size_t size() const noexcept { return dist_->size(); }
    const DistanceMatrix& distances() const noexcept { return *dist_; }

    /// Raw hop count; kUnreachable for vertices in different components.
    Hops hops(Vertex u, Vertex v) const { return (*dist_)(u, v); }

    std::uint32_t operator()(Vertex u, Vertex v) const {
        const Hops h = hops(u, v);
        return h == kUnreachable ? k_ + 1 : std::min<std::uint32_t>(h, k_ + 1);
    }

    bool within(Vertex u, Vertex v) const {
        const Hops h = hops(u, v);
        return h != kUnreachable && h <= k_;
    }

    std::optional<std::uint32_t> diameter() const { return dist_->diameter(); }

    TruncatedMetric at_level(Level k) const { return TruncatedMetric(dist_, k); }

    /// Closed k-neighborhood N^k[v], ascending.
    std::vector<Vertex> ball(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex u = 0; u < size(); ++u)
            if (within(u, v)) out.push_back(u);
        return out;
    }

private:
    std::shared_ptr<const DistanceMatrix> dist_;
    Level k_;
};

inline TruncatedMetric truncated_metric(const Graph& g, Level k) { return TruncatedMetric(g, k); }

inline std::vector<Vertex> k_ball(const Graph& g, Vertex v, Level k) {
    if (v >= g.size()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    std::vector<std::uint32_t> dist(g.size());
    bfs_distances<std::uint32_t>(g, v, dist, UINT32_MAX);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.size(); ++u)
        if (dist[u] <= k) out.push_back(u);
    return out;
}

}  // namespace kloc
