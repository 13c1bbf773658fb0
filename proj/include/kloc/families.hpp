#pragma once

// Named graphs and constructions, and closed-form values of dim_k and
// gamma_L^k on the families where they are known.
//
// Vertex labelling, per generator:
//   path(n)                 0-1-...-(n-1)
//   cycle(n)                path(n) plus (n-1,0)
//   complete(n)             0..n-1
//   complete_multipartite   parts laid out consecutively, first part first
//   star(n)                 K_{1,n-1}, centre 0
//   join / disjoint_union   A keeps its ids, B is shifted by |A|
//   complement(A)           same ids as A
//   spider(legs, len)       centre 0; leg j occupies 1+j*len .. (j+1)*len, centre outward
//   remark_tree(x, a, k)    spine v_i = i (i < x); then, per spine vertex, a-1 legs of
//                           length k+1 followed by one leg of length k, centre outward
//   fig2(a)                 u = 0, v = 1, designated edge uv; gadget i occupies
//                           2+5i.. as p_i, t_i, x_i, y_i, z_i with paths u-p_i-t_i-v,
//                           the 4-cycle p_i-x_i-z_i-y_i and the edge z_i-u
//   petersen()              outer cycle u_1..u_5 = 0..4, inner w_i = 4+i,
//                           inner cycle w_1 w_3 w_5 w_2 w_4, spokes u_i w_i
//   caterpillar(counts)     spine 0..L-1, then the leaves of each spine vertex in order
//   prufer_tree(seq)        standard Pruefer decoding on 0..|seq|+1

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kloc/graph.hpp"
#include "kloc/metric.hpp"

namespace kloc {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
    if (!ok) throw FamilyError(what);
}
}  // namespace detail

inline Graph path(std::size_t n) {
    detail::require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    detail::require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    detail::require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    detail::require(parts.size() >= 2, "complete multipartite graph needs at least 2 parts");
    detail::require(std::all_of(parts.begin(), parts.end(), [](auto p) { return p >= 1; }),
                    "every part needs at least one vertex");
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
    std::vector<Edge> e;
    for (Vertex i = 0; i < part_of.size(); ++i)
        for (Vertex j = i + 1; j < part_of.size(); ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return Graph(part_of.size(), e);
}

inline Graph star(std::size_t n) {
    detail::require(n >= 2, "star needs n >= 2");
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    const auto shift = static_cast<Vertex>(a.size());
    for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
    return Graph(a.size() + b.size(), e);
}

inline Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    const auto shift = static_cast<Vertex>(a.size());
    for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = 0; v < b.size(); ++v) e.emplace_back(u, v + shift);
    return Graph(a.size() + b.size(), e);
}

inline Graph complement(const Graph& a) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = u + 1; v < a.size(); ++v)
            if (!a.has_edge(u, v)) e.emplace_back(u, v);
    return Graph(a.size(), e);
}

namespace detail {
/// Appends a path of `length` new vertices hanging from `root`.
inline void add_leg(std::vector<Edge>& edges, Vertex& next, Vertex root, std::size_t length) {
    Vertex prev = root;
    for (std::size_t i = 0; i < length; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
}
}  // namespace detail

/// K_{1,legs} with every edge subdivided into a path of `leg_length` edges.
inline Graph spider(std::size_t legs, std::size_t leg_length) {
    detail::require(legs >= 3, "spider needs at least 3 legs");
    detail::require(leg_length >= 1, "spider legs need length >= 1");
    std::vector<Edge> e;
    Vertex next = 1;
    for (std::size_t j = 0; j < legs; ++j) detail::add_leg(e, next, 0, leg_length);
    return Graph(next, e);
}

/// Tree with gamma_k = x*alpha = dim_k + 1: a spine of x exterior major
/// vertices, each carrying alpha-1 legs of length k+1 and one leg of length k.
inline Graph remark_tree(std::size_t x, std::size_t alpha, Level k) {
    detail::require(x >= 1, "remark_tree needs x >= 1");
    detail::require(alpha >= 3, "remark_tree needs alpha >= 3");
    detail::require(k >= 1, "remark_tree needs k >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < x; ++i) e.emplace_back(i, i + 1);
    auto next = static_cast<Vertex>(x);
    for (Vertex i = 0; i < x; ++i) {
        for (std::size_t j = 0; j + 1 < alpha; ++j) detail::add_leg(e, next, i, k + 1);
        detail::add_leg(e, next, i, k);
    }
    return Graph(next, e);
}

struct Fig2Graph {
    Graph graph;
    Edge designated;  // the edge uv whose deletion drops dim_k from 2a to a+1
};

inline Fig2Graph fig2(std::size_t a) {
    detail::require(a >= 3, "fig2 needs a >= 3");
    constexpr Vertex u = 0, v = 1;
    std::vector<Edge> e{{u, v}};
    for (Vertex i = 0; i < a; ++i) {
        const Vertex p = 2 + 5 * i, t = p + 1, x = p + 2, y = p + 3, z = p + 4;
        e.insert(e.end(), {{u, p}, {p, t}, {t, v}, {p, x}, {p, y}, {x, z}, {y, z}, {z, u}});
    }
    return {Graph(2 + 5 * a, e), {u, v}};
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // u_i u_{i+1}
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // w_i w_{i+2}
        e.emplace_back(i, 5 + i);                // u_i w_i
    }
    return Graph(10, e);
}

/// Spine path with leaf_counts[i] pendant leaves on spine vertex i.
inline Graph caterpillar(const std::vector<std::size_t>& leaf_counts) {
    detail::require(!leaf_counts.empty(), "caterpillar needs a nonempty spine");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < leaf_counts.size(); ++i) e.emplace_back(i, i + 1);
    auto next = static_cast<Vertex>(leaf_counts.size());
    for (Vertex i = 0; i < leaf_counts.size(); ++i)
        for (std::size_t j = 0; j < leaf_counts[i]; ++j) e.emplace_back(i, next++);
    return Graph(next, e);
}

/// Decodes a Pruefer sequence into the labelled tree on |seq|+2 vertices.
inline Graph prufer_tree(const std::vector<Vertex>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (Vertex s : seq) {
        detail::require(s < n, "Pruefer entry " + std::to_string(s) + " out of range 0.." + std::to_string(n - 1));
        ++degree[s];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> e;
    for (Vertex s : seq) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        e.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.push(s);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    e.emplace_back(a, leaves.top());
    return Graph(n, e);
}

/// G(n, p) resampled until connected. The raw engine output is used directly
/// so the corpus is identical across standard libraries.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    detail::require(n >= 1, "random graph needs n >= 1");
    auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
    for (;;) {
        std::vector<Edge> e;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (coin()) e.emplace_back(i, j);
        Graph g(n, e);
        if (is_connected(g)) return g;
    }
}

// ---------------------------------------------------------------------------
// Family specifications

struct PathSpec { std::size_t n; };
struct CycleSpec { std::size_t n; };
struct CompleteSpec { std::size_t n; };
struct MultipartiteSpec { std::vector<std::size_t> parts; };
struct StarSpec { std::size_t n; };
struct JoinSpec { Graph a, b; };
struct UnionSpec { Graph a, b; };
struct ComplementSpec { Graph a; };
struct SpiderSpec { std::size_t legs, leg_length; };
struct RemarkTreeSpec { std::size_t x, alpha; Level k; };
struct Fig2Spec { std::size_t a; };
struct PetersenSpec {};
struct CaterpillarSpec { std::vector<std::size_t> leaf_counts; };
struct PruferSpec { std::vector<Vertex> sequence; };

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteSpec, MultipartiteSpec, StarSpec, JoinSpec, UnionSpec,
                                ComplementSpec, SpiderSpec, RemarkTreeSpec, Fig2Spec, PetersenSpec, CaterpillarSpec,
                                PruferSpec>;

struct FamilyGraph {
    Graph graph;
    std::optional<Edge> designated_edge;
};

inline FamilyGraph generate(const FamilySpec& spec) {
    struct Visitor {
        FamilyGraph operator()(const PathSpec& s) const {
            detail::require(s.n >= 2, "path needs n >= 2");
            return {path(s.n), {}};
        }
        FamilyGraph operator()(const CycleSpec& s) const { return {cycle(s.n), {}}; }
        FamilyGraph operator()(const CompleteSpec& s) const { return {complete(s.n), {}}; }
        FamilyGraph operator()(const MultipartiteSpec& s) const { return {complete_multipartite(s.parts), {}}; }
        FamilyGraph operator()(const StarSpec& s) const { return {star(s.n), {}}; }
        FamilyGraph operator()(const JoinSpec& s) const { return {join(s.a, s.b), {}}; }
        FamilyGraph operator()(const UnionSpec& s) const { return {disjoint_union(s.a, s.b), {}}; }
        FamilyGraph operator()(const ComplementSpec& s) const { return {complement(s.a), {}}; }
        FamilyGraph operator()(const SpiderSpec& s) const { return {spider(s.legs, s.leg_length), {}}; }
        FamilyGraph operator()(const RemarkTreeSpec& s) const { return {remark_tree(s.x, s.alpha, s.k), {}}; }
        FamilyGraph operator()(const Fig2Spec& s) const {
            auto f = fig2(s.a);
            return {std::move(f.graph), f.designated};
        }
        FamilyGraph operator()(const PetersenSpec&) const { return {petersen(), {}}; }
        FamilyGraph operator()(const CaterpillarSpec& s) const { return {caterpillar(s.leaf_counts), {}}; }
        FamilyGraph operator()(const PruferSpec& s) const { return {prufer_tree(s.sequence), {}}; }
    };
    return std::visit(Visitor{}, spec);
}

// ---------------------------------------------------------------------------
// Closed-form values

namespace detail {

/// dim_k(P_n) = dim_k(C_n) for n >= 3k+4, dispatched on n mod (3k+2).
/// The middle residue range can be empty (k = 1).
inline std::size_t long_path_cycle_dim(std::size_t n, Level k) {
    const std::size_t period = 3 * std::size_t{k} + 2;
    const std::size_t r = n % period;
    const std::size_t middle_end = (3 * std::size_t{k} + 6) / 2 - 1;  // ceil((3k+5)/2) - 1
    if (r >= k + 3 && r <= middle_end) return (2 * n + 4 * k - 1) / period;
    return (2 * n + 3 * k - 1) / period;
}

}  // namespace detail

inline std::size_t dim_k_path(std::size_t n, Level k) {
    detail::require(n >= 2, "dim_k_path needs n >= 2");
    detail::require(k >= 1, "k must be at least 1");
    if (n <= k + 2) return 1;
    if (n <= 3 * std::size_t{k} + 3) return 2;
    return detail::long_path_cycle_dim(n, k);
}

inline std::size_t dim_k_cycle(std::size_t n, Level k) {
    detail::require(n >= 3, "dim_k_cycle needs n >= 3");
    detail::require(k >= 1, "k must be at least 1");
    if (n <= 3 * std::size_t{k} + 3) return 2;
    return detail::long_path_cycle_dim(n, k);
}

inline std::size_t gammaL_k_path(std::size_t n, Level k) {
    const std::size_t dim = dim_k_path(n, k);
    const std::size_t r = n % (3 * std::size_t{k} + 2);
    return dim + ((r == 1 || r == k + 2) ? 1 : 0);
}

inline std::size_t gammaL_k_cycle(std::size_t n, Level k) {
    const std::size_t dim = dim_k_cycle(n, k);
    const std::size_t r = n % (3 * std::size_t{k} + 2);
    const bool plus_one = r == 1 || (n >= 3 * std::size_t{k} + 4 && r == k + 2);
    return dim + (plus_one ? 1 : 0);
}

namespace detail {
inline void check_parts(const std::vector<std::size_t>& parts) {
    require(parts.size() >= 2, "complete multipartite formulas need at least 2 parts");
    std::size_t n = 0;
    for (auto p : parts) {
        require(p >= 1, "every part needs at least one vertex");
        n += p;
    }
    require(n >= 3, "complete multipartite formulas need n >= 3");
}
}  // namespace detail

/// Metric dimension of K_{a_1,...,a_m}; with s singleton parts it is n-m
/// when s = 0 and n-m+s-1 otherwise.
inline std::size_t dim_multipartite(const std::vector<std::size_t>& parts) {
    detail::check_parts(parts);
    std::size_t n = 0, singletons = 0;
    for (auto p : parts) {
        n += p;
        singletons += p == 1;
    }
    const std::size_t m = parts.size();
    return singletons == 0 ? n - m : n - m + singletons - 1;
}

/// Diameter is at most 2, so truncation at any k >= 1 leaves distances unchanged.
inline std::size_t dim_k_multipartite(const std::vector<std::size_t>& parts, Level /*k*/) {
    return dim_multipartite(parts);
}

inline std::size_t gammaL_k_multipartite(const std::vector<std::size_t>& parts, Level k) {
    const std::size_t dim = dim_multipartite(parts);
    const bool is_star = parts.size() == 2 && std::min(parts[0], parts[1]) == 1;
    std::size_t n = parts[0] + parts[1];
    return (k == 1 && is_star && n >= 3) ? dim + 1 : dim;
}

namespace detail {
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}
inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}
}  // namespace detail

/// Largest order of a graph with dim_k = beta:
/// (floor(2(k+1)/3)+1)^beta + beta * sum_{i=1}^{ceil((k+1)/3)} (2i-1)^(beta-1).
/// Saturates at UINT64_MAX.
inline std::uint64_t max_order_dim(std::uint64_t beta, Level k) {
    detail::require(beta >= 1 && k >= 1, "max_order_dim needs beta >= 1 and k >= 1");
    const std::uint64_t base = 2 * (std::uint64_t{k} + 1) / 3 + 1;
    const std::uint64_t terms = (std::uint64_t{k} + 3) / 3;  // ceil((k+1)/3)
    std::uint64_t sum = 0;
    for (std::uint64_t i = 1; i <= terms; ++i) sum = detail::sat_add(sum, detail::sat_pow(2 * i - 1, beta - 1));
    return detail::sat_add(detail::sat_pow(base, beta), detail::sat_mul(beta, sum));
}

/// Largest order of a graph with gamma_L^k = beta: one less than max_order_dim.
inline std::uint64_t max_order_gammaL(std::uint64_t beta, Level k) { return max_order_dim(beta, k) - 1; }

}  // namespace kloc
