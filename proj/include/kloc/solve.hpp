#pragma once

// Exact minimisation of gamma_k, dim_k and gamma_L^(s,t).
//
// Each parameter is a minimum hitting set over a family of vertex masks:
//   - distance-t domination: every closed ball N^t[v] must be hit;
//   - distance-s resolution: for every pair {x,y}, the set of vertices z with
//     d_s(x,z) != d_s(y,z) must be hit (a twin pair contributes exactly {x,y}).
// The search is iterative deepening on the cardinality, starting from a lower
// bound and stopping below a greedy incumbent. Inside the search, a node is
// cut when the twin-class deficit plus a greedy packing of pairwise-disjoint
// unhit sets exceeds the remaining budget.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kloc/certify.hpp"
#include "kloc/graph.hpp"
#include "kloc/metric.hpp"

namespace kloc {

class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Mask = std::uint64_t;

/// Solvers use one machine word per vertex set.
inline constexpr std::size_t kMaxSolverOrder = 64;
inline constexpr std::size_t kDefaultOracleCap = 20;

enum class Parameter { Domination, Dimension, LocatingDomination };

/// Which quantity to minimise. Domination reads `t`, dimension reads `s`,
/// (s,t)-location-domination reads both.
struct Problem {
    Parameter parameter = Parameter::LocatingDomination;
    Level s = 1;
    Level t = 1;

    static Problem domination(Level k) { return {Parameter::Domination, k, k}; }
    static Problem dimension(Level k) { return {Parameter::Dimension, k, k}; }
    static Problem locating(Level s, Level t) { return {Parameter::LocatingDomination, s, t}; }
    static Problem locating(Level k) { return locating(k, k); }

    bool needs_resolving() const { return parameter != Parameter::Domination; }
    bool needs_domination() const { return parameter != Parameter::Dimension; }

    std::string name() const {
        switch (parameter) {
            case Parameter::Domination: return "gamma_" + std::to_string(t);
            case Parameter::Dimension: return "dim_" + std::to_string(s);
            case Parameter::LocatingDomination:
                return s == t ? "gammaL_" + std::to_string(s)
                              : "gammaL_(" + std::to_string(s) + "," + std::to_string(t) + ")";
        }
        return {};
    }

    friend bool operator==(const Problem&, const Problem&) = default;
};

struct SolveResult {
    Problem problem;
    std::size_t value = 0;
    LandmarkSet witness;
    std::size_t lower_bound_used = 0;
    std::uint64_t nodes_explored = 0;
};

/// A connected graph with its distance matrix, shared across solver calls.
class Instance {
public:
    explicit Instance(Graph g)
        : graph_(std::move(g)), dist_(std::make_shared<const DistanceMatrix>(graph_)) {}

    const Graph& graph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    TruncatedMetric metric(Level k) const { return TruncatedMetric(dist_, k); }
    bool connected() const { return dist_->diameter().has_value(); }

private:
    Graph graph_;
    std::shared_ptr<const DistanceMatrix> dist_;
};

/// Whether `set` satisfies the predicate behind `p`.
inline bool satisfies(const Instance& inst, const Problem& p, const LandmarkSet& set) {
    if (p.needs_resolving() && !is_distance_k_resolving(inst.metric(p.s), set)) return false;
    if (p.needs_domination() && !is_distance_k_dominating(inst.metric(p.t), set)) return false;
    return true;
}

/// Sum over twin classes of (|class| - 1). Valid for dim_k and gamma_L at any level.
inline std::size_t lower_bound_twins(const Graph& g, Level /*k*/ = 1) {
    const TwinPartition twins(g);
    std::size_t bound = 0;
    for (const auto& c : twins.classes()) bound += c.size() - 1;
    return bound;
}

/// Size of a greedily built family of pairwise-disjoint closed k-balls,
/// taking centres by ascending ball size then id. Any distance-k dominating
/// set meets every ball of the family.
inline std::size_t lower_bound_packing(const TruncatedMetric& metric) {
    const std::size_t n = metric.size();
    std::vector<std::vector<Vertex>> balls(n);
    for (Vertex v = 0; v < n; ++v) balls[v] = metric.ball(v);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return balls[a].size() < balls[b].size(); });
    std::vector<bool> used(n, false);
    std::size_t count = 0;
    for (Vertex v : order) {
        const auto& b = balls[v];
        if (std::any_of(b.begin(), b.end(), [&](Vertex u) { return used[u]; })) continue;
        for (Vertex u : b) used[u] = true;
        ++count;
    }
    return count;
}

inline std::size_t lower_bound_packing(const Graph& g, Level k) {
    return lower_bound_packing(TruncatedMetric(g, k));
}

namespace detail {

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline void require_solvable(const Instance& inst) {
    if (inst.size() > kMaxSolverOrder)
        throw SolveError("exact solvers support at most " + std::to_string(kMaxSolverOrder) + " vertices");
    if (!inst.connected()) throw SolveError("graph is disconnected");
}

/// The hitting-set family for `p`, with duplicates and supersets removed,
/// ordered by size then value.
inline std::vector<Mask> constraint_family(const Instance& inst, const Problem& p) {
    const std::size_t n = inst.size();
    std::vector<Mask> sets;
    if (p.needs_domination()) {
        const auto m = inst.metric(p.t);
        for (Vertex v = 0; v < n; ++v) {
            Mask ball = 0;
            for (Vertex u = 0; u < n; ++u)
                if (m.within(u, v)) ball |= bit(u);
            sets.push_back(ball);
        }
    }
    if (p.needs_resolving()) {
        const auto m = inst.metric(p.s);
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) {
                Mask sep = 0;
                for (Vertex z = 0; z < n; ++z)
                    if (m(x, z) != m(y, z)) sep |= bit(z);
                sets.push_back(sep);
            }
    }
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> reduced;
    for (Mask s : sets)
        if (std::none_of(reduced.begin(), reduced.end(), [&](Mask r) { return (r & s) == r; }))
            reduced.push_back(s);
    return reduced;
}

class HittingSetSearch {
public:
    HittingSetSearch(const Instance& inst, const Problem& p) : sets_(constraint_family(inst, p)) {
        const Graph& g = inst.graph();
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        if (p.needs_resolving()) {
            const TwinPartition twins(g);
            for (const auto& c : twins.classes()) {
                if (c.size() < 2) continue;
                Mask m = 0;
                for (Vertex v : c) m |= bit(v);
                twin_masks_.push_back(m);
            }
        }
    }

    bool empty_family() const { return sets_.empty(); }

    std::size_t root_bound() { return bound(0, 0); }

    /// Searches for a hitting set of at most `budget` vertices.
    bool feasible(std::size_t budget) { return dfs(0, 0, budget); }

    Mask witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }

    /// Greedy incumbent: maximum marginal hits, smallest id on ties, then
    /// redundant members dropped in reverse order of selection.
    std::vector<Vertex> greedy() const {
        std::vector<Vertex> picked;
        Mask chosen = 0;
        auto unhit = [&](Mask c) {
            return std::count_if(sets_.begin(), sets_.end(), [&](Mask s) { return (s & c) == 0; });
        };
        while (unhit(chosen) > 0) {
            Vertex best = 0;
            std::ptrdiff_t best_gain = -1;
            for (Vertex v = 0; v < order_.size(); ++v) {
                if (chosen & bit(v)) continue;
                std::ptrdiff_t gain = std::count_if(sets_.begin(), sets_.end(),
                                                    [&](Mask s) { return (s & chosen) == 0 && (s & bit(v)); });
                if (gain > best_gain) {
                    best_gain = gain;
                    best = v;
                }
            }
            picked.push_back(best);
            chosen |= bit(best);
        }
        for (std::size_t i = picked.size(); i-- > 0;) {
            const Mask without = chosen & ~bit(picked[i]);
            if (unhit(without) == 0) {
                chosen = without;
                picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        return picked;
    }

private:
    static constexpr std::size_t kInfeasible = SIZE_MAX;

    std::size_t bound(Mask chosen, Mask forbidden) const {
        std::size_t deficit = 0;
        Mask reserved = 0;
        for (Mask c : twin_masks_) {
            if (std::popcount(c & forbidden) >= 2) return kInfeasible;
            const int need = std::popcount(c) - 1 - std::popcount(c & chosen);
            if (need > 0) {
                deficit += static_cast<std::size_t>(need);
                reserved |= c;
            }
        }
        std::size_t packed = 0;
        for (Mask s : sets_) {
            if (s & chosen) continue;
            const Mask avail = s & ~forbidden;
            if (avail == 0) return kInfeasible;
            if (avail & reserved) continue;
            reserved |= avail;
            ++packed;
        }
        return deficit + packed;
    }

    bool dfs(Mask chosen, Mask forbidden, std::size_t budget) {
        ++nodes_;
        const Mask* branch = nullptr;
        int branch_width = 65;
        for (const Mask& s : sets_) {
            if (s & chosen) continue;
            const int w = std::popcount(s & ~forbidden);
            if (w == 0) return false;
            if (w < branch_width) {
                branch_width = w;
                branch = &s;
            }
        }
        if (branch == nullptr) {
            witness_ = chosen;
            return true;
        }
        if (budget == 0) return false;
        const std::size_t lb = bound(chosen, forbidden);
        if (lb == kInfeasible || lb > budget) return false;
        const Mask avail = *branch & ~forbidden;
        for (Vertex v : order_) {
            if (!(avail & bit(v))) continue;
            if (dfs(chosen | bit(v), forbidden, budget - 1)) return true;
            forbidden |= bit(v);
        }
        return false;
    }

    std::vector<Mask> sets_;
    std::vector<Mask> twin_masks_;
    std::vector<Vertex> order_;
    Mask witness_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// A feasible set for `p` built greedily; it passes `satisfies` but need not be minimum.
inline LandmarkSet greedy_upper_bound(const Instance& inst, const Problem& p) {
    detail::require_solvable(inst);
    return LandmarkSet(detail::HittingSetSearch(inst, p).greedy());
}

inline LandmarkSet greedy_upper_bound(const Graph& g, const Problem& p) {
    return greedy_upper_bound(Instance(g), p);
}

inline SolveResult solve(const Instance& inst, const Problem& p) {
    detail::require_solvable(inst);
    if (p.s < 1 || p.t < 1) throw SolveError("levels must be at least 1");
    detail::HittingSetSearch search(inst, p);

    SolveResult result{p, 0, {}, 0, 0};
    if (search.empty_family()) return result;

    std::size_t lb = std::max<std::size_t>(1, search.root_bound());
    if (p.needs_resolving()) lb = std::max(lb, lower_bound_twins(inst.graph()));
    if (p.needs_domination()) lb = std::max(lb, lower_bound_packing(inst.metric(p.t)));
    result.lower_bound_used = lb;

    auto incumbent = search.greedy();
    result.value = incumbent.size();
    result.witness = LandmarkSet(incumbent);
    for (std::size_t beta = lb; beta < incumbent.size(); ++beta) {
        if (search.feasible(beta)) {
            result.witness = LandmarkSet::from_mask(search.witness());
            result.value = result.witness.size();
            break;
        }
    }
    result.nodes_explored = search.nodes();
    return result;
}

inline SolveResult solve(const Graph& g, const Problem& p) { return solve(Instance(g), p); }

inline SolveResult gamma_k(const Graph& g, Level k) { return solve(g, Problem::domination(k)); }
inline SolveResult dim_k(const Graph& g, Level k) { return solve(g, Problem::dimension(k)); }
inline SolveResult gamma_L_st(const Graph& g, Level s, Level t) { return solve(g, Problem::locating(s, t)); }
inline SolveResult gamma_L_k(const Graph& g, Level k) { return solve(g, Problem::locating(k)); }

/// Naive oracle: tests every subset in order of increasing cardinality
/// against the certify predicates and returns the first that passes.
inline SolveResult brute_force_min(const Instance& inst, const Problem& p, std::size_t cap = kDefaultOracleCap) {
    const std::size_t n = inst.size();
    if (n > cap) throw SolveError("brute force refused: n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    if (n >= 64) throw SolveError("brute force supports at most 63 vertices");
    if (!inst.connected()) throw SolveError("graph is disconnected");
    SolveResult result{p, 0, {}, 0, 0};
    const Mask full = (Mask{1} << n) - 1;
    for (std::size_t c = 0; c <= n; ++c) {
        // Gosper's hack walks the c-subsets of {0..n-1} in increasing order.
        Mask m = c == 0 ? 0 : (Mask{1} << c) - 1;
        while (m <= full) {
            ++result.nodes_explored;
            auto set = LandmarkSet::from_mask(m);
            if (satisfies(inst, p, set)) {
                result.value = c;
                result.witness = std::move(set);
                return result;
            }
            if (m == 0) break;
            const Mask low = m & -m;
            const Mask ripple = m + low;
            m = (((ripple ^ m) >> 2) / low) | ripple;
        }
    }
    throw SolveError("no feasible set found");
}

inline SolveResult brute_force_min(const Graph& g, const Problem& p, std::size_t cap = kDefaultOracleCap) {
    return brute_force_min(Instance(g), p, cap);
}

}  // namespace kloc
