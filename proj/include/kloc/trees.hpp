#pragma once

// Structure of trees (leaves, major and terminal vertices, exterior major
// vertices, degree-two classes) and the machinery that checks the upper bound
// gamma_L^k(T) <= n - ex(T) and its equality case over labelled trees.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "kloc/families.hpp"
#include "kloc/graph.hpp"
#include "kloc/metric.hpp"
#include "kloc/solve.hpp"

namespace kloc {

class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TreeProfile {
    std::size_t n = 0;
    std::vector<Vertex> leaves;
    std::vector<Vertex> support_vertices;
    std::vector<Vertex> major_vertices;
    /// Terminal vertices of each major vertex (empty for ter(v) = 0).
    std::map<Vertex, std::vector<Vertex>> terminals;
    std::vector<Vertex> exterior_major;
    std::vector<Vertex> exterior_deg2;
    std::vector<Vertex> interior_deg2;

    std::size_t sigma() const { return leaves.size(); }
    std::size_t ex() const { return exterior_major.size(); }
    std::size_t ter(Vertex v) const {
        auto it = terminals.find(v);
        return it == terminals.end() ? 0 : it->second.size();
    }
};

/// A leaf is terminal for major vertex v when it is strictly closer to v
/// than to every other major vertex; a leaf tied between two major vertices
/// stays unassigned.
inline TreeProfile tree_profile(const Graph& t) {
    if (t.size() < 2 || !is_tree(t)) throw TreeError("tree_profile needs a tree with at least 2 vertices");
    const DistanceMatrix dist(t);
    TreeProfile p;
    p.n = t.size();
    std::vector<bool> support(t.size(), false);
    for (Vertex v = 0; v < t.size(); ++v) {
        if (t.degree(v) == 1) {
            p.leaves.push_back(v);
            support[t.neighbors(v)[0]] = true;
        }
        if (t.degree(v) >= 3) p.major_vertices.push_back(v);
    }
    for (Vertex v = 0; v < t.size(); ++v)
        if (support[v]) p.support_vertices.push_back(v);

    for (Vertex m : p.major_vertices) p.terminals[m];
    std::vector<bool> exterior(t.size(), false);
    for (Vertex leaf : p.leaves) {
        if (p.major_vertices.empty()) break;
        Vertex best = p.major_vertices.front();
        bool tied = false;
        for (Vertex m : p.major_vertices) {
            if (m == best) continue;
            if (dist(leaf, m) < dist(leaf, best)) {
                best = m;
                tied = false;
            } else if (dist(leaf, m) == dist(leaf, best)) {
                tied = true;
            }
        }
        if (tied) continue;
        p.terminals[best].push_back(leaf);
        // Walk the leaf-to-major path; its inner vertices all have degree two.
        for (Vertex cur = leaf; cur != best;) {
            if (t.degree(cur) == 2) exterior[cur] = true;
            for (Vertex w : t.neighbors(cur))
                if (dist(w, best) + 1 == dist(cur, best)) {
                    cur = w;
                    break;
                }
        }
    }
    for (const auto& [m, ts] : p.terminals)
        if (!ts.empty()) p.exterior_major.push_back(m);
    for (Vertex v = 0; v < t.size(); ++v) {
        if (t.degree(v) != 2) continue;
        (exterior[v] ? p.exterior_deg2 : p.interior_deg2).push_back(v);
    }
    return p;
}

/// V(T) minus the smallest-id terminal vertex of each exterior major vertex.
inline LandmarkSet tree_upper_witness(const Graph& t) {
    const auto p = tree_profile(t);
    if (p.ex() == 0) throw TreeError("tree has no exterior major vertex; use the general n-1 bound");
    std::vector<bool> dropped(t.size(), false);
    for (Vertex m : p.exterior_major) dropped[p.terminals.at(m).front()] = true;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < t.size(); ++v)
        if (!dropped[v]) keep.push_back(v);
    return LandmarkSet(std::move(keep));
}

struct EqualityVerdict {
    std::size_t lhs = 0;  // gamma_L^k(T), solved
    std::size_t rhs = 0;  // n - ex(T)
    bool predicted_equal = false;
    bool observed_equal = false;

    bool agree() const { return predicted_equal == observed_equal; }
};

/// Structural prediction of gamma_L^k(T) = n - ex(T): k = 1, ex(T) >= 1 and
/// every vertex is a leaf or an exterior major vertex.
inline bool predicts_upper_bound_equality(const TreeProfile& p, Level k) {
    return k == 1 && p.ex() >= 1 && p.ex() + p.sigma() == p.n;
}

inline EqualityVerdict check_equality_characterization(const Graph& t, Level k, std::size_t cap = kDefaultOracleCap) {
    if (t.size() > cap)
        throw SolveError("tree of order " + std::to_string(t.size()) + " exceeds the cap of " + std::to_string(cap));
    const auto p = tree_profile(t);
    EqualityVerdict v;
    v.lhs = gamma_L_k(t, k).value;
    v.rhs = p.n - p.ex();
    v.predicted_equal = predicts_upper_bound_equality(p, k);
    v.observed_equal = v.lhs == v.rhs;
    return v;
}

// ---------------------------------------------------------------------------
// Exhaustive sweep over labelled trees

/// Calls fn(seq) for every Pruefer sequence of length n-2 over 0..n-1,
/// in lexicographic order.
template <typename Fn>
void for_each_prufer_sequence(std::size_t n, Fn&& fn) {
    if (n < 2) return;
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
        fn(static_cast<const std::vector<Vertex>&>(seq));
        std::size_t i = seq.size();
        while (i > 0 && seq[i - 1] + 1 == n) seq[--i] = 0;
        if (i == 0) return;
        ++seq[i - 1];
    }
}

struct TreeSweepOptions {
    std::size_t max_n = 8;
    std::vector<Level> levels{1, 2};
    unsigned threads = 1;
    /// Trees up to this order are also solved by brute force.
    std::size_t oracle_max_n = 0;
    std::size_t max_reported_counterexamples = 20;
};

struct TreeSweepRow {
    std::size_t n = 0;
    Level k = 1;
    std::uint64_t trees = 0;
    std::uint64_t exterior_trees = 0;  // ex(T) >= 1
    std::uint64_t equality_cases = 0;
    std::uint64_t predicted_cases = 0;
    std::uint64_t oracle_checked = 0;
};

struct TreeCounterexample {
    std::size_t n = 0;
    Level k = 1;
    std::vector<Vertex> sequence;
    std::string reason;
    std::size_t gamma_l = 0;
    std::size_t bound = 0;

    friend bool operator<(const TreeCounterexample& a, const TreeCounterexample& b) {
        return std::tie(a.n, a.k, a.sequence, a.reason) < std::tie(b.n, b.k, b.sequence, b.reason);
    }
};

struct TreeSweepSummary {
    std::vector<TreeSweepRow> rows;
    std::vector<TreeCounterexample> counterexamples;  // first few, sorted
    std::uint64_t counterexample_count = 0;
    std::uint64_t oracle_mismatches = 0;

    bool passed() const { return counterexample_count == 0 && oracle_mismatches == 0; }
};

namespace detail {

inline std::vector<Vertex> prufer_from_index(std::uint64_t index, std::size_t n) {
    std::vector<Vertex> seq(n - 2);
    for (std::size_t i = seq.size(); i-- > 0;) {
        seq[i] = static_cast<Vertex>(index % n);
        index /= n;
    }
    return seq;
}

inline void sweep_one_tree(const std::vector<Vertex>& seq, const TreeSweepOptions& opt,
                           std::vector<TreeSweepRow>& rows, TreeSweepSummary& out) {
    const Graph t = prufer_tree(seq);
    const std::size_t n = t.size();
    const Instance inst(t);
    const auto profile = tree_profile(t);
    for (std::size_t li = 0; li < opt.levels.size(); ++li) {
        const Level k = opt.levels[li];
        auto& row = rows[li];
        const auto solved = solve(inst, Problem::locating(k));
        const std::size_t value = solved.value;
        const std::size_t bound = n - profile.ex();
        const bool predicted = predicts_upper_bound_equality(profile, k);
        ++row.trees;
        if (profile.ex() >= 1) ++row.exterior_trees;
        if (value == bound) ++row.equality_cases;
        if (predicted) ++row.predicted_cases;
        auto flag = [&](std::string reason) {
            ++out.counterexample_count;
            out.counterexamples.push_back({n, k, seq, std::move(reason), value, bound});
        };
        if (value > n - 1) flag("gamma_L exceeds n-1");
        if (profile.ex() >= 1 && value > bound) flag("gamma_L exceeds n-ex(T)");
        if (predicted != (value == bound)) flag("equality does not match the structural prediction");
        if (n <= opt.oracle_max_n) {
            ++row.oracle_checked;
            if (brute_force_min(inst, Problem::locating(k)).value != value) ++out.oracle_mismatches;
        }
    }
}

}  // namespace detail

/// Solves gamma_L^k on every labelled tree of order 2..max_n for each level.
/// Work is split across threads by index; per-thread counts are summed, so
/// the summary does not depend on the thread count.
inline TreeSweepSummary sweep_trees(const TreeSweepOptions& opt) {
    TreeSweepSummary total;
    const unsigned threads = std::max(1u, opt.threads);
    for (std::size_t n = 2; n <= opt.max_n; ++n) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i + 2 < n; ++i) count *= n;

        std::vector<TreeSweepSummary> partial(threads);
        std::vector<std::vector<TreeSweepRow>> rows(threads, std::vector<TreeSweepRow>(opt.levels.size()));
        auto work = [&](unsigned tid) {
            for (std::uint64_t idx = tid; idx < count; idx += threads)
                detail::sweep_one_tree(detail::prufer_from_index(idx, n), opt, rows[tid], partial[tid]);
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
        }

        for (std::size_t li = 0; li < opt.levels.size(); ++li) {
            TreeSweepRow row{n, opt.levels[li]};
            for (const auto& r : rows) {
                row.trees += r[li].trees;
                row.exterior_trees += r[li].exterior_trees;
                row.equality_cases += r[li].equality_cases;
                row.predicted_cases += r[li].predicted_cases;
                row.oracle_checked += r[li].oracle_checked;
            }
            total.rows.push_back(row);
        }
        for (auto& part : partial) {
            total.counterexample_count += part.counterexample_count;
            total.oracle_mismatches += part.oracle_mismatches;
            total.counterexamples.insert(total.counterexamples.end(), part.counterexamples.begin(),
                                         part.counterexamples.end());
        }
    }
    std::sort(total.counterexamples.begin(), total.counterexamples.end());
    if (total.counterexamples.size() > opt.max_reported_counterexamples)
        total.counterexamples.resize(opt.max_reported_counterexamples);
    return total;
}

}  // namespace kloc
