#pragma once

// Effect of deleting a single edge on gamma_L^k and dim_k.

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kloc/graph.hpp"
#include "kloc/solve.hpp"

namespace kloc {

/// Allowed range of gamma_L^k(G-e) - gamma_L^k(G) at level k.
inline std::pair<long, long> gammaL_deletion_window(Level k) {
    if (k == 1) return {-2, 2};
    if (k == 2) return {LONG_MIN, 2};
    return {LONG_MIN, 3};
}

/// Allowed range of dim_k(G-e) - dim_k(G) at level k.
inline std::pair<long, long> dim_deletion_window(Level k) {
    if (k == 1) return {-1, 1};
    if (k == 2) return {LONG_MIN, 1};
    return {LONG_MIN, 2};
}

struct EdgeDeletionRow {
    Edge edge;
    std::size_t gammaL_after = 0;
    std::size_t dim_after = 0;
    long gammaL_delta = 0;  // after - before
    long dim_delta = 0;
    bool gammaL_ok = true;
    bool dim_ok = true;
};

struct EdgeSweepResult {
    Level k = 1;
    std::size_t gammaL_before = 0;
    std::size_t dim_before = 0;
    std::vector<EdgeDeletionRow> rows;
    std::size_t skipped_bridges = 0;
    std::size_t gammaL_violations = 0;
    std::size_t dim_violations = 0;

    bool passed() const { return gammaL_violations == 0 && dim_violations == 0; }
};

/// Solves gamma_L^k and dim_k on G and on G-e for every edge e whose
/// deletion keeps G connected; bridges are counted and skipped.
inline EdgeSweepResult edge_sweep(const Graph& g, Level k) {
    const Instance base(g);
    if (!base.connected()) throw SolveError("graph is disconnected");
    EdgeSweepResult out;
    out.k = k;
    out.gammaL_before = solve(base, Problem::locating(k)).value;
    out.dim_before = solve(base, Problem::dimension(k)).value;
    const auto gw = gammaL_deletion_window(k);
    const auto dw = dim_deletion_window(k);
    for (const Edge& e : g.edges()) {
        const Instance after(delete_edge(g, e));
        if (!after.connected()) {
            ++out.skipped_bridges;
            continue;
        }
        EdgeDeletionRow row;
        row.edge = e;
        row.gammaL_after = solve(after, Problem::locating(k)).value;
        row.dim_after = solve(after, Problem::dimension(k)).value;
        row.gammaL_delta = static_cast<long>(row.gammaL_after) - static_cast<long>(out.gammaL_before);
        row.dim_delta = static_cast<long>(row.dim_after) - static_cast<long>(out.dim_before);
        row.gammaL_ok = row.gammaL_delta >= gw.first && row.gammaL_delta <= gw.second;
        row.dim_ok = row.dim_delta >= dw.first && row.dim_delta <= dw.second;
        out.gammaL_violations += !row.gammaL_ok;
        out.dim_violations += !row.dim_ok;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace kloc
