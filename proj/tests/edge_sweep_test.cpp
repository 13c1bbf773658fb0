#include <gtest/gtest.h>

#include "kloc/edge_sweep.hpp"
#include "kloc/families.hpp"
#include "support/naive.hpp"

using namespace kloc;

TEST(Windows, PerLevel) {
    EXPECT_EQ(gammaL_deletion_window(1), (std::pair<long, long>{-2, 2}));
    EXPECT_EQ(gammaL_deletion_window(2).second, 2);
    EXPECT_EQ(gammaL_deletion_window(5).second, 3);
    EXPECT_EQ(dim_deletion_window(1), (std::pair<long, long>{-1, 1}));
    EXPECT_EQ(dim_deletion_window(2).second, 1);
    EXPECT_EQ(dim_deletion_window(3).second, 2);
}

TEST(EdgeSweep, C6EveryDeletionIsP6) {
    const auto r = edge_sweep(cycle(6), 1);
    const naive::Oracle c6(cycle(6)), p6(path(6));
    EXPECT_EQ(r.gammaL_before, c6.gammaL(1, 1));
    EXPECT_EQ(r.skipped_bridges, 0u);
    ASSERT_EQ(r.rows.size(), 6u);
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.gammaL_after, p6.gammaL(1, 1));
        EXPECT_EQ(row.dim_after, p6.dim(1));
        EXPECT_GE(row.gammaL_delta, -2);
        EXPECT_LE(row.gammaL_delta, 2);
    }
    EXPECT_TRUE(r.passed());
}

TEST(EdgeSweep, K4) {
    const auto r = edge_sweep(complete(4), 1);
    const naive::Oracle k4(complete(4)), k4e(delete_edge(complete(4), {0, 1}));
    ASSERT_EQ(r.rows.size(), 6u);
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.gammaL_delta, static_cast<long>(k4e.gammaL(1, 1)) - static_cast<long>(k4.gammaL(1, 1)));
        EXPECT_TRUE(row.gammaL_ok);
    }
}

TEST(EdgeSweep, TreesSkipEveryEdge) {
    const auto r = edge_sweep(spider(3, 2), 2);
    EXPECT_TRUE(r.rows.empty());
    EXPECT_EQ(r.skipped_bridges, 6u);
}

TEST(EdgeSweep, Fig2DesignatedEdge) {
    for (std::size_t a = 3; a <= 4; ++a) {
        const auto f = fig2(a);
        const auto r = edge_sweep(f.graph, 2);
        EXPECT_EQ(r.dim_before, 2 * a);
        const auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const auto& row) { return row.edge == f.designated; });
        ASSERT_NE(it, r.rows.end());
        EXPECT_EQ(it->dim_after, a + 1);
        EXPECT_EQ(it->dim_delta, -static_cast<long>(a - 1));
        EXPECT_LE(it->gammaL_delta, -static_cast<long>(a - 2));
        EXPECT_EQ(r.gammaL_violations, 0u);
    }
}

TEST(EdgeSweep, RejectsDisconnectedInput) {
    EXPECT_THROW(edge_sweep(Graph(4, {{0, 1}, {2, 3}}), 1), SolveError);
}
