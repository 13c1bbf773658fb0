#include <gtest/gtest.h>

#include <set>

#include "kloc/families.hpp"
#include "kloc/solve.hpp"
#include "kloc/trees.hpp"
#include "support/naive.hpp"

using namespace kloc;

namespace {
std::size_t girth(const Graph& g) {
    std::size_t best = SIZE_MAX;
    for (const auto& [u, v] : g.edges()) {
        const auto without = naive::floyd_warshall(delete_edge(g, {u, v}));
        if (without[u][v] < naive::kInf) best = std::min<std::size_t>(best, without[u][v] + 1);
    }
    return best;
}
}  // namespace

TEST(Generators, BasicShapes) {
    EXPECT_EQ(path(1).size(), 1u);
    EXPECT_EQ(cycle(6).edge_count(), 6u);
    EXPECT_EQ(complete(6).edge_count(), 15u);
    EXPECT_EQ(star(5).degree(0), 4u);
    EXPECT_EQ(complete_multipartite({2, 3, 1}).edge_count(), 2u * 3 + 2 * 1 + 3 * 1);
    EXPECT_THROW(cycle(2), FamilyError);
    EXPECT_THROW(path(0), FamilyError);
    EXPECT_THROW(star(1), FamilyError);
    EXPECT_THROW(spider(2, 2), FamilyError);
}

TEST(Generators, MultipartiteWithSingletonIsStar) {
    for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(complete_multipartite({1, n - 1}), star(n));
}

TEST(Generators, JoinUnionComplement) {
    const Graph j = join(complete(1), disjoint_union(complete(1), complete(3)));
    EXPECT_EQ(j.size(), 5u);
    EXPECT_EQ(j.degree(0), 4u);
    EXPECT_TRUE(is_connected(j));
    EXPECT_FALSE(is_connected(disjoint_union(path(2), path(2))));
    EXPECT_EQ(complement(complete(4)).edge_count(), 0u);
    EXPECT_EQ(complement(cycle(5)).edge_count(), 5u);
}

TEST(Generators, Petersen) {
    const Graph p = petersen();
    EXPECT_EQ(p.size(), 10u);
    EXPECT_EQ(p.edge_count(), 15u);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
    EXPECT_EQ(girth(p), 5u);
}

TEST(Generators, RemarkTreeOrder) {
    const Graph t = remark_tree(1, 3, 3);
    EXPECT_EQ(t.size(), 12u);
    EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(t.degree(0), 3u);
    // Two legs of length k+1 and one of length k.
    const auto d = naive::floyd_warshall(t);
    std::multiset<unsigned> leaf_depths;
    for (Vertex v = 1; v < t.size(); ++v)
        if (t.degree(v) == 1) leaf_depths.insert(d[0][v]);
    EXPECT_EQ(leaf_depths, (std::multiset<unsigned>{3, 4, 4}));
    EXPECT_EQ(remark_tree(2, 4, 2).size(), 2u * (1 + 3 * 3 + 2));
}

TEST(Generators, SpiderShape) {
    const Graph s = spider(4, 3);
    EXPECT_EQ(s.size(), 13u);
    EXPECT_EQ(s.degree(0), 4u);
    EXPECT_TRUE(is_tree(s));
}

TEST(Generators, Fig2Shape) {
    for (std::size_t a = 3; a <= 5; ++a) {
        const auto f = fig2(a);
        EXPECT_EQ(f.graph.size(), 2 + 5 * a);
        EXPECT_EQ(f.graph.edge_count(), 1 + 8 * a);
        EXPECT_TRUE(f.graph.has_edge(f.designated.first, f.designated.second));
        EXPECT_TRUE(is_connected(delete_edge(f.graph, f.designated)));
    }
    EXPECT_THROW(fig2(2), FamilyError);
}

TEST(Generators, Caterpillar) {
    const Graph c = caterpillar({2, 0, 3});
    EXPECT_EQ(c.size(), 8u);
    EXPECT_TRUE(is_tree(c));
}

TEST(Generators, RandomConnectedIsConnectedAndSeeded) {
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_connected_graph(9, 0.2, a);
        EXPECT_TRUE(is_connected(g));
        EXPECT_EQ(g, random_connected_graph(9, 0.2, b));
    }
}

TEST(Prufer, SmallCases) {
    EXPECT_EQ(prufer_tree({}), path(2));
    EXPECT_EQ(prufer_tree({0, 0}), star(4));
    EXPECT_THROW(prufer_tree({5}), FamilyError);
}

TEST(Prufer, CayleyCountForFiveVertices) {
    std::set<std::vector<Edge>> seen;
    std::size_t calls = 0;
    for_each_prufer_sequence(5, [&](const std::vector<Vertex>& s) {
        ++calls;
        const Graph t = prufer_tree(s);
        EXPECT_TRUE(is_tree(t));
        seen.emplace(t.edges().begin(), t.edges().end());
    });
    EXPECT_EQ(calls, 125u);
    EXPECT_EQ(seen.size(), 125u);
}

TEST(GenerateSpec, DispatchesAndCarriesDesignatedEdge) {
    EXPECT_EQ(generate(PathSpec{5}).graph, path(5));
    EXPECT_FALSE(generate(PetersenSpec{}).designated_edge.has_value());
    const auto f = generate(Fig2Spec{3});
    ASSERT_TRUE(f.designated_edge.has_value());
    EXPECT_EQ(*f.designated_edge, fig2(3).designated);
    EXPECT_EQ(generate(JoinSpec{complete(2), complete(3)}).graph, complete(5));
}

TEST(PathCycleFormulas, ShortCases) {
    for (Level k = 1; k <= 4; ++k) {
        for (std::size_t n = 2; n <= k + 2; ++n) EXPECT_EQ(dim_k_path(n, k), 1u);
        for (std::size_t n = 3; n <= 3 * k + 3; ++n) EXPECT_EQ(dim_k_cycle(n, k), 2u);
        EXPECT_EQ(gammaL_k_path(k + 2, k), 2u);
        EXPECT_EQ(gammaL_k_cycle(3 * k + 3, k), 3u);
    }
    EXPECT_EQ(dim_k_path(10, 1), 4u);
    EXPECT_EQ(gammaL_k_cycle(5, 1), 2u);
}

TEST(PathCycleFormulas, MatchExhaustiveSearch) {
    for (Level k = 1; k <= 3; ++k) {
        for (std::size_t n = 2; n <= 12; ++n) {
            const naive::Oracle o(path(n));
            EXPECT_EQ(dim_k_path(n, k), o.dim(k)) << "P" << n << " k=" << k;
            EXPECT_EQ(gammaL_k_path(n, k), o.gammaL(k, k)) << "P" << n << " k=" << k;
        }
        for (std::size_t n = 3; n <= 12; ++n) {
            const naive::Oracle o(cycle(n));
            EXPECT_EQ(dim_k_cycle(n, k), o.dim(k)) << "C" << n << " k=" << k;
            EXPECT_EQ(gammaL_k_cycle(n, k), o.gammaL(k, k)) << "C" << n << " k=" << k;
        }
    }
}

TEST(MultipartiteFormulas, KnownValues) {
    EXPECT_EQ(dim_multipartite({2, 3}), 3u);
    EXPECT_EQ(gammaL_k_multipartite({2, 3}, 1), 3u);
    for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(gammaL_k_multipartite({1, n - 1}, 1), n - 1);
    EXPECT_EQ(dim_k_multipartite({1, 1, 1}, 2), 2u);
    EXPECT_EQ(gammaL_k_multipartite({1, 1, 1}, 2), 2u);
    EXPECT_THROW(dim_multipartite({4}), FamilyError);
}

TEST(MultipartiteFormulas, MatchExhaustiveSearch) {
    const std::vector<std::vector<std::size_t>> lists{{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 3}, {1, 1, 2},
                                                      {1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1}, {1, 1, 3, 2}};
    for (const auto& parts : lists) {
        const naive::Oracle o(complete_multipartite(parts));
        for (Level k = 1; k <= 2; ++k) {
            EXPECT_EQ(dim_k_multipartite(parts, k), o.dim(k));
            EXPECT_EQ(gammaL_k_multipartite(parts, k), o.gammaL(k, k));
        }
    }
}

TEST(MaxOrder, KnownValues) {
    EXPECT_EQ(max_order_dim(2, 1), 6u);
    EXPECT_EQ(max_order_dim(2, 2), 11u);
    EXPECT_EQ(max_order_dim(1, 1), 3u);
    for (std::uint64_t b = 1; b <= 6; ++b)
        for (Level k = 1; k <= 5; ++k) EXPECT_EQ(max_order_gammaL(b, k), max_order_dim(b, k) - 1);
    EXPECT_EQ(max_order_dim(200, 9), UINT64_MAX);
}

TEST(MaxOrder, SingleLandmarkMatchesLongestResolvedPath) {
    // dim_k = 1 exactly on P_2..P_{k+2}, so the largest order is k+2.
    for (Level k = 1; k <= 6; ++k) EXPECT_EQ(max_order_dim(1, k), k + 2u);
}
