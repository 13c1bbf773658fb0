#include <gtest/gtest.h>

#include "kloc/families.hpp"
#include "kloc/solve.hpp"
#include "support/naive.hpp"

using namespace kloc;

namespace {
void expect_certified(const Graph& g, const Problem& p, const SolveResult& r) {
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(satisfies(Instance(g), p, r.witness)) << p.name();
    EXPECT_LE(r.lower_bound_used, r.value);
}
}  // namespace

TEST(Problem, Names) {
    EXPECT_EQ(Problem::domination(2).name(), "gamma_2");
    EXPECT_EQ(Problem::dimension(3).name(), "dim_3");
    EXPECT_EQ(Problem::locating(1).name(), "gammaL_1");
    EXPECT_EQ(Problem::locating(1, 2).name(), "gammaL_(1,2)");
}

TEST(Gamma, CompleteGraphIsOne) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (Level k = 1; k <= 3; ++k) EXPECT_EQ(gamma_k(complete(n), k).value, 1u);
}

TEST(Gamma, RemarkTreeSmallest) {
    const auto r = gamma_k(remark_tree(1, 3, 1), 1);
    EXPECT_EQ(r.value, 3u);
    expect_certified(remark_tree(1, 3, 1), Problem::domination(1), r);
}

TEST(Gamma, P7MatchesExhaustiveSearch) {
    const Graph p = path(7);
    EXPECT_EQ(naive::Oracle(p).gamma(1), 3u);
    EXPECT_EQ(gamma_k(p, 1).value, 3u);
}

TEST(Dim, CompleteGraphIsNMinusOne) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (Level k = 1; k <= 3; ++k) EXPECT_EQ(dim_k(complete(n), k).value, n - 1);
}

TEST(Dim, RemarkTreeSmallest) { EXPECT_EQ(dim_k(remark_tree(1, 3, 1), 1).value, 2u); }

TEST(Dim, Petersen) {
    for (Level k = 1; k <= 4; ++k) {
        const auto r = dim_k(petersen(), k);
        EXPECT_EQ(r.value, 3u) << k;
        expect_certified(petersen(), Problem::dimension(k), r);
    }
}

TEST(Dim, K2) { EXPECT_EQ(dim_k(complete(2), 1).value, 1u); }

TEST(Dim, SingleVertexIsZero) {
    const auto r = dim_k(Graph(1, {}), 1);
    EXPECT_EQ(r.value, 0u);
    EXPECT_TRUE(r.witness.empty());
}

TEST(GammaL, Petersen) {
    EXPECT_EQ(gamma_L_k(petersen(), 1).value, 4u);
    EXPECT_EQ(gamma_L_k(petersen(), 2).value, 3u);
}

TEST(GammaL, StarIsNMinusOne) {
    for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(gamma_L_k(star(n), 1).value, n - 1);
}

TEST(GammaL, SmallCycleAndPaths) {
    EXPECT_EQ(gamma_L_k(cycle(5), 1).value, 2u);
    EXPECT_EQ(gamma_L_k(path(4), 1).value, 2u);
    EXPECT_EQ(gamma_L_k(cycle(12), 3).value, 3u);
}

TEST(GammaL, MixedLevelsMatchOracle) {
    const Graph g = spider(3, 3);
    const naive::Oracle o(g);
    for (Level s = 1; s <= 3; ++s)
        for (Level t = 1; t <= 3; ++t) {
            const auto r = gamma_L_st(g, s, t);
            EXPECT_EQ(r.value, o.gammaL(s, t)) << s << ',' << t;
            expect_certified(g, Problem::locating(s, t), r);
        }
}

TEST(LowerBounds, Twins) {
    for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(lower_bound_twins(complete(n)), n - 1);
    EXPECT_EQ(lower_bound_twins(star(5)), 3u);
    EXPECT_EQ(lower_bound_twins(path(5)), 0u);
}

TEST(LowerBounds, PackingOnCompleteGraphIsOne) {
    for (Level k = 1; k <= 3; ++k) EXPECT_EQ(lower_bound_packing(complete(6), k), 1u);
}

TEST(LowerBounds, PackingOnRemarkTreeSeesTheLegs) {
    EXPECT_GE(lower_bound_packing(remark_tree(1, 3, 3), 3), 3u);
}

TEST(LowerBounds, PackingOnP7NeverExceedsGamma) {
    const std::size_t b = lower_bound_packing(path(7), 1);
    EXPECT_GE(b, 2u);
    EXPECT_LE(b, 3u);
}

TEST(Greedy, CompleteGraphDim) {
    const auto s = greedy_upper_bound(complete(5), Problem::dimension(1));
    EXPECT_EQ(s.size(), 4u);
}

TEST(Greedy, P4LocatingIsFeasible) {
    const auto s = greedy_upper_bound(path(4), Problem::locating(1));
    EXPECT_LE(s.size(), 3u);
    EXPECT_TRUE(satisfies(Instance(path(4)), Problem::locating(1), s));
}

TEST(Greedy, StarDim) {
    const auto s = greedy_upper_bound(star(7), Problem::dimension(1));
    EXPECT_GE(s.size(), 5u);
    EXPECT_LE(s.size(), 6u);
    EXPECT_TRUE(satisfies(Instance(star(7)), Problem::dimension(1), s));
}

TEST(Solve, RejectsDisconnectedAndOversized) {
    EXPECT_THROW(gamma_k(Graph(4, {{0, 1}, {2, 3}}), 1), SolveError);
    EXPECT_THROW(dim_k(path(65), 1), SolveError);
    EXPECT_EQ(gamma_k(complete(64), 1).value, 1u);
}

TEST(Solve, DeterministicWitness) {
    const Graph g = petersen();
    const auto a = gamma_L_k(g, 1), b = gamma_L_k(g, 1);
    EXPECT_EQ(a.witness.members(), b.witness.members());
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(BruteForce, RefusesAboveCap) {
    try {
        brute_force_min(path(21), Problem::dimension(1));
        FAIL();
    } catch (const SolveError& e) {
        EXPECT_NE(std::string(e.what()).find("exceeds the cap"), std::string::npos);
    }
    EXPECT_EQ(brute_force_min(path(6), Problem::dimension(1), 6).value, 2u);
}

TEST(BruteForce, AgreesWithSolverOnNamedGraphs) {
    for (const Graph& g : {petersen(), path(9), cycle(9), star(6), spider(3, 2), remark_tree(1, 3, 1),
                           complete_multipartite({2, 2, 3}), caterpillar({2, 0, 3})})
        for (Level k = 1; k <= 2; ++k)
            for (const Problem& p : {Problem::domination(k), Problem::dimension(k), Problem::locating(k)}) {
                const auto fast = solve(g, p);
                const auto slow = brute_force_min(g, p);
                EXPECT_EQ(fast.value, slow.value) << p.name();
                expect_certified(g, p, slow);
            }
}
