#include <gtest/gtest.h>

#include "kloc/families.hpp"
#include "kloc/harness.hpp"
#include "kloc/report.hpp"

using namespace kloc;

TEST(Report, SchemaAndSortedChecks) {
    Report r;
    r.command = "demo";
    r.input = InputDigest{3, 2, "abc"};
    r.checks.push_back({"zeta", "z", true, {}});
    r.checks.push_back({"alpha", "a", false, {{"x", 1}}});
    const auto j = r.to_json();
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["input"]["n"], 3);
    EXPECT_EQ(j["checks"][0]["name"], "alpha");
    EXPECT_EQ(j["checks"][0]["status"], "fail");
    EXPECT_EQ(j["checks"][1]["status"], "pass");
    EXPECT_FALSE(j["passed"].get<bool>());
    EXPECT_FALSE(j.contains("timing"));
}

TEST(Report, StableFieldOrder) {
    Report r;
    r.command = "x";
    r.timing = nlohmann::ordered_json{{"elapsed_ms", 1.0}};
    const auto j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"schema", "command", "checks", "passed", "timing"}));
}

TEST(Report, SolveResultSerialises) {
    const auto j = to_json(gamma_L_k(petersen(), 1));
    EXPECT_EQ(j["parameter"], "gammaL_1");
    EXPECT_EQ(j["value"], 4);
    EXPECT_EQ(j["witness"].size(), 4u);
}

TEST(Corpus, SeededAndConnected) {
    const auto a = random_corpus(5, 30, 10), b = random_corpus(5, 30, 10);
    ASSERT_EQ(a.size(), 30u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].graph, b[i].graph);
        EXPECT_TRUE(is_connected(a[i].graph));
        EXPECT_LE(a[i].graph.size(), 10u);
        EXPECT_GE(a[i].graph.size(), 2u);
    }
    const auto c = random_corpus(6, 30, 10);
    std::size_t same = 0;
    for (std::size_t i = 0; i < a.size(); ++i) same += c[i].graph == a[i].graph;
    EXPECT_LT(same, a.size());
}

TEST(Harness, PartitionsCountMatchesPartitionNumbers) {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(Harness::partitions(n).size(), p[n]);
}

TEST(Harness, QuickChecksPass) {
    HarnessOptions o;
    Harness h(o);
    for (const char* name : {"petersen", "spider", "multipartite"}) {
        const auto r = h.run(name);
        EXPECT_TRUE(r.passed) << name << ": " << r.details.dump();
        EXPECT_FALSE(r.anchor.empty());
    }
    EXPECT_GT(h.tally().checked, 0u);
    EXPECT_EQ(h.tally().mismatches, 0u);
}

TEST(Harness, PathCycleWithSmallCap) {
    HarnessOptions o;
    o.nmax = 9;
    Harness h(o);
    const auto r = h.run("path-cycle");
    EXPECT_TRUE(r.passed) << r.details.dump();
}

TEST(Harness, OnlySelectsOneCheck) {
    HarnessOptions o;
    o.only = "petersen";
    Harness h(o);
    const auto all = h.run_all();
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].name, "petersen");
}

TEST(Harness, UnknownCheckThrows) {
    Harness h(HarnessOptions{});
    EXPECT_THROW(h.run("nope"), std::invalid_argument);
}
