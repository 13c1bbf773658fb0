#pragma once

// JSON reports shared by the CLI and the verification harness.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "kloc/edge_sweep.hpp"
#include "kloc/solve.hpp"
#include "kloc/trees.hpp"

namespace kloc {

inline constexpr const char* kReportSchema = "kloc-report/1";

struct CheckRecord {
    std::string name;
    std::string anchor;  // the statement the check exercises
    bool passed = false;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct InputDigest {
    std::size_t n = 0;
    std::size_t m = 0;
    std::string hash;
};

struct Report {
    std::string command;
    std::optional<InputDigest> input;
    std::vector<CheckRecord> checks;
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::optional<nlohmann::ordered_json> timing;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["command"] = command;
        if (input) j["input"] = {{"n", input->n}, {"m", input->m}, {"hash", input->hash}};
        if (!result.empty()) j["result"] = result;
        auto sorted = checks;
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : sorted)
            j["checks"].push_back(
                {{"name", c.name}, {"anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
        j["passed"] = passed();
        if (timing) j["timing"] = *timing;
        return j;
    }
};

inline nlohmann::ordered_json vertex_list(const std::vector<Vertex>& vs) {
    auto j = nlohmann::ordered_json::array();
    for (Vertex v : vs) j.push_back(v);
    return j;
}

inline nlohmann::ordered_json to_json(const SolveResult& r) {
    return {{"parameter", r.problem.name()},
            {"value", r.value},
            {"witness", vertex_list(r.witness.members())},
            {"lower_bound_used", r.lower_bound_used},
            {"nodes_explored", r.nodes_explored}};
}

inline nlohmann::ordered_json to_json(const TreeSweepSummary& s) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"n", r.n},
                        {"k", r.k},
                        {"trees", r.trees},
                        {"exterior_trees", r.exterior_trees},
                        {"equality_cases", r.equality_cases},
                        {"predicted_equality_cases", r.predicted_cases},
                        {"oracle_checked", r.oracle_checked}});
    nlohmann::ordered_json cex = nlohmann::ordered_json::array();
    for (const auto& c : s.counterexamples)
        cex.push_back({{"n", c.n},
                       {"k", c.k},
                       {"prufer", vertex_list(c.sequence)},
                       {"reason", c.reason},
                       {"gammaL", c.gamma_l},
                       {"n_minus_ex", c.bound}});
    return {{"rows", rows},
            {"counterexample_count", s.counterexample_count},
            {"counterexamples", cex},
            {"oracle_mismatches", s.oracle_mismatches}};
}

inline nlohmann::ordered_json to_json(const EdgeSweepResult& r) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"edge", {row.edge.first, row.edge.second}},
                        {"gammaL_after", row.gammaL_after},
                        {"gammaL_delta", row.gammaL_delta},
                        {"gammaL_ok", row.gammaL_ok},
                        {"dim_after", row.dim_after},
                        {"dim_delta", row.dim_delta},
                        {"dim_ok", row.dim_ok}});
    return {{"k", r.k},
            {"gammaL", r.gammaL_before},
            {"dim", r.dim_before},
            {"skipped_bridges", r.skipped_bridges},
            {"gammaL_violations", r.gammaL_violations},
            {"dim_violations", r.dim_violations},
            {"rows", rows}};
}

}  // namespace kloc
