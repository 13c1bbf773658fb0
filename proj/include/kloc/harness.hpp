#pragma once

// Verification harness. Each check solves a family of instances
// exactly and compares against a bound, a characterisation or a closed form.
// Instances small enough for the brute-force oracle are cross-checked as
// they are solved; the "oracle-agreement" check reports that tally.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kloc/edge_sweep.hpp"
#include "kloc/families.hpp"
#include "kloc/report.hpp"
#include "kloc/solve.hpp"
#include "kloc/trees.hpp"

namespace kloc {

struct HarnessOptions {
    std::string only;  // run a single check by name; empty runs all
    std::size_t nmax = 0;  // overrides each check's default order cap when nonzero
    std::uint64_t seed = 20190701;
    std::size_t corpus_size = 200;
    std::size_t corpus_max_n = 12;
    std::size_t oracle_slice = 12;
    unsigned threads = 1;
};

struct CorpusGraph {
    std::string name;
    Graph graph;
};

/// Seeded connected G(n,p) graphs with 2 <= n <= max_n and p drawn from [0.2, 0.8).
inline std::vector<CorpusGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
    detail::require(max_n >= 2, "random corpus needs max_n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<CorpusGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 2 + rng() % (max_n - 1);
        const double p = 0.2 + 0.6 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back({"random#" + std::to_string(i), random_connected_graph(n, p, rng)});
    }
    return out;
}

/// Small named graphs, including every extremal form the characterisations mention.
inline std::vector<CorpusGraph> named_corpus() {
    std::vector<CorpusGraph> out;
    auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
    for (std::size_t n = 2; n <= 10; ++n) add("P" + std::to_string(n), path(n));
    for (std::size_t n = 3; n <= 10; ++n) add("C" + std::to_string(n), cycle(n));
    for (std::size_t n = 2; n <= 9; ++n) add("K" + std::to_string(n), complete(n));
    for (std::size_t n = 4; n <= 9; ++n) add("K1," + std::to_string(n - 1), star(n));
    add("K2,2", complete_multipartite({2, 2}));
    add("K2,3", complete_multipartite({2, 3}));
    add("K3,3", complete_multipartite({3, 3}));
    add("K2,2,2", complete_multipartite({2, 2, 2}));
    add("K2+co-K3", join(complete(2), complement(complete(3))));
    add("K2+(K1uK2)", join(complete(2), disjoint_union(complete(1), complete(2))));
    add("K1+(K1uK3)", join(complete(1), disjoint_union(complete(1), complete(3))));
    add("petersen", petersen());
    add("spider(3,2)", spider(3, 2));
    add("spider(4,2)", spider(4, 2));
    add("remark_tree(1,3,1)", remark_tree(1, 3, 1));
    add("remark_tree(1,3,2)", remark_tree(1, 3, 2));
    add("caterpillar(2,3)", caterpillar({2, 3}));
    add("caterpillar(2,0,2)", caterpillar({2, 0, 2}));
    return out;
}

struct OracleTally {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> first_mismatches;
};

class Harness {
public:
    explicit Harness(HarnessOptions opt) : opt_(std::move(opt)) {}

    static const std::vector<std::string>& check_names() {
        static const std::vector<std::string> names{"path-cycle",       "petersen",     "remark-family",
                                                    "spider",           "bounds",       "characterization",
                                                    "tree-equality",    "edge-deletion", "multipartite",
                                                    "oracle-agreement"};
        return names;
    }

    const OracleTally& tally() const { return tally_; }

    std::vector<CheckRecord> run_all() {
        std::vector<CheckRecord> out;
        for (const auto& name : check_names())
            if (opt_.only.empty() || opt_.only == name) out.push_back(run(name));
        return out;
    }

    CheckRecord run(const std::string& name) {
        const auto start = std::chrono::steady_clock::now();
        CheckRecord r = dispatch(name);
        elapsed_ms_[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

    const std::map<std::string, double>& elapsed_ms() const { return elapsed_ms_; }

    /// Closed forms for dim_k and gamma_L^k on paths and cycles.
    CheckRecord path_cycle() {
        CheckRecord r{"path-cycle", "dim_k and gamma_L^k of P_n and C_n match their closed forms", true};
        const std::size_t nmax = cap(16);
        std::uint64_t compared = 0;
        auto mismatches = nlohmann::ordered_json::array();
        for (Level k = 1; k <= 3; ++k)
            for (std::size_t n = 2; n <= nmax; ++n)
                for (bool is_cycle : {false, true}) {
                    if (is_cycle && n < 3) continue;
                    const Instance inst(is_cycle ? cycle(n) : path(n));
                    const std::size_t dim = value(inst, Problem::dimension(k));
                    const std::size_t gl = value(inst, Problem::locating(k));
                    const std::size_t dim_expected = is_cycle ? dim_k_cycle(n, k) : dim_k_path(n, k);
                    const std::size_t gl_expected = is_cycle ? gammaL_k_cycle(n, k) : gammaL_k_path(n, k);
                    compared += 2;
                    if (dim != dim_expected || gl != gl_expected)
                        mismatches.push_back({{"graph", std::string(is_cycle ? "C" : "P") + std::to_string(n)},
                                              {"k", k},
                                              {"dim", dim},
                                              {"dim_formula", dim_expected},
                                              {"gammaL", gl},
                                              {"gammaL_formula", gl_expected}});
                }
        r.passed = mismatches.empty();
        r.details = {{"nmax", nmax}, {"compared", compared}, {"mismatches", mismatches}};
        return r;
    }

    CheckRecord petersen_graph() {
        CheckRecord r{"petersen", "Petersen graph: dim_k = 3, gamma_L^1 = 4, gamma_L^k = 3 for k >= 2", true};
        const Instance inst(petersen());
        auto values = nlohmann::ordered_json::object();
        bool ok = inst.metric(1).diameter() == 2u;
        for (Level k = 1; k <= 4; ++k) {
            const std::size_t dim = value(inst, Problem::dimension(k));
            const std::size_t gl = value(inst, Problem::locating(k));
            values["dim_" + std::to_string(k)] = dim;
            values["gammaL_" + std::to_string(k)] = gl;
            ok = ok && dim == 3 && gl == (k == 1 ? 4u : 3u);
        }
        // {u_1, u_4, w_2, w_3} is a distance-1 locating-dominating set.
        const bool sample = is_st_locating_dominating(inst.metric(1), LandmarkSet{0, 3, 6, 7}, 1, 1);
        r.passed = ok && sample;
        r.details = {{"values", values}, {"diameter", 2}, {"sample_set_locating_dominating", sample}};
        return r;
    }

    CheckRecord remark_family() {
        CheckRecord r{"remark-family", "remark trees: gamma_k = x*alpha = dim_k + 1", true};
        auto rows = nlohmann::ordered_json::array();
        bool ok = true;
        for (auto [x, alpha] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 3}, {1, 4}})
            for (Level k = 1; k <= 3; ++k) {
                const Instance inst(remark_tree(x, alpha, k));
                if (opt_.nmax != 0 && inst.size() > opt_.nmax) continue;
                const std::size_t gamma = value(inst, Problem::domination(k));
                const std::size_t dim = value(inst, Problem::dimension(k));
                const bool row_ok = gamma == x * alpha && dim + 1 == x * alpha;
                ok = ok && row_ok;
                rows.push_back({{"x", x}, {"alpha", alpha}, {"k", k}, {"n", inst.size()},
                                {"gamma_k", gamma}, {"dim_k", dim}, {"ok", row_ok}});
            }
        r.passed = ok;
        r.details = {{"rows", rows}};
        return r;
    }

    CheckRecord spider_family() {
        CheckRecord r{"spider", "spiders with legs of length k: gamma_k = 1 and dim_k = alpha - 1", true};
        auto rows = nlohmann::ordered_json::array();
        bool ok = true;
        for (std::size_t alpha = 3; alpha <= 5; ++alpha)
            for (Level k = 1; k <= 2; ++k) {
                const Instance inst(spider(alpha, k));
                const std::size_t gamma = value(inst, Problem::domination(k));
                const std::size_t dim = value(inst, Problem::dimension(k));
                const bool row_ok = gamma == 1 && dim == alpha - 1;
                ok = ok && row_ok;
                rows.push_back({{"alpha", alpha}, {"k", k}, {"gamma_k", gamma}, {"dim_k", dim}, {"ok", row_ok}});
            }
        r.passed = ok;
        r.details = {{"rows", rows}};
        return r;
    }

    CheckRecord bounds() {
        CheckRecord r{"bounds",
                      "gamma_k <= dim_k+1; 2 <= gamma_k+dim_k <= n; max{gamma_k,dim_k} <= gamma_L^k <= "
                      "min{dim_k+1,n-1}; gamma_L^k-dim_k in {0,1}; order bound; level monotonicity",
                      true};
        std::map<std::string, std::uint64_t> violations;
        for (const char* key : {"dom_upper", "sum_lower", "sum_upper", "sum_two_iff_short_path", "sandwich_lower",
                                "sandwich_upper", "gap", "order_dim", "order_gammaL", "monotone_gamma",
                                "monotone_dim", "monotone_gammaL", "monotone_st", "diameter_collapse"})
            violations[key] = 0;
        auto examples = nlohmann::ordered_json::array();
        auto flag = [&](const std::string& key, const CorpusGraph& c, Level k) {
            ++violations[key];
            if (examples.size() < 10) examples.push_back({{"bound", key}, {"graph", c.name}, {"k", k}});
        };
        std::uint64_t instances = 0;
        for (const auto& c : random_corpus(opt_.seed, opt_.corpus_size, cap(opt_.corpus_max_n))) {
            const Instance inst(c.graph);
            const std::size_t n = inst.size();
            const auto diam = *inst.metric(1).diameter();
            std::map<Level, std::size_t> gamma, dim, gl;
            for (Level k = 1; k <= 2; ++k) {
                ++instances;
                gamma[k] = value(inst, Problem::domination(k));
                dim[k] = value(inst, Problem::dimension(k));
                gl[k] = value(inst, Problem::locating(k));
                if (gamma[k] > dim[k] + 1) flag("dom_upper", c, k);
                if (gamma[k] + dim[k] < 2) flag("sum_lower", c, k);
                if (gamma[k] + dim[k] > n) flag("sum_upper", c, k);
                if ((gamma[k] + dim[k] == 2) != (is_path_graph(c.graph) && n <= k + 2))
                    flag("sum_two_iff_short_path", c, k);
                if (gl[k] < std::max(gamma[k], dim[k])) flag("sandwich_lower", c, k);
                if (gl[k] > std::min(dim[k] + 1, n - 1)) flag("sandwich_upper", c, k);
                if (gl[k] != dim[k] && gl[k] != dim[k] + 1) flag("gap", c, k);
                if (n > max_order_dim(dim[k], k)) flag("order_dim", c, k);
                if (n > max_order_gammaL(gl[k], k)) flag("order_gammaL", c, k);
                if (k >= diam && gl[k] != dim[k]) flag("diameter_collapse", c, k);
            }
            if (gamma[2] > gamma[1]) flag("monotone_gamma", c, 2);
            if (dim[2] > dim[1]) flag("monotone_dim", c, 2);
            if (gl[2] > gl[1]) flag("monotone_gammaL", c, 2);
            const std::size_t gl12 = value(inst, Problem::locating(1, 2));
            const std::size_t gl21 = value(inst, Problem::locating(2, 1));
            if (gl12 > gl[1] || gl21 > gl[1] || gl[2] > gl12 || gl[2] > gl21) flag("monotone_st", c, 2);
        }
        std::uint64_t total = 0;
        auto v = nlohmann::ordered_json::object();
        for (const auto& [key, count] : violations) {
            v[key] = count;
            total += count;
        }
        r.passed = total == 0;
        r.details = {{"graphs", opt_.corpus_size}, {"seed", opt_.seed}, {"instances", instances},
                     {"violations", v}, {"examples", examples}};
        return r;
    }

    CheckRecord characterization() {
        CheckRecord r{"characterization",
                      "gamma_L^k = 1 iff G is P_i with 2 <= i <= k+1; gamma_L^1 = n-1 iff G is K_n or K_{1,n-1}; "
                      "gamma_L^k = n-1 for k >= 2 iff G is K_n",
                      true};
        auto failures = nlohmann::ordered_json::array();
        auto fail = [&](const std::string& graph, Level k, const std::string& what) {
            failures.push_back({{"graph", graph}, {"k", k}, {"failure", what}});
        };
        auto corpus = named_corpus();
        for (auto& c : random_corpus(opt_.seed, opt_.corpus_size, opt_.corpus_max_n)) corpus.push_back(std::move(c));
        std::uint64_t graphs = 0;
        for (const auto& c : corpus) {
            const Instance inst(c.graph);
            const std::size_t n = inst.size();
            ++graphs;
            const bool star_like = is_tree(c.graph) && c.graph.max_degree() + 1 == n;
            for (Level k = 1; k <= 3; ++k) {
                const std::size_t gl = value(inst, Problem::locating(k));
                if ((gl == 1) != (is_path_graph(c.graph) && n <= k + 1)) fail(c.name, k, "gamma_L = 1 mismatch");
                if (k == 1 && gl == n - 1 && !(is_complete(c.graph) || star_like)) fail(c.name, k, "n-1 not K_n or star");
                if (k >= 2 && gl == n - 1 && !is_complete(c.graph)) fail(c.name, k, "n-1 but not complete");
            }
        }
        const std::size_t nmax = cap(9);
        for (std::size_t n = 2; n <= nmax; ++n) {
            const Instance kn(complete(n));
            if (value(kn, Problem::locating(1)) != n - 1) fail("K" + std::to_string(n), 1, "gamma_L^1 != n-1");
            if (value(kn, Problem::locating(2)) != n - 1) fail("K" + std::to_string(n), 2, "gamma_L^2 != n-1");
            if (n < 3) continue;
            const Instance st(star(n));
            if (value(st, Problem::locating(1)) != n - 1) fail("K1," + std::to_string(n - 1), 1, "gamma_L^1 != n-1");
            if (value(st, Problem::locating(2)) == n - 1) fail("K1," + std::to_string(n - 1), 2, "gamma_L^2 == n-1");
        }
        r.passed = failures.empty();
        r.details = {{"corpus_graphs", graphs}, {"complete_and_star_nmax", nmax}, {"failures", failures}};
        return r;
    }

    CheckRecord tree_equality() {
        CheckRecord r{"tree-equality",
                      "trees: gamma_L^k(T) <= n - ex(T), with equality iff k = 1, ex(T) >= 1 and ex(T)+sigma(T) = n",
                      true};
        TreeSweepOptions o;
        o.max_n = cap(8);
        o.levels = {1, 2};
        o.threads = opt_.threads;
        o.oracle_max_n = std::min(o.max_n, opt_.oracle_slice);
        const auto summary = sweep_trees(o);
        for (const auto& row : summary.rows) tally_.checked += row.oracle_checked;
        tally_.mismatches += summary.oracle_mismatches;
        if (summary.oracle_mismatches) tally_.first_mismatches.push_back("tree sweep");
        r.passed = summary.passed();
        r.details = to_json(summary);
        r.details["max_n"] = o.max_n;
        return r;
    }

    CheckRecord edge_deletion() {
        CheckRecord r{"edge-deletion",
                      "|gamma_L^1(G-e) - gamma_L^1(G)| <= 2 and gamma_L^2(G-e) <= gamma_L^2(G) + 2 for non-bridges; "
                      "the designated edge of fig2(3) drops dim_2 from 6 to 4",
                      true};
        const std::size_t nmax = cap(10);
        auto corpus = named_corpus();
        for (auto& c : random_corpus(opt_.seed, opt_.corpus_size, opt_.corpus_max_n)) corpus.push_back(std::move(c));
        std::uint64_t graphs = 0, edges = 0, bridges = 0, gl_viol = 0, dim_viol = 0;
        auto failures = nlohmann::ordered_json::array();
        for (const auto& c : corpus) {
            if (c.graph.size() > nmax || c.graph.size() < 2) continue;
            ++graphs;
            for (Level k = 1; k <= 2; ++k) {
                const auto sweep = edge_sweep(c.graph, k);
                edges += sweep.rows.size();
                bridges += sweep.skipped_bridges;
                gl_viol += sweep.gammaL_violations;
                dim_viol += sweep.dim_violations;
                if (!sweep.passed() && failures.size() < 10)
                    failures.push_back({{"graph", c.name}, {"k", k}, {"sweep", to_json(sweep)}});
            }
        }
        const auto f = fig2(3);
        const Instance g(f.graph), ge(delete_edge(f.graph, f.designated));
        const std::size_t dim_g = value(g, Problem::dimension(2)), dim_ge = value(ge, Problem::dimension(2));
        const std::size_t gl_g = value(g, Problem::locating(2)), gl_ge = value(ge, Problem::locating(2));
        const bool fig2_ok = dim_g == 6 && dim_ge == 4 && gl_g >= gl_ge + 1;
        r.passed = gl_viol == 0 && fig2_ok;
        r.details = {{"nmax", nmax},
                     {"graphs", graphs},
                     {"edges_deleted", edges},
                     {"skipped_bridges", bridges},
                     {"gammaL_violations", gl_viol},
                     {"dim_violations", dim_viol},
                     {"failures", failures},
                     {"fig2",
                      {{"a", 3}, {"dim_2", dim_g}, {"dim_2_minus_e", dim_ge}, {"gammaL_2", gl_g},
                       {"gammaL_2_minus_e", gl_ge}, {"ok", fig2_ok}}}};
        return r;
    }

    CheckRecord multipartite() {
        CheckRecord r{"multipartite",
                      "complete multipartite: dim = n-m (s = 0) or n-m+s-1; gamma_L^k = dim_k except K_{1,n-1} at k = 1",
                      true};
        const std::size_t nmax = cap(10);
        std::uint64_t compared = 0;
        auto mismatches = nlohmann::ordered_json::array();
        for (std::size_t n = 3; n <= nmax; ++n)
            for (const auto& parts : partitions(n)) {
                if (parts.size() < 2) continue;
                const Instance inst(complete_multipartite(parts));
                for (Level k = 1; k <= 2; ++k) {
                    const std::size_t dim = value(inst, Problem::dimension(k));
                    const std::size_t gl = value(inst, Problem::locating(k));
                    ++compared;
                    if (dim != dim_k_multipartite(parts, k) || gl != gammaL_k_multipartite(parts, k))
                        mismatches.push_back({{"parts", parts}, {"k", k}, {"dim", dim},
                                              {"dim_formula", dim_k_multipartite(parts, k)}, {"gammaL", gl},
                                              {"gammaL_formula", gammaL_k_multipartite(parts, k)}});
                }
            }
        r.passed = mismatches.empty();
        r.details = {{"nmax", nmax}, {"compared", compared}, {"mismatches", mismatches}};
        return r;
    }

    /// Reports the cross-checks accumulated so far; when nothing has been
    /// cross-checked yet, solves the random corpus against the oracle first.
    CheckRecord oracle_agreement() {
        CheckRecord r{"oracle-agreement", "optimised solver equals the brute-force oracle", true};
        if (tally_.checked == 0)
            for (const auto& c : random_corpus(opt_.seed, opt_.corpus_size, opt_.corpus_max_n)) {
                const Instance inst(c.graph);
                for (Level k = 1; k <= 2; ++k)
                    for (auto p : {Problem::domination(k), Problem::dimension(k), Problem::locating(k)}) value(inst, p);
            }
        r.passed = tally_.checked > 0 && tally_.mismatches == 0;
        r.details = {{"oracle_slice", opt_.oracle_slice},
                     {"instances_checked", tally_.checked},
                     {"mismatches", tally_.mismatches},
                     {"first_mismatches", tally_.first_mismatches}};
        return r;
    }

    /// Partitions of n into nonincreasing positive parts.
    static std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t largest) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::size_t p = std::min(left, largest); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p);
                cur.pop_back();
            }
        };
        rec(n, n);
        return out;
    }

private:
    CheckRecord dispatch(const std::string& name) {
        if (name == "path-cycle") return path_cycle();
        if (name == "petersen") return petersen_graph();
        if (name == "remark-family") return remark_family();
        if (name == "spider") return spider_family();
        if (name == "bounds") return bounds();
        if (name == "characterization") return characterization();
        if (name == "tree-equality") return tree_equality();
        if (name == "edge-deletion") return edge_deletion();
        if (name == "multipartite") return multipartite();
        if (name == "oracle-agreement") return oracle_agreement();
        throw std::invalid_argument("unknown check '" + name + "'");
    }

    std::size_t cap(std::size_t fallback) const { return opt_.nmax != 0 ? opt_.nmax : fallback; }

    std::size_t value(const Instance& inst, const Problem& p) {
        const auto solved = solve(inst, p);
        if (inst.size() <= opt_.oracle_slice) {
            ++tally_.checked;
            if (brute_force_min(inst, p, opt_.oracle_slice).value != solved.value) {
                ++tally_.mismatches;
                if (tally_.first_mismatches.size() < 10)
                    tally_.first_mismatches.push_back(p.name() + " on graph with n=" + std::to_string(inst.size()) +
                                                      ", m=" + std::to_string(inst.graph().edge_count()));
            }
        }
        return solved.value;
    }

    HarnessOptions opt_;
    OracleTally tally_;
    std::map<std::string, double> elapsed_ms_;
};

}  // namespace kloc
