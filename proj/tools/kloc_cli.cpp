// kloc: exact distance-k domination, resolving and locating-dominating sets.
//
// Exit codes: 0 success, 1 a verification or check failed, 2 bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kloc/certify.hpp"
#include "kloc/edge_sweep.hpp"
#include "kloc/families.hpp"
#include "kloc/harness.hpp"
#include "kloc/io.hpp"
#include "kloc/report.hpp"
#include "kloc/solve.hpp"
#include "kloc/trees.hpp"

namespace {

using namespace kloc;
using Clock = std::chrono::steady_clock;
std::string command_echo;  // argv after the program name

struct LevelFlags {
    Level k = 1;
    std::optional<Level> s, t;
    Level s_or_k() const { return s.value_or(k); }
    Level t_or_k() const { return t.value_or(k); }
};

void add_level_flags(CLI::App* cmd, LevelFlags& f) {
    cmd->add_option("--k", f.k, "truncation level")->check(CLI::PositiveNumber);
    cmd->add_option("--s", f.s, "resolving level (defaults to --k)")->check(CLI::PositiveNumber);
    cmd->add_option("--t", f.t, "domination level (defaults to --k)")->check(CLI::PositiveNumber);
}

struct LoadedGraph {
    Graph graph;
    InputDigest digest;
};

LoadedGraph load(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    std::istringstream in(bytes);
    Graph g = read_edge_list(in);
    InputDigest d{g.size(), g.edge_count(), content_digest(bytes)};
    return {std::move(g), d};
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void finish(Report& report, const std::string& report_path, bool timing, double elapsed_ms) {
    if (timing) {
        report.timing = nlohmann::ordered_json{{"elapsed_ms", elapsed_ms}};
        std::cout << "time_ms: " << elapsed_ms << '\n';
    }
    if (report_path.empty()) return;
    std::ofstream out(report_path);
    if (!out) throw ParseError("cannot write '" + report_path + "'");
    out << report.to_json().dump(2) << '\n';
}

std::string join_vertices(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
    return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    if (text.empty() || text == "-") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            if (!item.empty() && item[0] == '-') throw std::invalid_argument(item);
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ParseError("expected a comma-separated list of integers, got '" + text + "'");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::string file, param = "gammaL", report;
    LevelFlags levels;
    bool no_timing = false;
};

int cmd_solve(const SolveArgs& a) {
    const auto start = Clock::now();
    auto [g, digest] = load(a.file);
    Problem p;
    if (a.param == "gamma") p = Problem::domination(a.levels.t_or_k());
    else if (a.param == "dim") p = Problem::dimension(a.levels.s_or_k());
    else p = Problem::locating(a.levels.s_or_k(), a.levels.t_or_k());

    const Instance inst(g);
    const auto r = solve(inst, p);
    std::cout << "parameter: " << p.name() << '\n'
              << "value: " << r.value << '\n'
              << "witness: " << join_vertices(r.witness.members()) << '\n'
              << "lower_bound_used: " << r.lower_bound_used << '\n'
              << "nodes_explored: " << r.nodes_explored << '\n';

    Report report;
    report.command = command_echo;
    report.input = digest;
    report.result = to_json(r);
    report.checks.push_back({"witness-certified", "the witness satisfies the defining predicate",
                             satisfies(inst, p, r.witness), {{"witness_size", r.witness.size()}}});
    finish(report, a.report, !a.no_timing, ms_since(start));
    return report.passed() ? 0 : 1;
}

struct VerifyArgs {
    std::string file, set, report;
    LevelFlags levels;
};

int cmd_verify(const VerifyArgs& a) {
    auto [g, digest] = load(a.file);
    const auto members = parse_list<Vertex>(a.set);
    for (Vertex v : members)
        if (v >= g.size()) throw ParseError("unknown vertex label " + std::to_string(v));
    const LandmarkSet set(members);
    const Instance inst(g);
    const Level s = a.levels.s_or_k(), t = a.levels.t_or_k();

    Report report;
    report.command = command_echo;
    report.input = digest;
    const auto pair = first_unresolved_pair(inst.metric(s), set);
    const auto lonely = first_undominated(inst.metric(t), set);

    CheckRecord resolving{"resolving", "every pair is separated under d_" + std::to_string(s), !pair};
    resolving.details["level"] = s;
    std::cout << "resolving (s=" << s << "): " << (pair ? "fail" : "pass");
    if (pair) {
        const auto code = code_vector(inst.metric(s), set, pair->first);
        resolving.details["unresolved_pair"] = {pair->first, pair->second};
        resolving.details["shared_code"] = code.entries;
        std::cout << " (vertices " << pair->first << " and " << pair->second << " share a code)";
    }
    std::cout << '\n';

    CheckRecord dominating{"dominating", "every vertex is within distance " + std::to_string(t) + " of the set", !lonely};
    dominating.details["level"] = t;
    std::cout << "dominating (t=" << t << "): " << (lonely ? "fail" : "pass");
    if (lonely) {
        dominating.details["undominated_vertex"] = *lonely;
        std::cout << " (vertex " << *lonely << " is undominated)";
    }
    std::cout << '\n';

    const bool both = !pair && !lonely;
    std::cout << "locating-dominating: " << (both ? "pass" : "fail") << '\n';
    report.checks.push_back(std::move(resolving));
    report.checks.push_back(std::move(dominating));
    report.checks.push_back({"locating-dominating", "resolving and dominating", both, nlohmann::ordered_json::object()});
    finish(report, a.report, false, 0);
    return both ? 0 : 1;
}

struct FamilyArgs {
    std::string kind, out;
    std::vector<std::string> params;
    bool list = false;
};

const std::vector<std::pair<std::string, std::string>>& family_kinds() {
    static const std::vector<std::pair<std::string, std::string>> kinds{
        {"path N", "P_N, N >= 2"},
        {"cycle N", "C_N, N >= 3"},
        {"complete N", "K_N, N >= 1"},
        {"multipartite A,B,...", "complete multipartite graph, at least 2 parts"},
        {"star N", "K_{1,N-1}, N >= 2"},
        {"join FILE FILE", "every vertex of the first graph joined to every vertex of the second"},
        {"union FILE FILE", "disjoint union (may be disconnected)"},
        {"complement FILE", "complement (may be disconnected)"},
        {"spider LEGS LEN", "LEGS >= 3 legs of length LEN >= 1"},
        {"remark_tree X ALPHA K", "X >= 1, ALPHA >= 3, K >= 1; gamma_K = X*ALPHA = dim_K + 1"},
        {"fig2 A", "A >= 3; the designated edge is written as a comment"},
        {"petersen", "Petersen graph"},
        {"caterpillar C1,C2,...", "spine with Ci pendant leaves on spine vertex i"},
        {"prufer S1,S2,...", "labelled tree from a Pruefer sequence ('-' for the empty sequence)"},
    };
    return kinds;
}

int cmd_family(const FamilyArgs& a) {
    if (a.list || a.kind.empty()) {
        for (const auto& [usage, text] : family_kinds()) std::cout << usage << "\t" << text << '\n';
        return 0;
    }
    auto need = [&](std::size_t count) {
        if (a.params.size() != count)
            throw ParseError("family " + a.kind + " takes " + std::to_string(count) + " parameter(s)");
    };
    auto num = [&](std::size_t i) {
        auto v = parse_list<std::size_t>(a.params.at(i));
        if (v.size() != 1) throw ParseError("expected one integer, got '" + a.params[i] + "'");
        return v[0];
    };
    FamilySpec spec;
    const std::string& k = a.kind;
    if (k == "path") need(1), spec = PathSpec{num(0)};
    else if (k == "cycle") need(1), spec = CycleSpec{num(0)};
    else if (k == "complete") need(1), spec = CompleteSpec{num(0)};
    else if (k == "multipartite") need(1), spec = MultipartiteSpec{parse_list<std::size_t>(a.params[0])};
    else if (k == "star") need(1), spec = StarSpec{num(0)};
    else if (k == "join") need(2), spec = JoinSpec{read_edge_list_file(a.params[0]), read_edge_list_file(a.params[1])};
    else if (k == "union") need(2), spec = UnionSpec{read_edge_list_file(a.params[0]), read_edge_list_file(a.params[1])};
    else if (k == "complement") need(1), spec = ComplementSpec{read_edge_list_file(a.params[0])};
    else if (k == "spider") need(2), spec = SpiderSpec{num(0), num(1)};
    else if (k == "remark_tree") need(3), spec = RemarkTreeSpec{num(0), num(1), static_cast<Level>(num(2))};
    else if (k == "fig2") need(1), spec = Fig2Spec{num(0)};
    else if (k == "petersen") need(0), spec = PetersenSpec{};
    else if (k == "caterpillar") need(1), spec = CaterpillarSpec{parse_list<std::size_t>(a.params[0])};
    else if (k == "prufer") {
        if (a.params.size() > 1) throw ParseError("family prufer takes at most 1 parameter");
        spec = PruferSpec{a.params.empty() ? std::vector<Vertex>{} : parse_list<Vertex>(a.params[0])};
    } else {
        throw ParseError("unknown family '" + k + "' (see family --list)");
    }

    const auto generated = generate(spec);
    std::ostringstream text;
    if (generated.designated_edge)
        text << "# designated edge: " << generated.designated_edge->first << ' ' << generated.designated_edge->second
             << '\n';
    write_edge_list(text, generated.graph);
    if (a.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(a.out);
        if (!out) throw ParseError("cannot write '" + a.out + "'");
        out << text.str();
        std::cout << "wrote " << a.out << ": n=" << generated.graph.size() << " m=" << generated.graph.edge_count();
        if (generated.designated_edge)
            std::cout << " designated_edge=" << generated.designated_edge->first << ','
                      << generated.designated_edge->second;
        std::cout << '\n';
    }
    return 0;
}

struct TreeSweepArgs {
    std::size_t max_n = 8;
    std::string levels = "1,2", report;
    std::size_t oracle_n = 0;
    unsigned threads = 1;
    bool no_timing = false;
};

int cmd_tree_sweep(const TreeSweepArgs& a) {
    const auto start = Clock::now();
    TreeSweepOptions o;
    o.max_n = a.max_n;
    o.levels = parse_list<Level>(a.levels);
    for (Level k : o.levels)
        if (k == 0) throw ParseError("levels must be at least 1");
    o.threads = a.threads;
    o.oracle_max_n = a.oracle_n;
    const auto summary = sweep_trees(o);
    for (const auto& r : summary.rows)
        std::cout << "n=" << r.n << " k=" << r.k << " trees=" << r.trees << " equality=" << r.equality_cases
                  << " predicted=" << r.predicted_cases << '\n';
    std::cout << "counterexamples: " << summary.counterexample_count << '\n';
    Report report;
    report.command = command_echo;
    report.result = to_json(summary);
    report.checks.push_back({"tree-upper-bound-and-equality",
                             "gamma_L^k(T) <= n - ex(T), equality iff k = 1, ex(T) >= 1 and ex(T)+sigma(T) = n",
                             summary.passed(),
                             {{"counterexample_count", summary.counterexample_count},
                              {"oracle_mismatches", summary.oracle_mismatches}}});
    finish(report, a.report, !a.no_timing, ms_since(start));
    return report.passed() ? 0 : 1;
}

struct EdgeSweepArgs {
    std::string file, report;
    Level k = 1;
    bool no_timing = false;
};

int cmd_edge_sweep(const EdgeSweepArgs& a) {
    const auto start = Clock::now();
    auto [g, digest] = load(a.file);
    const auto r = edge_sweep(g, a.k);
    std::cout << "gammaL_" << a.k << ": " << r.gammaL_before << "  dim_" << a.k << ": " << r.dim_before << '\n';
    std::cout << "edge\tgammaL(G-e)\tdelta\tdim(G-e)\tdelta\n";
    for (const auto& row : r.rows)
        std::cout << row.edge.first << '-' << row.edge.second << '\t' << row.gammaL_after << '\t' << row.gammaL_delta
                  << (row.gammaL_ok ? "" : "!") << '\t' << row.dim_after << '\t' << row.dim_delta
                  << (row.dim_ok ? "" : "!") << '\n';
    std::cout << "skipped_bridges: " << r.skipped_bridges << '\n';
    Report report;
    report.command = command_echo;
    report.input = digest;
    report.result = to_json(r);
    report.checks.push_back({"gammaL-deletion-bound", "change of gamma_L^k under deletion of a non-bridge edge",
                             r.gammaL_violations == 0, {{"violations", r.gammaL_violations}}});
    report.checks.push_back({"dim-deletion-bound", "change of dim_k under deletion of a non-bridge edge",
                             r.dim_violations == 0, {{"violations", r.dim_violations}}});
    finish(report, a.report, !a.no_timing, ms_since(start));
    return report.passed() ? 0 : 1;
}

struct HarnessArgs {
    HarnessOptions options;
    std::string report;
    bool no_timing = false;
};

int cmd_harness(const HarnessArgs& a) {
    const auto start = Clock::now();
    if (!a.options.only.empty()) {
        const auto& names = Harness::check_names();
        if (std::find(names.begin(), names.end(), a.options.only) == names.end())
            throw ParseError("unknown check '" + a.options.only + "'");
    }
    Harness h(a.options);
    Report report;
    report.command = command_echo;
    report.checks = h.run_all();
    for (const auto& c : report.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    if (!a.no_timing) {
        nlohmann::ordered_json per_check;
        for (const auto& [name, ms] : h.elapsed_ms()) per_check[name] = ms;
        report.timing = {{"checks_ms", per_check}};
    }
    std::cout << (report.passed() ? "all checks passed" : "some checks failed") << '\n';
    if (!a.no_timing) {
        const double ms = ms_since(start);
        report.timing->operator[]("elapsed_ms") = ms;
        std::cout << "time_ms: " << ms << '\n';
    }
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        if (!out) throw ParseError("cannot write '" + a.report + "'");
        out << report.to_json().dump(2) << '\n';
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distance-k domination, resolving and locating-dominating sets"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "compute gamma_k, dim_k or gamma_L^(s,t) exactly");
    solve_cmd->add_option("file", solve_args.file, "edge-list file")->required();
    solve_cmd->add_option("--param", solve_args.param, "gamma | dim | gammaL")
        ->check(CLI::IsMember({"gamma", "dim", "gammaL"}));
    add_level_flags(solve_cmd, solve_args.levels);
    solve_cmd->add_option("--report", solve_args.report, "write a JSON report");
    solve_cmd->add_flag("--no-timing", solve_args.no_timing, "omit timing fields");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check a vertex set against the predicates");
    verify_cmd->add_option("file", verify_args.file, "edge-list file")->required();
    verify_cmd->add_option("--set", verify_args.set, "comma-separated vertex ids")->required();
    add_level_flags(verify_cmd, verify_args.levels);
    verify_cmd->add_option("--report", verify_args.report, "write a JSON report");

    FamilyArgs family_args;
    auto* family_cmd = app.add_subcommand("family", "generate a named graph as an edge list");
    family_cmd->add_option("kind", family_args.kind, "family name");
    family_cmd->add_option("params", family_args.params, "family parameters");
    family_cmd->add_option("--out", family_args.out, "output file (default: standard output)");
    family_cmd->add_flag("--list", family_args.list, "list families and their parameters");

    TreeSweepArgs tree_args;
    auto* tree_cmd = app.add_subcommand("tree-sweep", "check the tree bound on every labelled tree");
    tree_cmd->add_option("--n", tree_args.max_n, "largest order")->check(CLI::Range(2, 10));
    tree_cmd->add_option("--k", tree_args.levels, "comma-separated levels");
    tree_cmd->add_option("--report", tree_args.report, "write a JSON report");
    tree_cmd->add_option("--oracle-n", tree_args.oracle_n, "also brute-force trees up to this order");
    tree_cmd->add_option("--threads", tree_args.threads, "worker threads")->check(CLI::PositiveNumber);
    tree_cmd->add_flag("--no-timing", tree_args.no_timing, "omit timing fields");

    EdgeSweepArgs edge_args;
    auto* edge_cmd = app.add_subcommand("edge-sweep", "delete each non-bridge edge and re-solve");
    edge_cmd->add_option("file", edge_args.file, "edge-list file")->required();
    edge_cmd->add_option("--k", edge_args.k, "truncation level")->check(CLI::PositiveNumber);
    edge_cmd->add_option("--report", edge_args.report, "write a JSON report");
    edge_cmd->add_flag("--no-timing", edge_args.no_timing, "omit timing fields");

    HarnessArgs harness_args;
    auto* harness_cmd = app.add_subcommand("harness", "run the verification checks");
    harness_cmd->add_option("--only", harness_args.options.only, "run a single check");
    harness_cmd->add_option("--nmax", harness_args.options.nmax, "override the order cap of each check");
    harness_cmd->add_option("--seed", harness_args.options.seed, "seed of the random-graph corpus");
    harness_cmd->add_option("--threads", harness_args.options.threads, "worker threads for the tree sweep")
        ->check(CLI::PositiveNumber);
    harness_cmd->add_option("--report", harness_args.report, "write a JSON report");
    harness_cmd->add_flag("--no-timing", harness_args.no_timing, "omit timing fields");

    for (int i = 1; i < argc; ++i) command_echo += (i > 1 ? " " : "") + std::string(argv[i]);
    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return cmd_solve(solve_args);
        if (*verify_cmd) return cmd_verify(verify_args);
        if (*family_cmd) return cmd_family(family_args);
        if (*tree_cmd) return cmd_tree_sweep(tree_args);
        if (*edge_cmd) return cmd_edge_sweep(edge_args);
        if (*harness_cmd) return cmd_harness(harness_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
