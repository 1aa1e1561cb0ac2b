#include <rainbowsat/canonical.hpp>
#include <rainbowsat/colorability.hpp>
#include <rainbowsat/constructions.hpp>
#include <rainbowsat/graph6.hpp>
#include <rainbowsat/json_io.hpp>
#include <rainbowsat/sat_numbers.hpp>
#include <rainbowsat/saturation.hpp>
#include <rainbowsat/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rainbowsat;
using nlohmann::json;

namespace {
    constexpr int exit_usage = 64;
    constexpr int exit_internal = 70;

    class UsageError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    struct RunConfig {
        double timeout_seconds = 60;
        std::uint64_t node_limit = 0;
        int threads = 1;
        bool json = false;
        std::uint64_t seed = 0;

        [[nodiscard]] auto search() const -> SearchOptions
        {
            SearchOptions s;
            s.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(timeout_seconds * 1000));
            s.node_limit = node_limit;
            return s;
        }

        [[nodiscard]] auto run() const -> RunOptions { return {search(), threads}; }
    };

    /// `@path` reads the first non-blank line of a file; anything else is literal.
    auto resolve(const std::string &arg) -> std::string
    {
        if (arg.empty() || arg[0] != '@')
            return arg;
        std::ifstream in(arg.substr(1));
        if (! in)
            throw UsageError("cannot read " + arg.substr(1));
        std::string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                continue;
            auto last = line.find_last_not_of(" \t\r");
            return line.substr(first, last - first + 1);
        }
        throw UsageError(arg.substr(1) + " holds no graph");
    }

    auto parse_graph(const std::string &arg) -> Graph
    {
        try {
            return graph6_decode(resolve(arg));
        }
        catch (const FormatError &ex) {
            throw UsageError(std::string{"bad graph '"} + arg + "': " + ex.what());
        }
    }

    auto parse_family(const std::vector<std::string> &args) -> std::vector<Pattern>
    {
        std::vector<Pattern> out;
        for (const auto &a : args) {
            try {
                out.push_back(parse_pattern(resolve(a)));
            }
            catch (const FormatError &ex) {
                throw UsageError("bad pattern '" + a + "': " + ex.what());
            }
            catch (const std::invalid_argument &ex) {
                throw UsageError("bad pattern '" + a + "': " + ex.what());
            }
        }
        return out;
    }

    auto status_code(Colorability c) -> int
    {
        switch (c) {
        case Colorability::colorable: return 0;
        case Colorability::uncolorable: return 1;
        case Colorability::indeterminate: return 2;
        }
        return 2;
    }

    auto status_code(SaturationStatus s) -> int
    {
        switch (s) {
        case SaturationStatus::saturated: return 0;
        case SaturationStatus::not_saturated: return 1;
        case SaturationStatus::indeterminate: return 2;
        }
        return 2;
    }

    void print_json(const json &j) { std::cout << j.dump(2) << '\n'; }

    auto cmd_colorable(const RunConfig &cfg, const std::string &graph, const std::vector<std::string> &patterns) -> int
    {
        auto g = parse_graph(graph);
        auto family = parse_family(patterns);
        auto r = rainbow_free_colorable(g, family, cfg.search());
        if (cfg.json)
            print_json(colorability_to_json(g, r));
        else {
            std::cout << to_string(r.status) << '\n';
            if (r.witness)
                std::cout << coloring_to_text(g, *r.witness);
            std::cout << "nodes " << r.stats.nodes << ", embeddings " << r.stats.embeddings << '\n';
        }
        return status_code(r.status);
    }

    auto cmd_check(const RunConfig &cfg, const std::string &graph, const std::vector<std::string> &patterns) -> int
    {
        auto g = parse_graph(graph);
        auto family = parse_family(patterns);
        auto v = is_rainbow_saturated(g, family, {cfg.search(), true});
        if (cfg.json)
            print_json(verdict_to_json(g, v));
        else {
            std::cout << to_string(v.status) << '\n';
            if (v.condition_a != Colorability::colorable)
                std::cout << "condition (a): " << to_string(v.condition_a) << '\n';
            if (v.failing_edge) {
                std::cout << "failing edge " << to_string(*v.failing_edge) << '\n';
                if (v.failing_coloring)
                    std::cout << coloring_to_text(g.with_edge(*v.failing_edge), *v.failing_coloring);
            }
            else if (v.witness_coloring)
                std::cout << coloring_to_text(g, *v.witness_coloring);
            std::cout << "non-edges checked " << v.refutations.size() << ", nodes " << v.stats.nodes << '\n';
        }
        return status_code(v.status);
    }

    void print_sat_result(const RunConfig &cfg, const SatNumberResult &r, std::string_view label)
    {
        if (cfg.json) {
            print_json(sat_result_to_json(r));
            return;
        }
        std::cout << label << '(' << r.n << ") = ";
        if (r.value)
            std::cout << *r.value << '\n';
        else
            std::cout << "none (no saturated graph on " << r.n << " vertices)\n";
        for (const auto &w : r.witnesses)
            std::cout << graph6_encode(w) << '\n';
        std::cout << "graphs examined " << r.stats.graphs_examined << '\n';
    }

    auto cmd_satstar(const RunConfig &cfg, int n, const std::vector<std::string> &patterns) -> int
    {
        auto family = parse_family(patterns);
        try {
            print_sat_result(cfg, sat_star_exact(n, family, cfg.run()), "sat*");
        }
        catch (const SearchIndeterminate &ex) {
            std::cerr << "INDETERMINATE: " << ex.what() << '\n';
            return 2;
        }
        return 0;
    }

    auto cmd_sat(const RunConfig &cfg, int n, const std::string &pattern) -> int
    {
        auto family = parse_family({pattern});
        print_sat_result(cfg, sat_exact(n, family[0], cfg.threads), "sat");
        return 0;
    }

    struct ConstructArgs {
        std::string kind;
        int n = 0;
        int r = 3;
        std::string pattern = "K3";
        std::string sizing = "adaptive";
        bool verify = false;
    };

    auto cmd_construct(const RunConfig &cfg, const ConstructArgs &a) -> int
    {
        ColoredGraph built;
        std::optional<LadderTrace> trace;
        std::vector<Pattern> family;
        try {
            if (a.kind == "ehm") {
                built.graph = ehm_graph(a.n, a.r);
                family.emplace_back(complete_graph(a.r));
            }
            else if (a.kind == "p4") {
                built = p4_construction(a.n);
                family.emplace_back(path_graph(4));
            }
            else if (a.kind == "wheel") {
                built = wheel_construction(a.n);
                family.emplace_back(cycle_graph(4));
            }
            else {
                family = parse_family({a.pattern});
                LadderOptions opts{a.sizing == "cubic" ? LadderSizing::cubic : LadderSizing::adaptive, cfg.search()};
                auto result = ladder_construction(family[0].graph(), a.n, opts);
                built.graph = result.graph;
                trace = result.trace;
            }
        }
        catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }

        // The join construction is checked against classical saturation, the others against rainbow saturation.
        std::optional<SaturationVerdict> verdict;
        if (a.verify && a.kind == "ehm") {
            verdict.emplace();
            verdict->status = is_classically_saturated(built.graph, family[0]).saturated ? SaturationStatus::saturated
                                                                                          : SaturationStatus::not_saturated;
        }
        else if (a.verify)
            verdict = is_rainbow_saturated(built.graph, family, {cfg.search(), true});

        if (cfg.json) {
            json out{{"kind", a.kind}, {"graph6", graph6_encode(built.graph)}, {"n", built.graph.order()},
                     {"edges", built.graph.size()}};
            if (! built.coloring.classes.empty())
                out["coloring"] = coloring_to_json(built.coloring);
            if (trace)
                out["trace"] = ladder_trace_to_json(*trace);
            if (verdict)
                out["verdict"] = a.kind == "ehm" ? json{{"status", to_string(verdict->status)}, {"classical", true}}
                                                 : verdict_to_json(built.graph, *verdict);
            print_json(out);
        }
        else {
            std::cout << graph6_encode(built.graph) << '\n';
            if (! built.coloring.classes.empty())
                std::cout << coloring_to_json(built.coloring).dump() << '\n';
            if (trace)
                std::cout << ladder_trace_to_json(*trace).dump() << '\n';
            if (verdict)
                std::cout << to_string(verdict->status) << '\n';
        }
        return verdict ? status_code(verdict->status) : 0;
    }

    auto cmd_verify(const RunConfig &cfg, const std::vector<std::string> &only, bool quick) -> int
    {
        VerifyOptions options{cfg.run(), ! quick};
        VerifyReport report;
        try {
            report = verify_claims(only, options);
        }
        catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
        bool indeterminate = false;
        for (const auto &c : report.claims)
            for (const auto &k : c.checks)
                indeterminate = indeterminate || k.indeterminate;

        if (cfg.json)
            print_json(report_to_json(report, options));
        else
            for (const auto &c : report.claims) {
                std::cout << (c.passed() ? "PASS " : "FAIL ") << c.id << ": " << c.summary << '\n';
                for (const auto &k : c.checks)
                    if (! k.passed)
                        std::cout << "    " << (k.indeterminate ? "INDETERMINATE " : "failed ") << k.name << ' '
                                  << k.detail.dump() << '\n';
            }
        if (report.passed())
            return 0;
        return indeterminate ? 2 : 1;
    }

    auto cmd_gadget(const RunConfig &cfg, const std::string &name) -> int
    {
        Gadget g;
        try {
            g = gadget(parse_gadget_kind(name));
        }
        catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
        if (cfg.json)
            print_json({{"name", g.name}, {"graph6", graph6_encode(g.graph)}, {"marked", edge_to_json(g.marked)},
                        {"graph", graph_to_json(g.graph)}});
        else
            std::cout << graph6_encode(g.graph) << "\nmarked edge " << to_string(g.marked) << '\n';
        return 0;
    }

    auto cmd_saturate(const RunConfig &cfg, const std::string &graph, const std::vector<std::string> &patterns,
                      bool random) -> int
    {
        auto g = parse_graph(graph);
        auto family = parse_family(patterns);
        auto order = random ? GreedyOrder::random(cfg.seed) : GreedyOrder::lexicographic();
        Graph result;
        try {
            result = greedy_saturate(g, family, order, cfg.search());
        }
        catch (const SearchIndeterminate &ex) {
            std::cerr << "INDETERMINATE: " << ex.what() << '\n';
            return 2;
        }
        catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
        if (cfg.json)
            print_json({{"graph6", graph6_encode(result)}, {"edges", result.size()}, {"seed", cfg.seed}, {"random", random}});
        else
            std::cout << graph6_encode(result) << '\n' << result.size() << " edges\n";
        return 0;
    }
}

auto main(int argc, char *argv[]) -> int
{
    CLI::App app{"Rainbow saturation workbench: rainbow-free colorability, saturation checks, exact numbers and "
                 "constructions.\nExit codes: 0 COLORABLE/SATURATED/pass, 1 UNCOLORABLE/NOT_SATURATED/fail, "
                 "2 INDETERMINATE, 64 bad input."};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--timeout", cfg.timeout_seconds, "Seconds per subsearch")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--node-limit", cfg.node_limit, "Search nodes per subsearch (0 = unlimited)");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    app.add_flag("--json", cfg.json, "Emit JSON");
    app.add_option("--seed", cfg.seed, "Seed for randomized greedy order");

    std::string graph, pattern, gadget_name;
    std::vector<std::string> patterns, only;
    int n = 0;
    bool random = false, quick = false;
    ConstructArgs construct;
    int code = 0;

    auto *colorable = app.add_subcommand("colorable", "Is there a proper coloring with no rainbow pattern?");
    colorable->add_option("graph", graph, "graph6 or @file")->required();
    colorable->add_option("patterns", patterns, "Names (K4, P4, C4, K1_4, ...) or graph6")->required();
    colorable->callback([&] { code = cmd_colorable(cfg, graph, patterns); });

    auto *check = app.add_subcommand("check", "Is the graph rainbow saturated for the patterns?");
    check->add_option("graph", graph, "graph6 or @file")->required();
    check->add_option("patterns", patterns, "Pattern names or graph6")->required();
    check->callback([&] { code = cmd_check(cfg, graph, patterns); });

    auto *satstar = app.add_subcommand("satstar", "Exact rainbow saturation number");
    satstar->add_option("n", n, "Vertex count")->required()->check(CLI::Range(1, max_exhaustive_order));
    satstar->add_option("patterns", patterns, "Pattern names or graph6")->required();
    satstar->callback([&] { code = cmd_satstar(cfg, n, patterns); });

    auto *sat = app.add_subcommand("sat", "Exact classical saturation number");
    sat->add_option("n", n, "Vertex count")->required()->check(CLI::Range(1, max_exhaustive_order));
    sat->add_option("pattern", pattern, "Pattern name or graph6")->required();
    sat->callback([&] { code = cmd_sat(cfg, n, pattern); });

    auto *cons = app.add_subcommand("construct", "Emit a construction");
    cons->add_option("kind", construct.kind, "ehm | p4 | wheel | ladder")
        ->required()
        ->check(CLI::IsMember({"ehm", "p4", "wheel", "ladder"}));
    cons->add_option("--n", construct.n, "Vertex count")->required()->check(CLI::Range(1, max_vertices));
    cons->add_option("--r", construct.r, "Clique order for ehm")->capture_default_str();
    cons->add_option("--pattern", construct.pattern, "Pattern for ladder")->capture_default_str();
    cons->add_option("--sizing", construct.sizing, "Ladder independent-set sizing")
        ->check(CLI::IsMember({"adaptive", "cubic"}))
        ->capture_default_str();
    cons->add_flag("--verify", construct.verify, "Check saturation of the result");
    cons->callback([&] { code = cmd_construct(cfg, construct); });

    auto *verify = app.add_subcommand("verify-paper", "Run the claim verification suite");
    verify->add_option("--only", only, "Claim ids")->delimiter(',');
    verify->add_flag("--quick", quick, "Skip the extended checks");
    verify->callback([&] { code = cmd_verify(cfg, only, quick); });

    auto *gad = app.add_subcommand("gadget", "Print a fixed gadget graph and its marked edge");
    gad->add_option("kind", gadget_name, "GA | GB | P4_fig2_left | P4_fig2_right | P4_fig3_a | P4_fig3_b | P4_fig3_c")
        ->required();
    gad->callback([&] { code = cmd_gadget(cfg, gadget_name); });

    auto *saturate = app.add_subcommand("saturate", "Greedily add edges while colorability holds");
    saturate->add_option("graph", graph, "Starting graph, graph6 or @file")->required();
    saturate->add_option("patterns", patterns, "Pattern names or graph6")->required();
    saturate->add_flag("--random", random, "Shuffle candidate edges with --seed");
    saturate->callback([&] { code = cmd_saturate(cfg, graph, patterns, random); });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }
    catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return code;
}
