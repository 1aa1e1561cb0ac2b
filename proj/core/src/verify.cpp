#include <rainbowsat/canonical.hpp>
#include <rainbowsat/constructions.hpp>
#include <rainbowsat/graph6.hpp>
#include <rainbowsat/json_io.hpp>
#include <rainbowsat/saturation.hpp>
#include <rainbowsat/verify.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rainbowsat {

using nlohmann::json;

auto ClaimResult::passed() const -> bool
{
    return ! checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

auto VerifyReport::passed() const -> bool
{
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult &c) { return c.passed(); });
}

namespace {
    using CheckBody = std::function<bool(json &detail)>;

    void run_check(ClaimResult &claim, std::string name, const CheckBody &body)
    {
        CheckResult check;
        check.name = std::move(name);
        try {
            check.passed = body(check.detail);
        }
        catch (const SearchIndeterminate &ex) {
            check.passed = false;
            check.indeterminate = true;
            check.detail["error"] = ex.what();
        }
        claim.checks.push_back(std::move(check));
    }

    auto label(int n) -> std::string { return "n=" + std::to_string(n); }

    auto encode_all(const std::vector<Graph> &graphs) -> json
    {
        auto out = json::array();
        for (const auto &g : graphs)
            out.push_back(graph6_encode(g));
        return out;
    }

    auto one(const Graph &g) -> std::vector<Pattern> { return {Pattern(g)}; }

    auto saturation_options(const VerifyOptions &o) -> SaturationOptions { return {o.run.search, true}; }

    auto verify_ehm(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"ehm", "classical K_r saturation equals (r-2)(n-r+2)+C(r-2,2), uniquely attained by K_{r-2}+E_{n-r+2}", {}};
        for (int n = 3; n <= 7; ++n)
            for (int r = 3; r <= n; ++r)
                run_check(claim, label(n) + " r=" + std::to_string(r), [&](json &d) {
                    auto result = sat_exact(n, Pattern(complete_graph(r)), o.run.threads);
                    auto expected = sat_formula_oracle(SatFormula::ehm, n, r);
                    const bool unique = result.witnesses.size() == 1 && are_isomorphic(result.witnesses[0], ehm_graph(n, r));
                    d["expected"] = expected;
                    d["value"] = result.value ? json(*result.value) : json(nullptr);
                    d["witnesses"] = encode_all(result.witnesses);
                    d["unique_extremal"] = unique;
                    return result.value && *result.value == expected && unique;
                });
        return claim;
    }

    auto verify_formula(std::string id, std::string summary, const Graph &h, SatFormula f, int lo, int hi,
                        const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{std::move(id), std::move(summary), {}};
        for (int n = lo; n <= hi; ++n)
            run_check(claim, label(n), [&](json &d) {
                auto result = sat_exact(n, Pattern(h), o.run.threads);
                auto expected = sat_formula_oracle(f, n);
                d["expected"] = expected;
                d["value"] = result.value ? json(*result.value) : json(nullptr);
                d["witnesses"] = encode_all(result.witnesses);
                return result.value && *result.value == expected;
            });
        return claim;
    }

    auto verify_p3(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"p3-footnote", "rainbow and classical saturation numbers of P3 coincide", {}};
        for (int n = 3; n <= 7; ++n)
            run_check(claim, label(n), [&](json &d) {
                auto family = one(path_graph(3));
                auto rainbow = sat_star_exact(n, family, o.run);
                auto classical = sat_exact(n, family[0], o.run.threads);
                d["rainbow"] = sat_result_to_json(rainbow);
                d["classical"] = classical.value ? json(*classical.value) : json(nullptr);
                return rainbow.value && classical.value && *rainbow.value == *classical.value;
            });
        return claim;
    }

    auto verify_wheel(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"c4-wheel", "the coloured wheel is proper, rainbow-C4-free and rainbow C4-saturated", {}};
        const auto c4 = one(cycle_graph(4));
        for (int n = 6; n <= 9; ++n)
            run_check(claim, label(n), [&](json &d) {
                auto w = wheel_construction(n);
                const bool proper = is_proper(w.graph, w.coloring);
                const bool rainbow_free = proper && ! find_rainbow_embedding(w.graph, w.coloring, c4[0]);
                // Every copy repeats the class of its spoke on its opposite rim edge.
                bool paired = true;
                for (const auto &copy : enumerate_embeddings(w.graph, c4[0]).copies) {
                    std::vector<int> classes;
                    for (int idx : copy)
                        classes.push_back(w.coloring.classes[static_cast<std::size_t>(idx)]);
                    std::sort(classes.begin(), classes.end());
                    paired = paired && std::adjacent_find(classes.begin(), classes.end()) != classes.end();
                }
                auto verdict = is_rainbow_saturated(w.graph, c4, saturation_options(o));
                const bool counted = w.graph.size() == static_cast<std::size_t>(2 * (n - 1));
                d["graph6"] = graph6_encode(w.graph);
                d["edges"] = w.graph.size();
                d["proper"] = proper;
                d["rainbow_free"] = rainbow_free;
                d["repeated_class_in_every_copy"] = paired;
                d["status"] = to_string(verdict.status);
                return proper && rainbow_free && paired && counted && verdict.status == SaturationStatus::saturated;
            });

        const auto ga = gadget(GadgetKind::ga).graph, gb = gadget(GadgetKind::gb).graph;
        for (const auto &g : {ga, gb})
            run_check(claim, "gadget " + graph6_encode(g), [&](json &d) {
                auto r = rainbow_free_colorable(g, c4, o.run.search);
                d["status"] = to_string(r.status);
                return r.status == Colorability::uncolorable;
            });
        for (int n = 10; n <= 14; ++n)
            run_check(claim, label(n) + " containment", [&](json &d) {
                auto w = wheel_graph(n);
                int covered = 0, total = 0;
                json missing = json::array();
                for (const auto &e : w.non_edges()) {
                    ++total;
                    auto host = w.with_edge(e);
                    if (contains_subgraph(host, ga) || contains_subgraph(host, gb))
                        ++covered;
                    else
                        missing.push_back(edge_to_json(e));
                }
                d["non_edges"] = total;
                d["covered"] = covered;
                d["uncovered"] = missing;
                d["edges"] = w.size();
                return covered == total && w.size() == static_cast<std::size_t>(2 * (n - 1));
            });
        return claim;
    }

    auto verify_degree_one(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"c4-degree-one",
                          "rainbow C4-saturated graphs have at most one degree-1 vertex and n-2 <= sat* <= 2n-2", {}};
        for (int n = 5; n <= 7; ++n)
            run_check(claim, label(n), [&](json &d) {
                auto all = all_rainbow_saturated(n, one(cycle_graph(4)), o.run);
                int worst = 0;
                for (const auto &g : all)
                    worst = std::max(worst, structural_property_checks(g, 4).degree_one_vertices);
                d["saturated_graphs"] = all.size();
                d["max_degree_one_vertices"] = worst;
                if (all.empty()) {
                    d["sat_star"] = nullptr;
                    return false;
                }
                const auto value = static_cast<int>(all.front().size());
                d["sat_star"] = value;
                d["bounds"] = json::array({n - 2, 2 * n - 2});
                return worst <= 1 && value >= n - 2 && value <= 2 * n - 2;
            });
        return claim;
    }

    auto verify_p4(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"p4", "K4 and K_{1,4} components form a rainbow P4-saturated graph with (4n+14a)/5 edges", {}};
        const auto p4 = one(path_graph(4));
        for (int n = 16; n <= 18; ++n)
            run_check(claim, label(n), [&](json &d) {
                auto c = p4_construction(n);
                const int a = ((-n) % 5 + 5) % 5;
                const auto expected = static_cast<std::size_t>((4 * n + 14 * a) / 5);
                const bool proper = is_proper(c.graph, c.coloring);
                const bool rainbow_free = proper && ! find_rainbow_embedding(c.graph, c.coloring, p4[0]);
                std::map<std::string, int> parts;
                for (const auto &comp : component_decomposition(c.graph))
                    ++parts[graph6_encode(canonical_form(comp.graph).representative())];
                std::map<std::string, int> expected_parts;
                if (a > 0)
                    expected_parts[graph6_encode(canonical_form(complete_graph(4)).representative())] = a;
                if (n - 4 * a > 0)
                    expected_parts[graph6_encode(canonical_form(star_graph(4)).representative())] = (n - 4 * a) / 5;
                const bool shape = parts == expected_parts;
                auto verdict = is_rainbow_saturated(c.graph, p4, saturation_options(o));
                d["a"] = a;
                d["edges"] = c.graph.size();
                d["expected_edges"] = expected;
                d["proper"] = proper;
                d["rainbow_free"] = rainbow_free;
                d["components"] = parts;
                d["status"] = to_string(verdict.status);
                return c.graph.size() == expected && proper && rainbow_free && shape &&
                       verdict.status == SaturationStatus::saturated;
            });
        for (auto kind : gadget_kinds()) {
            if (kind == GadgetKind::ga || kind == GadgetKind::gb)
                continue;
            const bool forcing = kind == GadgetKind::p4_fig2_left || kind == GadgetKind::p4_fig2_right;
            auto gd = gadget(kind);
            run_check(claim, "gadget " + gd.name, [&](json &d) {
                auto r = rainbow_free_colorable(gd.graph, p4, o.run.search);
                d["graph6"] = graph6_encode(gd.graph);
                d["marked"] = edge_to_json(gd.marked);
                d["status"] = to_string(r.status);
                d["expected"] = forcing ? "UNCOLORABLE" : "COLORABLE";
                return r.status == (forcing ? Colorability::uncolorable : Colorability::colorable);
            });
        }
        return claim;
    }

    auto verify_k4_ratio(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"k4-ratio", "rainbow K4 saturation exceeds 5/4 of the classical number", {}};
        const auto k4 = one(complete_graph(4));
        const int top = o.extended ? 6 : 5;
        for (int n = 5; n <= top; ++n)
            run_check(claim, label(n) + (n > 5 ? " (extended)" : ""), [&](json &d) {
                auto rainbow = sat_star_exact(n, k4, o.run);
                auto classical = sat_exact(n, k4[0], o.run.threads);
                d["rainbow"] = sat_result_to_json(rainbow);
                d["classical"] = classical.value ? json(*classical.value) : json(nullptr);
                return rainbow.value && classical.value && 4 * *rainbow.value > 5 * *classical.value;
            });
        const int audit_top = o.extended ? 7 : 6;
        for (int n = 4; n <= audit_top; ++n)
            run_check(claim, label(n) + " audit" + (n > 6 ? " (extended)" : ""), [&](json &d) {
                auto all = all_rainbow_saturated(n, k4, o.run);
                int pairs = 0;
                for (const auto &g : all)
                    pairs += static_cast<int>(structural_property_checks(g, 4).low_degree_pairs.size());
                d["saturated_graphs"] = all.size();
                d["nonadjacent_degree_two_pairs"] = pairs;
                return pairs == 0;
            });
        return claim;
    }

    auto same_members(const std::vector<Graph> &level, const std::vector<Graph> &expected) -> bool
    {
        if (level.size() != expected.size())
            return false;
        for (std::size_t i = 0; i < level.size(); ++i)
            if (! are_isomorphic(level[i], expected[i]))
                return false;
        return true;
    }

    void ladder_checks(ClaimResult &claim, int r, int lo, int hi, const VerifyOptions &o)
    {
        const auto name = "K" + std::to_string(r);
        run_check(claim, name + " levels", [&](json &d) {
            auto ladder = build_family_ladder(complete_graph(r));
            bool ok = ladder.depth() == r - 2;
            for (int i = 0; ok && i <= ladder.depth(); ++i)
                ok = same_members(ladder.levels[static_cast<std::size_t>(i)], {complete_graph(r - i)});
            auto levels = json::array();
            for (const auto &level : ladder.levels)
                levels.push_back(encode_all(level));
            d["levels"] = levels;
            d["alphas"] = ladder.alphas;
            d["orders"] = ladder.orders;
            return ok;
        });

        const auto family = one(complete_graph(r));
        std::vector<LadderResult> built;
        for (int n = lo; n <= hi; ++n)
            run_check(claim, name + " " + label(n), [&](json &d) {
                LadderOptions lo_opts{LadderSizing::adaptive, o.run.search};
                auto result = ladder_construction(complete_graph(r), n, lo_opts);
                auto verdict = is_rainbow_saturated(result.graph, family, saturation_options(o));
                d["graph6"] = graph6_encode(result.graph);
                d["edges"] = result.graph.size();
                d["trace"] = ladder_trace_to_json(result.trace);
                d["status"] = to_string(verdict.status);
                built.push_back(result);
                return verdict.status == SaturationStatus::saturated;
            });

        run_check(claim, name + " linearity", [&](json &d) {
            if (built.empty())
                return false;
            // Each step adds at most |I|^2 + |I| n_i <= (|I|^2 + |I|) n edges.
            double base_ratio = 0;
            std::vector<int> sizes(built.front().trace.steps.size(), 0);
            for (const auto &b : built) {
                base_ratio = std::max(base_ratio, static_cast<double>(b.trace.base_edges) / b.trace.base_order);
                for (std::size_t j = 0; j < b.trace.steps.size(); ++j)
                    sizes[j] = std::max(sizes[j], b.trace.steps[j].independent_set_size);
            }
            double c = base_ratio;
            for (int s : sizes)
                c += s + static_cast<double>(s) * s;
            double worst = 0;
            for (const auto &b : built)
                worst = std::max(worst, static_cast<double>(b.graph.size()) / b.graph.order());
            d["constant"] = c;
            d["max_edges_per_vertex"] = worst;
            return worst <= c;
        });
    }

    auto verify_ladder(const VerifyOptions &o) -> ClaimResult
    {
        ClaimResult claim{"ladder", "the independent-set ladder yields linear-size rainbow K_r-saturated graphs", {}};
        ladder_checks(claim, 3, 3, 14, o);
        ladder_checks(claim, 4, 5, 14, o);
        run_check(claim, "K3 full-size independent sets n=31..34", [&](json &d) {
            bool ok = true;
            auto rows = json::array();
            for (int n = 31; n <= 34; ++n) {
                auto result = ladder_construction(complete_graph(3), n, {LadderSizing::cubic, o.run.search});
                auto verdict = is_rainbow_saturated(result.graph, one(complete_graph(3)), saturation_options(o));
                rows.push_back({{"n", n}, {"edges", result.graph.size()}, {"status", to_string(verdict.status)}});
                ok = ok && verdict.status == SaturationStatus::saturated;
            }
            d["runs"] = rows;
            return ok;
        });
        return claim;
    }

    using Runner = ClaimResult (*)(const VerifyOptions &);

    auto registry() -> const std::vector<std::pair<std::string, Runner>> &
    {
        static const std::vector<std::pair<std::string, Runner>> claims{
            {"ehm", verify_ehm},
            {"p4-classical",
             [](const VerifyOptions &o) {
                 return verify_formula("p4-classical", "classical P4 saturation is n/2 for even n and (n+3)/2 for odd n",
                                       path_graph(4), SatFormula::kt_p4, 4, 8, o);
             }},
            {"c4-classical",
             [](const VerifyOptions &o) {
                 return verify_formula("c4-classical", "classical C4 saturation is floor((3n-5)/2)", cycle_graph(4),
                                       SatFormula::c4, 4, 7, o);
             }},
            {"p3-footnote", verify_p3},
            {"c4-wheel", verify_wheel},
            {"c4-degree-one", verify_degree_one},
            {"p4", verify_p4},
            {"k4-ratio", verify_k4_ratio},
            {"ladder", verify_ladder},
        };
        return claims;
    }
}

auto claim_ids() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto &[id, run] : registry())
        out.push_back(id);
    return out;
}

auto verify_claim(std::string_view id, const VerifyOptions &options) -> ClaimResult
{
    for (const auto &[name, run] : registry())
        if (name == id)
            return run(options);
    throw std::invalid_argument("unknown claim '" + std::string{id} + "'");
}

auto verify_claims(std::span<const std::string> selection, const VerifyOptions &options) -> VerifyReport
{
    for (const auto &id : selection)
        if (std::none_of(registry().begin(), registry().end(), [&](const auto &entry) { return entry.first == id; }))
            throw std::invalid_argument("unknown claim '" + id + "'");
    VerifyReport report;
    for (const auto &[id, run] : registry())
        if (selection.empty() || std::find(selection.begin(), selection.end(), id) != selection.end())
            report.claims.push_back(run(options));
    return report;
}

auto report_to_json(const VerifyReport &report, const VerifyOptions &options) -> json
{
    auto claims = json::array();
    for (const auto &c : report.claims) {
        auto checks = json::array();
        for (const auto &k : c.checks)
            checks.push_back({{"name", k.name}, {"passed", k.passed}, {"indeterminate", k.indeterminate}, {"detail", k.detail}});
        claims.push_back({{"id", c.id}, {"summary", c.summary}, {"passed", c.passed()}, {"checks", checks}});
    }
    return {{"schema", verify_schema},
            {"budget",
             {{"timeout_ms", options.run.search.timeout.count()},
              {"node_limit", options.run.search.node_limit},
              {"extended", options.extended}}},
            {"passed", report.passed()},
            {"claims", claims}};
}

} // namespace rainbowsat
