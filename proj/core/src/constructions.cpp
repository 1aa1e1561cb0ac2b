#include <rainbowsat/canonical.hpp>
#include <rainbowsat/constructions.hpp>
#include <rainbowsat/independent_set.hpp>
#include <rainbowsat/saturation.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace rainbowsat {

auto ehm_graph(int n, int r) -> Graph
{
    if (r < 2 || r > n)
        throw std::invalid_argument("ehm_graph: need 2 <= r <= n");
    if (r == 2)
        return empty_graph(n);
    return join(complete_graph(r - 2), empty_graph(n - r + 2));
}

auto p4_construction(int n) -> ColoredGraph
{
    if (n < 16 || n > max_vertices)
        throw std::invalid_argument("p4_construction: need 16 <= n <= 64");
    const int a = ((-n) % 5 + 5) % 5;
    const int stars = (n - 4 * a) / 5;

    std::vector<Graph> parts;
    for (int i = 0; i < a; ++i)
        parts.push_back(complete_graph(4));
    for (int i = 0; i < stars; ++i)
        parts.push_back(star_graph(4));
    ColoredGraph out{disjoint_union(parts), {}};
    out.coloring.classes.assign(out.graph.size(), -1);

    auto set = [&](int u, int v, int c) {
        out.coloring.classes[static_cast<std::size_t>(out.graph.edge_index(u, v))] = c;
    };
    int offset = 0;
    for (int i = 0; i < a; ++i, offset += 4) {
        const int x = offset, y = offset + 1, z = offset + 2, w = offset + 3;
        set(x, y, 0), set(z, w, 0);
        set(x, z, 1), set(y, w, 1);
        set(x, w, 2), set(y, z, 2);
    }
    for (int i = 0; i < stars; ++i, offset += 5)
        for (int leaf = 1; leaf <= 4; ++leaf)
            set(offset, offset + leaf, leaf - 1);
    return out;
}

auto wheel_construction(int n) -> ColoredGraph
{
    if (n < 6 || n > max_vertices)
        throw std::invalid_argument("wheel_construction: need 6 <= n <= 64");
    ColoredGraph out{wheel_graph(n), {}};
    out.coloring.classes.assign(out.graph.size(), -1);
    const int rim = n - 1, hub = n - 1;
    for (int i = 1; i <= rim; ++i) {
        const int vi = i - 1, next = i % rim, after = (i + 1) % rim;
        out.coloring.classes[static_cast<std::size_t>(out.graph.edge_index(hub, vi))] = i - 1;
        out.coloring.classes[static_cast<std::size_t>(out.graph.edge_index(next, after))] = i - 1;
    }
    return out;
}

namespace {
    struct GadgetSpec {
        GadgetKind kind;
        std::string_view name;
        int n;
        std::vector<Edge> edges;
        Edge marked;
    };

    auto gadget_specs() -> const std::vector<GadgetSpec> &
    {
        // GA: w=0, a..e=1..5. GB: w=0, a..f=1..6.
        static const std::vector<GadgetSpec> specs{
            {GadgetKind::ga, "GA", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, {2, 4}},
            {GadgetKind::gb, "GB", 7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {4, 5}, {5, 6}},
             {2, 5}},
            {GadgetKind::p4_fig2_left, "P4_fig2_left", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {1, 2}},
            {GadgetKind::p4_fig2_right, "P4_fig2_right", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {1, 5}},
            {GadgetKind::p4_fig3_a, "P4_fig3_a", 3, {{0, 1}, {0, 2}}, {1, 2}},
            {GadgetKind::p4_fig3_b, "P4_fig3_b", 4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2}},
            {GadgetKind::p4_fig3_c, "P4_fig3_c", 4, {{0, 1}, {0, 2}, {1, 3}}, {2, 3}},
        };
        return specs;
    }

    auto spec_of(GadgetKind kind) -> const GadgetSpec &
    {
        for (const auto &s : gadget_specs())
            if (s.kind == kind)
                return s;
        throw std::invalid_argument("gadget: unknown kind");
    }
}

auto gadget(GadgetKind kind) -> Gadget
{
    const auto &s = spec_of(kind);
    auto g = Graph::from_edges(s.n, s.edges);
    g.add_edge(s.marked.u, s.marked.v);
    return {kind, std::string{s.name}, g, s.marked};
}

auto gadget_kinds() -> std::vector<GadgetKind>
{
    std::vector<GadgetKind> out;
    for (const auto &s : gadget_specs())
        out.push_back(s.kind);
    return out;
}

auto parse_gadget_kind(std::string_view name) -> GadgetKind
{
    for (const auto &s : gadget_specs())
        if (s.name == name)
            return s.kind;
    throw std::invalid_argument("unknown gadget '" + std::string{name} + "'");
}

auto to_string(GadgetKind kind) -> std::string_view { return spec_of(kind).name; }

auto build_family_ladder(const Graph &h) -> FamilyLadder
{
    if (h.size() == 0)
        throw std::invalid_argument("build_family_ladder: pattern has no edges");
    if (! is_even_cycle_free(h))
        throw std::invalid_argument("build_family_ladder: pattern contains an induced even cycle");

    FamilyLadder ladder;
    ladder.levels.push_back({canonical_form(h).representative()});
    ladder.orders.push_back(h.order());
    for (;;) {
        const auto &level = ladder.levels.back();
        if (std::any_of(level.begin(), level.end(), [](const Graph &f) { return is_bipartite(f); }))
            break;
        int alpha = 0;
        for (const auto &f : level)
            alpha = std::max(alpha, independence_number(f));
        std::map<std::string, Graph> next;
        for (const auto &f : level) {
            if (independence_number(f) != alpha)
                continue;
            for (auto x : independent_sets_of_size(f, alpha)) {
                auto canon = canonical_form(f.without_vertices(x));
                next.emplace(canon.encoding(), canon.representative());
            }
        }
        ladder.alphas.push_back(alpha);
        ladder.orders.push_back(ladder.orders.back() - alpha);
        std::vector<Graph> members;
        for (auto &[key, g] : next)
            members.push_back(std::move(g));
        ladder.levels.push_back(std::move(members));
    }
    for (const auto &f : ladder.levels.back())
        if (is_bipartite(f) && ! is_forest(f))
            throw std::logic_error("build_family_ladder: bipartite member with a cycle in an even-cycle-free ladder");
    return ladder;
}

namespace {
    auto as_patterns(const std::vector<Graph> &graphs) -> std::vector<Pattern>
    {
        std::vector<Pattern> out;
        for (const auto &g : graphs)
            out.emplace_back(g);
        return out;
    }

    auto cube_plus(int h) -> int { return h * h * h + h; }

    struct Attempt {
        Graph graph;
        LadderTrace trace;
        /// Step whose output failed the saturation check, if any.
        std::optional<std::size_t> failed_step;
    };

    auto attempt(const FamilyLadder &ladder, int n, const std::vector<int> &sizes, bool check_steps,
                 const SearchOptions &search) -> Attempt
    {
        const int k = ladder.depth();
        int base_order = n;
        for (int s : sizes)
            base_order -= s;
        if (base_order < 1)
            throw std::invalid_argument("ladder_construction: n = " + std::to_string(n) +
                                        " leaves no vertices for the base graph");

        std::vector<Graph> forests;
        for (const auto &f : ladder.levels[static_cast<std::size_t>(k)])
            if (is_forest(f))
                forests.push_back(f);
        auto base_family = as_patterns(forests);

        Attempt out;
        out.trace.ladder = ladder;
        out.graph = greedy_saturate(empty_graph(base_order), base_family, GreedyOrder::lexicographic(), search);
        out.trace.base_order = base_order;
        out.trace.base_edges = out.graph.size();

        for (int i = k; i >= 1; --i) {
            const auto family = as_patterns(ladder.levels[static_cast<std::size_t>(i - 1)]);
            const int s = sizes[static_cast<std::size_t>(i - 1)];
            LadderStep step{i - 1, s, out.graph.order(), {}};
            const int first = out.graph.order();
            auto g = join(out.graph, empty_graph(s));
            for (int u = first; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v) {
                    SearchOptions local = search;
                    local.root_edge = Edge{u, v};
                    auto r = rainbow_free_colorable(g.with_edge({u, v}), family, local);
                    if (r.status == Colorability::indeterminate)
                        throw SearchIndeterminate("ladder_construction: patch step search ran out of budget");
                    if (r.status == Colorability::colorable) {
                        g.add_edge(u, v);
                        step.patched_edges.push_back({u, v});
                    }
                }
            out.graph = g;
            out.trace.steps.push_back(step);
            if (check_steps) {
                auto verdict = is_rainbow_saturated(out.graph, family, {search, true});
                if (verdict.status == SaturationStatus::indeterminate)
                    throw SearchIndeterminate("ladder_construction: step verification ran out of budget");
                if (verdict.status == SaturationStatus::not_saturated) {
                    out.failed_step = static_cast<std::size_t>(i - 1);
                    return out;
                }
            }
        }
        return out;
    }
}

auto ladder_construction(const Graph &h, int n, const LadderOptions &options) -> LadderResult
{
    if (n < 1 || n > max_vertices)
        throw std::invalid_argument("ladder_construction: need 1 <= n <= 64");
    auto ladder = build_family_ladder(h);
    const auto k = static_cast<std::size_t>(ladder.depth());

    std::vector<int> sizes(k), caps(k);
    for (std::size_t j = 0; j < k; ++j) {
        caps[j] = cube_plus(ladder.orders[j]);
        sizes[j] = options.sizing == LadderSizing::cubic ? caps[j] : ladder.alphas[j];
    }
    const bool adaptive = options.sizing == LadderSizing::adaptive;
    for (;;) {
        auto a = attempt(ladder, n, sizes, adaptive, options.search);
        if (! a.failed_step || sizes[*a.failed_step] >= caps[*a.failed_step]) {
            if (a.failed_step) {
                // Capped: finish the remaining steps without checks.
                a = attempt(ladder, n, sizes, false, options.search);
            }
            return {a.graph, a.trace};
        }
        ++sizes[*a.failed_step];
    }
}

} // namespace rainbowsat
