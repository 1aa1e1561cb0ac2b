#include <rainbowsat/canonical.hpp>
#include <rainbowsat/saturation.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rainbowsat {

namespace {
    auto all_connected(std::span<const Pattern> family) -> bool
    {
        return std::all_of(family.begin(), family.end(), [](const Pattern &p) { return p.connected(); });
    }

    /// Rainbow-free coloring of g + e assembled from the component search and the
    /// condition (a) witness for everything else.
    auto merge_colorings(const Graph &host, const EdgeColoring &base, const Graph &merged_graph,
                         const std::vector<int> &merged_vertices, const EdgeColoring &merged) -> EdgeColoring
    {
        const auto base_edges = host.edges();
        const int offset = base.classes.empty() ? 0 : *std::max_element(base.classes.begin(), base.classes.end()) + 1;
        std::vector<bool> inside(static_cast<std::size_t>(host.order()), false);
        for (int v : merged_vertices)
            inside[static_cast<std::size_t>(v)] = true;

        Graph extended = host;
        const auto local_edges = merged_graph.edges();
        for (const auto &e : local_edges)
            extended.add_edge(merged_vertices[static_cast<std::size_t>(e.u)], merged_vertices[static_cast<std::size_t>(e.v)]);

        EdgeColoring out;
        out.classes.assign(extended.size(), -1);
        for (std::size_t i = 0; i < base_edges.size(); ++i)
            if (! inside[static_cast<std::size_t>(base_edges[i].u)])
                out.classes[static_cast<std::size_t>(extended.edge_index(base_edges[i].u, base_edges[i].v))] = base.classes[i];
        for (std::size_t i = 0; i < local_edges.size(); ++i) {
            int u = merged_vertices[static_cast<std::size_t>(local_edges[i].u)];
            int v = merged_vertices[static_cast<std::size_t>(local_edges[i].v)];
            out.classes[static_cast<std::size_t>(extended.edge_index(u, v))] = offset + merged.classes[i];
        }
        return out.normalized();
    }
}

auto to_string(SaturationStatus s) -> std::string_view
{
    switch (s) {
    case SaturationStatus::saturated: return "SATURATED";
    case SaturationStatus::not_saturated: return "NOT_SATURATED";
    case SaturationStatus::indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

auto is_rainbow_saturated(const Graph &g, std::span<const Pattern> family, const SaturationOptions &options)
    -> SaturationVerdict
{
    SaturationVerdict verdict;
    auto a = rainbow_free_colorable(g, family, options.search);
    verdict.stats += a.stats;
    verdict.condition_a = a.status;
    if (a.status == Colorability::uncolorable) {
        verdict.status = SaturationStatus::not_saturated;
        return verdict;
    }
    if (a.status == Colorability::indeterminate) {
        verdict.status = SaturationStatus::indeterminate;
        return verdict;
    }
    verdict.witness_coloring = a.witness;

    const bool by_component = options.use_components && all_connected(family);
    std::vector<VertexSet> components;
    std::vector<int> component_of(static_cast<std::size_t>(g.order()), -1);
    if (by_component) {
        components = connected_components(g);
        for (std::size_t c = 0; c < components.size(); ++c)
            for (int v : components[c].members())
                component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    // Refuted merged components, keyed by isomorphism class.
    std::unordered_map<std::string, Colorability> seen;

    bool indeterminate = false;
    for (const auto &e : g.non_edges()) {
        NonEdgeRefutation ref{e, Colorability::indeterminate, {}};
        if (by_component) {
            VertexSet region = components[static_cast<std::size_t>(component_of[static_cast<std::size_t>(e.u)])];
            for (int v : components[static_cast<std::size_t>(component_of[static_cast<std::size_t>(e.v)])].members())
                region.insert(v);
            auto vertices = region.members();
            auto merged = g.induced(region);
            auto lu = static_cast<int>(std::find(vertices.begin(), vertices.end(), e.u) - vertices.begin());
            auto lv = static_cast<int>(std::find(vertices.begin(), vertices.end(), e.v) - vertices.begin());
            merged.add_edge(lu, lv);

            auto key = canonical_key(merged);
            auto hit = seen.find(key);
            if (hit != seen.end() && hit->second == Colorability::uncolorable) {
                ref.outcome = Colorability::uncolorable;
            }
            else {
                SearchOptions local = options.search;
                local.root_edge = make_edge(lu, lv);
                auto r = rainbow_free_colorable(merged, family, local);
                ref.outcome = r.status;
                ref.stats = r.stats;
                seen[key] = r.status;
                if (r.status == Colorability::colorable) {
                    verdict.failing_coloring = merge_colorings(g, *a.witness, merged, vertices, *r.witness);
                }
            }
        }
        else {
            SearchOptions local = options.search;
            local.root_edge = e;
            auto r = rainbow_free_colorable(g.with_edge(e), family, local);
            ref.outcome = r.status;
            ref.stats = r.stats;
            if (r.status == Colorability::colorable)
                verdict.failing_coloring = r.witness;
        }
        verdict.stats += ref.stats;
        verdict.refutations.push_back(ref);
        if (ref.outcome == Colorability::colorable) {
            verdict.failing_edge = e;
            verdict.status = SaturationStatus::not_saturated;
            return verdict;
        }
        if (ref.outcome == Colorability::indeterminate)
            indeterminate = true;
    }
    verdict.status = indeterminate ? SaturationStatus::indeterminate : SaturationStatus::saturated;
    return verdict;
}

auto is_classically_saturated(const Graph &g, const Pattern &h) -> ClassicalVerdict
{
    ClassicalVerdict verdict;
    verdict.contains_pattern = contains_subgraph(g, h.graph());
    if (verdict.contains_pattern)
        return verdict;
    for (const auto &e : g.non_edges())
        if (! contains_subgraph(g.with_edge(e), h.graph())) {
            verdict.failing_edge = e;
            return verdict;
        }
    verdict.saturated = true;
    return verdict;
}

auto greedy_saturate(const Graph &g0, std::span<const Pattern> family, GreedyOrder order,
                     const SearchOptions &options) -> Graph
{
    auto start = rainbow_free_colorable(g0, family, options);
    if (start.status == Colorability::uncolorable)
        throw std::invalid_argument("greedy_saturate: starting graph has no rainbow-free coloring");
    if (start.status == Colorability::indeterminate)
        throw SearchIndeterminate("greedy_saturate: colorability of the starting graph is undecided");

    auto candidates = g0.non_edges();
    if (order.kind == GreedyOrder::Kind::seeded_random) {
        std::mt19937_64 rng(order.seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
    }

    Graph g = g0;
    for (const auto &e : candidates) {
        SearchOptions local = options;
        local.root_edge = e;
        auto r = rainbow_free_colorable(g.with_edge(e), family, local);
        if (r.status == Colorability::indeterminate)
            throw SearchIndeterminate("greedy_saturate: colorability after adding " + to_string(e) + " is undecided");
        if (r.status == Colorability::colorable)
            g.add_edge(e.u, e.v);
    }
    return g;
}

auto structural_property_checks(const Graph &g, int r) -> StructuralReport
{
    StructuralReport report;
    report.min_degree = g.min_degree();
    report.connected = is_connected(g);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            ++report.degree_one_vertices;
    for (const auto &e : g.non_edges())
        if (g.degree(e.u) == r - 2 && g.degree(e.v) == r - 2)
            report.low_degree_pairs.emplace_back(e.u, e.v);
    return report;
}

} // namespace rainbowsat
