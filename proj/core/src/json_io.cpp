#include <rainbowsat/graph6.hpp>
#include <rainbowsat/json_io.hpp>

namespace rainbowsat {

using nlohmann::json;

auto edge_to_json(const Edge &e) -> json { return json::array({e.u, e.v}); }

auto stats_to_json(const SearchStats &s) -> json
{
    return {{"nodes", s.nodes}, {"max_depth", s.max_depth}, {"embeddings", s.embeddings}, {"blocks", s.blocks}};
}

auto colorability_to_json(const Graph &g, const ColorabilityResult &r) -> json
{
    json out{{"graph", graph6_encode(g)}, {"status", to_string(r.status)}, {"stats", stats_to_json(r.stats)}};
    if (r.witness)
        out["witness"] = coloring_to_json(*r.witness);
    return out;
}

auto verdict_to_json(const Graph &g, const SaturationVerdict &v) -> json
{
    json out{{"graph", graph6_encode(g)},
             {"status", to_string(v.status)},
             {"condition_a", to_string(v.condition_a)},
             {"stats", stats_to_json(v.stats)}};
    if (v.witness_coloring)
        out["witness_coloring"] = coloring_to_json(*v.witness_coloring);
    if (v.failing_edge)
        out["failing_edge"] = edge_to_json(*v.failing_edge);
    if (v.failing_coloring)
        out["failing_coloring"] = coloring_to_json(*v.failing_coloring);
    auto refutations = json::array();
    for (const auto &r : v.refutations)
        refutations.push_back({{"edge", edge_to_json(r.edge)}, {"outcome", to_string(r.outcome)}, {"nodes", r.stats.nodes}});
    out["refutations"] = refutations;
    return out;
}

auto sat_result_to_json(const SatNumberResult &r) -> json
{
    auto family = json::array();
    for (const auto &h : r.family)
        family.push_back(graph6_encode(h));
    auto witnesses = json::array();
    for (const auto &w : r.witnesses)
        witnesses.push_back(graph6_encode(w));
    return {{"n", r.n},
            {"family", family},
            {"value", r.value ? json(*r.value) : json(nullptr)},
            {"witnesses", witnesses},
            {"stats",
             {{"graphs_examined", r.stats.graphs_examined},
              {"searches", r.stats.searches},
              {"inferred", r.stats.inferred},
              {"search_nodes", r.stats.search_nodes}}}};
}

auto ladder_trace_to_json(const LadderTrace &t) -> json
{
    auto levels = json::array();
    for (const auto &level : t.ladder.levels) {
        auto members = json::array();
        for (const auto &f : level)
            members.push_back(graph6_encode(f));
        levels.push_back(members);
    }
    auto steps = json::array();
    for (const auto &s : t.steps) {
        auto patched = json::array();
        for (const auto &e : s.patched_edges)
            patched.push_back(edge_to_json(e));
        steps.push_back({{"level", s.level},
                         {"independent_set_size", s.independent_set_size},
                         {"inner_order", s.inner_order},
                         {"patched_edges", patched}});
    }
    return {{"levels", levels},
            {"alphas", t.ladder.alphas},
            {"orders", t.ladder.orders},
            {"base_order", t.base_order},
            {"base_edges", t.base_edges},
            {"steps", steps}};
}

auto colored_graph_to_json(const ColoredGraph &c) -> json
{
    return {{"graph6", graph6_encode(c.graph)},
            {"n", c.graph.order()},
            {"edges", c.graph.size()},
            {"coloring", coloring_to_json(c.coloring)}};
}

} // namespace rainbowsat
