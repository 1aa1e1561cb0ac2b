#pragma once

#include <rainbowsat/colorability.hpp>
#include <rainbowsat/coloring.hpp>
#include <rainbowsat/graph.hpp>
#include <rainbowsat/pattern.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rainbowsat {

struct ColoredGraph {
    Graph graph;
    EdgeColoring coloring;
};

/// K_{r-2} joined to E_{n-r+2}. Requires 2 <= r <= n.
auto ehm_graph(int n, int r) -> Graph;

/// a = (-n) mod 5 copies of K4, each coloured by its 1-factorization, then
/// (n - 4a) / 5 copies of K_{1,4} with four distinct classes each.
/// Requires 16 <= n <= 64.
auto p4_construction(int n) -> ColoredGraph;

/// The wheel on n vertices (hub n - 1, rim 0..n-2). Rim vertex v_i is vertex
/// i - 1, and both w v_i and v_{i+1} v_{i+2} get class i - 1 (indices cyclic
/// mod n - 1). Requires 6 <= n <= 64.
auto wheel_construction(int n) -> ColoredGraph;

enum class GadgetKind { ga, gb, p4_fig2_left, p4_fig2_right, p4_fig3_a, p4_fig3_b, p4_fig3_c };

struct Gadget {
    GadgetKind kind;
    std::string name;
    /// Includes the marked edge.
    Graph graph;
    Edge marked;
};

auto gadget(GadgetKind kind) -> Gadget;
auto gadget_kinds() -> std::vector<GadgetKind>;
/// Accepts GA, GB, P4_fig2_left, P4_fig2_right, P4_fig3_a, P4_fig3_b, P4_fig3_c.
auto parse_gadget_kind(std::string_view name) -> GadgetKind;
auto to_string(GadgetKind kind) -> std::string_view;

struct FamilyLadder {
    /// levels[0] = {H}; each member is a canonical representative.
    std::vector<std::vector<Graph>> levels;
    /// alphas[i] = max independence number over levels[i]; one entry per
    /// level except the last.
    std::vector<int> alphas;
    /// Common vertex count of each level.
    std::vector<int> orders;

    [[nodiscard]] auto depth() const -> int { return static_cast<int>(levels.size()) - 1; }
};

/// Repeatedly deletes maximum independent sets until a level holds a
/// bipartite graph. Throws std::invalid_argument if h has an induced even
/// cycle or is edgeless.
auto build_family_ladder(const Graph &h) -> FamilyLadder;

enum class LadderSizing {
    /// |I| = h^3 + h at every step.
    cubic,
    /// |I| starts at the level's independence number and grows one vertex at
    /// a time, up to h^3 + h, until the step output verifies saturated.
    adaptive,
};

struct LadderOptions {
    LadderSizing sizing = LadderSizing::adaptive;
    SearchOptions search;
};

struct LadderStep {
    /// Steps run from level k - 1 down to 0.
    int level = 0;
    int independent_set_size = 0;
    /// Vertex count before joining I.
    int inner_order = 0;
    std::vector<Edge> patched_edges;
};

struct LadderTrace {
    FamilyLadder ladder;
    int base_order = 0;
    std::size_t base_edges = 0;
    std::vector<LadderStep> steps;
};

struct LadderResult {
    Graph graph;
    LadderTrace trace;
};

/// Bottom-up construction: a greedy rainbow-saturated graph for the forest
/// members of the last level, then for each level an independent set I joined
/// to the current graph, then every pair inside I whose addition keeps the
/// graph colorable for that level's family.
///
/// Throws std::invalid_argument if n is too small to leave at least one base
/// vertex, and SearchIndeterminate if a subsearch runs out of budget.
auto ladder_construction(const Graph &h, int n, const LadderOptions &options = {}) -> LadderResult;

} // namespace rainbowsat
