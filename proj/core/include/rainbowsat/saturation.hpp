#pragma once

#include <rainbowsat/colorability.hpp>
#include <rainbowsat/graph.hpp>
#include <rainbowsat/pattern.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbowsat {

enum class SaturationStatus { saturated, not_saturated, indeterminate };

auto to_string(SaturationStatus s) -> std::string_view;

struct NonEdgeRefutation {
    Edge edge;
    /// Outcome for G + edge; UNCOLORABLE means the edge is refuted.
    Colorability outcome = Colorability::indeterminate;
    SearchStats stats;
};

/// Outcome of checking both saturation conditions.
///
/// SATURATED carries a witness coloring for condition (a) and one refutation
/// per non-edge. NOT_SATURATED carries its counterexample: either condition (a)
/// fails (no witness coloring) or `failing_edge` with a rainbow-free coloring
/// of G + failing_edge.
struct SaturationVerdict {
    SaturationStatus status = SaturationStatus::indeterminate;
    Colorability condition_a = Colorability::indeterminate;
    std::optional<EdgeColoring> witness_coloring;
    std::optional<Edge> failing_edge;
    std::optional<EdgeColoring> failing_coloring;
    std::vector<NonEdgeRefutation> refutations;
    SearchStats stats;
};

struct SaturationOptions {
    SearchOptions search;
    /// For families of connected patterns, re-search only the component of G + e holding e.
    bool use_components = true;
};

auto is_rainbow_saturated(const Graph &g, std::span<const Pattern> family, const SaturationOptions &options = {})
    -> SaturationVerdict;

struct ClassicalVerdict {
    bool saturated = false;
    bool contains_pattern = false;
    /// A non-edge whose addition creates no copy, when one exists.
    std::optional<Edge> failing_edge;
};

/// H-free and every added non-edge creates a copy of H.
auto is_classically_saturated(const Graph &g, const Pattern &h) -> ClassicalVerdict;

struct GreedyOrder {
    enum class Kind { lexicographic, seeded_random };
    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;

    static auto lexicographic() -> GreedyOrder { return {}; }
    static auto random(std::uint64_t seed) -> GreedyOrder { return {Kind::seeded_random, seed}; }
};

/// Adds each candidate non-edge (in `order`) whose addition keeps the graph
/// rainbow-free colorable. Colorability is closed under deleting edges, so a
/// rejected edge can never become addable later and one pass suffices.
///
/// Throws std::invalid_argument if g0 itself is not colorable and
/// SearchIndeterminate if a subsearch runs out of budget.
auto greedy_saturate(const Graph &g0, std::span<const Pattern> family, GreedyOrder order = {},
                     const SearchOptions &options = {}) -> Graph;

struct StructuralReport {
    /// Nonadjacent pairs of vertices both of degree r - 2.
    std::vector<std::pair<int, int>> low_degree_pairs;
    int degree_one_vertices = 0;
    int min_degree = 0;
    bool connected = false;
};

auto structural_property_checks(const Graph &g, int r) -> StructuralReport;

} // namespace rainbowsat
