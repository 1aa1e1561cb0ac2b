#pragma once

#include <rainbowsat/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace rainbowsat {

/// Class id (0-based) per edge, indexed by the host's lexicographic edge order.
struct EdgeColoring {
    std::vector<int> classes;

    [[nodiscard]] auto size() const -> std::size_t { return classes.size(); }
    [[nodiscard]] auto class_count() const -> int;
    /// Restricted-growth relabelling: first occurrences appear as 0, 1, 2, ...
    [[nodiscard]] auto normalized() const -> EdgeColoring;
    [[nodiscard]] auto is_restricted_growth() const -> bool;

    friend auto operator==(const EdgeColoring &, const EdgeColoring &) -> bool = default;
};

/// Throws std::invalid_argument when the coloring does not cover g's edges.
auto is_proper(const Graph &g, const EdgeColoring &c) -> bool;

/// Text format: one line per edge, "u v c".
auto coloring_to_text(const Graph &g, const EdgeColoring &c) -> std::string;
auto coloring_from_text(const Graph &g, std::string_view text) -> EdgeColoring;
/// {"classes": [c0, c1, ...]}
auto coloring_to_json(const EdgeColoring &c) -> nlohmann::json;
auto coloring_from_json(const Graph &g, const nlohmann::json &j) -> EdgeColoring;

/// Smallest-available-class greedy proper coloring in edge order.
auto greedy_proper_coloring(const Graph &g) -> EdgeColoring;

} // namespace rainbowsat
