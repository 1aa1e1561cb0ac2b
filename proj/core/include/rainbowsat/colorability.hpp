#pragma once

#include <rainbowsat/coloring.hpp>
#include <rainbowsat/graph.hpp>
#include <rainbowsat/pattern.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace rainbowsat {

enum class Colorability { colorable, uncolorable, indeterminate };

auto to_string(Colorability c) -> std::string_view;

struct SearchOptions {
    /// Wall-clock budget for one call; zero disables it.
    std::chrono::milliseconds timeout{60'000};
    /// Search-node budget for one call; zero disables it. Unlike the timeout
    /// this gives machine-independent INDETERMINATE outcomes.
    std::uint64_t node_limit = 0;
    /// Edge that seeds the branching order (usually a freshly added edge).
    std::optional<Edge> root_edge;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    std::size_t embeddings = 0;
    /// Independent groups of edges linked through shared copies of a pattern.
    std::size_t blocks = 0;

    auto operator+=(const SearchStats &o) -> SearchStats &;
};

struct ColorabilityResult {
    Colorability status = Colorability::indeterminate;
    /// Present iff status == colorable: a proper coloring of every edge with no rainbow copy.
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

/// Thrown by callers that turn an INDETERMINATE outcome into a hard failure.
class SearchIndeterminate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decides whether g has a proper edge coloring with no rainbow copy of any
/// pattern in `family`.
///
/// Colorings are partitions of E(g) into matchings, enumerated once per
/// renaming of classes. Only edges lying in some copy of a pattern are
/// searched; they are split into blocks connected through shared copies, and
/// blocks are solved independently since classes of one block can always be
/// renamed apart from every other block.
auto rainbow_free_colorable(const Graph &g, std::span<const Pattern> family, const SearchOptions &options = {})
    -> ColorabilityResult;

struct Component {
    Graph graph;
    /// vertices[i] is the host vertex of component vertex i.
    std::vector<int> vertices;
};

auto component_decomposition(const Graph &g) -> std::vector<Component>;

/// Colorability decided component by component; only valid for families of
/// connected patterns, which never place a copy across two components.
auto rainbow_free_colorable_by_components(const Graph &g, std::span<const Pattern> family,
                                          const SearchOptions &options = {}) -> ColorabilityResult;

} // namespace rainbowsat
