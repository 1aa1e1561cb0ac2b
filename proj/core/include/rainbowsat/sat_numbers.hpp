#pragma once

#include <rainbowsat/colorability.hpp>
#include <rainbowsat/graph.hpp>
#include <rainbowsat/pattern.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rainbowsat {

inline constexpr int max_exhaustive_order = 10;

struct RunOptions {
    SearchOptions search;
    /// Worker threads for per-graph work; results never depend on this.
    int threads = 1;
};

/// One canonical representative per isomorphism class on n vertices with at
/// most edge_budget edges, in nondecreasing edge count (ties broken by
/// canonical encoding). Generated level by level: every graph with m + 1
/// edges is some graph with m edges plus one edge, deduplicated by canonical form.
auto enumerate_nonisomorphic_graphs(int n, int edge_budget, int threads = 1) -> std::vector<Graph>;

/// Streaming form; `visit` sees each edge-count level in order and may stop
/// the enumeration by returning false.
void for_each_graph_level(int n, int edge_budget, int threads,
                          const std::function<bool(int edges, const std::vector<Graph> &level)> &visit);

/// Rainbow-free colorability of every graph on n vertices, computed level by
/// level. A graph is UNCOLORABLE as soon as one of its one-edge-deleted
/// subgraphs is, so only the remaining graphs are searched.
class ColorabilityLattice {
public:
    ColorabilityLattice(int n, std::vector<Pattern> family, RunOptions options = {});
    ~ColorabilityLattice();
    ColorabilityLattice(ColorabilityLattice &&) noexcept;
    auto operator=(ColorabilityLattice &&) noexcept -> ColorabilityLattice &;

    [[nodiscard]] auto order() const -> int;
    /// Representatives with exactly m edges (computed on demand).
    auto level(int m) -> const std::vector<Graph> &;
    /// Throws SearchIndeterminate if the graph's search ran out of budget.
    auto status(const Graph &g) -> Colorability;
    /// Condition (a) and (b) decided from lattice lookups.
    auto is_saturated(const Graph &g) -> bool;

    struct Stats {
        std::uint64_t graphs = 0;
        std::uint64_t searches = 0;
        std::uint64_t inferred = 0;
        std::uint64_t nodes = 0;
    };
    [[nodiscard]] auto stats() const -> Stats;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct SatNumberResult {
    int n = 0;
    std::vector<Graph> family;
    /// Empty when no n-vertex graph is saturated, which is a legitimate outcome.
    std::optional<int> value;
    /// Every minimal saturated graph up to isomorphism.
    std::vector<Graph> witnesses;
    struct Stats {
        std::uint64_t graphs_examined = 0;
        std::uint64_t searches = 0;
        std::uint64_t inferred = 0;
        std::uint64_t search_nodes = 0;
    } stats;
};

/// Exact rainbow saturation number by ascending-edge exhaustive search.
/// Throws SearchIndeterminate when any needed search runs out of budget.
auto sat_star_exact(int n, std::span<const Pattern> family, const RunOptions &options = {}) -> SatNumberResult;

/// Every rainbow family-saturated graph on n vertices, ascending by edges.
auto all_rainbow_saturated(int n, std::span<const Pattern> family, const RunOptions &options = {})
    -> std::vector<Graph>;

/// Classical saturation number (H-free, every added edge creates H).
auto sat_exact(int n, const Pattern &h, int threads = 1) -> SatNumberResult;

enum class SatFormula { ehm, kt_p4, c4 };

/// Closed forms for classical saturation numbers: K_r (needs 2 <= r <= n),
/// P4 and C4 (need n >= 4).
auto sat_formula_oracle(SatFormula formula, int n, int r = 0) -> std::int64_t;

} // namespace rainbowsat
