#pragma once

#include <rainbowsat/coloring.hpp>
#include <rainbowsat/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rainbowsat {

/// A forbidden graph H together with what the embedding search needs.
///
/// Isolated vertices of H are stripped from the core used for embedding; a
/// copy of H then exists iff a copy of the core exists and the host has at
/// least order() vertices.
class Pattern {
public:
    explicit Pattern(Graph h, std::string name = {});

    [[nodiscard]] auto graph() const -> const Graph & { return graph_; }
    [[nodiscard]] auto core() const -> const Graph & { return core_; }
    [[nodiscard]] auto name() const -> const std::string & { return name_; }
    [[nodiscard]] auto order() const -> int { return graph_.order(); }
    [[nodiscard]] auto edge_count() const -> std::size_t { return core_.size(); }
    [[nodiscard]] auto isolated_count() const -> int { return graph_.order() - core_.order(); }
    [[nodiscard]] auto automorphisms() const -> std::uint64_t { return automorphisms_; }
    /// Connected with no isolated vertices; copies then never straddle host components.
    [[nodiscard]] auto connected() const -> bool { return connected_; }
    /// Every pair of core edges shares a vertex, so every proper coloring of a copy is rainbow.
    [[nodiscard]] auto always_rainbow() const -> bool { return always_rainbow_; }

private:
    Graph graph_;
    Graph core_;
    std::string name_;
    std::uint64_t automorphisms_ = 1;
    bool connected_ = false;
    bool always_rainbow_ = false;
};

/// Sorted host edge indices of one copy of H.
using Embedding = std::vector<int>;

struct EmbeddingList {
    std::vector<Embedding> copies;

    [[nodiscard]] auto size() const -> std::size_t { return copies.size(); }
};

/// Calls `visit` with the image of each core vertex for every injective
/// adjacency-preserving map core(H) -> G. Returning false stops the walk.
void for_each_subgraph_map(const Graph &host, const Graph &pattern,
                           const std::function<bool(std::span<const int>)> &visit);

/// Number of automorphisms of g, by direct enumeration.
auto count_automorphisms(const Graph &g) -> std::uint64_t;

/// Every copy of H in G as an edge set, each exactly once.
auto enumerate_embeddings(const Graph &g, const Pattern &h) -> EmbeddingList;

/// Non-induced subgraph containment.
auto contains_subgraph(const Graph &host, const Graph &pattern) -> bool;

/// A copy of H whose edges get pairwise distinct classes under c, if any.
/// Throws std::invalid_argument if c is not a proper coloring of g.
auto find_rainbow_embedding(const Graph &g, const EdgeColoring &c, const Pattern &h) -> std::optional<Embedding>;

/// Named patterns: Kn, Pn, Cn, En, Wn, Ka_b (complete bipartite, K1_4 is a star),
/// otherwise graph6.
auto parse_pattern(const std::string &text) -> Pattern;

} // namespace rainbowsat
