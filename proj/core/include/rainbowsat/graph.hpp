#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rainbowsat {

inline constexpr int max_vertices = 64;

/// An undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator==(const Edge &, const Edge &) -> bool = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

auto make_edge(int a, int b) -> Edge;

/// Bitset over vertices 0..63.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static auto range(int n) -> VertexSet;

    [[nodiscard]] constexpr auto bits() const -> std::uint64_t { return bits_; }
    [[nodiscard]] constexpr auto size() const -> int { return std::popcount(bits_); }
    [[nodiscard]] constexpr auto empty() const -> bool { return bits_ == 0; }
    [[nodiscard]] constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }

    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    [[nodiscard]] auto members() const -> std::vector<int>;

    friend auto operator==(VertexSet, VertexSet) -> bool = default;

private:
    std::uint64_t bits_ = 0;
};

/// Simple undirected graph on at most 64 vertices, one adjacency word per vertex.
///
/// Edge indices everywhere in the library refer to the lexicographic order of
/// edges by (min endpoint, max endpoint), as returned by edges().
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

    [[nodiscard]] auto order() const -> int { return n_; }
    [[nodiscard]] auto size() const -> std::size_t;
    [[nodiscard]] auto has_edge(int u, int v) const -> bool;
    [[nodiscard]] auto neighbors(int v) const -> std::uint64_t { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] auto degree(int v) const -> int { return std::popcount(neighbors(v)); }
    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::range(n_); }

    [[nodiscard]] auto edges() const -> std::vector<Edge>;
    [[nodiscard]] auto non_edges() const -> std::vector<Edge>;
    /// Position of {u,v} in edges(), or -1.
    [[nodiscard]] auto edge_index(int u, int v) const -> int;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    [[nodiscard]] auto with_edge(Edge e) const -> Graph;
    [[nodiscard]] auto without_edge(Edge e) const -> Graph;

    /// Vertex v of this graph becomes vertex perm[v] of the result.
    [[nodiscard]] auto relabeled(std::span<const int> perm) const -> Graph;
    /// Induced subgraph on `keep`, relabeled to 0..|keep|-1 in increasing order.
    [[nodiscard]] auto induced(VertexSet keep) const -> Graph;
    [[nodiscard]] auto without_vertices(VertexSet drop) const -> Graph;

    [[nodiscard]] auto isolated_vertices() const -> VertexSet;
    [[nodiscard]] auto min_degree() const -> int;
    [[nodiscard]] auto max_degree() const -> int;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

auto complete_graph(int r) -> Graph;
auto empty_graph(int n) -> Graph;
/// Path on k vertices (k-1 edges).
auto path_graph(int k) -> Graph;
auto cycle_graph(int k) -> Graph;
/// K_{1,leaves}; the centre is vertex 0.
auto star_graph(int leaves) -> Graph;
/// Hub is vertex n-1, rim vertices 0..n-2 in cyclic order.
auto wheel_graph(int n) -> Graph;
auto complete_bipartite(int a, int b) -> Graph;

/// Disjoint copies plus all cross edges; h's vertices are shifted by g.order().
auto join(const Graph &g, const Graph &h) -> Graph;
auto disjoint_union(std::span<const Graph> parts) -> Graph;

/// Connected components, each as a vertex set, ordered by smallest vertex.
auto connected_components(const Graph &g) -> std::vector<VertexSet>;
auto is_connected(const Graph &g) -> bool;
auto is_bipartite(const Graph &g) -> bool;
auto is_forest(const Graph &g) -> bool;

auto to_string(const Edge &e) -> std::string;

} // namespace rainbowsat
