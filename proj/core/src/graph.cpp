#include <rainbowsat/graph.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rainbowsat {

namespace {
    constexpr auto bit(int v) -> std::uint64_t { return std::uint64_t{1} << v; }
    constexpr auto above(int v) -> std::uint64_t { return v >= 63 ? 0 : ~((std::uint64_t{1} << (v + 1)) - 1); }

    void check_order(int n, const char *what)
    {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument(std::string{what} + ": vertex count " + std::to_string(n) +
                                        " outside 0.." + std::to_string(max_vertices));
    }
}

auto make_edge(int a, int b) -> Edge
{
    if (a == b)
        throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

auto VertexSet::range(int n) -> VertexSet
{
    if (n >= 64)
        return VertexSet{~std::uint64_t{0}};
    return VertexSet{bit(n) - 1};
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (auto b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

Graph::Graph(int n) : n_(n)
{
    check_order(n, "Graph");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    Graph g(n);
    for (const auto &e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

auto Graph::size() const -> std::size_t
{
    std::size_t twice = 0;
    for (auto row : adj_)
        twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

auto Graph::has_edge(int u, int v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(size());
    for (int u = 0; u < n_; ++u)
        for (auto b = adj_[static_cast<std::size_t>(u)] & above(u); b != 0; b &= b - 1)
            out.push_back({u, std::countr_zero(b)});
    return out;
}

auto Graph::non_edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (! ((adj_[static_cast<std::size_t>(u)] >> v) & 1U))
                out.push_back({u, v});
    return out;
}

auto Graph::edge_index(int u, int v) const -> int
{
    if (! has_edge(u, v))
        return -1;
    auto e = make_edge(u, v);
    int index = 0;
    for (int w = 0; w < e.u; ++w)
        index += std::popcount(adj_[static_cast<std::size_t>(w)] & above(w));
    index += std::popcount(adj_[static_cast<std::size_t>(e.u)] & above(e.u) & (bit(e.v) - 1));
    return index;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

auto Graph::with_edge(Edge e) const -> Graph
{
    auto g = *this;
    g.add_edge(e.u, e.v);
    return g;
}

auto Graph::without_edge(Edge e) const -> Graph
{
    auto g = *this;
    g.remove_edge(e.u, e.v);
    return g;
}

auto Graph::relabeled(std::span<const int> perm) const -> Graph
{
    if (perm.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("relabeling has wrong length");
    Graph g(n_);
    for (const auto &e : edges())
        g.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return g;
}

auto Graph::induced(VertexSet keep) const -> Graph
{
    auto kept = (keep.bits() & vertices().bits());
    std::vector<int> position(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (auto v : VertexSet{kept}.members())
        position[static_cast<std::size_t>(v)] = next++;
    Graph g(next);
    for (const auto &e : edges())
        if (position[static_cast<std::size_t>(e.u)] >= 0 && position[static_cast<std::size_t>(e.v)] >= 0)
            g.add_edge(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    return g;
}

auto Graph::without_vertices(VertexSet drop) const -> Graph
{
    return induced(VertexSet{vertices().bits() & ~drop.bits()});
}

auto Graph::isolated_vertices() const -> VertexSet
{
    VertexSet out;
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(v)] == 0)
            out.insert(v);
    return out;
}

auto Graph::min_degree() const -> int
{
    int best = n_ == 0 ? 0 : max_vertices;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

auto complete_graph(int r) -> Graph
{
    if (r < 1 || r > max_vertices)
        throw std::invalid_argument("complete_graph: r must be in 1..64");
    Graph g(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v)
            g.add_edge(u, v);
    return g;
}

auto empty_graph(int n) -> Graph
{
    check_order(n, "empty_graph");
    return Graph(n);
}

auto path_graph(int k) -> Graph
{
    if (k < 1 || k > max_vertices)
        throw std::invalid_argument("path_graph: k must be in 1..64");
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto cycle_graph(int k) -> Graph
{
    if (k < 3 || k > max_vertices)
        throw std::invalid_argument("cycle_graph: k must be in 3..64");
    auto g = path_graph(k);
    g.add_edge(k - 1, 0);
    return g;
}

auto star_graph(int leaves) -> Graph
{
    if (leaves < 0 || leaves + 1 > max_vertices)
        throw std::invalid_argument("star_graph: leaf count must be in 0..63");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

auto wheel_graph(int n) -> Graph
{
    if (n < 4 || n > max_vertices)
        throw std::invalid_argument("wheel_graph: n must be in 4..64");
    Graph g(n);
    int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, n - 1);
    }
    return g;
}

auto complete_bipartite(int a, int b) -> Graph
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("complete_bipartite: negative part size");
    return join(empty_graph(a), empty_graph(b));
}

auto join(const Graph &g, const Graph &h) -> Graph
{
    int total = g.order() + h.order();
    if (total > max_vertices)
        throw std::length_error("join: combined order " + std::to_string(total) + " exceeds 64");
    Graph out(total);
    for (const auto &e : g.edges())
        out.add_edge(e.u, e.v);
    for (const auto &e : h.edges())
        out.add_edge(e.u + g.order(), e.v + g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < h.order(); ++y)
            out.add_edge(x, y + g.order());
    return out;
}

auto disjoint_union(std::span<const Graph> parts) -> Graph
{
    int total = 0;
    for (const auto &p : parts)
        total += p.order();
    if (total > max_vertices)
        throw std::length_error("disjoint_union: combined order " + std::to_string(total) + " exceeds 64");
    Graph out(total);
    int offset = 0;
    for (const auto &p : parts) {
        for (const auto &e : p.edges())
            out.add_edge(e.u + offset, e.v + offset);
        offset += p.order();
    }
    return out;
}

auto connected_components(const Graph &g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    auto unseen = g.vertices().bits();
    while (unseen != 0) {
        auto comp = unseen & (~unseen + 1);
        auto frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (auto b = frontier; b != 0; b &= b - 1)
                next |= g.neighbors(std::countr_zero(b));
            frontier = next & ~comp;
            comp |= next;
        }
        out.emplace_back(comp);
        unseen &= ~comp;
    }
    return out;
}

auto is_connected(const Graph &g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto is_bipartite(const Graph &g) -> bool
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto w : VertexSet{g.neighbors(v)}.members()) {
                auto &sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                }
                else if (sw == side[static_cast<std::size_t>(v)])
                    return false;
            }
        }
    }
    return true;
}

auto is_forest(const Graph &g) -> bool
{
    auto comps = connected_components(g);
    return g.size() + comps.size() == static_cast<std::size_t>(g.order());
}

auto to_string(const Edge &e) -> std::string
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

} // namespace rainbowsat
