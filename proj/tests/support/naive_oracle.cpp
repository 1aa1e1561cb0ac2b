#include "naive_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace naive {

namespace {
    auto adjacency_bits(const Graph &g, const std::vector<int> &perm) -> std::vector<std::uint64_t>
    {
        const int n = g.order();
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (g.has_edge(u, v))
                    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |=
                        std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
        return rows;
    }

    auto edge_subgraph(const std::vector<rainbowsat::Edge> &edges, const std::vector<int> &pick)
        -> Graph
    {
        std::vector<int> verts;
        for (int i : pick) {
            verts.push_back(edges[static_cast<std::size_t>(i)].u);
            verts.push_back(edges[static_cast<std::size_t>(i)].v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Graph s(static_cast<int>(verts.size()));
        auto local = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
        for (int i : pick)
            s.add_edge(local(edges[static_cast<std::size_t>(i)].u), local(edges[static_cast<std::size_t>(i)].v));
        return s;
    }
}

auto brute_canonical(const Graph &g) -> std::vector<std::uint64_t>
{
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    auto best = adjacency_bits(g, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, adjacency_bits(g, perm));
    return best;
}

auto isomorphic(const Graph &a, const Graph &b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    const auto target = adjacency_bits(b, perm);
    do {
        if (adjacency_bits(a, perm) == target)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

auto copies(const Graph &g, const Graph &h) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    if (g.order() < h.order())
        return out;
    // Core of h: drop isolated vertices.
    std::vector<int> keep;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) > 0)
            keep.push_back(v);
    Graph core(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (h.has_edge(keep[i], keep[j]))
                core.add_edge(static_cast<int>(i), static_cast<int>(j));

    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int k = static_cast<int>(core.size());
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (k > m)
        return out;
    std::vector<bool> mask(static_cast<std::size_t>(m), false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        std::vector<int> pick;
        for (int i = 0; i < m; ++i)
            if (mask[static_cast<std::size_t>(i)])
                pick.push_back(i);
        auto s = edge_subgraph(edges, pick);
        if (isomorphic(s, core))
            out.push_back(pick);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

auto proper(const Graph &g, const std::vector<int> &classes) -> bool
{
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const bool touch = edges[i].u == edges[j].u || edges[i].u == edges[j].v || edges[i].v == edges[j].u ||
                               edges[i].v == edges[j].v;
            if (touch && classes[i] == classes[j])
                return false;
        }
    return true;
}

auto colorable(const Graph &g, std::span<const Graph> family) -> bool
{
    std::vector<std::vector<int>> all;
    for (const auto &h : family)
        for (auto &c : copies(g, h))
            all.push_back(std::move(c));
    return for_each_partition(static_cast<int>(g.size()), [&](const std::vector<int> &classes) {
        if (! proper(g, classes))
            return false;
        for (const auto &c : all) {
            std::set<int> seen;
            for (int e : c)
                seen.insert(classes[static_cast<std::size_t>(e)]);
            if (seen.size() == c.size())
                return false;
        }
        return true;
    });
}

auto proper_partition_count(const Graph &g) -> std::uint64_t
{
    std::uint64_t count = 0;
    for_each_partition(static_cast<int>(g.size()), [&](const std::vector<int> &classes) {
        if (proper(g, classes))
            ++count;
        return false;
    });
    return count;
}

auto saturated(const Graph &g, std::span<const Graph> family) -> bool
{
    if (! colorable(g, family))
        return false;
    for (const auto &e : g.non_edges())
        if (colorable(g.with_edge(e), family))
            return false;
    return true;
}

auto all_labelled(int n) -> std::vector<Graph>
{
    std::vector<rainbowsat::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U)
                g.add_edge(pairs[i].u, pairs[i].v);
        out.push_back(g);
    }
    return out;
}

} // namespace naive
