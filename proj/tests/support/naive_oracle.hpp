#pragma once

#include <rainbowsat/coloring.hpp>
#include <rainbowsat/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

// Deliberately simple reference implementations. No pruning, no symmetry
// breaking, no shared code with the library beyond Graph itself.
namespace naive {

using rainbowsat::EdgeColoring;
using rainbowsat::Graph;

auto isomorphic(const Graph &a, const Graph &b) -> bool;

/// Minimum adjacency-matrix bit string over all n! relabelings.
auto brute_canonical(const Graph &g) -> std::vector<std::uint64_t>;

/// Edge-index sets of g whose edges form a copy of h (isolated vertices of h
/// are matched by spare host vertices).
auto copies(const Graph &g, const Graph &h) -> std::vector<std::vector<int>>;

/// Visits every set partition of {0..m-1} as a class vector; stops when fn returns true.
template <typename Fn>
auto for_each_partition(int m, Fn &&fn) -> bool
{
    std::vector<int> classes(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto &self, int i, int used) -> bool {
        if (i == m)
            return fn(classes);
        for (int c = 0; c <= used; ++c) {
            classes[static_cast<std::size_t>(i)] = c;
            if (self(self, i + 1, c == used ? used + 1 : used))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

auto proper(const Graph &g, const std::vector<int> &classes) -> bool;

/// Exists a partition of E(g) into matchings with no copy of any family member
/// receiving pairwise distinct classes.
auto colorable(const Graph &g, std::span<const Graph> family) -> bool;

/// Number of proper colorings of g counted once per renaming of classes.
auto proper_partition_count(const Graph &g) -> std::uint64_t;

/// Condition (a) and (b) decided by colorable() alone.
auto saturated(const Graph &g, std::span<const Graph> family) -> bool;

/// Every labelled graph on n vertices.
auto all_labelled(int n) -> std::vector<Graph>;

} // namespace naive
