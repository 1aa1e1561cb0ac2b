#pragma once

#include <rainbowsat/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rainbowsat {

/// Canonical adjacency of a graph: two graphs are isomorphic iff their
/// canonical forms compare equal. `labeling[v]` is the canonical position of
/// input vertex v, so `g.relabeled(labeling)` is the canonical representative.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> rows;
    std::vector<int> labeling;

    /// Byte string of the canonical adjacency (the order byte followed by the
    /// rows, little endian). Equal encodings iff isomorphic.
    [[nodiscard]] auto encoding() const -> std::string;
    [[nodiscard]] auto representative() const -> Graph;

    friend auto operator==(const CanonicalForm &a, const CanonicalForm &b) -> bool
    {
        return a.n == b.n && a.rows == b.rows;
    }
};

/// Individualisation-refinement canonical labelling with automorphism pruning.
auto canonical_form(const Graph &g) -> CanonicalForm;

auto are_isomorphic(const Graph &g, const Graph &h) -> bool;

/// Shortcut for canonical_form(g).encoding().
auto canonical_key(const Graph &g) -> std::string;

} // namespace rainbowsat

template <>
struct std::hash<rainbowsat::CanonicalForm> {
    auto operator()(const rainbowsat::CanonicalForm &c) const noexcept -> std::size_t
    {
        std::size_t h = std::hash<int>{}(c.n);
        for (auto r : c.rows)
            h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(r);
        return h;
    }
};
