#pragma once

#include <rainbowsat/graph.hpp>

#include <vector>

namespace rainbowsat {

/// Exact maximum independent set (branch and bound over bitsets).
auto max_independent_set(const Graph &g) -> VertexSet;
auto independence_number(const Graph &g) -> int;
auto is_independent(const Graph &g, VertexSet s) -> bool;

/// Every independent set of exactly `size` vertices, in lexicographic order.
auto independent_sets_of_size(const Graph &g, int size) -> std::vector<VertexSet>;

/// True iff g has no induced cycle of even length. Exhaustive over vertex
/// subsets, so intended for pattern-sized graphs (at most 24 vertices).
auto is_even_cycle_free(const Graph &g) -> bool;

} // namespace rainbowsat
