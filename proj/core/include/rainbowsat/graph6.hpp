#pragma once

#include <rainbowsat/graph.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace rainbowsat {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Standard graph6 encoding (no ">>graph6<<" header, no trailing newline).
auto graph6_encode(const Graph &g) -> std::string;
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
auto graph6_decode(std::string_view text) -> Graph;

/// Debug adjacency-list format: {"n": int, "edges": [[u,v],...]}.
auto graph_to_json(const Graph &g) -> nlohmann::json;
auto graph_from_json(const nlohmann::json &j) -> Graph;

} // namespace rainbowsat
