#pragma once

#include <rainbowsat/colorability.hpp>
#include <rainbowsat/constructions.hpp>
#include <rainbowsat/sat_numbers.hpp>
#include <rainbowsat/saturation.hpp>

#include <nlohmann/json.hpp>

namespace rainbowsat {

auto edge_to_json(const Edge &e) -> nlohmann::json;
auto stats_to_json(const SearchStats &s) -> nlohmann::json;
auto colorability_to_json(const Graph &g, const ColorabilityResult &r) -> nlohmann::json;
auto verdict_to_json(const Graph &g, const SaturationVerdict &v) -> nlohmann::json;
/// `{"n", "family", "value", "witnesses", "stats"}`; graphs as graph6.
auto sat_result_to_json(const SatNumberResult &r) -> nlohmann::json;
auto ladder_trace_to_json(const LadderTrace &t) -> nlohmann::json;
auto colored_graph_to_json(const ColoredGraph &c) -> nlohmann::json;

} // namespace rainbowsat
