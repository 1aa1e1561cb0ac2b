#include <rainbowsat/coloring.hpp>
#include <rainbowsat/graph6.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rainbowsat {

auto EdgeColoring::class_count() const -> int
{
    if (classes.empty())
        return 0;
    std::vector<int> seen(classes);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

auto EdgeColoring::normalized() const -> EdgeColoring
{
    std::map<int, int> rename;
    EdgeColoring out;
    out.classes.reserve(classes.size());
    for (int c : classes) {
        auto [it, inserted] = rename.try_emplace(c, static_cast<int>(rename.size()));
        out.classes.push_back(it->second);
    }
    return out;
}

auto EdgeColoring::is_restricted_growth() const -> bool
{
    int next = 0;
    for (int c : classes) {
        if (c > next || c < 0)
            return false;
        if (c == next)
            ++next;
    }
    return true;
}

auto is_proper(const Graph &g, const EdgeColoring &c) -> bool
{
    auto edges = g.edges();
    if (edges.size() != c.size())
        throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries for " +
                                    std::to_string(edges.size()) + " edges");
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (int v : {edges[i].u, edges[i].v})
            if (! seen.try_emplace({v, c.classes[i]}, 1).second)
                return false;
    }
    return true;
}

auto coloring_to_text(const Graph &g, const EdgeColoring &c) -> std::string
{
    auto edges = g.edges();
    if (edges.size() != c.size())
        throw std::invalid_argument("coloring does not match the graph's edge count");
    std::ostringstream out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << edges[i].u << ' ' << edges[i].v << ' ' << c.classes[i] << '\n';
    return out.str();
}

auto coloring_from_text(const Graph &g, std::string_view text) -> EdgeColoring
{
    EdgeColoring c;
    c.classes.assign(g.size(), -1);
    std::istringstream in{std::string{text}};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields{line};
        int u = 0, v = 0, k = 0;
        if (! (fields >> u >> v >> k))
            throw FormatError("coloring text: expected 'u v c', got '" + line + "'");
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
            throw FormatError("coloring text: bad vertex pair in '" + line + "'");
        int index = g.edge_index(u, v);
        if (index < 0)
            throw FormatError("coloring text: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
        if (k < 0)
            throw FormatError("coloring text: negative class id");
        c.classes[static_cast<std::size_t>(index)] = k;
    }
    if (std::find(c.classes.begin(), c.classes.end(), -1) != c.classes.end())
        throw FormatError("coloring text: not every edge is colored");
    return c;
}

auto coloring_to_json(const EdgeColoring &c) -> nlohmann::json
{
    return {{"classes", c.classes}};
}

auto coloring_from_json(const Graph &g, const nlohmann::json &j) -> EdgeColoring
{
    EdgeColoring c;
    try {
        c.classes = j.at("classes").get<std::vector<int>>();
    }
    catch (const nlohmann::json::exception &ex) {
        throw FormatError(std::string{"coloring JSON: "} + ex.what());
    }
    if (c.size() != g.size())
        throw FormatError("coloring JSON: expected " + std::to_string(g.size()) + " classes");
    if (std::any_of(c.classes.begin(), c.classes.end(), [](int k) { return k < 0; }))
        throw FormatError("coloring JSON: negative class id");
    return c;
}

auto greedy_proper_coloring(const Graph &g) -> EdgeColoring
{
    auto edges = g.edges();
    EdgeColoring c;
    c.classes.reserve(edges.size());
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(g.order()));
    for (const auto &e : edges) {
        auto &a = used[static_cast<std::size_t>(e.u)];
        auto &b = used[static_cast<std::size_t>(e.v)];
        std::size_t k = 0;
        while ((k < a.size() && a[k]) || (k < b.size() && b[k]))
            ++k;
        for (auto *row : {&a, &b}) {
            if (row->size() <= k)
                row->resize(k + 1, false);
            (*row)[k] = true;
        }
        c.classes.push_back(static_cast<int>(k));
    }
    return c;
}

} // namespace rainbowsat
