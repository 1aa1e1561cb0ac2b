#include <rainbowsat/graph6.hpp>

namespace rainbowsat {

namespace {
    constexpr int bias = 63;
}

auto graph6_encode(const Graph &g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + bias));
    else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + bias));
    }

    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + bias));
                acc = nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + bias));
    return out;
}

auto graph6_decode(std::string_view text) -> Graph
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw FormatError("graph6: empty input");

    for (char c : text)
        if (c < 63 || c > 126)
            throw FormatError("graph6: byte outside 63..126");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != 126) {
        n = text[0] - bias;
        pos = 1;
    }
    else {
        if (text.size() >= 2 && text[1] == 126)
            throw FormatError("graph6: orders above 258047 are unsupported");
        if (text.size() < 4)
            throw FormatError("graph6: truncated order field");
        n = ((text[1] - bias) << 12) | ((text[2] - bias) << 6) | (text[3] - bias);
        pos = 4;
    }
    if (n > max_vertices)
        throw FormatError("graph6: order " + std::to_string(n) + " exceeds 64");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw FormatError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                          std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - bias;
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = text.back() - bias;
        if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
            throw FormatError("graph6: nonzero padding bits");
    }
    return g;
}

auto graph_to_json(const Graph &g) -> nlohmann::json
{
    auto edges = nlohmann::json::array();
    for (const auto &e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

auto graph_from_json(const nlohmann::json &j) -> Graph
{
    try {
        Graph g(j.at("n").get<int>());
        for (const auto &e : j.at("edges")) {
            if (! e.is_array() || e.size() != 2)
                throw FormatError("adjacency JSON: edge entries must be [u,v] pairs");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return g;
    }
    catch (const nlohmann::json::exception &ex) {
        throw FormatError(std::string{"adjacency JSON: "} + ex.what());
    }
    catch (const std::logic_error &ex) {
        throw FormatError(std::string{"adjacency JSON: "} + ex.what());
    }
}

} // namespace rainbowsat
