#include <rainbowsat/graph6.hpp>
#include <rainbowsat/pattern.hpp>

#include <algorithm>
#include <bit>
#include <regex>
#include <stdexcept>

namespace rainbowsat {

namespace {
    class SubgraphMapper {
    public:
        SubgraphMapper(const Graph &host, const Graph &pattern,
                       const std::function<bool(std::span<const int>)> &visit) :
            host_(host), pattern_(pattern), visit_(visit),
            image_(static_cast<std::size_t>(pattern.order()), -1)
        {
            build_order();
        }

        void run()
        {
            if (pattern_.order() > host_.order())
                return;
            extend(0, 0);
        }

    private:
        void build_order()
        {
            const int k = pattern_.order();
            std::vector<bool> placed(static_cast<std::size_t>(k), false);
            while (static_cast<int>(order_.size()) < k) {
                int root = -1;
                for (int v = 0; v < k; ++v)
                    if (! placed[static_cast<std::size_t>(v)] && (root < 0 || pattern_.degree(v) > pattern_.degree(root)))
                        root = v;
                std::vector<int> queue{root};
                placed[static_cast<std::size_t>(root)] = true;
                for (std::size_t i = 0; i < queue.size(); ++i) {
                    order_.push_back(queue[i]);
                    for (auto w : VertexSet{pattern_.neighbors(queue[i])}.members())
                        if (! placed[static_cast<std::size_t>(w)]) {
                            placed[static_cast<std::size_t>(w)] = true;
                            queue.push_back(w);
                        }
                }
            }
        }

        auto extend(std::size_t depth, std::uint64_t used) -> bool
        {
            if (depth == order_.size())
                return visit_(image_);
            int p = order_[depth];
            std::uint64_t candidates = host_.vertices().bits() & ~used;
            for (auto q : VertexSet{pattern_.neighbors(p)}.members())
                if (image_[static_cast<std::size_t>(q)] >= 0)
                    candidates &= host_.neighbors(image_[static_cast<std::size_t>(q)]);
            int need = pattern_.degree(p);
            for (auto b = candidates; b != 0; b &= b - 1) {
                int v = std::countr_zero(b);
                if (host_.degree(v) < need)
                    continue;
                image_[static_cast<std::size_t>(p)] = v;
                if (! extend(depth + 1, used | (std::uint64_t{1} << v))) {
                    image_[static_cast<std::size_t>(p)] = -1;
                    return false;
                }
            }
            image_[static_cast<std::size_t>(p)] = -1;
            return true;
        }

        const Graph &host_;
        const Graph &pattern_;
        const std::function<bool(std::span<const int>)> &visit_;
        std::vector<int> image_;
        std::vector<int> order_;
    };

    auto pairwise_incident(const Graph &g) -> bool
    {
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const auto &a = edges[i], &b = edges[j];
                if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v)
                    return false;
            }
        return true;
    }
}

Pattern::Pattern(Graph h, std::string name) : graph_(std::move(h)), name_(std::move(name))
{
    core_ = graph_.without_vertices(graph_.isolated_vertices());
    automorphisms_ = count_automorphisms(core_);
    connected_ = core_.order() > 0 && core_.order() == graph_.order() && is_connected(core_);
    always_rainbow_ = pairwise_incident(core_);
}

void for_each_subgraph_map(const Graph &host, const Graph &pattern,
                           const std::function<bool(std::span<const int>)> &visit)
{
    SubgraphMapper{host, pattern, visit}.run();
}

auto count_automorphisms(const Graph &g) -> std::uint64_t
{
    std::uint64_t count = 0;
    for_each_subgraph_map(g, g, [&](std::span<const int>) {
        ++count;
        return true;
    });
    return count;
}

auto enumerate_embeddings(const Graph &g, const Pattern &h) -> EmbeddingList
{
    EmbeddingList out;
    if (g.order() < h.order())
        return out;
    if (h.core().order() == 0) {
        out.copies.emplace_back();
        return out;
    }
    std::vector<int> index(static_cast<std::size_t>(g.order() * g.order()), -1);
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        index[static_cast<std::size_t>(edges[i].u * g.order() + edges[i].v)] = static_cast<int>(i);
        index[static_cast<std::size_t>(edges[i].v * g.order() + edges[i].u)] = static_cast<int>(i);
    }
    auto pattern_edges = h.core().edges();
    for_each_subgraph_map(g, h.core(), [&](std::span<const int> image) {
        Embedding copy;
        copy.reserve(pattern_edges.size());
        for (const auto &e : pattern_edges)
            copy.push_back(index[static_cast<std::size_t>(image[static_cast<std::size_t>(e.u)] * g.order() +
                                                          image[static_cast<std::size_t>(e.v)])]);
        std::sort(copy.begin(), copy.end());
        out.copies.push_back(std::move(copy));
        return true;
    });
    std::sort(out.copies.begin(), out.copies.end());
    out.copies.erase(std::unique(out.copies.begin(), out.copies.end()), out.copies.end());
    return out;
}

auto contains_subgraph(const Graph &host, const Graph &pattern) -> bool
{
    bool found = false;
    for_each_subgraph_map(host, pattern, [&](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

auto find_rainbow_embedding(const Graph &g, const EdgeColoring &c, const Pattern &h) -> std::optional<Embedding>
{
    if (! is_proper(g, c))
        throw std::invalid_argument("find_rainbow_embedding: coloring is not proper");
    for (const auto &copy : enumerate_embeddings(g, h).copies) {
        std::vector<int> seen;
        seen.reserve(copy.size());
        for (int e : copy)
            seen.push_back(c.classes[static_cast<std::size_t>(e)]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) == seen.end())
            return copy;
    }
    return std::nullopt;
}

auto parse_pattern(const std::string &text) -> Pattern
{
    static const std::regex named{R"(([KPCEW])(\d+)(?:_(\d+))?)"};
    std::smatch m;
    if (std::regex_match(text, m, named)) {
        char kind = m[1].str()[0];
        int a = std::stoi(m[2].str());
        if (m[3].matched) {
            if (kind != 'K')
                throw FormatError("pattern '" + text + "': only K accepts a second part size");
            return Pattern{complete_bipartite(a, std::stoi(m[3].str())), text};
        }
        switch (kind) {
        case 'K': return Pattern{complete_graph(a), text};
        case 'P': return Pattern{path_graph(a), text};
        case 'C': return Pattern{cycle_graph(a), text};
        case 'E': return Pattern{empty_graph(a), text};
        case 'W': return Pattern{wheel_graph(a), text};
        default: break;
        }
    }
    return Pattern{graph6_decode(text), text};
}

} // namespace rainbowsat
