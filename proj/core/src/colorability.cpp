#include <rainbowsat/colorability.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rainbowsat {

namespace {
    using Clock = std::chrono::steady_clock;

    struct Interrupted {};

    struct Budget {
        std::optional<Clock::time_point> deadline;
        std::uint64_t node_limit = 0;
        std::uint64_t nodes = 0;

        void tick()
        {
            ++nodes;
            if (node_limit != 0 && nodes > node_limit)
                throw Interrupted{};
            if (deadline && (nodes & 0xFF) == 0 && Clock::now() > *deadline)
                throw Interrupted{};
        }
    };

    auto incident(const Edge &a, const Edge &b) -> bool
    {
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    }

    /// Backtracking over one block. Local edge i is global edge edges_[i].
    class BlockSearch {
    public:
        BlockSearch(int n, std::vector<Edge> edges, std::vector<std::vector<int>> embeddings, Budget &budget) :
            n_(n), edges_(std::move(edges)), embeddings_(std::move(embeddings)), budget_(budget)
        {
            const auto m = edges_.size();
            color_.assign(m, -1);
            used_.assign(static_cast<std::size_t>(n_) * (m + 1), 0);
            uncolored_.resize(embeddings_.size());
            repeats_.assign(embeddings_.size(), 0);
            of_edge_.resize(m);
            for (std::size_t e = 0; e < embeddings_.size(); ++e) {
                uncolored_[e] = static_cast<int>(embeddings_[e].size());
                for (int f : embeddings_[e])
                    of_edge_[static_cast<std::size_t>(f)].push_back(static_cast<int>(e));
            }
            seen_stamp_.assign(m + 1, 0);
        }

        auto run() -> bool { return dfs(0); }

        [[nodiscard]] auto colors() const -> const std::vector<int> & { return color_; }
        [[nodiscard]] auto max_depth() const -> int { return max_depth_; }

    private:
        auto blocked(int f, int c) const -> bool
        {
            const auto stride = edges_.size() + 1;
            const auto &e = edges_[static_cast<std::size_t>(f)];
            return used_[static_cast<std::size_t>(e.u) * stride + static_cast<std::size_t>(c)] != 0 ||
                used_[static_cast<std::size_t>(e.v) * stride + static_cast<std::size_t>(c)] != 0;
        }

        void mark(int f, int c, std::uint8_t value)
        {
            const auto stride = edges_.size() + 1;
            const auto &e = edges_[static_cast<std::size_t>(f)];
            used_[static_cast<std::size_t>(e.u) * stride + static_cast<std::size_t>(c)] = value;
            used_[static_cast<std::size_t>(e.v) * stride + static_cast<std::size_t>(c)] = value;
        }

        auto duplicates(int emb, int f, int c) const -> bool
        {
            for (int g : embeddings_[static_cast<std::size_t>(emb)])
                if (g != f && color_[static_cast<std::size_t>(g)] == c)
                    return true;
            return false;
        }

        /// Returns false if some copy became fully colored and rainbow; state is updated either way.
        auto assign(int f, int c) -> bool
        {
            color_[static_cast<std::size_t>(f)] = c;
            mark(f, c, 1);
            if (c == classes_)
                ++classes_;
            ++colored_;
            bool ok = true;
            for (int emb : of_edge_[static_cast<std::size_t>(f)]) {
                auto e = static_cast<std::size_t>(emb);
                --uncolored_[e];
                if (duplicates(emb, f, c))
                    ++repeats_[e];
                if (uncolored_[e] == 0 && repeats_[e] == 0)
                    ok = false;
            }
            return ok;
        }

        void unassign(int f, int c, int classes_before)
        {
            for (int emb : of_edge_[static_cast<std::size_t>(f)]) {
                auto e = static_cast<std::size_t>(emb);
                ++uncolored_[e];
                if (duplicates(emb, f, c))
                    --repeats_[e];
            }
            --colored_;
            classes_ = classes_before;
            mark(f, c, 0);
            color_[static_cast<std::size_t>(f)] = -1;
        }

        auto try_value(int f, int c, int depth) -> bool
        {
            int before = classes_;
            if (assign(f, c) && dfs(depth + 1))
                return true;
            unassign(f, c, before);
            return false;
        }

        auto dfs(int depth) -> bool
        {
            budget_.tick();
            max_depth_ = std::max(max_depth_, depth);
            if (colored_ == static_cast<int>(edges_.size()))
                return true;

            // A copy with one uncolored edge and a rainbow colored part forces
            // that edge onto one of the copy's classes.
            int forced = -1;
            std::vector<int> forced_values;
            for (std::size_t e = 0; e < embeddings_.size(); ++e) {
                if (repeats_[e] != 0 || uncolored_[e] != 1)
                    continue;
                int f = -1;
                for (int g : embeddings_[e])
                    if (color_[static_cast<std::size_t>(g)] < 0)
                        f = g;
                std::vector<int> values;
                for (int g : embeddings_[e])
                    if (g != f && ! blocked(f, color_[static_cast<std::size_t>(g)]))
                        values.push_back(color_[static_cast<std::size_t>(g)]);
                if (values.empty())
                    return false;
                if (forced < 0 || values.size() < forced_values.size()) {
                    forced = f;
                    forced_values = std::move(values);
                }
            }
            if (forced >= 0) {
                std::sort(forced_values.begin(), forced_values.end());
                for (int c : forced_values)
                    if (try_value(forced, c, depth))
                        return true;
                return false;
            }

            // Otherwise branch on the first uncolored edge of the least-complete unsatisfied copy.
            int pick_emb = -1;
            for (std::size_t e = 0; e < embeddings_.size(); ++e) {
                if (repeats_[e] != 0 || uncolored_[e] == 0)
                    continue;
                if (pick_emb < 0 || uncolored_[e] < uncolored_[static_cast<std::size_t>(pick_emb)])
                    pick_emb = static_cast<int>(e);
            }
            if (pick_emb < 0)
                return finish_freely();

            int f = -1;
            for (int g : embeddings_[static_cast<std::size_t>(pick_emb)])
                if (color_[static_cast<std::size_t>(g)] < 0 && (f < 0 || g < f))
                    f = g;

            ++stamp_;
            std::vector<int> order;
            for (int emb : of_edge_[static_cast<std::size_t>(f)]) {
                if (repeats_[static_cast<std::size_t>(emb)] != 0)
                    continue;
                for (int g : embeddings_[static_cast<std::size_t>(emb)]) {
                    int c = color_[static_cast<std::size_t>(g)];
                    if (c >= 0 && seen_stamp_[static_cast<std::size_t>(c)] != stamp_ && ! blocked(f, c)) {
                        seen_stamp_[static_cast<std::size_t>(c)] = stamp_;
                        order.push_back(c);
                    }
                }
            }
            std::sort(order.begin(), order.end());
            for (int c = 0; c < classes_; ++c)
                if (seen_stamp_[static_cast<std::size_t>(c)] != stamp_ && ! blocked(f, c))
                    order.push_back(c);
            order.push_back(classes_);

            for (int c : order)
                if (try_value(f, c, depth))
                    return true;
            return false;
        }

        /// Every copy already repeats a class: the rest only needs properness.
        auto finish_freely() -> bool
        {
            for (std::size_t f = 0; f < edges_.size(); ++f) {
                if (color_[f] >= 0)
                    continue;
                int c = 0;
                while (c < classes_ && blocked(static_cast<int>(f), c))
                    ++c;
                assign(static_cast<int>(f), c);
            }
            return true;
        }

        int n_;
        std::vector<Edge> edges_;
        std::vector<std::vector<int>> embeddings_;
        Budget &budget_;

        std::vector<int> color_;
        std::vector<std::uint8_t> used_;
        std::vector<int> uncolored_;
        std::vector<int> repeats_;
        std::vector<std::vector<int>> of_edge_;
        std::vector<unsigned> seen_stamp_;
        unsigned stamp_ = 0;
        int classes_ = 0;
        int colored_ = 0;
        int max_depth_ = 0;
    };

    class UnionFind {
    public:
        explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

        auto find(std::size_t x) -> std::size_t
        {
            while (parent_[x] != x)
                x = parent_[x] = parent_[parent_[x]];
            return x;
        }

        void unite(std::size_t a, std::size_t b)
        {
            a = find(a);
            b = find(b);
            if (a != b)
                parent_[std::max(a, b)] = std::min(a, b);
        }

    private:
        std::vector<std::size_t> parent_;
    };

    /// BFS over edge adjacency inside the block, starting from `root`.
    auto bfs_order(const std::vector<Edge> &edges, const std::vector<int> &block, int root) -> std::vector<int>
    {
        std::vector<int> order;
        std::vector<bool> taken(block.size(), false);
        auto start = std::find(block.begin(), block.end(), root);
        std::size_t first = start == block.end() ? 0 : static_cast<std::size_t>(start - block.begin());
        while (order.size() < block.size()) {
            std::size_t seed = first;
            while (taken[seed])
                seed = (seed + 1) % block.size();
            std::vector<std::size_t> queue{seed};
            taken[seed] = true;
            for (std::size_t q = 0; q < queue.size(); ++q) {
                order.push_back(block[queue[q]]);
                const auto &a = edges[static_cast<std::size_t>(block[queue[q]])];
                for (std::size_t j = 0; j < block.size(); ++j)
                    if (! taken[j] && incident(a, edges[static_cast<std::size_t>(block[j])])) {
                        taken[j] = true;
                        queue.push_back(j);
                    }
            }
        }
        return order;
    }
}

auto to_string(Colorability c) -> std::string_view
{
    switch (c) {
    case Colorability::colorable: return "COLORABLE";
    case Colorability::uncolorable: return "UNCOLORABLE";
    case Colorability::indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

auto SearchStats::operator+=(const SearchStats &o) -> SearchStats &
{
    nodes += o.nodes;
    max_depth = std::max(max_depth, o.max_depth);
    embeddings += o.embeddings;
    blocks += o.blocks;
    return *this;
}

auto rainbow_free_colorable(const Graph &g, std::span<const Pattern> family, const SearchOptions &options)
    -> ColorabilityResult
{
    if (family.empty())
        throw std::invalid_argument("rainbow_free_colorable: empty pattern family");

    ColorabilityResult result;
    const auto edges = g.edges();

    std::vector<Embedding> copies;
    for (const auto &p : family) {
        auto list = enumerate_embeddings(g, p);
        copies.insert(copies.end(), std::make_move_iterator(list.copies.begin()),
                      std::make_move_iterator(list.copies.end()));
    }
    std::sort(copies.begin(), copies.end());
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    result.stats.embeddings = copies.size();

    for (const auto &copy : copies) {
        bool all_incident = true;
        for (std::size_t i = 0; i < copy.size() && all_incident; ++i)
            for (std::size_t j = i + 1; j < copy.size() && all_incident; ++j)
                all_incident = incident(edges[static_cast<std::size_t>(copy[i])], edges[static_cast<std::size_t>(copy[j])]);
        if (all_incident) {
            result.status = Colorability::uncolorable;
            return result;
        }
    }

    UnionFind groups(edges.size());
    for (const auto &copy : copies)
        for (std::size_t i = 1; i < copy.size(); ++i)
            groups.unite(static_cast<std::size_t>(copy[0]), static_cast<std::size_t>(copy[i]));

    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(edges.size(), -1);
    std::vector<bool> relevant(edges.size(), false);
    for (const auto &copy : copies)
        for (int f : copy)
            relevant[static_cast<std::size_t>(f)] = true;
    for (std::size_t f = 0; f < edges.size(); ++f) {
        if (! relevant[f])
            continue;
        auto root = groups.find(f);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(block_of[root])].push_back(static_cast<int>(f));
    }
    result.stats.blocks = blocks.size();

    int root_edge = -1;
    if (options.root_edge && g.has_edge(options.root_edge->u, options.root_edge->v))
        root_edge = g.edge_index(options.root_edge->u, options.root_edge->v);

    Budget budget;
    if (options.timeout.count() > 0)
        budget.deadline = Clock::now() + options.timeout;
    budget.node_limit = options.node_limit;

    std::vector<int> final_class(edges.size(), -1);
    int class_offset = 0;
    bool indeterminate = false;

    // The block holding the root edge goes first: it is usually the only one that can fail.
    std::stable_sort(blocks.begin(), blocks.end(), [&](const auto &a, const auto &b) {
        bool ra = std::find(a.begin(), a.end(), root_edge) != a.end();
        bool rb = std::find(b.begin(), b.end(), root_edge) != b.end();
        return ra && ! rb;
    });

    for (const auto &block : blocks) {
        auto order = bfs_order(edges, block, root_edge);
        std::vector<int> local(edges.size(), -1);
        std::vector<Edge> local_edges;
        for (std::size_t i = 0; i < order.size(); ++i) {
            local[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
            local_edges.push_back(edges[static_cast<std::size_t>(order[i])]);
        }
        std::vector<std::vector<int>> local_copies;
        for (const auto &copy : copies) {
            if (local[static_cast<std::size_t>(copy.front())] < 0)
                continue;
            std::vector<int> lc;
            for (int f : copy)
                lc.push_back(local[static_cast<std::size_t>(f)]);
            local_copies.push_back(std::move(lc));
        }

        BlockSearch search(g.order(), std::move(local_edges), std::move(local_copies), budget);
        bool found = false;
        try {
            found = search.run();
        }
        catch (const Interrupted &) {
            indeterminate = true;
            result.stats.max_depth = std::max(result.stats.max_depth, search.max_depth());
            break;
        }
        result.stats.max_depth = std::max(result.stats.max_depth, search.max_depth());
        if (! found) {
            result.stats.nodes = budget.nodes;
            result.status = Colorability::uncolorable;
            return result;
        }
        int used = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int c = search.colors()[i];
            final_class[static_cast<std::size_t>(order[i])] = class_offset + c;
            used = std::max(used, c + 1);
        }
        class_offset += used;
    }
    result.stats.nodes = budget.nodes;

    if (indeterminate) {
        result.status = Colorability::indeterminate;
        return result;
    }

    // Edges outside every copy only need a proper class.
    std::vector<std::vector<bool>> taken(static_cast<std::size_t>(g.order()));
    auto take = [&](int v, int c) {
        auto &row = taken[static_cast<std::size_t>(v)];
        if (row.size() <= static_cast<std::size_t>(c))
            row.resize(static_cast<std::size_t>(c) + 1, false);
        row[static_cast<std::size_t>(c)] = true;
    };
    auto is_taken = [&](int v, int c) {
        const auto &row = taken[static_cast<std::size_t>(v)];
        return static_cast<std::size_t>(c) < row.size() && row[static_cast<std::size_t>(c)];
    };
    for (std::size_t f = 0; f < edges.size(); ++f)
        if (final_class[f] >= 0) {
            take(edges[f].u, final_class[f]);
            take(edges[f].v, final_class[f]);
        }
    for (std::size_t f = 0; f < edges.size(); ++f) {
        if (final_class[f] >= 0)
            continue;
        int c = 0;
        while (is_taken(edges[f].u, c) || is_taken(edges[f].v, c))
            ++c;
        final_class[f] = c;
        take(edges[f].u, c);
        take(edges[f].v, c);
    }

    result.status = Colorability::colorable;
    result.witness = EdgeColoring{std::move(final_class)}.normalized();
    return result;
}

auto component_decomposition(const Graph &g) -> std::vector<Component>
{
    std::vector<Component> out;
    for (auto set : connected_components(g)) {
        Component c;
        c.vertices = set.members();
        c.graph = g.induced(set);
        out.push_back(std::move(c));
    }
    return out;
}

auto rainbow_free_colorable_by_components(const Graph &g, std::span<const Pattern> family,
                                          const SearchOptions &options) -> ColorabilityResult
{
    if (family.empty())
        throw std::invalid_argument("rainbow_free_colorable_by_components: empty pattern family");
    for (const auto &p : family)
        if (! p.connected())
            throw std::invalid_argument("component decomposition requires connected patterns");

    ColorabilityResult result;
    std::vector<int> classes(g.size(), -1);
    int offset = 0;
    bool indeterminate = false;
    for (const auto &comp : component_decomposition(g)) {
        SearchOptions local = options;
        local.root_edge.reset();
        if (options.root_edge) {
            auto iu = std::find(comp.vertices.begin(), comp.vertices.end(), options.root_edge->u);
            auto iv = std::find(comp.vertices.begin(), comp.vertices.end(), options.root_edge->v);
            if (iu != comp.vertices.end() && iv != comp.vertices.end())
                local.root_edge = make_edge(static_cast<int>(iu - comp.vertices.begin()),
                                            static_cast<int>(iv - comp.vertices.begin()));
        }
        auto part = rainbow_free_colorable(comp.graph, family, local);
        result.stats += part.stats;
        if (part.status == Colorability::uncolorable) {
            result.status = Colorability::uncolorable;
            return result;
        }
        if (part.status == Colorability::indeterminate) {
            indeterminate = true;
            continue;
        }
        auto local_edges = comp.graph.edges();
        for (std::size_t i = 0; i < local_edges.size(); ++i) {
            int u = comp.vertices[static_cast<std::size_t>(local_edges[i].u)];
            int v = comp.vertices[static_cast<std::size_t>(local_edges[i].v)];
            classes[static_cast<std::size_t>(g.edge_index(u, v))] = offset + part.witness->classes[i];
        }
        offset += part.witness->class_count();
    }
    if (indeterminate) {
        result.status = Colorability::indeterminate;
        return result;
    }
    result.status = Colorability::colorable;
    result.witness = EdgeColoring{std::move(classes)}.normalized();
    return result;
}

} // namespace rainbowsat
