#include <rainbowsat/canonical.hpp>
#include <rainbowsat/sat_numbers.hpp>
#include <rainbowsat/saturation.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace rainbowsat {

namespace {
    struct Keyed {
        std::string key;
        Graph graph;
    };

    void check_exhaustive_order(int n, const char *what)
    {
        if (n < 1 || n > max_exhaustive_order)
            throw std::invalid_argument(std::string{what} + ": n must be in 1.." + std::to_string(max_exhaustive_order));
    }

    auto max_edges(int n) -> int { return n * (n - 1) / 2; }

    auto first_level(int n) -> std::vector<Keyed>
    {
        auto canon = canonical_form(empty_graph(n));
        return {Keyed{canon.encoding(), canon.representative()}};
    }

    auto next_level(const std::vector<Keyed> &level, int threads) -> std::vector<Keyed>
    {
        std::vector<std::vector<Keyed>> children(level.size());
        detail::parallel_for(level.size(), threads, [&](std::size_t i) {
            const auto &g = level[i].graph;
            for (const auto &e : g.non_edges()) {
                auto canon = canonical_form(g.with_edge(e));
                children[i].push_back({canon.encoding(), canon.representative()});
            }
        });
        std::vector<Keyed> out;
        for (auto &batch : children)
            for (auto &k : batch)
                out.push_back(std::move(k));
        std::sort(out.begin(), out.end(), [](const Keyed &a, const Keyed &b) { return a.key < b.key; });
        out.erase(std::unique(out.begin(), out.end(), [](const Keyed &a, const Keyed &b) { return a.key == b.key; }),
                  out.end());
        return out;
    }
}

void for_each_graph_level(int n, int edge_budget, int threads,
                          const std::function<bool(int edges, const std::vector<Graph> &level)> &visit)
{
    check_exhaustive_order(n, "enumerate_nonisomorphic_graphs");
    if (edge_budget < 0)
        throw std::invalid_argument("enumerate_nonisomorphic_graphs: negative edge budget");
    const int top = std::min(edge_budget, max_edges(n));
    auto level = first_level(n);
    for (int m = 0; m <= top; ++m) {
        if (m > 0)
            level = next_level(level, threads);
        std::vector<Graph> graphs;
        graphs.reserve(level.size());
        for (const auto &k : level)
            graphs.push_back(k.graph);
        if (! visit(m, graphs))
            return;
    }
}

auto enumerate_nonisomorphic_graphs(int n, int edge_budget, int threads) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for_each_graph_level(n, edge_budget, threads, [&](int, const std::vector<Graph> &level) {
        out.insert(out.end(), level.begin(), level.end());
        return true;
    });
    return out;
}

struct ColorabilityLattice::Impl {
    int n;
    std::vector<Pattern> family;
    RunOptions options;
    std::vector<std::vector<Keyed>> levels;
    std::vector<std::vector<Graph>> graphs;
    std::vector<std::vector<Colorability>> statuses;
    std::unordered_map<std::string, std::size_t> position;
    Stats stats;

    void extend_to(int m)
    {
        while (static_cast<int>(levels.size()) <= m) {
            auto level = levels.empty() ? first_level(n) : next_level(levels.back(), options.threads);
            const bool has_below = ! levels.empty();
            std::vector<Colorability> status(level.size(), Colorability::indeterminate);
            std::vector<std::uint8_t> inferred(level.size(), 0);
            std::vector<std::uint64_t> nodes(level.size(), 0);
            detail::parallel_for(level.size(), options.threads, [&](std::size_t i) {
                const auto &g = level[i].graph;
                if (has_below)
                    for (const auto &e : g.edges()) {
                        auto key = canonical_key(g.without_edge(e));
                        auto below = statuses.back()[position.at(key)];
                        if (below == Colorability::uncolorable) {
                            status[i] = Colorability::uncolorable;
                            inferred[i] = 1;
                            return;
                        }
                    }
                auto r = rainbow_free_colorable(g, family, options.search);
                status[i] = r.status;
                nodes[i] = r.stats.nodes;
            });
            for (std::size_t i = 0; i < level.size(); ++i) {
                ++stats.graphs;
                if (inferred[i] != 0)
                    ++stats.inferred;
                else
                    ++stats.searches;
                stats.nodes += nodes[i];
                position[level[i].key] = i;
            }
            std::vector<Graph> plain;
            plain.reserve(level.size());
            for (const auto &k : level)
                plain.push_back(k.graph);
            graphs.push_back(std::move(plain));
            levels.push_back(std::move(level));
            statuses.push_back(std::move(status));
        }
    }
};

ColorabilityLattice::ColorabilityLattice(int n, std::vector<Pattern> family, RunOptions options)
{
    check_exhaustive_order(n, "ColorabilityLattice");
    if (family.empty())
        throw std::invalid_argument("ColorabilityLattice: empty pattern family");
    impl_ = std::make_unique<Impl>(Impl{n, std::move(family), options, {}, {}, {}, {}, {}});
}

ColorabilityLattice::~ColorabilityLattice() = default;
ColorabilityLattice::ColorabilityLattice(ColorabilityLattice &&) noexcept = default;
auto ColorabilityLattice::operator=(ColorabilityLattice &&) noexcept -> ColorabilityLattice & = default;

auto ColorabilityLattice::order() const -> int { return impl_->n; }

auto ColorabilityLattice::level(int m) -> const std::vector<Graph> &
{
    if (m < 0 || m > max_edges(impl_->n))
        throw std::out_of_range("ColorabilityLattice::level: no such edge count");
    impl_->extend_to(m);
    return impl_->graphs[static_cast<std::size_t>(m)];
}

auto ColorabilityLattice::status(const Graph &g) -> Colorability
{
    if (g.order() != impl_->n)
        throw std::invalid_argument("ColorabilityLattice::status: wrong order");
    const int m = static_cast<int>(g.size());
    impl_->extend_to(m);
    auto key = canonical_key(g);
    auto s = impl_->statuses[static_cast<std::size_t>(m)][impl_->position.at(key)];
    if (s == Colorability::indeterminate)
        throw SearchIndeterminate("colorability of " + std::to_string(m) + "-edge graph on " +
                                  std::to_string(impl_->n) + " vertices is undecided within the search budget");
    return s;
}

auto ColorabilityLattice::is_saturated(const Graph &g) -> bool
{
    if (status(g) != Colorability::colorable)
        return false;
    for (const auto &e : g.non_edges())
        if (status(g.with_edge(e)) != Colorability::uncolorable)
            return false;
    return true;
}

auto ColorabilityLattice::stats() const -> Stats { return impl_->stats; }

auto sat_star_exact(int n, std::span<const Pattern> family, const RunOptions &options) -> SatNumberResult
{
    ColorabilityLattice lattice(n, {family.begin(), family.end()}, options);
    SatNumberResult result;
    result.n = n;
    for (const auto &p : family)
        result.family.push_back(p.graph());
    for (int m = 0; m <= max_edges(n) && ! result.value; ++m) {
        auto level = lattice.level(m);
        for (const auto &g : level) {
            ++result.stats.graphs_examined;
            if (lattice.is_saturated(g))
                result.witnesses.push_back(g);
        }
        if (! result.witnesses.empty())
            result.value = m;
    }
    auto s = lattice.stats();
    result.stats.searches = s.searches;
    result.stats.inferred = s.inferred;
    result.stats.search_nodes = s.nodes;
    return result;
}

auto all_rainbow_saturated(int n, std::span<const Pattern> family, const RunOptions &options) -> std::vector<Graph>
{
    ColorabilityLattice lattice(n, {family.begin(), family.end()}, options);
    std::vector<Graph> out;
    for (int m = 0; m <= max_edges(n); ++m) {
        auto level = lattice.level(m);
        for (const auto &g : level)
            if (lattice.is_saturated(g))
                out.push_back(g);
    }
    return out;
}

auto sat_exact(int n, const Pattern &h, int threads) -> SatNumberResult
{
    SatNumberResult result;
    result.n = n;
    result.family.push_back(h.graph());
    for_each_graph_level(n, max_edges(n), threads, [&](int m, const std::vector<Graph> &level) {
        std::vector<std::uint8_t> saturated(level.size(), 0);
        detail::parallel_for(level.size(), threads, [&](std::size_t i) {
            saturated[i] = is_classically_saturated(level[i], h).saturated ? 1 : 0;
        });
        result.stats.graphs_examined += level.size();
        for (std::size_t i = 0; i < level.size(); ++i)
            if (saturated[i] != 0)
                result.witnesses.push_back(level[i]);
        if (result.witnesses.empty())
            return true;
        result.value = m;
        return false;
    });
    return result;
}

auto sat_formula_oracle(SatFormula formula, int n, int r) -> std::int64_t
{
    switch (formula) {
    case SatFormula::ehm: {
        if (r < 2 || r > n)
            throw std::invalid_argument("EHM formula needs 2 <= r <= n");
        std::int64_t a = r - 2, b = n - r + 2;
        return a * b + a * (a - 1) / 2;
    }
    case SatFormula::kt_p4:
        if (n < 4)
            throw std::invalid_argument("P4 formula needs n >= 4");
        return n % 2 == 0 ? n / 2 : (n + 3) / 2;
    case SatFormula::c4:
        if (n < 4)
            throw std::invalid_argument("C4 formula needs n >= 4");
        return (3 * static_cast<std::int64_t>(n) - 5) / 2;
    }
    throw std::invalid_argument("unknown formula");
}

} // namespace rainbowsat
