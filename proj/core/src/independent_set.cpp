#include <rainbowsat/independent_set.hpp>

#include <bit>
#include <stdexcept>

namespace rainbowsat {

namespace {
    class MisSearch {
    public:
        explicit MisSearch(const Graph &g) : g_(g) {}

        auto run() -> VertexSet
        {
            expand(g_.vertices().bits(), 0);
            return VertexSet{best_};
        }

    private:
        void expand(std::uint64_t candidates, std::uint64_t chosen)
        {
            // Vertices of degree <= 1 inside the candidate set belong to some maximum solution.
            bool reduced = true;
            while (reduced && candidates != 0) {
                reduced = false;
                for (auto b = candidates; b != 0; b &= b - 1) {
                    int v = std::countr_zero(b);
                    if (std::popcount(g_.neighbors(v) & candidates) <= 1) {
                        chosen |= std::uint64_t{1} << v;
                        candidates &= ~(g_.neighbors(v) | (std::uint64_t{1} << v));
                        reduced = true;
                        break;
                    }
                }
            }
            if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best_) && best_size_known_)
                return;
            if (candidates == 0) {
                best_ = chosen;
                best_size_known_ = true;
                return;
            }
            int pivot = -1, pivot_degree = -1;
            for (auto b = candidates; b != 0; b &= b - 1) {
                int v = std::countr_zero(b);
                int d = std::popcount(g_.neighbors(v) & candidates);
                if (d > pivot_degree) {
                    pivot = v;
                    pivot_degree = d;
                }
            }
            auto pivot_bit = std::uint64_t{1} << pivot;
            expand(candidates & ~(g_.neighbors(pivot) | pivot_bit), chosen | pivot_bit);
            expand(candidates & ~pivot_bit, chosen);
        }

        const Graph &g_;
        std::uint64_t best_ = 0;
        bool best_size_known_ = false;
    };

    void collect_sets(const Graph &g, int size, int from, std::uint64_t chosen, std::uint64_t forbidden,
                      std::vector<VertexSet> &out)
    {
        if (std::popcount(chosen) == size) {
            out.emplace_back(chosen);
            return;
        }
        for (int v = from; v < g.order(); ++v) {
            if ((forbidden >> v) & 1U)
                continue;
            if (g.order() - v < size - std::popcount(chosen))
                break;
            collect_sets(g, size, v + 1, chosen | (std::uint64_t{1} << v), forbidden | g.neighbors(v), out);
        }
    }
}

auto max_independent_set(const Graph &g) -> VertexSet
{
    return MisSearch{g}.run();
}

auto independence_number(const Graph &g) -> int
{
    return max_independent_set(g).size();
}

auto is_independent(const Graph &g, VertexSet s) -> bool
{
    for (auto v : s.members())
        if ((g.neighbors(v) & s.bits()) != 0)
            return false;
    return true;
}

auto independent_sets_of_size(const Graph &g, int size) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    if (size < 0 || size > g.order())
        return out;
    collect_sets(g, size, 0, 0, 0, out);
    return out;
}

auto is_even_cycle_free(const Graph &g) -> bool
{
    const int n = g.order();
    if (n > 24)
        throw std::invalid_argument("is_even_cycle_free: exhaustive check limited to 24 vertices");
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        int k = std::popcount(s);
        if (k < 4 || k % 2 != 0)
            continue;
        bool all_two = true;
        for (auto b = s; b != 0 && all_two; b &= b - 1)
            all_two = std::popcount(g.neighbors(std::countr_zero(b)) & s) == 2;
        if (all_two && is_connected(g.induced(VertexSet{s})))
            return false;
    }
    return true;
}

} // namespace rainbowsat
