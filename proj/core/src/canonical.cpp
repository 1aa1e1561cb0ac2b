#include <rainbowsat/canonical.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace rainbowsat {

namespace {
    using Rows = std::array<std::uint64_t, max_vertices>;
    using Perm = std::array<std::uint8_t, max_vertices>;

    struct OrderedPartition {
        int cells = 0;
        std::array<std::uint64_t, max_vertices> cell{};
    };

    class UnionFind {
    public:
        explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

        auto find(int x) -> int
        {
            while (parent_[static_cast<std::size_t>(x)] != x) {
                parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
                x = parent_[static_cast<std::size_t>(x)];
            }
            return x;
        }

        void unite(int a, int b)
        {
            a = find(a);
            b = find(b);
            if (a != b)
                parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }

    private:
        std::vector<int> parent_;
    };

    class CanonicalSearch {
    public:
        CanonicalSearch(const Graph &g) : n_(g.order())
        {
            for (int v = 0; v < n_; ++v)
                adj_[static_cast<std::size_t>(v)] = g.neighbors(v);
            add_twin_generators();
        }

        auto run() -> CanonicalForm
        {
            OrderedPartition root;
            if (n_ > 0) {
                root.cells = 1;
                root.cell[0] = VertexSet::range(n_).bits();
            }
            std::vector<int> prefix;
            search(root, prefix);

            CanonicalForm out;
            out.n = n_;
            out.rows.assign(best_rows_.begin(), best_rows_.begin() + n_);
            out.labeling.assign(static_cast<std::size_t>(n_), 0);
            for (int i = 0; i < n_; ++i)
                out.labeling[best_order_[static_cast<std::size_t>(i)]] = i;
            return out;
        }

    private:
        void add_twin_generators()
        {
            std::vector<bool> placed(static_cast<std::size_t>(n_), false);
            for (int u = 0; u < n_; ++u) {
                if (placed[static_cast<std::size_t>(u)])
                    continue;
                int last = u;
                for (int v = u + 1; v < n_; ++v) {
                    auto bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
                    if (! placed[static_cast<std::size_t>(v)] &&
                        (adj_[static_cast<std::size_t>(u)] & ~bv) == (adj_[static_cast<std::size_t>(v)] & ~bu)) {
                        placed[static_cast<std::size_t>(v)] = true;
                        Perm p = identity();
                        p[static_cast<std::size_t>(last)] = static_cast<std::uint8_t>(v);
                        p[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(last);
                        generators_.push_back(p);
                        last = v;
                    }
                }
            }
        }

        auto identity() const -> Perm
        {
            Perm p{};
            for (int i = 0; i < max_vertices; ++i)
                p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
            return p;
        }

        void refine(OrderedPartition &p) const
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int s = 0; s < p.cells && p.cells < n_; ++s) {
                    auto splitter = p.cell[static_cast<std::size_t>(s)];
                    for (int c = 0; c < p.cells; ++c) {
                        auto members = p.cell[static_cast<std::size_t>(c)];
                        if (std::popcount(members) < 2)
                            continue;
                        std::array<int, max_vertices> count{};
                        int lo = max_vertices, hi = -1;
                        for (auto b = members; b != 0; b &= b - 1) {
                            int v = std::countr_zero(b);
                            int k = std::popcount(adj_[static_cast<std::size_t>(v)] & splitter);
                            count[static_cast<std::size_t>(v)] = k;
                            lo = std::min(lo, k);
                            hi = std::max(hi, k);
                        }
                        if (lo == hi)
                            continue;
                        std::array<std::uint64_t, max_vertices + 1> by_count{};
                        for (auto b = members; b != 0; b &= b - 1) {
                            int v = std::countr_zero(b);
                            by_count[static_cast<std::size_t>(count[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << v;
                        }
                        std::array<std::uint64_t, max_vertices> pieces{};
                        int np = 0;
                        for (int k = lo; k <= hi; ++k)
                            if (by_count[static_cast<std::size_t>(k)] != 0)
                                pieces[static_cast<std::size_t>(np++)] = by_count[static_cast<std::size_t>(k)];
                        for (int i = p.cells - 1; i > c; --i)
                            p.cell[static_cast<std::size_t>(i + np - 1)] = p.cell[static_cast<std::size_t>(i)];
                        for (int i = 0; i < np; ++i)
                            p.cell[static_cast<std::size_t>(c + i)] = pieces[static_cast<std::size_t>(i)];
                        p.cells += np - 1;
                        c += np - 1;
                        changed = true;
                    }
                }
            }
        }

        auto pruned(int v, const std::vector<int> &explored, const std::vector<int> &prefix) const -> bool
        {
            if (explored.empty())
                return false;
            UnionFind orbits(n_);
            for (const auto &g : generators_) {
                bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int x) {
                    return g[static_cast<std::size_t>(x)] == x;
                });
                if (! fixes)
                    continue;
                for (int x = 0; x < n_; ++x)
                    orbits.unite(x, g[static_cast<std::size_t>(x)]);
            }
            int root = orbits.find(v);
            return std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == root; });
        }

        void search(OrderedPartition p, std::vector<int> &prefix)
        {
            refine(p);
            if (p.cells == n_) {
                leaf(p);
                return;
            }
            int target = -1, target_size = max_vertices + 1;
            for (int c = 0; c < p.cells; ++c) {
                int sz = std::popcount(p.cell[static_cast<std::size_t>(c)]);
                if (sz > 1 && sz < target_size) {
                    target = c;
                    target_size = sz;
                }
            }
            auto members = p.cell[static_cast<std::size_t>(target)];
            std::vector<int> explored;
            for (auto b = members; b != 0; b &= b - 1) {
                int v = std::countr_zero(b);
                if (pruned(v, explored, prefix))
                    continue;
                explored.push_back(v);
                OrderedPartition q = p;
                for (int i = q.cells; i > target; --i)
                    q.cell[static_cast<std::size_t>(i)] = q.cell[static_cast<std::size_t>(i - 1)];
                q.cell[static_cast<std::size_t>(target)] = std::uint64_t{1} << v;
                q.cell[static_cast<std::size_t>(target + 1)] = members & ~(std::uint64_t{1} << v);
                ++q.cells;
                prefix.push_back(v);
                search(q, prefix);
                prefix.pop_back();
            }
        }

        void leaf(const OrderedPartition &p)
        {
            std::array<int, max_vertices> order{};
            std::array<int, max_vertices> position{};
            for (int i = 0; i < n_; ++i) {
                order[static_cast<std::size_t>(i)] = std::countr_zero(p.cell[static_cast<std::size_t>(i)]);
                position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
            }
            Rows rows{};
            for (int i = 0; i < n_; ++i) {
                std::uint64_t r = 0;
                for (auto b = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]; b != 0; b &= b - 1)
                    r |= std::uint64_t{1} << position[static_cast<std::size_t>(std::countr_zero(b))];
                rows[static_cast<std::size_t>(i)] = r;
            }
            if (! have_leaf_) {
                have_leaf_ = true;
                first_rows_ = best_rows_ = rows;
                first_order_ = best_order_ = order;
                return;
            }
            auto cmp_first = compare(rows, first_rows_);
            if (cmp_first == 0) {
                record_automorphism(first_order_, order);
                return;
            }
            auto cmp_best = compare(rows, best_rows_);
            if (cmp_best > 0) {
                best_rows_ = rows;
                best_order_ = order;
            }
            else if (cmp_best == 0)
                record_automorphism(best_order_, order);
        }

        auto compare(const Rows &a, const Rows &b) const -> int
        {
            for (int i = 0; i < n_; ++i) {
                if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                    return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
            }
            return 0;
        }

        void record_automorphism(const std::array<int, max_vertices> &from, const std::array<int, max_vertices> &to)
        {
            Perm g = identity();
            for (int i = 0; i < n_; ++i)
                g[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(to[static_cast<std::size_t>(i)]);
            generators_.push_back(g);
        }

        int n_;
        Rows adj_{};
        std::vector<Perm> generators_;
        bool have_leaf_ = false;
        Rows first_rows_{}, best_rows_{};
        std::array<int, max_vertices> first_order_{}, best_order_{};
    };
}

auto CanonicalForm::encoding() const -> std::string
{
    std::string out;
    out.reserve(1 + rows.size() * 8);
    out.push_back(static_cast<char>(n));
    for (auto r : rows)
        for (int byte = 0; byte < 8; ++byte)
            out.push_back(static_cast<char>((r >> (8 * byte)) & 0xFFU));
    return out;
}

auto CanonicalForm::representative() const -> Graph
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (auto b = rows[static_cast<std::size_t>(i)]; b != 0; b &= b - 1) {
            int j = std::countr_zero(b);
            if (j > i)
                g.add_edge(i, j);
        }
    return g;
}

auto canonical_form(const Graph &g) -> CanonicalForm
{
    return CanonicalSearch{g}.run();
}

auto are_isomorphic(const Graph &g, const Graph &h) -> bool
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    auto dg = std::vector<int>(static_cast<std::size_t>(g.order()));
    auto dh = dg;
    for (int v = 0; v < g.order(); ++v) {
        dg[static_cast<std::size_t>(v)] = g.degree(v);
        dh[static_cast<std::size_t>(v)] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return canonical_form(g) == canonical_form(h);
}

auto canonical_key(const Graph &g) -> std::string
{
    return canonical_form(g).encoding();
}

} // namespace rainbowsat
