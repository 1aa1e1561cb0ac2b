#include <rainbowsat/canonical.hpp>
#include <rainbowsat/graph.hpp>
#include <rainbowsat/graph6.hpp>
#include <rainbowsat/independent_set.hpp>

#include "support/naive_oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace rainbowsat;

namespace {
    auto random_graph(int n, double p, std::mt19937_64 &rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto shuffled(const Graph &g, std::mt19937_64 &rng) -> Graph
    {
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return g.relabeled(perm);
    }
}

TEST(Generators, CompleteGraphEdgeCounts)
{
    EXPECT_EQ(complete_graph(4).size(), 6U);
    EXPECT_EQ(complete_graph(1).size(), 0U);
    EXPECT_EQ(complete_graph(5).size(), 10U);
    EXPECT_EQ(complete_graph(64).size(), 2016U);
    EXPECT_THROW(complete_graph(0), std::invalid_argument);
    EXPECT_THROW(complete_graph(65), std::invalid_argument);
}

TEST(Generators, StandardFamilies)
{
    auto w = wheel_graph(8);
    EXPECT_EQ(w.order(), 8);
    EXPECT_EQ(w.size(), 14U);
    EXPECT_EQ(w.degree(7), 7);
    for (int v = 0; v < 7; ++v)
        EXPECT_TRUE(w.has_edge(v, (v + 1) % 7));
    EXPECT_EQ(star_graph(4).size(), 4U);
    EXPECT_EQ(star_graph(4).degree(0), 4);
    EXPECT_EQ(path_graph(4).size(), 3U);
    EXPECT_EQ(path_graph(1).size(), 0U);
    EXPECT_EQ(cycle_graph(3).size(), 3U);
    EXPECT_EQ(empty_graph(5).size(), 0U);
    EXPECT_EQ(complete_bipartite(2, 3).size(), 6U);
    EXPECT_THROW(wheel_graph(3), std::invalid_argument);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
    EXPECT_THROW(path_graph(0), std::invalid_argument);
}

TEST(Generators, WheelIsHubJoinedToCycle)
{
    for (int n = 4; n <= 12; ++n)
        EXPECT_TRUE(are_isomorphic(wheel_graph(n), join(empty_graph(1), cycle_graph(n - 1)))) << n;
}

TEST(Algebra, Join)
{
    auto j = join(complete_graph(2), empty_graph(4));
    EXPECT_EQ(j.order(), 6);
    EXPECT_EQ(j.size(), 9U);
    EXPECT_TRUE(j.has_edge(0, 1));
    EXPECT_FALSE(j.has_edge(2, 3));
    EXPECT_EQ(join(empty_graph(1), empty_graph(1)), complete_graph(2));
    EXPECT_EQ(join(empty_graph(1), cycle_graph(7)).size(), wheel_graph(8).size());
    EXPECT_THROW(join(empty_graph(40), empty_graph(25)), std::length_error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto g = random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
        auto h = random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
        EXPECT_EQ(join(g, h).size(), g.size() + h.size() + static_cast<std::size_t>(g.order() * h.order()));
    }
}

TEST(Algebra, DisjointUnion)
{
    std::vector<Graph> four(4, complete_graph(4));
    auto u = disjoint_union(four);
    EXPECT_EQ(u.order(), 16);
    EXPECT_EQ(u.size(), 24U);
    EXPECT_EQ(disjoint_union({}).order(), 0);
    std::vector<Graph> two(2, complete_graph(2));
    auto m = disjoint_union(two);
    EXPECT_EQ(m.order(), 4);
    EXPECT_EQ(m.size(), 2U);
    EXPECT_TRUE(m.has_edge(2, 3));
    std::vector<Graph> big(2, empty_graph(33));
    EXPECT_THROW(disjoint_union(big), std::length_error);
}

TEST(GraphBasics, EdgeOrderIsLexicographic)
{
    Graph g(5);
    g.add_edge(3, 1);
    g.add_edge(0, 4);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    auto edges = g.edges();
    ASSERT_EQ(edges.size(), 4U);
    EXPECT_EQ(edges[0], (Edge{0, 2}));
    EXPECT_EQ(edges[1], (Edge{0, 4}));
    EXPECT_EQ(edges[2], (Edge{1, 2}));
    EXPECT_EQ(edges[3], (Edge{1, 3}));
    EXPECT_EQ(g.edge_index(2, 1), 2);
    EXPECT_EQ(g.edge_index(2, 3), -1);
    EXPECT_EQ(g.non_edges().size(), 6U);
}

TEST(GraphBasics, RejectsLoopsAndOutOfRange)
{
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    EXPECT_THROW(Graph(65), std::invalid_argument);
}

TEST(GraphBasics, HighVertexEdges)
{
    auto k = complete_graph(64);
    EXPECT_EQ(k.degree(63), 63);
    EXPECT_EQ(k.non_edges().size(), 0U);
    EXPECT_EQ(k.edge_index(62, 63), 2015);
    auto e = empty_graph(64);
    EXPECT_EQ(e.non_edges().size(), 2016U);
}

TEST(GraphBasics, InducedAndComponents)
{
    auto g = disjoint_union(std::vector<Graph>{complete_graph(3), path_graph(3)});
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2U);
    EXPECT_EQ(comps[0].size(), 3);
    auto induced = g.induced(comps[1]);
    EXPECT_EQ(induced, path_graph(3));
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_bipartite(path_graph(5)));
    EXPECT_FALSE(is_bipartite(cycle_graph(5)));
    EXPECT_TRUE(is_forest(star_graph(3)));
    EXPECT_FALSE(is_forest(cycle_graph(4)));
}

TEST(Canonical, InvariantUnderRelabeling)
{
    auto p = path_graph(4);
    std::vector<int> reverse{3, 2, 1, 0};
    EXPECT_EQ(canonical_form(p), canonical_form(p.relabeled(reverse)));
    EXPECT_NE(canonical_form(cycle_graph(4)), canonical_form(star_graph(3)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto g = random_graph(2 + static_cast<int>(rng() % 30), 0.3, rng);
        auto h = shuffled(g, rng);
        ASSERT_EQ(canonical_key(g), canonical_key(h));
        auto c = canonical_form(g);
        EXPECT_EQ(g.relabeled(c.labeling), c.representative());
    }
}

TEST(Canonical, RegularAndSymmetricGraphs)
{
    std::mt19937_64 rng(5);
    for (const auto &g : {complete_bipartite(5, 5), wheel_graph(20), cycle_graph(30), complete_graph(64), empty_graph(64),
                          disjoint_union(std::vector<Graph>(8, cycle_graph(6)))}) {
        auto h = shuffled(g, rng);
        EXPECT_TRUE(are_isomorphic(g, h));
    }
    // Same degree sequence, different graphs.
    EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(std::vector<Graph>(2, cycle_graph(3)))));
    EXPECT_FALSE(are_isomorphic(star_graph(3), path_graph(4)));
}

TEST(Canonical, ElevenClassesOnFourVertices)
{
    std::set<std::string> keys;
    std::set<std::vector<std::uint64_t>> brute;
    for (const auto &g : naive::all_labelled(4)) {
        keys.insert(canonical_key(g));
        brute.insert(naive::brute_canonical(g));
    }
    EXPECT_EQ(brute.size(), 11U);
    EXPECT_EQ(keys.size(), 11U);
}

TEST(Canonical, AgreesWithBruteForceOnSmallGraphs)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        auto g = random_graph(n, 0.5, rng);
        auto h = rng() % 2 == 0 ? shuffled(g, rng) : random_graph(n, 0.5, rng);
        const bool iso = naive::isomorphic(g, h);
        ASSERT_EQ(are_isomorphic(g, h), iso);
        ASSERT_EQ(canonical_key(g) == canonical_key(h), iso);
    }
}

TEST(IndependentSet, Examples)
{
    EXPECT_EQ(independence_number(complete_graph(4)), 1);
    EXPECT_EQ(independence_number(empty_graph(7)), 7);
    EXPECT_EQ(independence_number(cycle_graph(5)), 2);
    EXPECT_EQ(independence_number(wheel_graph(8)), 3);
    EXPECT_EQ(independent_sets_of_size(cycle_graph(5), 2).size(), 5U);
}

TEST(IndependentSet, MatchesExhaustiveSearch)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng() % 20);
        auto g = random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
        auto s = max_independent_set(g);
        ASSERT_TRUE(is_independent(g, s));
        int best = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet vs{mask};
            if (vs.size() > best && is_independent(g, vs))
                best = vs.size();
        }
        ASSERT_EQ(s.size(), best);
    }
}

TEST(EvenCycleFree, Examples)
{
    EXPECT_FALSE(is_even_cycle_free(cycle_graph(4)));
    EXPECT_TRUE(is_even_cycle_free(complete_graph(4)));
    EXPECT_FALSE(is_even_cycle_free(cycle_graph(6)));
    EXPECT_TRUE(is_even_cycle_free(cycle_graph(5)));
    EXPECT_TRUE(is_even_cycle_free(star_graph(4)));
    // K4 minus an edge has an induced C4? No: its 4-cycle has a chord.
    EXPECT_TRUE(is_even_cycle_free(complete_graph(4).without_edge({0, 1})));
    EXPECT_FALSE(is_even_cycle_free(complete_bipartite(2, 3)));
}

TEST(Graph6, ReferenceStrings)
{
    EXPECT_EQ(graph6_encode(complete_graph(2)), "A_");
    EXPECT_EQ(graph6_encode(empty_graph(5)), "D??");
    EXPECT_EQ(graph6_encode(path_graph(4)), "Ch");
    EXPECT_EQ(graph6_encode(complete_graph(4)), "C~");
    EXPECT_EQ(graph6_encode(cycle_graph(4)), "Cl");
    auto k64 = graph6_encode(complete_graph(64));
    EXPECT_EQ(k64.size(), 340U);
    EXPECT_EQ(k64.substr(0, 4), "~?@?");
    auto p63 = graph6_encode(path_graph(63));
    EXPECT_EQ(p63.size(), 330U);
    EXPECT_EQ(p63.substr(0, 4), "~??~");
}

TEST(Graph6, RoundTrip)
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 1000; ++i) {
        auto g = random_graph(1 + static_cast<int>(rng() % 64), 0.3, rng);
        ASSERT_EQ(graph6_decode(graph6_encode(g)), g);
    }
    for (int n = 0; n <= 64; ++n)
        ASSERT_EQ(graph6_decode(graph6_encode(complete_graph(std::max(n, 1)))), complete_graph(std::max(n, 1)));
    EXPECT_EQ(graph6_decode(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, RejectsMalformedInput)
{
    EXPECT_THROW(graph6_decode(""), FormatError);
    EXPECT_THROW(graph6_decode("C"), FormatError);
    EXPECT_THROW(graph6_decode("C~~"), FormatError);
    EXPECT_THROW(graph6_decode("A\x7f"), FormatError);
    // Padding bits must be zero.
    EXPECT_THROW(graph6_decode("A`"), FormatError);
    // 65 vertices.
    EXPECT_THROW(graph6_decode(std::string{"~??A"} + std::string(347, '?')), FormatError);
}

TEST(Graph6, JsonDebugFormat)
{
    auto j = graph_to_json(path_graph(3));
    EXPECT_EQ(j.dump(), R"({"edges":[[0,1],[1,2]],"n":3})");
    EXPECT_EQ(graph_from_json(j), path_graph(3));
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,2]]})")), FormatError);
}
