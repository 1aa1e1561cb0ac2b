#include <rainbowsat/canonical.hpp>
#include <rainbowsat/constructions.hpp>
#include <rainbowsat/graph6.hpp>
#include <rainbowsat/independent_set.hpp>
#include <rainbowsat/saturation.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace rainbowsat;

namespace {
    auto one(const Graph &g) -> std::vector<Pattern> { return {Pattern(g)}; }

    auto component_orders(const Graph &g) -> std::map<int, int>
    {
        std::map<int, int> out;
        for (auto c : connected_components(g))
            ++out[c.size()];
        return out;
    }
}

TEST(Ehm, ShapeAndErrors)
{
    auto g = ehm_graph(6, 4);
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.size(), 9U);
    EXPECT_EQ(ehm_graph(5, 2), empty_graph(5));
    EXPECT_EQ(ehm_graph(4, 4).size(), 5U);
    EXPECT_THROW(ehm_graph(3, 4), std::invalid_argument);
    EXPECT_THROW(ehm_graph(5, 1), std::invalid_argument);
}

TEST(P4Construction, CountsAcrossRange)
{
    for (int n = 16; n <= 40; ++n) {
        auto cg = p4_construction(n);
        const int a = ((-n) % 5 + 5) % 5;
        const int stars = (n - 4 * a) / 5;
        EXPECT_EQ(cg.graph.order(), n);
        EXPECT_EQ(static_cast<int>(cg.graph.size()), 6 * a + 4 * stars) << n;
        EXPECT_TRUE(is_proper(cg.graph, cg.coloring));
        EXPECT_FALSE(find_rainbow_embedding(cg.graph, cg.coloring, Pattern(path_graph(4)))) << n;
        std::map<int, int> expected;
        if (a > 0)
            expected[4] = a;
        if (stars > 0)
            expected[5] = stars;
        EXPECT_EQ(component_orders(cg.graph), expected) << n;
    }
    EXPECT_THROW(p4_construction(15), std::invalid_argument);
    EXPECT_THROW(p4_construction(65), std::invalid_argument);
}

TEST(P4Construction, SaturatedAtSmallOrders)
{
    for (int n = 16; n <= 18; ++n)
        EXPECT_EQ(is_rainbow_saturated(p4_construction(n).graph, one(path_graph(4))).status,
                  SaturationStatus::saturated)
            << n;
}

TEST(WheelConstruction, ColoringProperties)
{
    for (int n = 6; n <= 12; ++n) {
        auto cg = wheel_construction(n);
        EXPECT_EQ(cg.graph, wheel_graph(n));
        EXPECT_EQ(static_cast<int>(cg.graph.size()), 2 * (n - 1));
        EXPECT_TRUE(is_proper(cg.graph, cg.coloring)) << n;
        EXPECT_EQ(cg.coloring.class_count(), n - 1);
        EXPECT_FALSE(find_rainbow_embedding(cg.graph, cg.coloring, Pattern(cycle_graph(4)))) << n;
    }
    EXPECT_THROW(wheel_construction(5), std::invalid_argument);
}

TEST(WheelConstruction, HubEdgeClasses)
{
    auto cg = wheel_construction(7);
    const int hub = 6;
    for (int i = 1; i <= 6; ++i) {
        const int vi = i - 1;
        const int a = i % 6, b = (i + 1) % 6;
        EXPECT_EQ(cg.coloring.classes[static_cast<std::size_t>(cg.graph.edge_index(hub, vi))], i - 1);
        EXPECT_EQ(cg.coloring.classes[static_cast<std::size_t>(cg.graph.edge_index(a, b))], i - 1);
    }
}

TEST(Gadgets, ShapesAndNames)
{
    auto kinds = gadget_kinds();
    EXPECT_EQ(kinds.size(), 7U);
    for (auto k : kinds) {
        auto g = gadget(k);
        EXPECT_EQ(parse_gadget_kind(to_string(k)), k);
        EXPECT_EQ(g.name, to_string(k));
        EXPECT_TRUE(g.graph.has_edge(g.marked.u, g.marked.v));
    }
    EXPECT_EQ(gadget(GadgetKind::ga).graph.size(), 10U);
    EXPECT_EQ(gadget(GadgetKind::gb).graph.size(), 11U);
    EXPECT_THROW(parse_gadget_kind("GC"), std::invalid_argument);
}

TEST(Gadgets, UncolorableForTheirPatterns)
{
    for (auto k : {GadgetKind::ga, GadgetKind::gb})
        EXPECT_EQ(rainbow_free_colorable(gadget(k).graph, one(cycle_graph(4))).status, Colorability::uncolorable);
    for (auto k : {GadgetKind::p4_fig2_left, GadgetKind::p4_fig2_right})
        EXPECT_EQ(rainbow_free_colorable(gadget(k).graph, one(path_graph(4))).status, Colorability::uncolorable)
            << to_string(k);
}

TEST(Gadgets, SmallAcyclicComponentsStayColorable)
{
    for (auto k : {GadgetKind::p4_fig3_a, GadgetKind::p4_fig3_b, GadgetKind::p4_fig3_c})
        EXPECT_EQ(rainbow_free_colorable(gadget(k).graph, one(path_graph(4))).status, Colorability::colorable)
            << to_string(k);
}

TEST(Gadgets, WithoutMarkedEdgeColorable)
{
    for (auto k : {GadgetKind::ga, GadgetKind::gb}) {
        auto g = gadget(k);
        EXPECT_EQ(rainbow_free_colorable(g.graph.without_edge(g.marked), one(cycle_graph(4))).status,
                  Colorability::colorable);
    }
}

TEST(Ladder, Levels)
{
    auto k3 = build_family_ladder(complete_graph(3));
    EXPECT_EQ(k3.depth(), 1);
    EXPECT_EQ(k3.alphas, std::vector<int>{1});
    EXPECT_EQ(k3.orders, (std::vector<int>{3, 2}));
    ASSERT_EQ(k3.levels[1].size(), 1U);
    EXPECT_TRUE(are_isomorphic(k3.levels[1][0], complete_graph(2)));

    auto k4 = build_family_ladder(complete_graph(4));
    EXPECT_EQ(k4.depth(), 2);
    EXPECT_EQ(k4.orders, (std::vector<int>{4, 3, 2}));

    auto c5 = build_family_ladder(cycle_graph(5));
    EXPECT_EQ(c5.depth(), 1);
    EXPECT_EQ(c5.alphas, std::vector<int>{2});
    for (const auto &f : c5.levels[1])
        EXPECT_TRUE(is_forest(f));

    auto tree = build_family_ladder(path_graph(4));
    EXPECT_EQ(tree.depth(), 0);
    EXPECT_TRUE(tree.alphas.empty());
}

TEST(Ladder, Errors)
{
    EXPECT_THROW(build_family_ladder(cycle_graph(4)), std::invalid_argument);
    EXPECT_THROW(build_family_ladder(empty_graph(3)), std::invalid_argument);
    EXPECT_THROW(ladder_construction(complete_graph(3), 0), std::invalid_argument);
    EXPECT_THROW(ladder_construction(complete_graph(3), 65), std::invalid_argument);
    LadderOptions cubic{LadderSizing::cubic, {}};
    EXPECT_THROW(ladder_construction(complete_graph(3), 30, cubic), std::invalid_argument);
}

TEST(Ladder, TreePatternIsGreedyBase)
{
    auto r = ladder_construction(path_graph(4), 8);
    EXPECT_TRUE(r.trace.steps.empty());
    EXPECT_EQ(r.trace.base_order, 8);
    EXPECT_EQ(r.graph, greedy_saturate(empty_graph(8), one(path_graph(4))));
}

TEST(Ladder, AdaptiveK3Saturated)
{
    for (int n = 3; n <= 9; ++n) {
        auto r = ladder_construction(complete_graph(3), n);
        EXPECT_EQ(r.graph.order(), n);
        ASSERT_EQ(r.trace.steps.size(), 1U);
        EXPECT_GE(r.trace.steps[0].independent_set_size, 1);
        EXPECT_EQ(is_rainbow_saturated(r.graph, one(complete_graph(3))).status, SaturationStatus::saturated) << n;
    }
}

TEST(Ladder, CubicSizingK3)
{
    LadderOptions cubic{LadderSizing::cubic, {}};
    auto r = ladder_construction(complete_graph(3), 31, cubic);
    ASSERT_EQ(r.trace.steps.size(), 1U);
    EXPECT_EQ(r.trace.steps[0].independent_set_size, 30);
    EXPECT_EQ(r.trace.base_order, 1);
    EXPECT_EQ(is_rainbow_saturated(r.graph, one(complete_graph(3))).status, SaturationStatus::saturated);
}
