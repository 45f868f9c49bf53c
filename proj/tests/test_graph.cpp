#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"
#include "tautdrg/error.hpp"
#include "tautdrg/generators.hpp"
#include "tautdrg/graph.hpp"

using namespace tautdrg;

namespace {

std::filesystem::path data(const char* name)
{
    return std::filesystem::path(TAUTDRG_TEST_DATA) / name;
}

std::vector<std::int64_t> to64(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace

TEST(LoadGraph, FourCycle)
{
    const auto g = load_graph_file(data("c4.edges"));
    EXPECT_EQ(g.order(), 4);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_TRUE(g.adjacent(3, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(LoadGraph, CommentsAndBlankLines)
{
    const auto g = load_graph("# header\n\n0 1\n  1 2  \n\t2 0\n");
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(LoadGraph, Rejections)
{
    EXPECT_THROW(load_graph("0 0\n"), ParseError);
    EXPECT_THROW(load_graph("0 1\n1 0\n"), ParseError);
    EXPECT_THROW(load_graph("0 1\n1 x\n"), ParseError);
    EXPECT_THROW(load_graph("0 1 2\n"), ParseError);
    EXPECT_THROW(load_graph("0\n"), ParseError);
    EXPECT_THROW(load_graph("-1 2\n"), ParseError);
    EXPECT_THROW(load_graph(""), ParseError);
    EXPECT_THROW(load_graph("0 1\n2 3\n"), HypothesisError);
    // vertex 2 has no edges
    EXPECT_THROW(load_graph("0 1\n1 3\n0 3\n"), HypothesisError);
    EXPECT_THROW(load_graph_file(data("does_not_exist.edges")), IoError);
}

TEST(LoadGraph, DesarguesRoundTrip)
{
    const auto g = doubled_odd(3);
    const auto h = load_graph(to_edge_list(g));
    EXPECT_EQ(h.order(), 20);
    EXPECT_EQ(h.edge_count(), 30u);
    EXPECT_EQ(h.edges(), g.edges());
}

TEST(Generators, Hypercube4)
{
    const auto g = hypercube(4);
    EXPECT_EQ(g.order(), 16);
    EXPECT_EQ(g.edge_count(), 32u);
    for (int v = 0; v < 16; ++v)
        EXPECT_EQ(g.degree(v), 4);
    EXPECT_TRUE(g.adjacent(0, 8));
    EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Generators, DesarguesGirthAndRegularity)
{
    const auto g = doubled_odd(3);
    EXPECT_EQ(g.order(), 20);
    EXPECT_EQ(g.edge_count(), 30u);
    for (int v = 0; v < 20; ++v)
        EXPECT_EQ(g.degree(v), 3);
    EXPECT_EQ(oracle::girth(g), 6);
}

TEST(Generators, CycleAndDouble)
{
    const auto c = cycle(6);
    EXPECT_EQ(c.order(), 6);
    EXPECT_EQ(c.edge_count(), 6u);

    // double cover of an odd cycle is the cycle of twice the length
    const auto d = bipartite_double(cycle(5));
    EXPECT_EQ(d.order(), 10);
    EXPECT_TRUE(is_bipartite(d));
    EXPECT_EQ(distance_data(d).diameter(), 5);

    const auto via_family = generate("double:cycle:5");
    EXPECT_EQ(via_family.edges(), d.edges());
    // the double of a bipartite graph is two disjoint copies
    EXPECT_THROW(generate("double:" + data("c4.edges").string()), HypothesisError);
    EXPECT_EQ(generate("double:" + data("prism.edges").string()).order(), 12);
}

TEST(Generators, FamilyErrors)
{
    EXPECT_THROW(generate("petersen:3"), ParseError);
    EXPECT_THROW(generate("hypercube"), ParseError);
    EXPECT_THROW(generate("hypercube:0"), ParseError);
    EXPECT_THROW(generate("hypercube:13"), ParseError);
    EXPECT_THROW(generate("cycle:2"), ParseError);
    EXPECT_THROW(generate("cycle:5001"), ParseError);
    EXPECT_THROW(generate("doubled_odd:8"), ParseError);
    EXPECT_THROW(generate("cycle:4x"), ParseError);
}

TEST(DistanceData, Valencies)
{
    EXPECT_EQ(distance_data(hypercube(4)).valencies(), (std::vector<int>{1, 4, 6, 4, 1}));
    const auto des = distance_data(doubled_odd(3));
    EXPECT_EQ(des.diameter(), 5);
    EXPECT_EQ(des.valencies(), (std::vector<int>{1, 3, 6, 6, 3, 1}));
    EXPECT_EQ(distance_data(cycle(6)).valencies(), (std::vector<int>{1, 2, 2, 1}));
}

TEST(DistanceData, MatchesFloydWarshall)
{
    for (const auto& g : {hypercube(4), doubled_odd(3), cycle(7), load_graph_file(data("prism.edges"))}) {
        const auto dd = bfs_distances(g);
        const auto ref = oracle::floyd_warshall(g);
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y)
                ASSERT_EQ(dd(x, y), ref[x][y]);
    }
}

TEST(DistanceData, SphereSizesMustAgree)
{
    // path on 3 vertices: the middle vertex has no vertex at distance 2
    EXPECT_THROW(distance_data(load_graph("0 1\n1 2\n")), HypothesisError);
}

TEST(IntersectionArray, Hypercube4)
{
    const auto g = hypercube(4);
    const auto ia = intersection_array(g, distance_data(g));
    EXPECT_EQ(ia, IntersectionArray::from_bc(to64({4, 3, 2, 1}), to64({1, 2, 3, 4})));
    EXPECT_TRUE(ia.is_bipartite());
    EXPECT_EQ(ia.vertex_count(), 16);
}

TEST(IntersectionArray, Desargues)
{
    const auto g = doubled_odd(3);
    const auto ia = intersection_array(g, distance_data(g));
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(ia.b(i), (std::vector<std::int64_t>{3, 2, 2, 1, 1})[i]);
        EXPECT_EQ(ia.c(i + 1), (std::vector<std::int64_t>{1, 1, 2, 2, 3})[i]);
    }
    for (int i = 0; i <= 5; ++i)
        EXPECT_EQ(ia.a(i), 0);
}

TEST(IntersectionArray, NotDistanceRegular)
{
    const auto q = load_graph_file(data("q4_minus_edge.edges"));
    EXPECT_THROW(intersection_array(q, bfs_distances(q)), HypothesisError);
    EXPECT_THROW(distance_data(q), HypothesisError);

    const auto prism = load_graph_file(data("prism.edges"));
    EXPECT_THROW(intersection_array(prism, distance_data(prism)), HypothesisError);
}

TEST(IntersectionArray, FromBcRejectsInfeasible)
{
    EXPECT_THROW(IntersectionArray::from_bc(to64({3, 2}), to64({2, 3})), HypothesisError);
    EXPECT_THROW(IntersectionArray::from_bc(to64({3, 2}), to64({1})), HypothesisError);
    EXPECT_THROW(IntersectionArray::from_bc(to64({3, 2}), to64({1, 4})), HypothesisError);
    EXPECT_THROW(IntersectionArray::from_bc(to64({3, 2}), to64({1, 4})), HypothesisError);
    // k_2 = 3*2/4 not integral
    EXPECT_THROW(IntersectionArray::from_bc(to64({3, 2, 1}), to64({1, 0, 3})), HypothesisError);
}

TEST(IntersectionNumbers, BruteForceTensorAgrees)
{
    for (const auto& g : {hypercube(4), hypercube(5), doubled_odd(3), doubled_odd(4), cycle(8), cycle(9)}) {
        const auto dd = distance_data(g);
        const auto ia = intersection_array(g, dd);
        const IntersectionNumbers p(ia);
        const auto ref = oracle::intersection_tensor(g);
        ASSERT_FALSE(ref.empty());
        const int D = ia.diameter();
        for (int h = 0; h <= D; ++h)
            for (int i = 0; i <= D; ++i)
                for (int j = 0; j <= D; ++j) {
                    ASSERT_EQ(p(h, i, j), ref[h][i][j]) << h << i << j;
                    if (g.order() <= 20) {
                        ASSERT_EQ(intersection_number(ia, g, dd, h, i, j), ref[h][i][j]);
                    }
                }
    }
}

TEST(IntersectionNumbers, P222)
{
    auto p222 = [](const Graph& g) {
        const auto dd = distance_data(g);
        return intersection_number(intersection_array(g, dd), g, dd, 2, 2, 2);
    };
    EXPECT_EQ(p222(hypercube(4)), 4);
    EXPECT_EQ(p222(doubled_odd(3)), 3);
    const auto g = hypercube(5);
    const auto dd = distance_data(g);
    EXPECT_EQ(intersection_number(intersection_array(g, dd), g, dd, 1, 2, 2), 0);
}

TEST(ArrayProperties, ValencyRecurrenceAndSum)
{
    for (const auto& g : {hypercube(6), doubled_odd(4), doubled_odd(5), cycle(10)}) {
        const auto dd = distance_data(g);
        const auto ia = intersection_array(g, dd);
        std::int64_t total = 0;
        for (int i = 0; i <= ia.diameter(); ++i) {
            total += ia.k_i(i);
            EXPECT_EQ(ia.k_i(i), dd.valencies()[i]);
            if (i < ia.diameter()) {
                EXPECT_EQ(ia.k_i(i) * ia.b(i), ia.k_i(i + 1) * ia.c(i + 1));
            }
            EXPECT_EQ(ia.b(i) + ia.c(i), ia.valency());
        }
        EXPECT_EQ(total, g.order());
    }
}

TEST(Bipartite, Flags)
{
    EXPECT_TRUE(is_bipartite(hypercube(5)));
    EXPECT_TRUE(is_antipodal_2cover(distance_data(hypercube(5))));
    EXPECT_TRUE(is_bipartite(doubled_odd(3)));
    EXPECT_TRUE(is_antipodal_2cover(distance_data(doubled_odd(3))));
    EXPECT_FALSE(is_bipartite(cycle(5)));
    EXPECT_FALSE(is_antipodal_2cover(distance_data(cycle(5))));
}

TEST(Hypotheses, Gate)
{
    auto array_of = [](const Graph& g) { return intersection_array(g, distance_data(g)); };
    EXPECT_NO_THROW(validate_hypotheses(array_of(hypercube(4))));
    EXPECT_EQ(validate_hypotheses(array_of(hypercube(4)))->diameter(), 4);

    try {
        validate_hypotheses(array_of(cycle(12)));
        FAIL();
    } catch (const HypothesisError& e) {
        EXPECT_NE(std::string(e.what()).find("valency k >= 3 required"), std::string::npos);
    }
    try {
        validate_hypotheses(array_of(load_graph_file(data("k33.edges"))));
        FAIL();
    } catch (const HypothesisError& e) {
        EXPECT_NE(std::string(e.what()).find("diameter D >= 4 required"), std::string::npos);
    }
    EXPECT_THROW(validate_hypotheses(array_of(cycle(11))), HypothesisError);
    EXPECT_THROW(validate_hypotheses(array_of(hypercube(3))), HypothesisError);
}
