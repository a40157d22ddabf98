#include "doctest.h"

#include <set>

#include "flowpoly/partition_graph.hpp"
#include "oracles.hpp"

using namespace flowpoly;

namespace {
std::set<std::pair<int, int>> edge_set(const FlowGraph& g) {
    return {g.edges.begin(), g.edges.end()};
}
}  // namespace

TEST_CASE("partition parsing and validation") {
    CHECK(Partition::parse("4,3,2,1").parts == std::vector<int>{4, 3, 2, 1});
    CHECK(Partition::parse("7").size() == 7);
    CHECK(Partition::parse("2,2,1").length() == 3);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
    CHECK(Partition::staircase(3).parts == std::vector<int>{3, 2, 1});
}

TEST_CASE("build_graph matches the paper's figures") {
    SUBCASE("G((2,1,1), 5), figure with six vertices") {
        const FlowGraph g = build_graph(Partition::parse("2,1,1"), 5);
        CHECK(g.vertex_count == 6);
        const std::set<std::pair<int, int>> expected = {
            {1, 4}, {1, 5}, {2, 5}, {3, 5}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
        CHECK(edge_set(g) == expected);
    }
    SUBCASE("G((3,2,1), 6)") {
        const FlowGraph g = build_graph(Partition::parse("3,2,1"), 6);
        const std::set<std::pair<int, int>> expected = {
            {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 6},
            {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7}};
        CHECK(edge_set(g) == expected);
    }
    SUBCASE("staircase gives the complete graph") {
        const FlowGraph g = build_graph(Partition::parse("2,1"), 3);
        CHECK(g == complete_graph(4));
        for (int n = 2; n <= 8; ++n)
            CHECK(build_graph(Partition::staircase(n - 1), n) == complete_graph(n + 1));
    }
    SUBCASE("inadmissible n rejected with the violated row named") {
        CHECK_THROWS_WITH_AS(build_graph(Partition::parse("3,1"), 3),
                             doctest::Contains("row 1"), std::invalid_argument);
        CHECK_THROWS_WITH_AS(build_graph(Partition::parse("3,3"), 4),
                             doctest::Contains("row 2"), std::invalid_argument);
        CHECK(is_admissible(Partition::parse("2,2"), 4));
        CHECK_FALSE(is_admissible(Partition::parse("3,3"), 4));
    }
}

TEST_CASE("canonical edge order: Y-edges lexicographic, then sink edges") {
    const FlowGraph g = build_graph(Partition::parse("2,1"), 3);
    const std::vector<std::pair<int, int>> expected = {
        {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(g.edges == expected);
}

TEST_CASE("subgraph restricted to one source") {
    const Partition lambda = Partition::parse("2,1,1");
    const FlowGraph g = build_graph(lambda, 5);
    SUBCASE("vertex 1 keeps its Y-edges") {
        const FlowGraph g1 = subgraph_Gi(g, 1);
        const std::set<std::pair<int, int>> expected = {
            {1, 4}, {1, 5}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
        CHECK(edge_set(g1) == expected);
    }
    SUBCASE("vertex beyond l(lambda) keeps only sink edges") {
        const FlowGraph g4 = subgraph_Gi(g, 4);
        const std::set<std::pair<int, int>> expected = {{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
        CHECK(edge_set(g4) == expected);
    }
    SUBCASE("small example G((1),2)") {
        const FlowGraph g1 = subgraph_Gi(build_graph(Partition::parse("1"), 2), 1);
        const std::set<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {2, 3}};
        CHECK(edge_set(g1) == expected);
    }
    CHECK_THROWS_AS(subgraph_Gi(g, 6), std::invalid_argument);
    CHECK_THROWS_AS(subgraph_Gi(g, 0), std::invalid_argument);
}

TEST_CASE("restriction to the sources") {
    CHECK(edge_set(restrict_to_sources(build_graph(Partition::parse("2,1"), 3))) ==
          std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(edge_set(restrict_to_sources(build_graph(Partition::parse("1"), 2))) ==
          std::set<std::pair<int, int>>{{1, 2}});
    CHECK(edge_set(restrict_to_sources(build_graph(Partition::parse("2,1,1"), 5))) ==
          std::set<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}, {3, 5}});
    CHECK(restrict_to_sources(build_graph(Partition::parse("2,1"), 3)).vertex_count == 3);
}

TEST_CASE("outdegree shift") {
    CHECK(outdegree_shift(build_graph(Partition::parse("2,1"), 3)) == std::vector<int>{2, 1, 0});
    CHECK(outdegree_shift(build_graph(Partition::parse("2,1,1"), 5)) ==
          std::vector<int>{2, 1, 1, 0, 0});
    CHECK(outdegree_shift(build_graph(Partition::parse("1"), 2)) == std::vector<int>{1, 0});
    FlowGraph bad;
    bad.vertex_count = 3;
    bad.edges = {{1, 3}};
    CHECK_THROWS_AS(outdegree_shift(bad), std::invalid_argument);
}

TEST_CASE("edge count and outdegree sums across the family") {
    for (const Partition& lambda : flowpoly::testing::partitions_up_to(6)) {
        const int n_min = minimal_admissible_index(lambda);
        for (int n : {n_min, n_min + 2}) {
            const FlowGraph g = build_graph(lambda, n);
            CHECK(g.edge_count() == n + lambda.size());
            int tsum = 0;
            for (int t : outdegree_shift(g)) tsum += t;
            CHECK(tsum == lambda.size());
        }
    }
}

TEST_CASE("raising n by one adds a single vertex with one outgoing edge") {
    for (const Partition& lambda :
         {Partition::parse("3,2,1"), Partition::parse("4,1"), Partition::parse("2,2,2")}) {
        const int n0 = limiting_index(lambda);
        for (int n = n0; n < n0 + 3; ++n) {
            const FlowGraph small = build_graph(lambda, n);
            const FlowGraph big = build_graph(lambda, n + 1);
            CHECK(big.vertex_count == small.vertex_count + 1);
            CHECK(big.edge_count() == small.edge_count() + 1);
            // every old edge reappears with its target shifted right by one
            std::set<std::pair<int, int>> shifted;
            for (const auto& [i, j] : small.edges) shifted.insert({i, j + 1});
            std::set<std::pair<int, int>> big_set = edge_set(big);
            big_set.erase({n + 1, n + 2});  // the new vertex's only edge, straight to the sink
            CHECK(big_set == shifted);
            CHECK(big.outdegree(n + 1) == 1);
        }
    }
}

TEST_CASE("netflow validation") {
    CHECK(NetflowVector::ones(3).total() == 3);
    CHECK(NetflowVector({Int(2), Int(5)}).at(2) == 5);
    CHECK_THROWS_AS(NetflowVector({Int(1), Int(0)}), std::invalid_argument);
    CHECK_THROWS_AS(NetflowVector({Int(-2)}), std::invalid_argument);
    CHECK_THROWS_AS(NetflowVector(std::vector<Int>{}), std::invalid_argument);
}

TEST_CASE("limiting and minimal indices") {
    const Partition lambda = Partition::parse("4,3,2,1");
    CHECK(limiting_index(lambda) == 8);
    CHECK(minimal_admissible_index(lambda) == 5);
    CHECK(limiting_index(Partition::parse("1")) == 2);
    CHECK(minimal_admissible_index(Partition::parse("2,2")) == 5);
}
