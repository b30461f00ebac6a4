#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "stc/errors.hpp"
#include "stc/graph.hpp"

using namespace stc;

namespace {

std::map<Node, int> as_map(const NodeMap<int>& d) {
    std::map<Node, int> out;
    for (Node x = 1; x <= d.size(); ++x) out[x] = d[x];
    return out;
}

}  // namespace

TEST_CASE("shortest path lengths of the example graphs") {
    CHECK(as_map(shortest_path_lengths(SystemGraph(fixtures::two_cycle_tree()))) ==
          std::map<Node, int>{{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 2}});
    CHECK(as_map(shortest_path_lengths(SystemGraph(fixtures::twin_tree()))) ==
          std::map<Node, int>{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 1}, {8, 2}, {9, 3}, {10, 4},
                              {11, 5}, {12, 6}, {13, 3}, {14, 4}});
}

TEST_CASE("chain depths and accessibility") {
    const SystemGraph g(make_system(3, {{1}}, {{1, 2}, {2, 3}}, {3}));
    CHECK(g.input_accessible());
    CHECK(g.depth(3) == 3);
    CHECK(g.in_degree(1) == 1);

    const SystemGraph cut(make_system(3, {{1}}, {{1, 2}}, {3}));
    CHECK_FALSE(cut.input_accessible());
    CHECK_FALSE(cut.has_depths());
    CHECK_THROWS_AS(shortest_path_lengths(cut), PreconditionError);

    const SystemGraph two(make_system(2, {{1}, {2}}, {}, {1}));
    CHECK(two.input_accessible());
    CHECK_THROWS_AS(shortest_path_lengths(two), UnsupportedError);
}

TEST_CASE("walk lengths") {
    const SystemGraph g(fixtures::two_cycle_tree());
    CHECK(path_length_set(g, 1, 6) == std::vector<int>{1, 3, 5});
    CHECK(path_length_set(g, 2, 6) == std::vector<int>{2, 4, 6});
    CHECK(path_length_set(g, 4, 7) == std::vector<int>{2, 4, 6});
    const auto table = walk_length_table(g, 1, 3);
    REQUIRE(table.size() == 4);
    CHECK(table[1][3]);
    CHECK_FALSE(table[1][4]);
    CHECK(table[3][3]);
    CHECK_FALSE(table[3][5]);
}

TEST_CASE("simple cycles") {
    const CycleSet mixed = simple_cycles(SystemGraph(fixtures::mixed_cycles()));
    CHECK(mixed.cycles == std::vector<std::vector<Node>>{{1, 2, 11}, {3, 4}, {5, 6}, {10}});
    CHECK(mixed.membership[11] == std::vector<int>{0});
    CHECK(mixed.membership[7].empty());

    CHECK(simple_cycles(SystemGraph(make_system(3, {{1}}, {{1, 2}, {2, 3}}, {1}))).empty());

    // Complete digraph on 4 nodes: 6 + 8 + 6 cycles of length 2, 3, 4.
    std::vector<Edge> complete;
    for (Node x = 1; x <= 4; ++x)
        for (Node y = 1; y <= 4; ++y)
            if (x != y) complete.push_back({x, y});
    const SystemGraph k4(make_system(4, {{1}}, complete, {1}));
    CHECK(simple_cycles(k4, 100).size() == 20);
    CHECK_THROWS_AS(simple_cycles(k4, 19), EnumerationOverflow);
    CHECK_THROWS_AS(simple_cycles(k4), EnumerationOverflow);  // default cap n^2 = 16
}
