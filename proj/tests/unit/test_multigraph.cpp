#include <stdexcept>

#include "doctest.h"
#include "palettelab/families.hpp"
#include "palettelab/multigraph.hpp"

using namespace palettelab;

TEST_CASE("build assigns consecutive ids to parallel copies") {
    Multigraph g = Multigraph::build(3, {{0, 1, 2}, {1, 2, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.endpoints(0) == std::pair<VertexId, VertexId>{0, 1});
    CHECK(g.endpoints(1) == std::pair<VertexId, VertexId>{0, 1});
    CHECK(g.endpoints(2) == std::pair<VertexId, VertexId>{1, 2});
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.multiplicity(0, 2) == 0);
    CHECK(g.max_multiplicity() == 2);
}

TEST_CASE("build rejects loops and bad vertex ids") {
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph::build(2, {{-1, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph::build(-1, {}), std::invalid_argument);
}

TEST_CASE("degree counts every parallel copy") {
    Multigraph g = Multigraph::build(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 1}});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 4);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.max_degree() == 4);
    CHECK(g.incident_edges(1).size() == 4);
}

TEST_CASE("simple projection collapses parallels and keeps isolated vertices") {
    Multigraph g = Multigraph::build(4, {{0, 1, 3}, {1, 2, 2}});
    Multigraph s = g.simple_projection();
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 2);
    CHECK(s.max_multiplicity() == 1);
    CHECK(s.degree(3) == 0);
}

TEST_CASE("disjoint union offsets vertex and edge ids per part") {
    Multigraph a = Multigraph::build(2, {{0, 1, 1}});
    Multigraph b = Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    UnionLayout u = disjoint_union({a, b});
    CHECK(u.graph.vertex_count() == 5);
    CHECK(u.graph.edge_count() == 3);
    CHECK(u.vertex_offset == std::vector<int>{0, 2});
    CHECK(u.edge_offset == std::vector<int>{0, 1});
    CHECK(u.component_of_vertex == std::vector<int>{0, 0, 1, 1, 1});
    CHECK(u.graph.endpoints(1) == std::pair<VertexId, VertexId>{2, 3});
    CHECK(u.graph.endpoints(2) == std::pair<VertexId, VertexId>{3, 4});
}

TEST_CASE("sorted pair list normalizes edge order") {
    Multigraph g = Multigraph::build(3, {{1, 2, 2}, {0, 1, 1}});
    auto pairs = g.sorted_pair_list();
    std::vector<std::pair<VertexId, VertexId>> want{{0, 1}, {1, 2}, {1, 2}};
    CHECK(pairs == want);
}

TEST_CASE("equality is structural") {
    Multigraph a = Multigraph::build(3, {{0, 1, 2}, {1, 2, 1}});
    Multigraph b = Multigraph::build(3, {{0, 1, 2}, {1, 2, 1}});
    Multigraph c = Multigraph::build(3, {{0, 1, 1}, {1, 2, 2}});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}
