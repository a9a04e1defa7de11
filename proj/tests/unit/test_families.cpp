#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "palettelab/families.hpp"

using namespace palettelab;

TEST_CASE("windmill at delta=2 is the triangle") {
    Multigraph g = windmill(2);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("windmill degrees split into hub and rim") {
    Multigraph g = windmill(6);
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 9);
    CHECK(g.degree(0) == 6);
    for (VertexId v = 1; v < 7; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("windmill rejects odd or non-positive delta") {
    CHECK_THROWS_AS(windmill(3), std::invalid_argument);
    CHECK_THROWS_AS(windmill(0), std::invalid_argument);
}

TEST_CASE("h_delta_t layout matches its accessors") {
    HGraph h = h_delta_t(8, 2);
    CHECK(h.graph.vertex_count() == 9);
    CHECK(h.graph.edge_count() == 8 + 4 * 2);
    CHECK(h.graph.degree(h.center) == 8);
    for (int j = 0; j < 8; ++j) {
        CHECK(h.graph.degree(h.rim_vertex(j)) == 2 + 1);
        auto [u, v] = h.graph.endpoints(h.spoke_edge(j));
        CHECK(u == h.center);
        CHECK(v == h.rim_vertex(j));
    }
    CHECK(h.graph.multiplicity(h.rim_vertex(0), h.rim_vertex(1)) == 2);
    CHECK(h.graph.multiplicity(h.rim_vertex(1), h.rim_vertex(2)) == 0);
    CHECK(HGraph::partner(4) == 5);
    CHECK(HGraph::partner(5) == 4);
}

TEST_CASE("h_delta_t validates its parameter ranges") {
    CHECK_THROWS_AS(h_delta_t(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_delta_t(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_delta_t(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(h_delta_t(4, 3), std::invalid_argument);
    CHECK_THROWS_WITH(h_delta_t(5, 1), doctest::Contains("even"));
}

TEST_CASE("t=1 reduces to the windmill") {
    CHECK(h_delta_t(4, 1).graph == windmill(4));
    CHECK(h_delta_t(6, 1).graph == windmill(6));
}

TEST_CASE("lobe keeps two spokes and the parallel bundle") {
    HGraph h = h_delta_t(6, 3);
    Multigraph l = lobe(h, 2);
    CHECK(l.vertex_count() == 3);
    CHECK(l.edge_count() == 2 + 3);
    CHECK(l == lobe(h, 3));
    CHECK(l.max_degree() == 4);  // each rim vertex: spoke + 3 parallels
}

TEST_CASE("g_delta stitches every t into one graph") {
    GDeltaGraph gd = g_delta(4);
    CHECK(gd.parts.size() == 2);
    CHECK(gd.graph.vertex_count() == (4 + 1) * (4 - 2));
    CHECK(gd.graph.edge_count() == (4 + 2) + (4 + 4));
    CHECK(gd.graph.max_degree() == 4);
    CHECK(gd.centers.size() == 2);
    for (VertexId c : gd.centers) CHECK(gd.graph.degree(c) == 4);
    std::set<int> comps(gd.component_of_vertex.begin(), gd.component_of_vertex.end());
    CHECK(comps == std::set<int>{0, 1});
}

TEST_CASE("g_delta_tilde joins the centers through a hub") {
    GDeltaTilde gt = g_delta_tilde(4);
    CHECK(gt.graph.vertex_count() == 11);
    CHECK(gt.graph.max_degree() == 5);
    CHECK(gt.graph.degree(gt.hub) == 2);
    for (VertexId c : gt.centers) CHECK(gt.graph.degree(c) == 5);
}

TEST_CASE("complete graph sizes") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(5).max_degree() == 4);
    CHECK(complete(1).edge_count() == 0);
}

TEST_CASE("complete bipartite edge ids follow row-major order") {
    Multigraph g = complete_bipartite(2, 3);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    // edge i*n+j joins left i with right j
    CHECK(g.endpoints(1 * 3 + 2) == std::pair<VertexId, VertexId>{1, 2 + 2});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(2) == 2);
}

TEST_CASE("path cycle and star shapes") {
    CHECK(path(1).edge_count() == 0);
    CHECK(path(5).edge_count() == 4);
    CHECK(cycle(3).max_degree() == 2);
    CHECK(cycle(6).edge_count() == 6);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK(star(5).max_degree() == 5);
    CHECK(star(5).vertex_count() == 6);
}

TEST_CASE("random multigraph respects bounds and seed") {
    Multigraph a = random_multigraph(9, 0.5, 3, 42);
    Multigraph b = random_multigraph(9, 0.5, 3, 42);
    Multigraph c = random_multigraph(9, 0.5, 3, 43);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(a.max_multiplicity() <= 3);
    CHECK(a.vertex_count() == 9);
    CHECK(random_multigraph(6, 1.0, 1, 1).edge_count() == 15);
    CHECK(random_multigraph(6, 0.0, 1, 1).edge_count() == 0);
}

TEST_CASE("random trees have n-1 edges and are connected") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Multigraph t = random_tree(2 + static_cast<int>(seed % 11), seed);
        int n = t.vertex_count();
        CHECK(t.edge_count() == n - 1);
        // connectivity by union-find over the edges
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (EdgeId e = 0; e < t.edge_count(); ++e) {
            auto [u, v] = t.endpoints(e);
            parent[find(u)] = find(v);
        }
        int roots = 0;
        for (int i = 0; i < n; ++i) roots += find(i) == i;
        CHECK(roots == 1);
    }
}
