#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palettelab/multigraph.hpp"

namespace palettelab {

// Hub-and-rim graph for even delta >= 2: a center u joined to rim vertices
// v^0..v^{delta-1} (spokes), with rim vertices paired off by an edge
// v^j v^{j+1} for every even j. delta = 2 gives the triangle.
Multigraph windmill(int delta);

// Windmill with every rim edge replaced by t parallel copies. Spoke j has
// edge id j and joins the center to rim vertex j+1; rim pairs follow in
// blocks of t. Only even delta >= 4 with 1 <= t <= delta-2 is supported.
struct HGraph {
    Multigraph graph;
    int delta = 0;
    int t = 0;
    VertexId center = 0;

    VertexId rim_vertex(int j) const { return j + 1; }
    EdgeId spoke_edge(int j) const { return j; }
    // Rim vertices are paired {0,1}, {2,3}, ...
    static int partner(int j) { return j ^ 1; }
};

HGraph h_delta_t(int delta, int t);

// Induced submultigraph on {center, v^j, v^partner(j)}: two spokes plus the
// t parallel rim edges. lobe(h, j) and lobe(h, partner(j)) are identical.
Multigraph lobe(const HGraph& h, int j);

// Disjoint union of h_delta_t(delta, t) for t = 1..delta-2.
struct GDeltaGraph {
    Multigraph graph;
    int delta = 0;
    std::vector<HGraph> parts;              // local-id components, t = index+1
    std::vector<int> component_of_vertex;
    std::vector<VertexId> centers;          // center of each component, union ids
};

GDeltaGraph g_delta(int delta);

// g_delta plus one extra hub vertex adjacent to every component center.
struct GDeltaTilde {
    Multigraph graph;
    int delta = 0;
    VertexId hub = 0;
    std::vector<VertexId> centers;
};

GDeltaTilde g_delta_tilde(int delta);

Multigraph complete(int n);
Multigraph complete_bipartite(int m, int n);  // edge id i*n+j joins u_i and w_j
Multigraph path(int n);                       // n vertices, n-1 edges
Multigraph cycle(int n);                      // n >= 3
Multigraph star(int leaves);                  // center 0 plus `leaves` leaves

// Each unordered pair appears independently with probability p; present
// pairs get multiplicity uniform in 1..max_multiplicity. Pairs are visited
// in ascending (u,v) order with one presence draw each, so results are
// reproducible across platforms for a fixed seed.
Multigraph random_multigraph(int n, double p, int max_multiplicity, uint64_t seed);

// Uniform random labelled tree on n vertices (decoded from a random
// sequence of n-2 vertex picks).
Multigraph random_tree(int n, uint64_t seed);

}  // namespace palettelab
