#include "palettelab/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace palettelab {

namespace {

void require_even_delta(int delta, int minimum) {
    if (delta < minimum || delta % 2 != 0) {
        throw std::invalid_argument(
            "only even maximum degree is supported (and it must be at least " +
            std::to_string(minimum) + ")");
    }
}

}  // namespace

Multigraph windmill(int delta) {
    require_even_delta(delta, 2);
    std::vector<EdgeSpec> specs;
    for (int j = 0; j < delta; ++j) specs.push_back({0, j + 1, 1});
    for (int j = 0; j < delta; j += 2) specs.push_back({j + 1, j + 2, 1});
    return Multigraph::build(delta + 1, specs);
}

HGraph h_delta_t(int delta, int t) {
    require_even_delta(delta, 4);
    if (t < 1 || t > delta - 2) {
        throw std::invalid_argument("rim multiplicity must satisfy 1 <= t <= delta-2");
    }
    std::vector<EdgeSpec> specs;
    for (int j = 0; j < delta; ++j) specs.push_back({0, j + 1, 1});
    for (int j = 0; j < delta; j += 2) specs.push_back({j + 1, j + 2, t});
    HGraph h;
    h.graph = Multigraph::build(delta + 1, specs);
    h.delta = delta;
    h.t = t;
    h.center = 0;
    return h;
}

Multigraph lobe(const HGraph& h, int j) {
    if (j < 0 || j >= h.delta) {
        throw std::invalid_argument("rim index out of range");
    }
    // Vertex 0 is the center, 1 and 2 are the paired rim vertices; the
    // result is the same for j and partner(j) by construction.
    std::vector<EdgeSpec> specs{{0, 1, 1}, {0, 2, 1}, {1, 2, h.t}};
    return Multigraph::build(3, specs);
}

GDeltaGraph g_delta(int delta) {
    require_even_delta(delta, 4);
    GDeltaGraph g;
    g.delta = delta;
    std::vector<Multigraph> raw;
    for (int t = 1; t <= delta - 2; ++t) {
        g.parts.push_back(h_delta_t(delta, t));
        raw.push_back(g.parts.back().graph);
    }
    UnionLayout u = disjoint_union(raw);
    g.graph = std::move(u.graph);
    g.component_of_vertex = std::move(u.component_of_vertex);
    for (size_t c = 0; c < g.parts.size(); ++c) {
        g.centers.push_back(u.vertex_offset[c] + g.parts[c].center);
    }
    return g;
}

GDeltaTilde g_delta_tilde(int delta) {
    GDeltaGraph base = g_delta(delta);
    GDeltaTilde out;
    out.delta = delta;
    out.hub = base.graph.vertex_count();
    out.centers = base.centers;
    std::vector<EdgeSpec> specs;
    for (EdgeId e = 0; e < base.graph.edge_count(); ++e) {
        auto [u, v] = base.graph.endpoints(e);
        specs.push_back({u, v, 1});
    }
    for (VertexId c : base.centers) specs.push_back({out.hub, c, 1});
    out.graph = Multigraph::build(base.graph.vertex_count() + 1, specs);
    return out;
}

Multigraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<EdgeSpec> specs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) specs.push_back({i, j, 1});
    }
    return Multigraph::build(n, specs);
}

Multigraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("both sides need at least one vertex");
    std::vector<EdgeSpec> specs;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) specs.push_back({i, m + j, 1});
    }
    return Multigraph::build(m + n, specs);
}

Multigraph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<EdgeSpec> specs;
    for (int i = 0; i + 1 < n; ++i) specs.push_back({i, i + 1, 1});
    return Multigraph::build(n, specs);
}

Multigraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<EdgeSpec> specs;
    for (int i = 0; i < n; ++i) specs.push_back({i, (i + 1) % n, 1});
    return Multigraph::build(n, specs);
}

Multigraph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<EdgeSpec> specs;
    for (int i = 1; i <= leaves; ++i) specs.push_back({0, i, 1});
    return Multigraph::build(leaves + 1, specs);
}

Multigraph random_multigraph(int n, double p, int max_multiplicity, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random multigraph needs at least one vertex");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
    if (max_multiplicity < 1) throw std::invalid_argument("max multiplicity must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<EdgeSpec> specs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // Top 53 bits give a uniform double in [0,1).
            double roll = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (roll < p) {
                int mult = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_multiplicity));
                specs.push_back({u, v, mult});
            }
        }
    }
    return Multigraph::build(n, specs);
}

Multigraph random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (n == 1) return Multigraph::build(1, {});
    if (n == 2) return Multigraph::build(2, {{0, 1, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> code(static_cast<size_t>(n - 2));
    for (int& x : code) x = static_cast<int>(rng() % static_cast<uint64_t>(n));

    std::vector<int> remaining(static_cast<size_t>(n), 1);
    for (int x : code) ++remaining[static_cast<size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (remaining[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    std::vector<EdgeSpec> specs;
    for (int x : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        specs.push_back({std::min(leaf, x), std::max(leaf, x), 1});
        if (--remaining[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    specs.push_back({std::min(a, b), std::max(a, b), 1});
    return Multigraph::build(n, specs);
}

}  // namespace palettelab
