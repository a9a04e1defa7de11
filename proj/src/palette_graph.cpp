#include "palettelab/palette_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace palettelab {

int PaletteMultigraph::degree(int index) const {
    if (index < 0 || index >= vertex_count()) {
        throw std::invalid_argument("palette vertex index out of range");
    }
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == index) ++d;
        if (b == index) ++d;
    }
    return d;
}

PaletteMultigraph build_palette_multigraph(const Multigraph& g, const EdgeColoring& c) {
    if (!is_proper(g, c)) {
        throw std::invalid_argument("palette multigraph requires a proper coloring");
    }
    std::vector<Palette> by_vertex(static_cast<size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Palette p;
        for (EdgeId e : g.incident_edges(v)) {
            p.push_back(c.assignment[static_cast<size_t>(e)]);
        }
        std::sort(p.begin(), p.end());
        by_vertex[static_cast<size_t>(v)] = std::move(p);
    }

    PaletteMultigraph pg;
    pg.vertices.assign(by_vertex.begin(), by_vertex.end());
    std::sort(pg.vertices.begin(), pg.vertices.end());
    pg.vertices.erase(std::unique(pg.vertices.begin(), pg.vertices.end()), pg.vertices.end());

    std::map<Palette, int> index_of;
    for (int i = 0; i < pg.vertex_count(); ++i) index_of[pg.vertices[static_cast<size_t>(i)]] = i;

    const Multigraph simple = g.simple_projection();
    for (EdgeId e = 0; e < simple.edge_count(); ++e) {
        auto [x, y] = simple.endpoints(e);
        int i = index_of[by_vertex[static_cast<size_t>(x)]];
        int j = index_of[by_vertex[static_cast<size_t>(y)]];
        pg.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return pg;
}

namespace {

int index_of_palette(const PaletteMultigraph& pg, const Palette& p) {
    auto it = std::lower_bound(pg.vertices.begin(), pg.vertices.end(), p);
    if (it == pg.vertices.end() || *it != p) {
        throw std::invalid_argument("palette is not a vertex of the palette multigraph");
    }
    return static_cast<int>(it - pg.vertices.begin());
}

}  // namespace

int palette_degree(const PaletteMultigraph& pg, const Palette& p) {
    return pg.degree(index_of_palette(pg, p));
}

PaletteMultigraph remove_palette(const PaletteMultigraph& pg, const Palette& p) {
    int gone = index_of_palette(pg, p);
    PaletteMultigraph out;
    std::vector<int> remap(static_cast<size_t>(pg.vertex_count()), -1);
    for (int i = 0; i < pg.vertex_count(); ++i) {
        if (i == gone) continue;
        remap[static_cast<size_t>(i)] = out.vertex_count();
        out.vertices.push_back(pg.vertices[static_cast<size_t>(i)]);
    }
    for (const auto& [a, b] : pg.edges) {
        if (a == gone || b == gone) continue;
        out.edges.emplace_back(remap[static_cast<size_t>(a)], remap[static_cast<size_t>(b)]);
    }
    return out;
}

ForestCheck is_simple_forest(const PaletteMultigraph& pg) {
    ForestCheck result;
    for (const auto& [a, b] : pg.edges) {
        if (a == b) {
            result.violation = ForestCheck::Violation::loop;
            result.witness = {pg.vertices[static_cast<size_t>(a)]};
            return result;
        }
    }
    std::vector<std::pair<int, int>> sorted = pg.edges;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        result.violation = ForestCheck::Violation::multi_edge;
        result.witness = {pg.vertices[static_cast<size_t>(dup->first)],
                          pg.vertices[static_cast<size_t>(dup->second)]};
        return result;
    }

    // Simple and loop-free from here on; look for a cycle with an iterative
    // DFS that remembers the tree edge used to enter each vertex.
    const int n = pg.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
    for (int e = 0; e < pg.edge_count(); ++e) {
        auto [a, b] = pg.edges[static_cast<size_t>(e)];
        adj[static_cast<size_t>(a)].push_back({b, e});
        adj[static_cast<size_t>(b)].push_back({a, e});
    }
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        std::vector<std::pair<int, int>> stack{{root, -1}};
        seen[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            auto [v, in_edge] = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                if (e == in_edge) continue;
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    parent[static_cast<size_t>(w)] = v;
                    stack.push_back({w, e});
                } else {
                    // Back edge v-w closes a cycle; walk both tails up to
                    // the root and splice the paths together.
                    std::vector<int> va{v}, wa{w};
                    for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) va.push_back(x);
                    for (int x = w; x != -1; x = parent[static_cast<size_t>(x)]) wa.push_back(x);
                    std::vector<char> on_va(static_cast<size_t>(n), 0);
                    for (int x : va) on_va[static_cast<size_t>(x)] = 1;
                    int meet = w;
                    while (!on_va[static_cast<size_t>(meet)]) meet = parent[static_cast<size_t>(meet)];
                    std::vector<int> cycle;
                    for (int x = v; x != meet; x = parent[static_cast<size_t>(x)]) cycle.push_back(x);
                    cycle.push_back(meet);
                    std::vector<int> back;
                    for (int x = w; x != meet; x = parent[static_cast<size_t>(x)]) back.push_back(x);
                    std::reverse(back.begin(), back.end());
                    cycle.insert(cycle.end(), back.begin(), back.end());
                    result.violation = ForestCheck::Violation::cycle;
                    for (int x : cycle) {
                        result.witness.push_back(pg.vertices[static_cast<size_t>(x)]);
                    }
                    return result;
                }
            }
        }
    }
    result.is_simple_forest = true;
    return result;
}

Rational average_degree(const PaletteMultigraph& pg) {
    if (pg.vertex_count() == 0) {
        throw std::invalid_argument("average degree of an empty palette multigraph");
    }
    Rational r;
    r.num = 2LL * pg.edge_count();
    r.den = pg.vertex_count();
    long long g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

}  // namespace palettelab
