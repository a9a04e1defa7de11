#include "palettelab/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace palettelab {

namespace {

void require_total(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.assignment.size()) != g.edge_count()) {
        std::ostringstream msg;
        msg << "coloring covers " << c.assignment.size() << " edges but the graph has "
            << g.edge_count();
        throw std::invalid_argument(msg.str());
    }
    std::vector<EdgeId> holes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Color col = c.assignment[static_cast<size_t>(e)];
        if (col < 0) {
            holes.push_back(e);
        } else if (col >= c.k) {
            std::ostringstream msg;
            msg << "edge " << e << " has color " << col << " outside universe 0.." << c.k - 1;
            throw std::invalid_argument(msg.str());
        }
    }
    if (!holes.empty()) {
        std::ostringstream msg;
        msg << "coloring is partial; uncolored edge ids:";
        for (EdgeId e : holes) msg << ' ' << e;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

bool is_proper(const Multigraph& g, const EdgeColoring& c) {
    require_total(g, c);
    std::vector<Color> seen;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (EdgeId e : g.incident_edges(v)) {
            seen.push_back(c.assignment[static_cast<size_t>(e)]);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

Palette palette_of(const Multigraph& g, const EdgeColoring& c, VertexId v) {
    if (!is_proper(g, c)) {
        throw std::invalid_argument("palette_of requires a proper coloring");
    }
    Palette p;
    for (EdgeId e : g.incident_edges(v)) {
        p.push_back(c.assignment[static_cast<size_t>(e)]);
    }
    std::sort(p.begin(), p.end());
    return p;
}

std::set<Palette> distinct_palettes(const Multigraph& g, const EdgeColoring& c) {
    if (!is_proper(g, c)) {
        throw std::invalid_argument("distinct_palettes requires a proper coloring");
    }
    std::set<Palette> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Palette p;
        for (EdgeId e : g.incident_edges(v)) {
            p.push_back(c.assignment[static_cast<size_t>(e)]);
        }
        std::sort(p.begin(), p.end());
        out.insert(std::move(p));
    }
    return out;
}

EdgeColoring relabel_colors(const EdgeColoring& c, const std::vector<int>& permutation) {
    if (static_cast<int>(permutation.size()) != c.k) {
        throw std::invalid_argument("permutation size must equal the color universe");
    }
    std::vector<char> hit(permutation.size(), 0);
    for (int image : permutation) {
        if (image < 0 || image >= c.k || hit[static_cast<size_t>(image)]) {
            throw std::invalid_argument("relabeling is not a bijection on 0..k-1");
        }
        hit[static_cast<size_t>(image)] = 1;
    }
    EdgeColoring out;
    out.k = c.k;
    out.assignment.reserve(c.assignment.size());
    for (Color col : c.assignment) {
        if (col < 0 || col >= c.k) {
            throw std::invalid_argument("relabel_colors requires a total in-range coloring");
        }
        out.assignment.push_back(permutation[static_cast<size_t>(col)]);
    }
    return out;
}

EdgeColoring strip_unused_colors(const EdgeColoring& c) {
    std::vector<Color> used = used_colors(c);
    std::vector<int> rank(static_cast<size_t>(c.k), -1);
    for (size_t i = 0; i < used.size(); ++i) {
        rank[static_cast<size_t>(used[i])] = static_cast<int>(i);
    }
    EdgeColoring out;
    out.k = static_cast<int>(used.size());
    out.assignment.reserve(c.assignment.size());
    for (Color col : c.assignment) {
        if (col < 0 || col >= c.k) {
            throw std::invalid_argument("strip_unused_colors requires a total in-range coloring");
        }
        out.assignment.push_back(rank[static_cast<size_t>(col)]);
    }
    return out;
}

std::vector<Color> used_colors(const EdgeColoring& c) {
    std::vector<Color> used(c.assignment.begin(), c.assignment.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (!used.empty() && used.front() < 0) {
        throw std::invalid_argument("used_colors requires a total coloring");
    }
    return used;
}

EdgeColoring random_proper_coloring(const Multigraph& g, std::mt19937_64& rng) {
    const int m = g.edge_count();
    EdgeColoring c;
    if (m == 0) {
        c.k = 0;
        return c;
    }
    const int window = 2 * g.max_degree();
    c.k = window;
    c.assignment.assign(static_cast<size_t>(m), -1);

    // Hand-rolled Fisher-Yates so the draw sequence does not depend on the
    // standard library's shuffle implementation.
    std::vector<EdgeId> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    }

    std::vector<Color> feasible;
    for (EdgeId e : order) {
        auto [u, v] = g.endpoints(e);
        feasible.clear();
        for (Color col = 0; col < window; ++col) {
            bool clash = false;
            for (EdgeId f : g.incident_edges(u)) {
                if (c.assignment[static_cast<size_t>(f)] == col) { clash = true; break; }
            }
            if (!clash) {
                for (EdgeId f : g.incident_edges(v)) {
                    if (c.assignment[static_cast<size_t>(f)] == col) { clash = true; break; }
                }
            }
            if (!clash) feasible.push_back(col);
        }
        // An edge meets at most 2*(max_degree-1) others, so the window
        // always leaves a feasible color.
        c.assignment[static_cast<size_t>(e)] =
            feasible[static_cast<size_t>(rng() % feasible.size())];
    }
    return strip_unused_colors(c);
}

}  // namespace palettelab
