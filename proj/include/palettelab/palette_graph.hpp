#pragma once

#include <vector>

#include "palettelab/coloring.hpp"
#include "palettelab/multigraph.hpp"

namespace palettelab {

// Multigraph whose vertices are the distinct palettes of a colored graph.
// For every edge {x,y} of the underlying simple graph there is exactly one
// edge between the palettes of x and y; equal palettes give a loop. Edges
// form a multiset and are never collapsed.
struct PaletteMultigraph {
    std::vector<Palette> vertices;           // sorted lexicographically, unique
    std::vector<std::pair<int, int>> edges;  // index pairs (i <= j), i == j is a loop

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    // Degree of the vertex at `index`; a loop contributes 2.
    int degree(int index) const;
};

PaletteMultigraph build_palette_multigraph(const Multigraph& g, const EdgeColoring& c);

// Degree of the given palette (throws when the palette is not a vertex).
int palette_degree(const PaletteMultigraph& pg, const Palette& p);

// Copy without the given palette and without its incident edges.
PaletteMultigraph remove_palette(const PaletteMultigraph& pg, const Palette& p);

struct ForestCheck {
    enum class Violation { none, loop, multi_edge, cycle };
    bool is_simple_forest = false;
    Violation violation = Violation::none;
    // Loop: the looped palette. Multi-edge: the two palettes (a 2-cycle).
    // Cycle: the palettes along the cycle.
    std::vector<Palette> witness;
};

// Checks loops first, then repeated edges, then runs cycle detection on the
// remaining simple graph.
ForestCheck is_simple_forest(const PaletteMultigraph& pg);

struct Rational {
    long long num = 0;
    long long den = 1;
};

// Exact average degree (loops included); throws on an empty vertex set.
Rational average_degree(const PaletteMultigraph& pg);

}  // namespace palettelab
