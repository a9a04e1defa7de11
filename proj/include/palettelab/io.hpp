#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "palettelab/coloring.hpp"
#include "palettelab/multigraph.hpp"
#include "palettelab/palette_graph.hpp"

namespace palettelab {

// Text format: '#' starts a comment, the first data line is the vertex
// count, then one edge per line as "u v" or "u v multiplicity", then
// optional "name <vertex> <label>" lines.
struct NamedMultigraph {
    Multigraph graph;
    std::vector<std::string> names;  // empty when the file named nothing
};

NamedMultigraph parse_multigraph(std::istream& in);
NamedMultigraph parse_multigraph_file(const std::string& path);

// Canonical form: runs of consecutive parallel edges collapse into one
// "u v count" line, so parse(serialize(g)) reproduces g edge for edge.
std::string serialize_multigraph(const Multigraph& g,
                                 const std::vector<std::string>& names = {});

// "k <colors>" first, then "edge color" lines. Edges absent from the file
// stay uncolored (-1); duplicates are rejected.
EdgeColoring parse_coloring(std::istream& in, int edge_count);
std::string serialize_coloring(const EdgeColoring& c);

// Rectangular color table for a complete bipartite graph: row i holds the
// colors on the edges at left vertex i, column j those at right vertex j.
// Files are 1-based; cells are stored 0-based.
struct ColorMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;  // row-major
    int at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
};

ColorMatrix parse_matrix(std::istream& in);
std::string serialize_color_matrix(const ColorMatrix& m);

struct MatrixCheck {
    bool proper = false;
    std::vector<std::string> errors;  // one line per repeated color, 1-based positions
    int distinct_colors = 0;
    int distinct_palettes = 0;  // over all row sets and column sets
};

MatrixCheck check_color_matrix(const ColorMatrix& m);

// The matrix as an explicit coloring of K_{rows,cols}; edge i*cols+j joins
// left vertex i to right vertex j, matching complete_bipartite().
std::pair<Multigraph, EdgeColoring> matrix_to_coloring(const ColorMatrix& m);

// Parse, validate, and convert in one step; a repeated color in a row or
// column raises an error naming the position.
std::pair<Multigraph, EdgeColoring> parse_color_matrix(std::istream& in);

std::string to_dot(const Multigraph& g, const std::vector<std::string>& names = {});
std::string to_dot(const PaletteMultigraph& pg);

// Ordered key/value result sink; renders as "key: value" lines or JSON.
class Report {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value);
    void add(const std::string& key, long long value);
    void add(const std::string& key, int value);
    void add(const std::string& key, bool value);
    void add(const std::string& key, double value);
    std::string text() const;
    std::string json() const;

private:
    nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
};

}  // namespace palettelab
