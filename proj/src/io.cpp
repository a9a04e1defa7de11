#include "palettelab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace palettelab {

namespace {

[[noreturn]] void fail_line(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw std::invalid_argument(msg.str());
}

std::string strip_comment(const std::string& raw) {
    auto hash = raw.find('#');
    return hash == std::string::npos ? raw : raw.substr(0, hash);
}

}  // namespace

NamedMultigraph parse_multigraph(std::istream& in) {
    int vertex_count = -1;
    std::vector<EdgeSpec> specs;
    std::map<int, std::string> names;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(strip_comment(raw));
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "name") {
            int v;
            std::string label;
            if (!(ls >> v)) fail_line(lineno, "name needs a vertex and a label");
            std::getline(ls, label);
            auto start = label.find_first_not_of(" \t");
            if (start == std::string::npos)
                fail_line(lineno, "name needs a vertex and a label");
            label = label.substr(start);
            while (!label.empty() && (label.back() == ' ' || label.back() == '\t'))
                label.pop_back();
            if (vertex_count < 0) fail_line(lineno, "name before the vertex count");
            if (v < 0 || v >= vertex_count) fail_line(lineno, "named vertex out of range");
            names[v] = label;
            continue;
        }
        int a;
        try {
            a = std::stoi(first);
        } catch (const std::exception&) {
            fail_line(lineno, "expected an integer, got '" + first + "'");
        }
        if (vertex_count < 0) {
            if (a < 0) fail_line(lineno, "vertex count must be nonnegative");
            vertex_count = a;
            int extra;
            if (ls >> extra) fail_line(lineno, "vertex count line has trailing data");
            continue;
        }
        int b;
        if (!(ls >> b)) fail_line(lineno, "edge needs two endpoints");
        int mult = 1;
        if (ls >> mult) {
            int extra;
            if (ls >> extra) fail_line(lineno, "edge line has trailing data");
        } else if (!ls.eof()) {
            fail_line(lineno, "edge multiplicity must be an integer");
        }
        specs.push_back({a, b, mult});
    }
    if (vertex_count < 0) throw std::invalid_argument("empty multigraph file");

    NamedMultigraph out{Multigraph::build(vertex_count, specs), {}};
    if (!names.empty()) {
        out.names.assign(vertex_count, "");
        for (const auto& [v, label] : names) out.names[v] = label;
    }
    return out;
}

NamedMultigraph parse_multigraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return parse_multigraph(in);
}

std::string serialize_multigraph(const Multigraph& g,
                                 const std::vector<std::string>& names) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    EdgeId e = 0;
    while (e < g.edge_count()) {
        auto [u, v] = g.endpoints(e);
        int run = 1;
        while (e + run < g.edge_count() && g.endpoints(e + run) == std::make_pair(u, v))
            ++run;
        out << u << " " << v;
        if (run > 1) out << " " << run;
        out << "\n";
        e += run;
    }
    if (!names.empty()) {
        if (static_cast<int>(names.size()) != g.vertex_count())
            throw std::invalid_argument(
                "serialize_multigraph: names must match the vertex count");
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!names[v].empty()) out << "name " << v << " " << names[v] << "\n";
    }
    return out.str();
}

EdgeColoring parse_coloring(std::istream& in, int edge_count) {
    EdgeColoring c;
    c.assignment.assign(edge_count, -1);
    bool have_k = false;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(strip_comment(raw));
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "k") {
            if (have_k) fail_line(lineno, "duplicate k line");
            if (!(ls >> c.k) || c.k < 0) fail_line(lineno, "k needs a nonnegative integer");
            have_k = true;
            continue;
        }
        if (!have_k) fail_line(lineno, "coloring must start with a k line");
        int e, color;
        try {
            e = std::stoi(first);
        } catch (const std::exception&) {
            fail_line(lineno, "expected an edge id, got '" + first + "'");
        }
        if (!(ls >> color)) fail_line(lineno, "edge line needs a color");
        int extra;
        if (ls >> extra) fail_line(lineno, "edge line has trailing data");
        if (e < 0 || e >= edge_count) fail_line(lineno, "edge id out of range");
        if (color < 0 || color >= c.k) fail_line(lineno, "color outside [0, k)");
        if (c.assignment[e] != -1) fail_line(lineno, "edge colored twice");
        c.assignment[e] = color;
    }
    if (!have_k) throw std::invalid_argument("coloring file has no k line");
    return c;
}

std::string serialize_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    out << "k " << c.k << "\n";
    for (std::size_t e = 0; e < c.assignment.size(); ++e)
        if (c.assignment[e] >= 0) out << e << " " << c.assignment[e] << "\n";
    return out.str();
}

ColorMatrix parse_matrix(std::istream& in) {
    ColorMatrix m;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(strip_comment(raw));
        std::vector<int> row;
        int value;
        while (ls >> value) {
            if (value < 1) fail_line(lineno, "colors in matrix files start at 1");
            row.push_back(value - 1);
        }
        if (!ls.eof()) fail_line(lineno, "matrix entries must be integers");
        if (row.empty()) continue;
        if (m.cols == 0) {
            m.cols = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != m.cols) {
            std::ostringstream what;
            what << "row has " << row.size() << " entries, expected " << m.cols;
            fail_line(lineno, what.str());
        }
        m.cells.insert(m.cells.end(), row.begin(), row.end());
        ++m.rows;
    }
    if (m.rows == 0) throw std::invalid_argument("empty color matrix");
    return m;
}

std::string serialize_color_matrix(const ColorMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << " ";
            out << m.at(r, c) + 1;
        }
        out << "\n";
    }
    return out.str();
}

MatrixCheck check_color_matrix(const ColorMatrix& m) {
    MatrixCheck out;
    std::set<int> colors(m.cells.begin(), m.cells.end());
    out.distinct_colors = static_cast<int>(colors.size());

    auto scan = [&](bool by_row) {
        int outer = by_row ? m.rows : m.cols;
        int inner = by_row ? m.cols : m.rows;
        for (int i = 0; i < outer; ++i) {
            std::map<int, int> first_pos;
            for (int j = 0; j < inner; ++j) {
                int c = by_row ? m.at(i, j) : m.at(j, i);
                auto [it, fresh] = first_pos.emplace(c, j);
                if (!fresh) {
                    std::ostringstream msg;
                    msg << (by_row ? "row " : "column ") << i + 1 << " repeats color "
                        << c + 1 << " (" << (by_row ? "columns " : "rows ")
                        << it->second + 1 << " and " << j + 1 << ")";
                    out.errors.push_back(msg.str());
                }
            }
        }
    };
    scan(true);
    scan(false);
    out.proper = out.errors.empty();

    std::set<std::vector<int>> palettes;
    for (int r = 0; r < m.rows; ++r) {
        std::vector<int> p;
        for (int c = 0; c < m.cols; ++c) p.push_back(m.at(r, c));
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        palettes.insert(p);
    }
    for (int c = 0; c < m.cols; ++c) {
        std::vector<int> p;
        for (int r = 0; r < m.rows; ++r) p.push_back(m.at(r, c));
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        palettes.insert(p);
    }
    out.distinct_palettes = static_cast<int>(palettes.size());
    return out;
}

std::pair<Multigraph, EdgeColoring> matrix_to_coloring(const ColorMatrix& m) {
    Multigraph g = [&] {
        std::vector<EdgeSpec> specs;
        specs.reserve(static_cast<std::size_t>(m.rows) * m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) specs.push_back({i, m.rows + j, 1});
        return Multigraph::build(m.rows + m.cols, specs);
    }();
    EdgeColoring c;
    c.k = *std::max_element(m.cells.begin(), m.cells.end()) + 1;
    c.assignment = m.cells;
    return {std::move(g), std::move(c)};
}

std::pair<Multigraph, EdgeColoring> parse_color_matrix(std::istream& in) {
    ColorMatrix m = parse_matrix(in);
    MatrixCheck check = check_color_matrix(m);
    if (!check.proper) {
        std::ostringstream msg;
        msg << "matrix is not a proper coloring: " << check.errors.front();
        if (check.errors.size() > 1)
            msg << " (and " << check.errors.size() - 1 << " more)";
        throw std::invalid_argument(msg.str());
    }
    return matrix_to_coloring(m);
}

std::string to_dot(const Multigraph& g, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v;
        if (v < static_cast<int>(names.size()) && !names[v].empty())
            out << " [label=\"" << names[v] << "\"]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        out << "  v" << u << " -- v" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const PaletteMultigraph& pg) {
    std::ostringstream out;
    out << "graph palettes {\n";
    for (std::size_t i = 0; i < pg.vertices.size(); ++i) {
        out << "  p" << i << " [label=\"{";
        for (std::size_t j = 0; j < pg.vertices[i].size(); ++j) {
            if (j) out << ",";
            out << pg.vertices[i][j];
        }
        out << "}\"];\n";
    }
    for (const auto& [a, b] : pg.edges) out << "  p" << a << " -- p" << b << ";\n";
    out << "}\n";
    return out.str();
}

void Report::add(const std::string& key, const std::string& value) { data_[key] = value; }
void Report::add(const std::string& key, const char* value) { data_[key] = value; }
void Report::add(const std::string& key, long long value) { data_[key] = value; }
void Report::add(const std::string& key, int value) { data_[key] = value; }
void Report::add(const std::string& key, bool value) { data_[key] = value; }
void Report::add(const std::string& key, double value) { data_[key] = value; }

std::string Report::text() const {
    std::ostringstream out;
    for (const auto& [key, value] : data_.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
    return out.str();
}

std::string Report::json() const { return data_.dump(2) + "\n"; }

}  // namespace palettelab
