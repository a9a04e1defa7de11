#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "palettelab/coloring.hpp"
#include "palettelab/families.hpp"
#include "palettelab/io.hpp"

using namespace palettelab;

TEST_CASE("multigraph files round-trip") {
    Multigraph g = Multigraph::build(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 3}});
    std::string text = serialize_multigraph(g);
    std::istringstream in(text);
    NamedMultigraph back = parse_multigraph(in);
    CHECK(back.graph == g);
    CHECK(back.names.empty());
}

TEST_CASE("multigraph parser accepts comments and multiplicity") {
    std::istringstream in(
        "# a doubled edge and a plain one\n"
        "3\n"
        "0 1 2   # parallel pair\n"
        "1 2\n"
        "name 0 hub\n");
    NamedMultigraph got = parse_multigraph(in);
    CHECK(got.graph.vertex_count() == 3);
    CHECK(got.graph.edge_count() == 3);
    CHECK(got.graph.multiplicity(0, 1) == 2);
    REQUIRE(got.names.size() == 3);
    CHECK(got.names[0] == "hub");
    CHECK(got.names[1].empty());
}

TEST_CASE("multigraph parser reports the offending line") {
    std::istringstream missing("3\n0\n");
    CHECK_THROWS_WITH_AS(parse_multigraph(missing), "line 2: edge needs two endpoints",
                         std::invalid_argument);
    std::istringstream junk("3\n0 1 x\n");
    CHECK_THROWS_WITH_AS(parse_multigraph(junk),
                         "line 2: edge multiplicity must be an integer",
                         std::invalid_argument);
    std::istringstream word("zero\n");
    CHECK_THROWS_WITH_AS(parse_multigraph(word), "line 1: expected an integer, got 'zero'",
                         std::invalid_argument);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_multigraph(empty), std::invalid_argument);
    std::istringstream loop("2\n1 1\n");
    CHECK_THROWS_AS(parse_multigraph(loop), std::invalid_argument);
}

TEST_CASE("names survive a round-trip") {
    Multigraph g = star(2);
    std::string text = serialize_multigraph(g, {"hub", "a", "b"});
    std::istringstream in(text);
    NamedMultigraph back = parse_multigraph(in);
    CHECK(back.names == std::vector<std::string>{"hub", "a", "b"});
}

TEST_CASE("coloring files round-trip and keep holes") {
    EdgeColoring c{4, {2, -1, 0}};
    std::istringstream in(serialize_coloring(c));
    EdgeColoring back = parse_coloring(in, 3);
    CHECK(back.k == 4);
    CHECK(back.assignment == c.assignment);
}

TEST_CASE("coloring parser rejects malformed input") {
    std::istringstream no_k("0 1\n");
    CHECK_THROWS_WITH_AS(parse_coloring(no_k, 2), "line 1: coloring must start with a k line",
                         std::invalid_argument);
    std::istringstream twice("k 3\n0 1\n0 2\n");
    CHECK_THROWS_WITH_AS(parse_coloring(twice, 2), "line 3: edge colored twice",
                         std::invalid_argument);
    std::istringstream range("k 3\n0 3\n");
    CHECK_THROWS_WITH_AS(parse_coloring(range, 2), "line 2: color outside [0, k)",
                         std::invalid_argument);
    std::istringstream edge("k 3\n5 1\n");
    CHECK_THROWS_WITH_AS(parse_coloring(edge, 2), "line 2: edge id out of range",
                         std::invalid_argument);
}

TEST_CASE("matrix files are 1-based and rectangular") {
    std::istringstream in("1 2\n2 1\n");
    ColorMatrix m = parse_matrix(in);
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(1, 0) == 1);
    CHECK(serialize_color_matrix(m) == "1 2\n2 1\n");

    std::istringstream ragged("1 2\n1\n");
    CHECK_THROWS_WITH_AS(parse_matrix(ragged), "line 2: row has 1 entries, expected 2",
                         std::invalid_argument);
    std::istringstream zero("0 1\n");
    CHECK_THROWS_AS(parse_matrix(zero), std::invalid_argument);
}

TEST_CASE("matrix checks name the repeated position") {
    std::istringstream in("1 2 2\n2 1 3\n");
    ColorMatrix m = parse_matrix(in);
    MatrixCheck chk = check_color_matrix(m);
    CHECK_FALSE(chk.proper);
    REQUIRE(chk.errors.size() == 1);
    CHECK(chk.errors[0] == "row 1 repeats color 2 (columns 2 and 3)");
}

TEST_CASE("column repeats are found too") {
    std::istringstream in("1 2\n1 3\n");
    MatrixCheck chk = check_color_matrix(parse_matrix(in));
    CHECK_FALSE(chk.proper);
    REQUIRE(chk.errors.size() == 1);
    CHECK(chk.errors[0] == "column 1 repeats color 1 (rows 1 and 2)");
}

TEST_CASE("matrix converts to a colored complete bipartite graph") {
    std::istringstream in("1 2\n2 1\n");
    auto [g, c] = parse_color_matrix(in);
    CHECK(g == complete_bipartite(2, 2));
    CHECK(c.k == 2);
    CHECK(c.assignment == std::vector<Color>{0, 1, 1, 0});
    CHECK(is_proper(g, c));
}

TEST_CASE("parse_color_matrix refuses improper matrices") {
    std::istringstream in("1 1\n2 3\n");
    CHECK_THROWS_WITH_AS(
        parse_color_matrix(in),
        "matrix is not a proper coloring: row 1 repeats color 1 (columns 1 and 2)",
        std::invalid_argument);
}

TEST_CASE("reference matrices parse to the published counts") {
    for (auto [file, colors] :
         {std::pair<const char*, int>{"/m56.txt", 12}, {"/m56_prime.txt", 8}}) {
        std::ifstream in(std::string(PALETTELAB_DATA_DIR) + file);
        REQUIRE(in.good());
        ColorMatrix m = parse_matrix(in);
        MatrixCheck chk = check_color_matrix(m);
        CHECK(chk.proper);
        CHECK(chk.distinct_colors == colors);
        CHECK(chk.distinct_palettes == 6);
        auto [g, c] = matrix_to_coloring(m);
        CHECK(is_proper(g, c));
        CHECK(distinct_palettes(g, c).size() == 6);
    }
}

TEST_CASE("dot export names vertices and lists every edge") {
    Multigraph g = Multigraph::build(2, {{0, 1, 2}});
    std::string dot = to_dot(g, {"left", "right"});
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("v0 [label=\"left\"]") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    // both parallel edges appear
    auto first = dot.find("v0 -- v1");
    CHECK(dot.find("v0 -- v1", first + 1) != std::string::npos);
}

TEST_CASE("palette multigraph dot export labels palettes") {
    Multigraph g = path(3);
    PaletteMultigraph pg = build_palette_multigraph(g, {2, {0, 1}});
    std::string dot = to_dot(pg);
    CHECK(dot.find("{0,1}") != std::string::npos);
    CHECK(dot.find("p0 -- ") != std::string::npos);
}

TEST_CASE("reports render as text and json") {
    Report rep;
    rep.add("graph", "K4");
    rep.add("palette_index", 1);
    rep.add("exact", true);
    CHECK(rep.text() == "graph: K4\npalette_index: 1\nexact: true\n");
    CHECK(rep.json().find("\"palette_index\": 1") != std::string::npos);
}
