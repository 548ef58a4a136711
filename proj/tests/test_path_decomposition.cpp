#include <catch2/catch_amalgamated.hpp>

#include "spandec/path_decomposition.hpp"

using namespace spandec;

namespace {

Graph path_graph(int n) {
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(i);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("validate_pathdec accepts a correct decomposition") {
    Graph p3 = path_graph(3);
    PathDecomposition p{{{1, 2}, {2, 3}}};
    auto rep = validate_pathdec(p3, p);
    CHECK(rep.ok());
    CHECK(p.width() == 1);
}

TEST_CASE("validate_pathdec flags an uncovered edge") {
    Graph p3 = path_graph(3);
    PathDecomposition p{{{1, 2}, {3}}};
    auto rep = validate_pathdec(p3, p);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].property == "edge-coverage");
}

TEST_CASE("validate_pathdec flags a broken vertex interval") {
    Graph g;
    g.add_vertex(1);
    g.add_vertex(2);
    PathDecomposition p{{{1}, {2}, {1}}};
    auto rep = validate_pathdec(g, p);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].property == "vertex-interval");
}

TEST_CASE("validate_pathdec flags foreign vertices and missing ones") {
    Graph g;
    g.add_vertex(1);
    PathDecomposition p{{{9}}};
    auto rep = validate_pathdec(g, p);
    REQUIRE_FALSE(rep.ok());
    bool foreign = false, missing = false;
    for (const auto& v : rep.violations) {
        foreign |= v.property == "foreign-vertex";
        missing |= v.property == "vertex-missing";
    }
    CHECK(foreign);
    CHECK(missing);
}

TEST_CASE("make_nice peels then grows") {
    PathDecomposition p{{{1, 2}, {2, 3}}};
    PathDecomposition n = make_nice(p);
    REQUIRE(n.bags.size() == 3);
    CHECK(n.bags[0] == VertexSet{1, 2});
    CHECK(n.bags[1] == VertexSet{2});
    CHECK(n.bags[2] == VertexSet{2, 3});
    CHECK(is_nice(n));
    CHECK(n.width() == p.width());
}

TEST_CASE("make_nice leaves nice input unchanged up to duplicate removal") {
    PathDecomposition p{{{1, 2}, {2}, {2}, {2, 3}}};
    PathDecomposition n = make_nice(p);
    REQUIRE(n.bags.size() == 3);
    CHECK(is_nice(n));
}

TEST_CASE("make_nice on wide steps keeps the width") {
    Graph g;
    for (int v = 1; v <= 5; ++v) g.add_vertex(v);
    PathDecomposition p{{{1, 2, 3}, {3, 4, 5}}};
    PathDecomposition n = make_nice(p);
    std::vector<VertexSet> expect{{1, 2, 3}, {2, 3}, {3}, {3, 4}, {3, 4, 5}};
    CHECK(n.bags == expect);
    CHECK(n.width() == 2);
    CHECK(validate_pathdec(g, n).ok());
}

TEST_CASE("make_nice rejects non-contiguous input") {
    PathDecomposition p{{{1}, {2}, {1}}};
    CHECK_THROWS_AS(make_nice(p), InputError);
}

TEST_CASE("interval coloring is greedy and injective on bags") {
    Graph p3 = path_graph(3);
    PathDecomposition n{{{1, 2}, {2}, {2, 3}}};
    Labeling phi = interval_coloring(p3, n, 2);
    CHECK(phi.at(1) == 1);
    CHECK(phi.at(2) == 2);
    CHECK(phi.at(3) == 1);

    Graph single;
    single.add_vertex(5);
    Labeling phi2 = interval_coloring(single, {{{5}}}, 1);
    CHECK(phi2.at(5) == 1);
}

TEST_CASE("interval coloring rejects oversized bags") {
    Graph p3 = path_graph(3);
    PathDecomposition n{{{1, 2}, {2}, {2, 3}}};
    CHECK_THROWS_AS(interval_coloring(p3, n, 1), InputError);
}

TEST_CASE("to_interface_word produces a compatible word gluing back to the graph") {
    Graph p3 = path_graph(3);
    PathDecomposition n{{{1, 2}, {2}, {2, 3}}};
    Labeling phi = interval_coloring(p3, n, 2);
    auto word = to_interface_word(p3, n, phi, 2);
    REQUIRE(word.size() == 3);
    CHECK(word[0].left.empty());
    CHECK(word[0].right == VertexSet{1, 2});
    CHECK(word[2].right.empty());
    CHECK(compatible_sequence(word));

    InterfaceGraph whole = glue(word);
    CHECK(whole.g == p3);
    CHECK(whole.left.empty());
    CHECK(whole.right.empty());
}

TEST_CASE("to_interface_word single bag") {
    Graph single;
    single.add_vertex(4);
    auto word = to_interface_word(single, {{{4}}}, {{4, 1}}, 1);
    REQUIRE(word.size() == 1);
    CHECK(word[0].left.empty());
    CHECK(word[0].right.empty());
}

TEST_CASE("to_interface_word two bags share the interface") {
    Graph e;
    e.add_edge(1, 2);
    PathDecomposition n{{{1}, {1, 2}}};
    Labeling phi = interval_coloring(e, n, 2);
    auto word = to_interface_word(e, n, phi, 2);
    REQUIRE(word.size() == 2);
    CHECK(word[0].right == VertexSet{1});
    CHECK(word[1].left == VertexSet{1, 2});
    CHECK(compatible(word[0], word[1]));
    CHECK(set_intersect(word[0].g.vertices(), word[1].g.vertices()) == VertexSet{1});
}
