#include <catch2/catch_amalgamated.hpp>

#include "spandec/generators.hpp"
#include "spandec/pathwidth.hpp"

using namespace spandec;

TEST_CASE("fig1 family structure") {
    GeneratedInstance one = gen_fig1(1);
    CHECK(one.graph.vertex_count() == 4);
    CHECK(one.pathdec.bags.size() == 2);
    CHECK(validate_pathdec(one.graph, one.pathdec).ok());

    GeneratedInstance four = gen_fig1(4);
    CHECK(four.graph.vertex_count() == 13);
    CHECK(four.pathdec.bags.size() == 11);
    CHECK(four.pathdec.width() == 2);
    CHECK(validate_pathdec(four.graph, four.pathdec).ok());

    CHECK_THROWS_AS(gen_fig1(0), InputError);
}

TEST_CASE("fig1 pathwidth cross-check on oracle-sized instances") {
    for (int n = 2; n <= 3; ++n) {
        GeneratedInstance inst = gen_fig1(n);
        REQUIRE(inst.graph.vertex_count() <= kPathwidthOracleLimit);
        CHECK(exact_pathwidth(inst.graph) == 2);
    }
}

TEST_CASE("random generator emits valid connected certified instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance inst = gen_random_pathdec(3, 30, 0.5, seed);
        CHECK(validate_pathdec(inst.graph, inst.pathdec).ok());
        CHECK(is_connected(inst.graph));
        CHECK(inst.pathdec.width() <= 2);
    }
}

TEST_CASE("random generator is deterministic per seed") {
    GeneratedInstance a = gen_random_pathdec(3, 30, 0.5, 7);
    GeneratedInstance b = gen_random_pathdec(3, 30, 0.5, 7);
    CHECK(a.graph == b.graph);
    CHECK(a.pathdec.bags == b.pathdec.bags);
    GeneratedInstance c = gen_random_pathdec(3, 30, 0.5, 8);
    CHECK((!(a.graph == c.graph) || a.pathdec.bags != c.pathdec.bags));
}

TEST_CASE("random generator with k=1 collapses to a single vertex") {
    GeneratedInstance inst = gen_random_pathdec(1, 10, 1.0, 3);
    CHECK(inst.graph.vertex_count() == 1);
    CHECK(inst.pathdec.bags.size() == 1);
    CHECK(is_connected(inst.graph));
}

TEST_CASE("density 1 realizes every co-bag pair as an edge") {
    GeneratedInstance inst = gen_random_pathdec(3, 25, 1.0, 11);
    for (const VertexSet& bag : inst.pathdec.bags)
        for (auto it = bag.begin(); it != bag.end(); ++it)
            for (auto jt = std::next(it); jt != bag.end(); ++jt)
                CHECK(inst.graph.has_edge(*it, *jt));
}
