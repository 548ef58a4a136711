#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "spandec/factorization.hpp"

using namespace spandec;

namespace {

CanonicalAbstraction idempotent_letter() {
    Graph g;
    g.add_vertex(0);
    return abstraction(InterfaceGraph(g, {{0, 1}}, {0}, {0}, 2));
}

CanonicalAbstraction nilpotentish_letter() {
    Graph g;
    g.add_edge(0, 1);
    return abstraction(InterfaceGraph(g, {{0, 1}, {1, 2}}, {0}, {1}, 2));
}

SemigroupTable two_element_table() {
    // closure {a, a*a}: the square is an idempotent absorber
    return generate_subsemigroup({nilpotentish_letter()});
}

}  // namespace

TEST_CASE("length-1 word is a leaf") {
    SemigroupTable t = two_element_table();
    FactorTree tr = factorize({0}, t);
    CHECK(tr.kind == FactorTree::Kind::Leaf);
    CHECK(tree_height(tr) == 1);
    CHECK(tr.value == 0);
    CHECK(verify_factor_tree(tr, {0}, t).ok());
}

TEST_CASE("word of equal idempotents becomes one unranked node") {
    auto e = idempotent_letter();
    SemigroupTable t = generate_subsemigroup({e});
    std::vector<int> word(4, 0);
    FactorTree tr = factorize(word, t);
    CHECK(tr.kind == FactorTree::Kind::Unranked);
    CHECK(tr.children.size() == 4);
    CHECK(tree_height(tr) == 2);
    CHECK(verify_factor_tree(tr, word, t).ok());
}

TEST_CASE("tree height basics") {
    SemigroupTable t = two_element_table();
    FactorTree tr2 = factorize({0, 0}, t);
    CHECK(tree_height(tr2) == 2);
}

TEST_CASE("long word over the two-element closure stays within 3|S| = 6") {
    SemigroupTable t = two_element_table();
    REQUIRE(t.size() == 2);
    std::vector<int> word(50, 0);
    FactorTree tr = factorize(word, t);
    CHECK(verify_factor_tree(tr, word, t).ok());
    CHECK(tree_height(tr) <= 6);
}

TEST_CASE("random words over the two-element closure meet the bound") {
    SemigroupTable t = two_element_table();
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 200; ++it) {
        std::size_t len = 1 + rng() % 300;
        std::vector<int> word(len);
        for (auto& s : word) s = static_cast<int>(rng() % t.size());
        FactorTree tr = factorize(word, t);
        auto rep = verify_factor_tree(tr, word, t);
        INFO(rep.summary());
        CHECK(rep.ok());
    }
}

TEST_CASE("exhaustive small words over the two-element closure") {
    SemigroupTable t = two_element_table();
    for (std::size_t len = 1; len <= 11; ++len) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            std::vector<int> word(len);
            for (std::size_t i = 0; i < len; ++i) word[i] = (mask >> i) & 1;
            FactorTree tr = factorize(word, t);
            auto rep = verify_factor_tree(tr, word, t);
            INFO("word mask " << mask << " len " << len << ": " << rep.summary());
            REQUIRE(rep.ok());
        }
    }
}

TEST_CASE("factorize is deterministic") {
    SemigroupTable t = two_element_table();
    std::mt19937_64 rng(99);
    std::vector<int> word(120);
    for (auto& s : word) s = static_cast<int>(rng() % t.size());
    FactorTree a = factorize(word, t);
    FactorTree b = factorize(word, t);
    // structural equality via the dump of leaf intervals and kinds
    std::function<std::string(const FactorTree&)> dump = [&](const FactorTree& tr) {
        std::string s = std::to_string(static_cast<int>(tr.kind)) + "[" +
                        std::to_string(tr.begin) + "," + std::to_string(tr.end) + "]v" +
                        std::to_string(tr.value) + "(";
        for (const auto& c : tr.children) s += dump(c);
        return s + ")";
    };
    CHECK(dump(a) == dump(b));
}

TEST_CASE("evaluate agrees with the cached root evaluation") {
    SemigroupTable t = two_element_table();
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        std::size_t len = 1 + rng() % 40;
        std::vector<int> word(len);
        for (auto& s : word) s = static_cast<int>(rng() % t.size());
        FactorTree tr = factorize(word, t);
        CHECK(tr.value == evaluate(word, t));
    }
}

TEST_CASE("verifier flags hand-built violations") {
    SemigroupTable t = two_element_table();
    int a = 0;       // non-idempotent
    int b = t.product(a, a);  // idempotent absorber

    SECTION("unranked children with different evaluations") {
        std::vector<int> word{a, b};
        FactorTree bad;
        bad.kind = FactorTree::Kind::Unranked;
        bad.begin = 0;
        bad.end = 2;
        bad.value = b;
        bad.children = {FactorTree{FactorTree::Kind::Leaf, 0, 1, a, {}},
                        FactorTree{FactorTree::Kind::Leaf, 1, 2, b, {}}};
        auto rep = verify_factor_tree(bad, word, t);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations)
            found |= v.property == "unranked-idempotent";
        CHECK(found);
    }

    SECTION("permuted leaves break coverage") {
        std::vector<int> word{a, b};
        FactorTree bad;
        bad.kind = FactorTree::Kind::Binary;
        bad.begin = 0;
        bad.end = 2;
        bad.value = t.product(b, a);
        bad.children = {FactorTree{FactorTree::Kind::Leaf, 1, 2, b, {}},
                        FactorTree{FactorTree::Kind::Leaf, 0, 1, a, {}}};
        auto rep = verify_factor_tree(bad, word, t);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations) found |= v.property == "leaf-coverage";
        CHECK(found);
    }

    SECTION("wrong cached evaluation") {
        std::vector<int> word{a, a};
        FactorTree bad;
        bad.kind = FactorTree::Kind::Binary;
        bad.begin = 0;
        bad.end = 2;
        bad.value = a;  // should be b
        bad.children = {FactorTree{FactorTree::Kind::Leaf, 0, 1, a, {}},
                        FactorTree{FactorTree::Kind::Leaf, 1, 2, a, {}}};
        auto rep = verify_factor_tree(bad, word, t);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations) found |= v.property == "cached-eval";
        CHECK(found);
    }
}

TEST_CASE("fuzz: factorize output always verifies") {
    auto e = idempotent_letter();
    auto a = nilpotentish_letter();
    // a third letter to widen the closure
    Graph g;
    g.add_edge(0, 1);
    auto c = abstraction(InterfaceGraph(g, {{0, 2}, {1, 1}}, {0}, {0, 1}, 2));
    SemigroupTable t = generate_subsemigroup({a, e, c});
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 500; ++it) {
        std::size_t len = 1 + rng() % 200;
        std::vector<int> word(len);
        for (auto& s : word) s = static_cast<int>(rng() % t.size());
        FactorTree tr = factorize(word, t);
        auto rep = verify_factor_tree(tr, word, t);
        INFO(rep.summary());
        REQUIRE(rep.ok());
    }
}
