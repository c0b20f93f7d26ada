#include "doctest.h"

#include <set>

#include "foliage/generators.hpp"
#include "foliage/hms.hpp"
#include "oracles.hpp"

using namespace foliage;

TEST_CASE("one factorization schedules") {
    auto f2 = one_factorization(2);
    CHECK(f2.rounds.size() == 1);
    CHECK(f2.rounds[0] == std::vector<std::pair<int, int>>{{0, 1}});

    auto f4 = one_factorization(4);
    CHECK(f4.rounds.size() == 3);
    std::set<std::pair<int, int>> pairs;
    for (const auto& round : f4.rounds) {
        CHECK(round.size() == 2);
        for (auto p : round) pairs.insert(p);
    }
    CHECK(pairs.size() == 6);

    auto f5 = one_factorization(5);
    CHECK(f5.rounds.size() == 5);
    for (const auto& round : f5.rounds) CHECK(round.size() == 2);

    for (int c = 2; c <= 9; ++c) one_factorization(c).verify();
    CHECK_THROWS_AS(one_factorization(1), Error);
}

TEST_CASE("bundling a tree's 2-coloring returns the tree") {
    Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    auto fp = bundle_forests(path, VertexColoring::of({0, 1, 0, 1}));
    CHECK(fp.parts.size() == 1);
    CHECK(fp.parts[0].size() == 3);
}

TEST_CASE("bundling the octahedron's acy-5 witness gives 5 forests") {
    Graph octa = cross_polytope(2);
    auto acy = acyclic_chromatic_number(octa);
    REQUIRE(acy.count == 5);
    auto fp = bundle_forests(octa, acy.witness);
    CHECK(fp.parts.size() == 5); // odd c keeps c parts
    size_t total = 0;
    for (const auto& part : fp.parts) total += part.size();
    CHECK(total == 12);
}

TEST_CASE("any acyclic 4-coloring bundles into 3 forests") {
    // K4 rainbow coloring: acy witness with c = 4
    auto fp = bundle_forests(complete(4), VertexColoring::of({0, 1, 2, 3}));
    CHECK(fp.parts.size() == 3);
    for (const auto& part : fp.parts) CHECK(part.size() == 2);
}

TEST_CASE("bundle rejects non-acyclic input") {
    CHECK_THROWS_AS(bundle_forests(cycle(4), VertexColoring::of({0, 1, 0, 1})), Error);
    CHECK_THROWS_AS(bundle_forests(cycle(4), VertexColoring::of({0, 0, 1, 1})), Error);
}

TEST_CASE("bundle consumes suboptimal acyclic colorings too") {
    // the bound tracks the coloring's own c, not acy(g)
    Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    auto fp = bundle_forests(path, VertexColoring::of({0, 1, 2, 3}));
    CHECK(fp.parts.size() == 3); // c = 4 even: 3 parts, some possibly empty
    size_t total = 0;
    for (const auto& part : fp.parts) total += part.size();
    CHECK(total == 3);
}

TEST_CASE("refined hms verdicts on fixtures") {
    auto check = [](const Graph& g) {
        return verify_refined_hms(g, acyclic_chromatic_number(g), arboricity(g));
    };

    auto octa = check(cross_polytope(2));
    CHECK(octa.arb == 3);
    CHECK(octa.acy == 5);
    CHECK(octa.pass());

    auto k4 = check(complete(4));
    CHECK(k4.arb == 2);
    CHECK(k4.acy == 4);
    CHECK(k4.inequality_pass); // 2 <= 3
    CHECK(k4.pass());

    Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    auto tree = check(path);
    CHECK(tree.arb == 1);
    CHECK(tree.acy == 2);
    CHECK(tree.inequality_pass); // 1 <= 1: the even case is tight on trees
    CHECK(tree.pass());

    auto k1 = check(complete(1));
    CHECK(k1.pass());
}

TEST_CASE("refined hms needs exact values") {
    SearchBudget tiny{1};
    auto capped = acyclic_chromatic_number(cross_polytope(2), tiny);
    REQUIRE_FALSE(capped.exact);
    CHECK_THROWS_AS(verify_refined_hms(cross_polytope(2), capped, arboricity(cross_polytope(2))),
                    Error);
}

TEST_CASE("refined bound holds with verified bundles on every n<=4 graph") {
    for (int n = 1; n <= 4; ++n)
        all_graphs(n, [&](const Graph& g) {
            auto verdict = verify_refined_hms(g, acyclic_chromatic_number(g), arboricity(g));
            CHECK(verdict.pass());
        });
}
