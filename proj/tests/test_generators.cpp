#include "doctest.h"

#include "foliage/generators.hpp"
#include "foliage/graph_io.hpp"
#include "oracles.hpp"

using namespace foliage;

TEST_CASE("cycle basics") {
    CHECK_THROWS_AS(cycle(2), Error);
    CHECK(cycle(3).edge_count() == 3);
    Graph c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    // every unit sphere of C4 is a 0-sphere: two isolated vertices
    Graph c4 = cycle(4);
    for (int v = 0; v < 4; ++v) {
        Graph s = unit_sphere(c4, v);
        CHECK(s.vertex_count() == 2);
        CHECK(s.edge_count() == 0);
    }
}

TEST_CASE("complete basics") {
    CHECK(complete(0).vertex_count() == 0);
    CHECK(complete(1).vertex_count() == 1);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete(4).edge_count() == 6);
}

TEST_CASE("cross polytope shape") {
    CHECK(cross_polytope(0).vertex_count() == 2);
    CHECK(cross_polytope(0).edge_count() == 0);
    CHECK(oracle::isomorphic(cross_polytope(1), cycle(4)));
    Graph octa = cross_polytope(2);
    CHECK(octa.vertex_count() == 6);
    CHECK(octa.edge_count() == 12);
    for (int d = 0; d <= 3; ++d) {
        Graph g = cross_polytope(d);
        CHECK(g.vertex_count() == 2 * d + 2);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 2 * d);
    }
}

TEST_CASE("prism construction") {
    CHECK_THROWS_AS(prism(2), Error);
    // k = 3 needs no caps and is the octahedron
    CHECK(oracle::isomorphic(prism(3), cross_polytope(2)));
    Graph p4 = prism(4);
    CHECK(p4.vertex_count() == 10);
    CHECK(p4.edge_count() == 24);
    // Euler count for a closed triangulation: v - e + t == 2
    for (int k : {3, 4, 5, 6}) {
        Graph p = prism(k);
        int t = static_cast<int>(triangles(p).size());
        CHECK(p.vertex_count() - p.edge_count() + t == 2);
    }
    // 3-connected: removing any two vertices leaves it connected
    for (int k : {3, 4, 5}) {
        Graph p = prism(k);
        for (int a = 0; a < p.vertex_count(); ++a)
            for (int b = a + 1; b < p.vertex_count(); ++b) {
                std::vector<int> rest;
                for (int v = 0; v < p.vertex_count(); ++v)
                    if (v != a && v != b) rest.push_back(v);
                CHECK(is_connected(induced_subgraph(p, rest)));
            }
    }
    CHECK(oracle::isomorphic(icosahedron(), prism(5)));
    CHECK(icosahedron().edge_count() == 30);
}

TEST_CASE("barycentric refinement") {
    CHECK(barycentric_refinement(complete(1)) == complete(1));
    // a single edge becomes the path on vertex, edge-vertex, vertex
    Graph k2 = complete(2);
    Graph bk2 = barycentric_refinement(k2);
    CHECK(bk2.vertex_count() == 3);
    CHECK(bk2.edge_count() == 2);
    // triangle: 3 vertices + 3 edges + 1 simplex, 12 containment pairs
    Graph bc3 = barycentric_refinement(cycle(3));
    CHECK(bc3.vertex_count() == 7);
    CHECK(bc3.edge_count() == 12);
    // refinement of a 2-sphere has all vertex degrees even
    Graph bocta = barycentric_refinement(cross_polytope(2));
    CHECK(bocta.vertex_count() == 6 + 12 + 8);
    for (int v = 0; v < bocta.vertex_count(); ++v) CHECK(bocta.degree(v) % 2 == 0);
    CHECK_THROWS_AS(barycentric_refinement(complete(6), 10), Error);
}

TEST_CASE("edge refinement counts") {
    Graph c4 = cycle(4);
    Graph r = edge_refine(c4, 0, 1);
    CHECK(oracle::isomorphic(r, cycle(5)));

    Graph octa = cross_polytope(2);
    auto e = octa.edges().front();
    Graph ro = edge_refine(octa, e.first, e.second);
    CHECK(ro.vertex_count() == 7);
    CHECK(ro.edge_count() == 15);

    Graph rk3 = edge_refine(cycle(3), 0, 1);
    CHECK(rk3.vertex_count() == 4);
    CHECK(rk3.edge_count() == 5);

    CHECK_THROWS_AS(edge_refine(c4, 0, 2), Error);
}

TEST_CASE("edge refinement delta property") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(8, 0.5, rng.next());
        auto edges = g.edges();
        if (edges.empty()) continue;
        auto e = edges[rng.below(edges.size())];
        int common = common_neighbors(g, e.first, e.second).count();
        Graph r = edge_refine(g, e.first, e.second);
        CHECK(r.vertex_count() == g.vertex_count() + 1);
        CHECK(r.edge_count() == g.edge_count() + common + 1);
    }
}

TEST_CASE("erdos renyi determinism and extremes") {
    CHECK(erdos_renyi(10, 0.0, 5).edge_count() == 0);
    CHECK(erdos_renyi(10, 1.0, 5).edge_count() == 45);
    Graph a = erdos_renyi(10, 0.5, 12345);
    Graph b = erdos_renyi(10, 0.5, 12345);
    CHECK(a == b);
    CHECK(emit_graph6(a) == emit_graph6(b));
    Graph c = erdos_renyi(10, 0.5, 54321);
    CHECK(a.vertex_count() == c.vertex_count());
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 1), Error);
    CHECK_THROWS_AS(erdos_renyi(5, -0.1, 1), Error);
}

TEST_CASE("all_graphs counts") {
    auto count = [](int n, AllGraphsOptions opts = {}) {
        uint64_t c = 0;
        all_graphs(n, [&](const Graph&) { ++c; }, opts);
        return c;
    };
    CHECK(count(2) == 2);
    CHECK(count(3) == 8);
    CHECK(count(4) == 64);
    CHECK_THROWS_AS(count(8), Error);

    AllGraphsOptions conn;
    conn.connected_only = true;
    CHECK(count(3, conn) == 4); // one triangle + three paths

    AllGraphsOptions dedup;
    dedup.dedup_isomorphic = true;
    CHECK(count(3, dedup) == 4);  // up to isomorphism on 3 vertices
    CHECK(count(4, dedup) == 11); // classical count of 4-vertex graphs
}

TEST_CASE("graph_from_mask matches graph6 bit order") {
    // mask bits and graph6 payload bits use the same colex pair order
    for (uint64_t mask = 0; mask < 64; ++mask) {
        Graph g = graph_from_mask(4, mask);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    CHECK(graph_from_mask(4, 0b111111).edge_count() == 6);
}
