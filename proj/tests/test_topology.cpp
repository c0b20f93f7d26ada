#include "doctest.h"

#include "foliage/generators.hpp"
#include "foliage/topology.hpp"
#include "oracles.hpp"

using namespace foliage;

TEST_CASE("contractibility base cases and small fixtures") {
    TopologyContext topo;
    CHECK_FALSE(topo.is_contractible(Graph(0)));
    CHECK(topo.is_contractible(complete(1)));
    CHECK(topo.is_contractible(complete(2)));
    CHECK(topo.is_contractible(complete(4)));
    CHECK_FALSE(topo.is_contractible(cycle(4)));
    CHECK_FALSE(topo.is_contractible(cycle(5)));
    // two isolated vertices: no vertex has a contractible unit sphere
    CHECK_FALSE(topo.is_contractible(Graph(2)));
    Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(topo.is_contractible(path));
    CHECK_THROWS_AS(topo.is_contractible(complete(13)), Error);
}

TEST_CASE("sphere recursion") {
    TopologyContext topo;
    CHECK(topo.is_sphere(Graph(0), -1));
    CHECK_FALSE(topo.is_sphere(Graph(1), -1));
    CHECK(topo.is_sphere(Graph(2), 0));
    CHECK_FALSE(topo.is_sphere(Graph(1), 0));
    CHECK_FALSE(topo.is_sphere(Graph(3), 0));
    for (int d = 0; d <= 3; ++d) CHECK(topo.is_sphere(cross_polytope(d), d));
    CHECK_FALSE(topo.is_sphere(cross_polytope(2), 1));
    for (int k = 4; k <= 8; ++k) CHECK(topo.is_sphere(cycle(k), 1));
    CHECK_FALSE(topo.is_sphere(cycle(3), 1)); // unit spheres are edges, not 0-spheres
    CHECK_FALSE(topo.is_sphere(complete(4), 2));
    CHECK(topo.is_sphere(prism(3), 2));
    CHECK(topo.is_sphere(prism(4), 2));
    CHECK(topo.is_sphere(icosahedron(), 2));
}

TEST_CASE("manifold recognition") {
    TopologyContext topo;
    for (int k = 3; k <= 8; ++k) CHECK(topo.is_manifold(cycle(k), 1));
    CHECK(topo.is_manifold(cross_polytope(2), 2));
    CHECK_FALSE(topo.is_manifold(complete(4), 2));
    CHECK(topo.is_manifold(cross_polytope(3), 3));
    // the cap applies to unit spheres, so bigger hosts still work
    CHECK(topo.is_manifold(barycentric_refinement(cross_polytope(2)), 2));
}

TEST_CASE("memoized recursion agrees with memo-free recomputation") {
    TopologyContext with_memo;
    for (int n = 1; n <= 5; ++n)
        all_graphs(n, [&](const Graph& g) {
            TopologyContext fresh(12, false);
            CHECK(with_memo.is_contractible(g) == fresh.is_contractible(g));
        });
    // seeded sample at n = 6, 7
    SplitMix64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = erdos_renyi(6 + static_cast<int>(trial % 2), 0.45, rng.next());
        TopologyContext fresh(12, false);
        CHECK(with_memo.is_contractible(g) == fresh.is_contractible(g));
    }
}

TEST_CASE("bfs canonical key is sound: equal keys only on isomorphic graphs") {
    // the key is an adjacency matrix under a chosen relabeling, so key
    // collisions must be isomorphisms; collisions across relabeled copies are
    // likely but not promised
    SplitMix64 rng(67);
    std::vector<Graph> pool;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(6, 0.45, rng.next());
        pool.push_back(g);
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges()) edges.push_back(make_edge(5 - u, 5 - v));
        pool.emplace_back(6, edges);
    }
    int collisions = 0;
    for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = a + 1; b < pool.size(); ++b)
            if (bfs_canonical_key(pool[a]) == bfs_canonical_key(pool[b])) {
                ++collisions;
                CHECK(oracle::isomorphic(pool[a], pool[b]));
            }
    CHECK(collisions > 0); // the relabeled copies should mostly collide

    // vertex-transitive fixtures relabel to themselves
    for (int n : {4, 5, 6, 7}) {
        std::vector<Edge> edges;
        for (auto [u, v] : cycle(n).edges())
            edges.push_back(make_edge((u + 2) % n, (v + 2) % n));
        CHECK(bfs_canonical_key(cycle(n)) == bfs_canonical_key(Graph(n, edges)));
    }
}

TEST_CASE("sphere verdicts replay against their stored witnesses") {
    TopologyContext topo;
    for (int d = 0; d <= 3; ++d) {
        SphereVerdict v = sphere_verdict(topo, cross_polytope(d), d);
        CHECK(v.verdict);
        CHECK(v.removal >= 0);
        CHECK(static_cast<int>(v.contraction.size()) ==
              std::max(cross_polytope(d).vertex_count() - 2, 0));
        CHECK(replay_sphere_verdict(topo, cross_polytope(d), v));
    }
    SphereVerdict bad = sphere_verdict(topo, complete(4), 2);
    CHECK_FALSE(bad.verdict);
    CHECK(replay_sphere_verdict(topo, complete(4), bad));

    // tampered witnesses fail the replay
    SphereVerdict v = sphere_verdict(topo, cross_polytope(2), 2);
    v.contraction.pop_back();
    CHECK_FALSE(replay_sphere_verdict(topo, cross_polytope(2), v));
}

TEST_CASE("one memo context shared across threads stays consistent") {
    // serial answers first
    std::vector<Graph> pool;
    SplitMix64 rng(71);
    for (int t = 0; t < 120; ++t) pool.push_back(erdos_renyi(8, 0.35, rng.next()));
    std::vector<char> expected(pool.size());
    {
        TopologyContext serial;
        for (size_t i = 0; i < pool.size(); ++i)
            expected[i] = serial.is_contractible(pool[i]);
    }
    TopologyContext shared;
    std::vector<char> got(pool.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < static_cast<int>(pool.size()); ++i)
        got[i] = shared.is_contractible(pool[i]);
    CHECK(got == expected);
}

TEST_CASE("manifold degree bound") {
    CHECK(manifold_degree_bound_holds(cycle(5), 1));
    CHECK(manifold_degree_bound_holds(cross_polytope(2), 2));
    CHECK(manifold_degree_bound_holds(cross_polytope(3), 3));
    CHECK(manifold_degree_bound_holds(prism(4), 2));
    CHECK_FALSE(manifold_degree_bound_holds(cycle(5), 2));
    CHECK(min_arboricity_bound(1) == 2);
    CHECK(min_arboricity_bound(2) == 3);
    CHECK(min_arboricity_bound(3) == 4);
    CHECK_THROWS_AS(min_arboricity_bound(0), Error);
    // d = 2 minimum is attained by the octahedron, d = 3 by the 16-cell
    CHECK(arboricity(cross_polytope(2)).k == 3);
    CHECK(arboricity(cross_polytope(3)).k == 4);
    CHECK(nash_williams_bound(cross_polytope(3)) == Rational(24, 7));
}

TEST_CASE("blow-up on the 16-cell reaches the density target") {
    BlowupOptions opts;
    opts.manifold_dim = 3;
    auto res = arboricity_blowup(cross_polytope(3), 5, opts);
    CHECK(res.reached);
    CHECK(res.manifold_checked);
    REQUIRE(res.final_w.has_value());
    CHECK(*res.final_w >= Rational(4, 1));

    // strictly size-monotone, density non-decreasing across the edge phase
    for (size_t i = 1; i < res.trace.size(); ++i) {
        CHECK(res.trace[i].n == res.trace[i - 1].n + 1);
        CHECK(res.trace[i].kind == BlowupStep::Kind::edge_refine);
        CHECK(res.trace[i - 1].density <= res.trace[i].density);
        CHECK(res.trace[i].m >= res.trace[i - 1].m + 5); // at least `target` edges
    }
    CHECK(res.trace.back().density >= Rational(4, 1));
}

TEST_CASE("blow-up returns immediately when the target is already met") {
    auto res = arboricity_blowup(complete(4), 2);
    CHECK(res.reached);
    CHECK(res.trace.size() == 1);
    CHECK(res.graph == complete(4));

    auto res2 = arboricity_blowup(cross_polytope(3), 4);
    CHECK(res2.reached);
    CHECK(res2.trace.size() == 1); // ceil(24/7) = 4 already
}

TEST_CASE("blow-up hands back a partial trace when capped") {
    BlowupOptions opts;
    opts.max_barycentric = 0;
    opts.max_vertices = 9;
    auto res = arboricity_blowup(cross_polytope(3), 6, opts);
    CHECK_FALSE(res.reached);
    CHECK(res.trace.size() >= 1);
}
