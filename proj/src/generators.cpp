#include "foliage/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace foliage {

Graph cycle(int n) {
    if (n < 3) raise(Errc::invalid_size, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, edges, "C" + std::to_string(n));
}

Graph complete(int n) {
    if (n < 0) raise(Errc::invalid_size, "negative vertex count");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges, "K" + std::to_string(n));
}

Graph cross_polytope(int d) {
    if (d < 0) raise(Errc::invalid_size, "negative dimension");
    int n = 2 * d + 2;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i / 2 != j / 2) edges.emplace_back(i, j);
    return Graph(n, edges, "cross" + std::to_string(d));
}

Graph prism(int k) {
    if (k < 3) raise(Errc::invalid_size, "prism needs k >= 3");
    bool capped = k >= 4;
    int base = capped ? 2 : 0; // apexes occupy 0 and 1
    int n = 2 * k + base;
    auto rim_a = [&](int i) { return base + i; };
    auto rim_b = [&](int i) { return base + k + i; };
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        edges.push_back(make_edge(rim_a(i), rim_a(j)));
        edges.push_back(make_edge(rim_b(i), rim_b(j)));
        edges.push_back(make_edge(rim_a(i), rim_b(i))); // band vertical
        edges.push_back(make_edge(rim_a(j), rim_b(i))); // band diagonal
    }
    if (capped)
        for (int i = 0; i < k; ++i) {
            edges.push_back(make_edge(0, rim_a(i)));
            edges.push_back(make_edge(1, rim_b(i)));
        }
    return Graph(n, edges, "prism" + std::to_string(k));
}

Graph icosahedron() {
    return prism(5).renamed("icosahedron");
}

Graph barycentric_refinement(const Graph& g, size_t max_simplices) {
    // Enumerate cliques by ascending-order expansion over bit rows: a clique
    // {v0 < v1 < ...} extends by any common neighbor above its maximum.
    std::vector<Bitset> cliques; // clique as vertex bitset
    std::vector<Bitset> frontier;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Bitset s(g.vertex_count());
        s.set(v);
        frontier.push_back(s);
    }
    std::vector<int> frontier_max(frontier.size());
    std::iota(frontier_max.begin(), frontier_max.end(), 0);
    while (!frontier.empty()) {
        for (const auto& c : frontier) {
            cliques.push_back(c);
            if (cliques.size() > max_simplices)
                raise(Errc::size_cap_exceeded, "simplex cap hit in barycentric refinement");
        }
        std::vector<Bitset> next;
        std::vector<int> next_max;
        for (size_t i = 0; i < frontier.size(); ++i) {
            Bitset ext(g.vertex_count());
            bool first = true;
            frontier[i].for_each([&](int v) {
                ext = first ? g.neighbors(v) : ext.intersect(g.neighbors(v));
                first = false;
            });
            ext.for_each([&](int w) {
                if (w > frontier_max[i]) {
                    Bitset c = frontier[i];
                    c.set(w);
                    next.push_back(c);
                    next_max.push_back(w);
                }
            });
        }
        frontier = std::move(next);
        frontier_max = std::move(next_max);
    }
    // Vertices of the refinement are the cliques; adjacency is strict
    // containment. Every subset of a clique is a clique, so the edges of
    // clique c are exactly its proper nonempty subsets.
    std::vector<std::vector<int>> members(cliques.size());
    for (size_t i = 0; i < cliques.size(); ++i) members[i] = cliques[i].to_vector();
    std::vector<size_t> order(cliques.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (members[a].size() != members[b].size())
            return members[a].size() < members[b].size();
        return members[a] < members[b];
    });
    std::map<std::vector<int>, int> index;
    for (size_t r = 0; r < order.size(); ++r) index[members[order[r]]] = static_cast<int>(r);
    std::vector<Edge> edges;
    for (size_t r = 0; r < order.size(); ++r) {
        const auto& verts = members[order[r]];
        size_t s = verts.size();
        for (uint64_t sub = 1; sub + 1 < (uint64_t{1} << s); ++sub) {
            std::vector<int> part;
            for (size_t b = 0; b < s; ++b)
                if ((sub >> b) & 1) part.push_back(verts[b]);
            edges.push_back(make_edge(index.at(part), static_cast<int>(r)));
        }
    }
    return Graph(static_cast<int>(order.size()), edges,
                 g.name().empty() ? "bary" : g.name() + "'");
}

Graph edge_refine(const Graph& g, int x, int y) {
    if (!g.adjacent(x, y)) raise(Errc::not_an_edge, "edge_refine needs an existing edge");
    int z = g.vertex_count();
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != make_edge(x, y)) edges.push_back(e);
    edges.push_back(make_edge(x, z));
    edges.push_back(make_edge(y, z));
    common_neighbors(g, x, y).for_each([&](int w) { edges.push_back(make_edge(w, z)); });
    return Graph(z + 1, edges, g.name());
}

Graph erdos_renyi(int n, double p, uint64_t seed) {
    if (n < 0) raise(Errc::invalid_size, "negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) raise(Errc::invalid_probability, std::to_string(p));
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    // pair order matches graph_from_mask: (0,1), (0,2), (1,2), (0,3), ...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph(n, edges, "er");
}

uint64_t labeled_graph_count(int n) {
    return uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

uint64_t exact_canonical_mask(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) raise(Errc::size_cap_exceeded, "exact canonical form is brute force, n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t mask = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.adjacent(perm[i], perm[j])) mask |= uint64_t{1} << bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? 0 : best;
}

void all_graphs(int n, const std::function<void(const Graph&)>& fn,
                const AllGraphsOptions& opts) {
    if (n < 0 || n > opts.size_cap)
        raise(Errc::size_cap_exceeded,
              "all_graphs capped at n <= " + std::to_string(opts.size_cap));
    std::vector<uint64_t> seen;
    for (uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (opts.connected_only && !is_connected(g)) continue;
        if (opts.dedup_isomorphic) {
            uint64_t canon = exact_canonical_mask(g);
            if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
            seen.push_back(canon);
        }
        fn(g);
    }
}

} // namespace foliage
