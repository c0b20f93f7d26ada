#include "foliage/tait.hpp"

#include <deque>

namespace foliage {

KleinEdgeColoring differentiate(const Graph& g, const VertexColoring& col) {
    for (int v : col.colors)
        if (v < 0 || v > 3)
            raise(Errc::too_many_colors, "Klein encoding needs colors in 0..3");
    if (!col.proper(g))
        raise(Errc::improper_coloring, "differentiate needs a proper coloring");
    KleinEdgeColoring ec;
    for (auto [u, v] : g.edges())
        ec.label[{u, v}] = col.colors[u] ^ col.colors[v]; // nonzero by properness
    return ec;
}

VertexColoring integrate(const Graph& g, const KleinEdgeColoring& ec) {
    if (!is_connected(g)) raise(Errc::disconnected, "integrate needs a connected graph");
    for (auto [u, v] : g.edges())
        if (!ec.label.count({u, v}))
            raise(Errc::not_integrable, "labeling misses an edge");

    // BFS spanning tree from vertex 0; the potential of each vertex is the
    // XOR of labels along its tree path.
    std::vector<int> pot(g.vertex_count(), -1);
    if (g.vertex_count() > 0) {
        pot[0] = 0;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            g.neighbors(u).for_each([&](int v) {
                if (pot[v] < 0) {
                    pot[v] = pot[u] ^ ec.at(make_edge(u, v));
                    queue.push_back(v);
                }
            });
        }
    }
    // zero curl on every fundamental cycle: each non-tree edge must agree
    for (auto [u, v] : g.edges())
        if ((pot[u] ^ pot[v]) != ec.at({u, v}))
            raise(Errc::not_integrable, "a fundamental cycle has nonzero XOR");
    return VertexColoring::of(pot);
}

Graph dual_graph(const Graph& g) {
    auto tris = triangles(g);
    std::map<Edge, std::vector<int>> incident; // edge -> triangles containing it
    for (size_t t = 0; t < tris.size(); ++t) {
        auto [a, b, c] = tris[t];
        incident[{a, b}].push_back(static_cast<int>(t));
        incident[{a, c}].push_back(static_cast<int>(t));
        incident[{b, c}].push_back(static_cast<int>(t));
    }
    for (auto e : g.edges()) {
        auto it = incident.find(e);
        if (it == incident.end() || it->second.size() != 2)
            raise(Errc::not_a_closed_surface,
                  "every edge must lie in exactly two triangles");
    }
    std::vector<Edge> dual_edges;
    for (const auto& [e, ts] : incident) dual_edges.push_back(make_edge(ts[0], ts[1]));
    return Graph(static_cast<int>(tris.size()), dual_edges,
                 g.name().empty() ? "dual" : g.name() + "*");
}

ArboricityResult dual_edge_arboricity_note(const Graph& g) {
    return arboricity(dual_graph(g));
}

} // namespace foliage
