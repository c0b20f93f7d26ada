#include "foliage/graph.hpp"

#include <algorithm>

#include "foliage/dsu.hpp"

namespace foliage {

Graph::Graph(int n, std::string name) : n_(n), m_(0), adj_(), name_(std::move(name)) {
    if (n < 0) raise(Errc::invalid_size, "negative vertex count");
    adj_.assign(n_, Bitset(n_));
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
    : Graph(n, std::move(name)) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            raise(Errc::invalid_vertex, "edge endpoint out of range");
        if (u == v) raise(Errc::not_an_edge, "self-loop rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    // Euler handshake: 2m = sum of degrees; checked on every construction.
    long long degsum = 0;
    for (int v = 0; v < n_; ++v) degsum += adj_[v].count();
    if (degsum % 2 != 0) throw std::logic_error("handshake violated");
    m_ = static_cast<int>(degsum / 2);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].count());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

EdgeSet EdgeSet::of(std::vector<Edge> raw) {
    for (auto& e : raw) e = make_edge(e.first, e.second);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return EdgeSet{std::move(raw)};
}

void EdgeSet::validate_in(const Graph& g) const {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
            raise(Errc::edge_not_in_graph,
                  "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> label(g.vertex_count(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            raise(Errc::invalid_vertex, "subset vertex out of range");
        label[sorted[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int u : sorted)
        g.neighbors(u).for_each([&](int v) {
            if (u < v && label[v] >= 0) edges.emplace_back(label[u], label[v]);
        });
    return Graph(static_cast<int>(sorted.size()), edges);
}

Graph induced_subgraph(const Graph& g, const Bitset& vs) {
    return induced_subgraph(g, vs.to_vector());
}

bool is_forest(const Graph& g) {
    Dsu dsu(g.vertex_count());
    for (auto [u, v] : g.edges())
        if (!dsu.unite(u, v)) return false;
    return true;
}

bool is_forest_edges(const Graph& g, const EdgeSet& es) {
    es.validate_in(g);
    Dsu dsu(g.vertex_count());
    for (auto [u, v] : es.edges)
        if (!dsu.unite(u, v)) return false;
    return true;
}

Graph unit_sphere(const Graph& g, int v) {
    return induced_subgraph(g, g.neighbors(v));
}

int connected_component_count(const Graph& g) {
    Dsu dsu(g.vertex_count());
    int comps = g.vertex_count();
    for (auto [u, v] : g.edges())
        if (dsu.unite(u, v)) --comps;
    return comps;
}

bool is_connected(const Graph& g) {
    return connected_component_count(g) <= 1;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edges()) {
        Bitset common = g.neighbors(u).intersect(g.neighbors(v));
        common.for_each([&](int w) {
            if (w > v) out.push_back({u, v, w});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

Bitset common_neighbors(const Graph& g, int x, int y) {
    return g.neighbors(x).intersect(g.neighbors(y));
}

} // namespace foliage
