#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "foliage/bitset.hpp"
#include "foliage/error.hpp"

namespace foliage {

/// Unordered vertex pair, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple graph on vertices 0..n-1 with bit-row adjacency. Immutable
/// after construction: refinement and induction operations return new graphs,
/// so certificate objects always reference a stable host.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string name = {});
    Graph(int n, const std::vector<Edge>& edges, std::string name = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::string& name() const { return name_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }
    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return neighbors(v).count(); }
    int max_degree() const;

    /// Edges sorted lexicographically; the canonical edge order for
    /// certificates and serialization.
    std::vector<Edge> edges() const;

    Graph renamed(std::string name) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) raise(Errc::invalid_vertex, "vertex " + std::to_string(v));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::string name_;
};

/// A set of edges of a host graph (certificate building block).
struct EdgeSet {
    std::vector<Edge> edges; // normalized pairs, sorted, unique

    static EdgeSet of(std::vector<Edge> raw);
    void validate_in(const Graph& g) const; // throws EdgeNotInGraph
    bool empty() const { return edges.empty(); }
    size_t size() const { return edges.size(); }
};

// structural predicates and subgraph induction ------------------------------

/// Induced subgraph on vs; relabeling to 0..|vs|-1 preserves the order of vs'
/// sorted vertex indices.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);
Graph induced_subgraph(const Graph& g, const Bitset& vs);

bool is_forest(const Graph& g);

/// True iff (V(g), es) is acyclic. Throws EdgeNotInGraph for foreign pairs.
bool is_forest_edges(const Graph& g, const EdgeSet& es);

/// Induced subgraph on the open neighborhood N(v); v itself is excluded.
Graph unit_sphere(const Graph& g, int v);

int connected_component_count(const Graph& g);
bool is_connected(const Graph& g); // vacuously true for n <= 1

/// All 3-cliques, each as an ascending vertex triple, lexicographically sorted.
std::vector<std::array<int, 3>> triangles(const Graph& g);

/// Common neighborhood S(x) ∩ S(y).
Bitset common_neighbors(const Graph& g, int x, int y);

} // namespace foliage
