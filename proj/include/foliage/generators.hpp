#pragma once

#include <cstdint>
#include <functional>

#include "foliage/graph.hpp"
#include "foliage/rng.hpp"

namespace foliage {

/// Cycle C_n, n >= 3.
Graph cycle(int n);

/// Complete graph K_n.
Graph complete(int n);

/// d-dimensional cross polytope: d+1 antipodal pairs, all edges between
/// distinct pairs. 2d+2 vertices, 2d-regular; the minimal discrete d-sphere.
/// Vertices 2i, 2i+1 form pair i.
Graph cross_polytope(int d);

/// Triangulated prismatic 2-sphere on two k-gon rims: the rims are joined by
/// an antiprism band (each square split by one diagonal, consistent
/// orientation) and, for k >= 4, each rim is capped with an apex. k = 3 needs
/// no caps (the rims are already faces) and yields the octahedron.
/// Layout: apexes first when present, then rim A, then rim B.
Graph prism(int k);

/// Icosahedron fixture: 12 vertices, 30 edges, 5-regular 2-sphere.
Graph icosahedron();

/// Graph on the complete subgraphs (simplices) of g; adjacency is strict
/// containment. `max_simplices` caps enumeration (refinements grow fast;
/// failing loudly beats hanging).
Graph barycentric_refinement(const Graph& g, size_t max_simplices = 1'000'000);

/// Removes edge (x, y) and adds a new vertex adjacent to x, y and every
/// common neighbor of x and y. |V| grows by 1, |E| by |S(x)∩S(y)| + 1.
Graph edge_refine(const Graph& g, int x, int y);

/// Erdős–Rényi G(n, p): each pair independently with probability p, driven by
/// SplitMix64(seed). Bit-identical across runs for a fixed seed.
Graph erdos_renyi(int n, double p, uint64_t seed);

// exhaustive enumeration -----------------------------------------------------

/// Number of labeled simple graphs on n vertices: 2^C(n,2).
uint64_t labeled_graph_count(int n);

/// Graph index `mask` interprets bit k as the k-th pair in graph6 column
/// order: (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_mask(int n, uint64_t mask);

struct AllGraphsOptions {
    bool connected_only = false;
    bool dedup_isomorphic = false; // exact canonical form; needs n <= 8
    int size_cap = 7;
};

/// Streams every simple graph on n labeled vertices in increasing mask order.
/// Throws SizeCapExceeded above the cap.
void all_graphs(int n, const std::function<void(const Graph&)>& fn,
                const AllGraphsOptions& opts = {});

/// Exact canonical adjacency mask (minimum over all vertex permutations);
/// brute force, n <= 8 only. Equal masks iff isomorphic.
uint64_t exact_canonical_mask(const Graph& g);

} // namespace foliage
