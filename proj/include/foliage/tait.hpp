#pragma once

#include <map>

#include "foliage/coloring.hpp"
#include "foliage/forests.hpp"
#include "foliage/graph.hpp"

namespace foliage {

/// Edge labeling by nonzero Klein 4-group elements {1, 2, 3} (2-bit vectors,
/// XOR as the group law). On a triangulation every triangle carries the three
/// distinct labels, which XOR to 0 — the zero-curl condition.
struct KleinEdgeColoring {
    std::map<Edge, int> label;

    int at(Edge e) const { return label.at(e); }
};

/// Derivative of a <= 4-coloring: label(u,v) = col(u) XOR col(v), reading
/// colors 0..3 as Klein elements. Proper colorings yield nonzero labels.
/// Throws TooManyColors (> 4 colors) or ImproperColoring.
KleinEdgeColoring differentiate(const Graph& g, const VertexColoring& col);

/// Integrates an edge labeling back to a vertex potential: vertex 0 gets 0,
/// every other vertex the XOR of labels along any path from 0. Defined when
/// the labeling has zero curl, checked on the fundamental cycles of a
/// spanning tree. Throws Disconnected or NotIntegrable.
VertexColoring integrate(const Graph& g, const KleinEdgeColoring& ec);

/// Dual of a closed triangulation: one vertex per triangle, adjacency =
/// shared edge. Requires every edge to lie in exactly two triangles (all
/// 2-spheres qualify, as does K4). Throws NotAClosedSurface.
Graph dual_graph(const Graph& g);

/// arb(G*) of the dual; 2 for every closed triangulation since G* is
/// 3-regular.
ArboricityResult dual_edge_arboricity_note(const Graph& g);

} // namespace foliage
