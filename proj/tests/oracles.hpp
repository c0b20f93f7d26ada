#pragma once

// Brute-force reference implementations used only by tests. Each oracle takes
// the most literal route available (full enumeration, direct definition
// checks) and stays independent of the solver paths it validates.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "foliage/coloring.hpp"
#include "foliage/forests.hpp"
#include "foliage/graph.hpp"
#include "foliage/rational.hpp"

namespace oracle {

using foliage::Edge;
using foliage::EdgeSet;
using foliage::Graph;
using foliage::Rational;

// W(G) by recomputing the induced edge count of every subset from scratch.
inline Rational nash_williams(const Graph& g) {
    int n = g.vertex_count();
    Rational best(0, 1);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        if (vs.size() < 2) continue;
        int e = 0;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j])) ++e;
        if (e == 0) continue;
        Rational r(e, static_cast<long long>(vs.size()) - 1);
        if (best < r) best = r;
    }
    return best;
}

// Minimum number of forests partitioning E: backtracking over edges with
// part indices introduced in increasing order, acyclicity via direct forest
// checks on the accumulated edge lists.
inline bool forests_with(const Graph& g, const std::vector<Edge>& edges, size_t at,
                         std::vector<std::vector<Edge>>& parts, int k) {
    if (at == edges.size()) return true;
    int used = 0;
    for (const auto& p : parts)
        if (!p.empty()) ++used;
    for (int p = 0; p < std::min<int>(k, used + 1); ++p) {
        parts[p].push_back(edges[at]);
        if (foliage::is_forest_edges(g, EdgeSet::of(parts[p])) &&
            forests_with(g, edges, at + 1, parts, k))
            return true;
        parts[p].pop_back();
    }
    return false;
}

inline int min_forest_partition(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    auto edges = g.edges();
    for (int k = 1;; ++k) {
        std::vector<std::vector<Edge>> parts(k);
        if (forests_with(g, edges, 0, parts, k)) return k;
    }
}

// Enumerates all assignments of vertices to at most k parts (indices
// introduced in increasing order), each part checked by predicate.
template <class Pred>
inline bool partition_with(const Graph& g, int k, const Pred& part_ok) {
    int n = g.vertex_count();
    std::vector<int> part(n, -1);
    auto valid_prefix = [&](int upto) {
        for (int p = 0; p <= std::min(upto, k - 1); ++p) {
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (part[v] == p) members.push_back(v);
            if (!members.empty() && !part_ok(foliage::induced_subgraph(g, members)))
                return false;
        }
        return true;
    };
    if (n == 0) return true;
    // plain odometer over assignments with the introduce-in-order rule
    std::vector<int> maxused(n + 1, -1);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            if (valid_prefix(k - 1)) return true;
            --v;
            continue;
        }
        int limit = std::min(maxused[v] + 1, k - 1);
        int next = part[v] + 1;
        if (next > limit) {
            part[v] = -1;
            --v;
            continue;
        }
        part[v] = next;
        maxused[v + 1] = std::max(maxused[v], next);
        ++v;
    }
    return false;
}

inline int vertex_arboricity(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (partition_with(g, k, [](const Graph& h) { return foliage::is_forest(h); }))
            return k;
}

inline int vertex_star_arboricity(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (partition_with(g, k, [](const Graph& h) { return foliage::is_star_forest(h); }))
            return k;
}

// All colorings with at most k colors (introduce-in-order), properness and
// chain acyclicity checked from the definitions.
template <class Accept>
inline bool coloring_with(const Graph& g, int k, const Accept& accept) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<int> colors(n, -1);
    std::vector<int> maxused(n + 1, -1);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            if (accept(colors)) return true;
            --v;
            continue;
        }
        int limit = std::min(maxused[v] + 1, k - 1);
        int next = colors[v] + 1;
        if (next > limit) {
            colors[v] = -1;
            --v;
            continue;
        }
        colors[v] = next;
        maxused[v + 1] = std::max(maxused[v], next);
        ++v;
    }
    return false;
}

inline bool proper(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

inline int chromatic(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (coloring_with(g, k, [&](const std::vector<int>& c) { return proper(g, c); }))
            return k;
}

// acyclic check straight from the definition: filter each pair's edges and
// run the forest predicate on the edge subset
inline bool acyclic_by_definition(const Graph& g, const std::vector<int>& colors) {
    if (!proper(g, colors)) return false;
    std::set<int> used(colors.begin(), colors.end());
    for (int i : used)
        for (int j : used) {
            if (i >= j) continue;
            std::vector<Edge> chain;
            for (auto [u, v] : g.edges()) {
                auto cu = colors[u], cv = colors[v];
                if ((cu == i && cv == j) || (cu == j && cv == i))
                    chain.push_back({u, v});
            }
            if (!foliage::is_forest_edges(g, EdgeSet::of(chain))) return false;
        }
    return true;
}

inline int acyclic_chromatic(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (coloring_with(g, k, [&](const std::vector<int>& c) {
                return acyclic_by_definition(g, c);
            }))
            return k;
}

// permutation brute force, n <= 8
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    int n = a.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace oracle
