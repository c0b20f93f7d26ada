#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "foliage/forests.hpp"
#include "foliage/graph.hpp"
#include "foliage/rational.hpp"

namespace foliage {

/// Canonical-ish adjacency key: degree-refined BFS relabeling from each start
/// vertex, lexicographic minimum of the packed upper-triangle bits. Equal
/// keys imply isomorphic graphs (the key IS an adjacency matrix); isomorphic
/// graphs usually, but not provably, collide — good enough for memoization.
std::vector<uint64_t> bfs_canonical_key(const Graph& g);

/// Recursive sphere/contractibility predicates with a memo table shared
/// across queries. The table takes a shared_mutex: concurrent readers, one
/// writer — callers may share one context across threads, or keep one per
/// thread; both are safe.
class TopologyContext {
public:
    explicit TopologyContext(int size_cap = 12, bool memoize = true)
        : size_cap_(size_cap), memoize_(memoize) {}

    /// 1-point graph: contractible; empty graph: not. Otherwise: some vertex
    /// has a contractible unit sphere and a contractible complement.
    /// Throws SizeCapExceeded above the cap (the recursion only shrinks, so
    /// the entry check bounds every level).
    bool is_contractible(const Graph& g);

    /// d = -1: the empty graph. d >= 0: nonempty, every unit sphere a
    /// (d-1)-sphere, and some vertex removal leaves a contractible graph.
    bool is_sphere(const Graph& g, int d);

    /// Every unit sphere is a (d-1)-sphere. The cap applies to the unit
    /// spheres, not to g itself. d = 1 uses the classical convention —
    /// every unit sphere is a two-point set (2-regularity) — which admits
    /// the triangle; the recursion alone would not.
    bool is_manifold(const Graph& g, int d);

    int size_cap() const { return size_cap_; }

    /// First vertex (ascending) whose deletion leaves a contractible graph,
    /// or -1. The removal half of the sphere recursion.
    int contractible_deletion(const Graph& g);

    /// Greedy contraction order of a contractible graph: at each step the
    /// lowest-degree vertex with a contractible unit sphere whose deletion
    /// stays contractible. Labels refer to the level they are removed at.
    std::vector<int> contraction_order(const Graph& g);

private:
    bool contractible_impl(const Graph& g);
    bool sphere_impl(const Graph& g, int d);

    int size_cap_;
    bool memoize_;
    std::shared_mutex mu_;
    std::map<std::vector<uint64_t>, bool> contractible_;
    std::map<std::pair<int, std::vector<uint64_t>>, bool> sphere_;
};

/// Reproducible sphere certificate: the deletion vertex of the top-level
/// recursion plus the contraction order of what remains. replay_ re-runs the
/// recursion against the stored witnesses.
struct SphereVerdict {
    bool verdict = false;
    int d = -2;
    int removal = -1;            // g minus this vertex is contractible
    std::vector<int> contraction; // order contracting g - removal to a point
};

SphereVerdict sphere_verdict(TopologyContext& topo, const Graph& g, int d);
bool replay_sphere_verdict(TopologyContext& topo, const Graph& g, const SphereVerdict& v);

// --- the arboricity blow-up procedure ----------------------------------------

struct BlowupStep {
    enum class Kind { initial, barycentric, edge_refine };
    Kind kind = Kind::initial;
    int refined_x = -1, refined_y = -1; // for edge refinements
    int common = 0;                     // |S(x) ∩ S(y)| of the refined edge
    int n = 0;
    int m = 0;
    Rational density; // |E| / (|V| - 1) of the whole graph
};

struct BlowupOptions {
    int manifold_dim = -1;     // when >= 0, assert the manifold property per step
    int max_barycentric = 2;   // refinement growth is super-exponential
    int max_steps = 10'000;
    int max_vertices = 4'096;
    int sphere_cap = 12;       // cap for the per-step manifold assertions
};

struct BlowupResult {
    Graph graph;
    std::vector<BlowupStep> trace;
    bool reached = false;           // density target met
    bool manifold_checked = true;   // all steps asserted (false: some skipped by cap)
    std::optional<Rational> final_w; // exact W when the result fits the subset cap
};

/// Grows density toward `target`: refines the edge with the most common
/// neighbors while one with >= target-1 exists, else takes a barycentric
/// refinement; stops when |E|/(|V|-1) >= target-1 (so arboricity >= target
/// once the bound is strict). Throws SizeCapExceeded when the caps run out
/// before the target is reached.
BlowupResult arboricity_blowup(const Graph& g, int target, const BlowupOptions& opts = {});

/// d+1: the least arboricity a d-manifold can have (cross polytopes attain it).
int min_arboricity_bound(int d);

/// Companion checker: every vertex of a d-manifold has degree >= 2d.
bool manifold_degree_bound_holds(const Graph& g, int d);

} // namespace foliage
