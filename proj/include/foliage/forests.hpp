#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foliage/coloring.hpp"
#include "foliage/graph.hpp"
#include "foliage/rational.hpp"

namespace foliage {

/// Partition of E(host) into labeled forests; the arboricity certificate.
struct ForestPartition {
    std::vector<EdgeSet> parts;

    /// Disjointness, exact cover of E, and per-part acyclicity.
    /// Throws logic_error on violation (certificates are never emitted
    /// unverified).
    void verify(const Graph& g) const;
};

/// Partition of V(host) into classes each inducing a forest; the ver(G)
/// certificate (parts inducing star forests for sta(G)).
struct VertexForestPartition {
    std::vector<std::vector<int>> parts;

    void verify(const Graph& g, bool stars_required = false) const;
};

/// Exhaustive-search result for the NP-hard vertex invariants.
struct PartitionSearch {
    int count = 0;
    VertexForestPartition witness;
    bool exact = true;
    uint64_t nodes = 0;
};

/// Exact Nash-Williams bound W(G) = max |E_H|/(|V_H|-1) over induced
/// subgraphs with >= 2 vertices; 0 for edgeless inputs. Serial reference:
/// an O(2^n) subset DP over bit masks. Throws SizeCapExceeded for n > cap.
Rational nash_williams_bound(const Graph& g, int subset_cap = 20);

/// Same value, computed by an OpenMP scan that evaluates each subset
/// independently (O(n) per mask). Kept alongside the serial DP for
/// cross-checking and benchmarks.
Rational nash_williams_bound_parallel(const Graph& g, int subset_cap = 20);

struct ArboricityResult {
    int k = 0;
    Rational bound; // exact W(G)
    ForestPartition partition;
};

/// arb(G) = ceil(W(G)) with a constructive certificate: edges are inserted
/// into the first forest that accepts them, with matroid-union augmenting
/// exchanges on failure. Nash-Williams guarantees k forests suffice, so an
/// exhausted exchange search is an internal error, never a result.
ArboricityResult arboricity(const Graph& g, int subset_cap = 20);

/// Minimal number of vertex classes each inducing a forest, with witness.
PartitionSearch vertex_arboricity(const Graph& g, const SearchBudget& budget = {});

/// Minimal number of vertex classes each inducing a star forest (every
/// component a K_{1,t}), with witness.
PartitionSearch vertex_star_arboricity(const Graph& g, const SearchBudget& budget = {});

/// True iff every component of g is a star (no cycles, at most one vertex of
/// degree >= 2 per component).
bool is_star_forest(const Graph& g);

// inequality verification ----------------------------------------------------

/// Exact invariant values of one graph, as consumed by the verifiers.
struct InvariantSummary {
    int chr = 0;
    int acy = 0;
    int arb = 0;
    int ver = 0;
    int sta = 0;
    Rational w;
    bool all_exact = true;
};

struct InequalityVerdict {
    std::string name;
    bool pass = true;
    bool vacuous = false; // inequality not applicable (edgeless graphs)
};

/// The foliage chain on one exact report: ver <= chr <= 2 ver,
/// chr <= 2 arb <= 2 acy, sta/2 <= ver <= sta, ver <= ceil((1+maxdeg)/2).
/// The arb lower bounds are vacuous for edgeless graphs (arb = 0 there).
/// Throws IncompleteReport when any value is budget-capped.
std::vector<InequalityVerdict> verify_foliage(const Graph& g, const InvariantSummary& s);

inline bool all_pass(const std::vector<InequalityVerdict>& v) {
    for (const auto& iv : v)
        if (!iv.pass) return false;
    return true;
}

} // namespace foliage
