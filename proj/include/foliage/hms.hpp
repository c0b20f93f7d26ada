#pragma once

#include <vector>

#include "foliage/coloring.hpp"
#include "foliage/forests.hpp"
#include "foliage/graph.hpp"

namespace foliage {

/// Round-robin schedule of the color pairs of K_c: every unordered pair
/// appears in exactly one round, pairs within a round are disjoint. Even c:
/// c-1 rounds of c/2 pairs. Odd c: c rounds of (c-1)/2 pairs, one color
/// idle per round.
struct OneFactorization {
    int c = 0;
    std::vector<std::vector<std::pair<int, int>>> rounds;

    void verify() const; // throws logic_error on a malformed schedule
};

/// Circle-method schedule: fix color c-1, rotate the rest; odd c runs the
/// even schedule on c+1 colors with the phantom's partner idle. Deterministic.
OneFactorization one_factorization(int c);

/// Bundles the Kempe chains of an acyclic coloring round-by-round into
/// forests: chains with disjoint color pairs are vertex-disjoint, so each
/// round's union stays a forest. Produces exactly c-1 parts for even c and c
/// parts for odd c (c < 2 degenerately: c parts, all empty). Parts partition
/// E. Throws NotAcyclic when the input fails is_acyclic_coloring.
ForestPartition bundle_forests(const Graph& g, const VertexColoring& col);

/// Part count promised by the bundling construction for a c-coloring.
inline int bundled_part_count(int c) {
    if (c < 2) return c;
    return c % 2 == 0 ? c - 1 : c;
}

struct HmsVerdict {
    int arb = 0;
    int acy = 0;
    bool inequality_pass = false; // arb <= acy-1 (acy even), arb <= acy (odd)
    bool bundle_pass = false;     // bundling produced the promised part count
    int bundle_parts = 0;
    int bundle_nonempty_parts = 0;

    bool pass() const { return inequality_pass && bundle_pass; }
};

/// Checks the refined inequality on exact values and re-runs the bundling
/// construction on the provided optimal acyclic witness.
/// Throws IncompleteReport unless both results are exact.
HmsVerdict verify_refined_hms(const Graph& g, const ColoringSearch& acy,
                              const ArboricityResult& arb);

} // namespace foliage
