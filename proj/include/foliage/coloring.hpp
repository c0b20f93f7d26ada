#pragma once

#include <cstdint>
#include <vector>

#include "foliage/graph.hpp"

namespace foliage {

/// Proper vertex coloring certificate. `c` is the number of distinct colors
/// actually used. Solver witnesses use colors 0..c-1 densely; Klein-group
/// colorings (module tait) may use sparse values in 0..3.
struct VertexColoring {
    std::vector<int> colors;
    int c = 0;
    bool acyclic_verified = false;

    static VertexColoring of(std::vector<int> colors);
    bool proper(const Graph& g) const;
};

/// All edges whose endpoints use a fixed pair of colors.
struct KempeChain {
    std::pair<int, int> pair; // color pair, first < second
    EdgeSet edges;
};

struct SearchBudget {
    uint64_t max_nodes = 100'000'000; // search nodes before giving up
};

/// Exact solver result. When `exact`, minimality was proven by exhausted
/// search below `count`; otherwise `count` is only the best known upper
/// bound (the budget ran out first).
struct ColoringSearch {
    int count = 0;
    VertexColoring witness;
    bool exact = true;
    uint64_t nodes = 0;
};

/// Minimal proper coloring + witness. Branch and bound in DSATUR order with a
/// greedy clique lower bound; ties break to the lowest vertex index, colors
/// are tried ascending, and new colors are introduced in increasing order.
ColoringSearch chromatic_number(const Graph& g, const SearchBudget& budget = {});

enum class AcyclicVerdict { acyclic, improper, cyclic_chain };

struct AcyclicCheck {
    AcyclicVerdict verdict = AcyclicVerdict::acyclic;
    std::pair<int, int> witness_pair{-1, -1}; // offending color pair, if any
    explicit operator bool() const { return verdict == AcyclicVerdict::acyclic; }
};

/// True iff col is proper and every two-color Kempe chain is a forest.
/// Improper input yields a distinguishable verdict rather than an error.
AcyclicCheck is_acyclic_coloring(const Graph& g, const VertexColoring& col);

/// Minimal acyclic coloring + witness. Backtracking keeps one incremental
/// union-find per color pair, so assigning v to color i is rejected the
/// moment an {i,j} chain through v would close a cycle.
ColoringSearch acyclic_chromatic_number(const Graph& g, const SearchBudget& budget = {});

/// The C(c,2) Kempe chains of a proper coloring, in lexicographic pair order.
/// Their edge sets partition E(g). Throws ImproperColoring.
std::vector<KempeChain> kempe_chains(const Graph& g, const VertexColoring& col);

} // namespace foliage
