#include "foliage/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "foliage/dsu.hpp"

namespace foliage {

VertexColoring VertexColoring::of(std::vector<int> colors) {
    VertexColoring col;
    col.c = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    col.colors = std::move(colors);
    return col;
}

bool VertexColoring::proper(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

namespace {

// Deterministic greedy clique: grow from each vertex in (degree desc, index)
// order, keep the best.
std::vector<int> greedy_clique(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        Bitset cand = g.neighbors(seed);
        while (cand.any()) {
            int pick = -1, pickdeg = -1;
            cand.for_each([&](int v) {
                int d = g.degree(v);
                if (d > pickdeg) {
                    pickdeg = d;
                    pick = v;
                }
            });
            clique.push_back(pick);
            cand = cand.intersect(g.neighbors(pick));
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

// Shared backtracking skeleton for the proper and acyclic solvers. Vertices
// are picked dynamically by saturation (distinct neighbor colors), ties by
// degree then lowest index; colors are tried ascending with new colors
// introduced in increasing order (prunes the c! relabeling orbit).
template <bool Acyclic>
class KColorSearch {
public:
    KColorSearch(const Graph& g, int k) : g_(g), n_(g.vertex_count()), k_(k) {
        colors_.assign(n_, -1);
        sat_mask_.assign(n_, 0);
        if constexpr (Acyclic)
            pair_dsu_.assign(static_cast<size_t>(k_) * k_, RollbackDsu(n_));
    }

    // true if a k-coloring (acyclic when Acyclic) exists; witness in out.
    // budget_hit reports exhaustion of the node allowance instead of an answer.
    bool run(std::vector<int>& out, uint64_t& nodes, uint64_t max_nodes, bool& budget_hit) {
        nodes_ = &nodes;
        max_nodes_ = max_nodes;
        budget_hit_ = false;
        bool found = n_ == 0 ? true : extend(0, -1);
        budget_hit = budget_hit_;
        if (found) out = colors_;
        return found && !budget_hit_;
    }

private:
    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colors_[v] >= 0) continue;
            int sat = std::popcount(sat_mask_[v]);
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    RollbackDsu& dsu(int i, int j) {
        if (i > j) std::swap(i, j);
        return pair_dsu_[static_cast<size_t>(i) * k_ + j];
    }

    // Links v into every {c,j} chain it touches; on a would-be cycle returns
    // false with the partial unions recorded in marks for rollback.
    bool link_chains(int v, int c, std::vector<std::pair<int, size_t>>& marks) {
        bool ok = true;
        g_.neighbors(v).for_each([&](int u) {
            if (!ok || colors_[u] < 0) return;
            int j = colors_[u];
            RollbackDsu& d = dsu(c, j);
            marks.emplace_back(j, d.mark());
            if (!d.unite(v, u)) ok = false;
        });
        return ok;
    }

    bool extend(int depth, int max_used) {
        if (depth == n_) return true;
        int v = pick_vertex();
        int limit = std::min(max_used + 1, k_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if ((sat_mask_[v] >> c) & 1) continue; // a neighbor holds c
            if (*nodes_ >= max_nodes_) {
                budget_hit_ = true;
                return false;
            }
            ++*nodes_;

            std::vector<std::pair<int, size_t>> marks;
            if constexpr (Acyclic) {
                if (!link_chains(v, c, marks)) {
                    for (auto it = marks.rbegin(); it != marks.rend(); ++it)
                        dsu(c, it->first).rollback(it->second);
                    continue;
                }
            }
            colors_[v] = c;
            std::vector<int> touched;
            g_.neighbors(v).for_each([&](int u) {
                if (colors_[u] < 0 && !((sat_mask_[u] >> c) & 1)) {
                    sat_mask_[u] |= uint64_t{1} << c;
                    touched.push_back(u);
                }
            });

            if (extend(depth + 1, std::max(max_used, c))) return true;

            for (int u : touched) sat_mask_[u] &= ~(uint64_t{1} << c);
            colors_[v] = -1;
            if constexpr (Acyclic)
                for (auto it = marks.rbegin(); it != marks.rend(); ++it)
                    dsu(c, it->first).rollback(it->second);
            if (budget_hit_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<int> colors_;
    std::vector<uint64_t> sat_mask_; // bit c set: some colored neighbor uses c
    std::vector<RollbackDsu> pair_dsu_;
    uint64_t* nodes_ = nullptr;
    uint64_t max_nodes_ = 0;
    bool budget_hit_ = false;
};

// Greedy first-fit in DSATUR order; upper-bound witness. With Acyclic, a
// color is also skipped when it would close a two-colored cycle; a fresh
// color always works (its chains through v form stars).
template <bool Acyclic>
std::vector<int> greedy_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> colors(n, -1);
    std::map<std::pair<int, int>, RollbackDsu> chain;
    std::vector<std::set<int>> sat(n);
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colors[u] >= 0) continue;
            int s = static_cast<int>(sat[u].size());
            int d = g.degree(u);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                v = u;
                best_sat = s;
                best_deg = d;
            }
        }
        for (int c = 0;; ++c) {
            if (sat[v].count(c)) continue;
            bool ok = true;
            if constexpr (Acyclic) {
                std::vector<std::pair<std::pair<int, int>, size_t>> marks;
                g.neighbors(v).for_each([&](int u) {
                    if (!ok || colors[u] < 0) return;
                    std::pair<int, int> key = std::minmax(c, colors[u]);
                    auto [it, _] = chain.try_emplace(key, RollbackDsu(n));
                    marks.push_back({key, it->second.mark()});
                    if (!it->second.unite(v, u)) ok = false;
                });
                if (!ok) {
                    for (auto it = marks.rbegin(); it != marks.rend(); ++it)
                        chain.at(it->first).rollback(it->second);
                    continue;
                }
            }
            colors[v] = c;
            g.neighbors(v).for_each([&](int u) {
                if (colors[u] < 0) sat[u].insert(c);
            });
            break;
        }
    }
    return colors;
}

template <bool Acyclic>
ColoringSearch minimize(const Graph& g, int lower_bound, const SearchBudget& budget) {
    ColoringSearch res;
    if (g.vertex_count() == 0) {
        res.witness = VertexColoring::of({});
        return res;
    }
    std::vector<int> greedy = greedy_coloring<Acyclic>(g);
    VertexColoring ub = VertexColoring::of(greedy);
    res.count = ub.c;
    res.witness = ub;

    for (int k = lower_bound; k < ub.c; ++k) {
        KColorSearch<Acyclic> search(g, k);
        std::vector<int> out;
        bool budget_hit = false;
        bool found = search.run(out, res.nodes, budget.max_nodes, budget_hit);
        if (budget_hit) {
            res.exact = false; // greedy witness stands, minimality unproven
            return res;
        }
        if (found) {
            res.witness = VertexColoring::of(out);
            res.count = res.witness.c;
            return res; // every k' < k was exhausted: minimal
        }
    }
    return res; // greedy witness proven minimal
}

void check_solver_size(const Graph& g) {
    if (g.vertex_count() > 64)
        raise(Errc::size_cap_exceeded, "exact coloring solvers cap at 64 vertices");
}

} // namespace

ColoringSearch chromatic_number(const Graph& g, const SearchBudget& budget) {
    check_solver_size(g);
    int lb = g.vertex_count() == 0 ? 0 : std::max<int>(1, greedy_clique(g).size());
    return minimize<false>(g, lb, budget);
}

ColoringSearch acyclic_chromatic_number(const Graph& g, const SearchBudget& budget) {
    check_solver_size(g);
    if (g.vertex_count() == 0) return minimize<true>(g, 0, budget);
    ColoringSearch chr = chromatic_number(g, budget);
    int lb = chr.exact ? chr.count : std::max<int>(1, greedy_clique(g).size());
    ColoringSearch res = minimize<true>(g, lb, budget);
    res.nodes += chr.nodes;
    res.exact = res.exact && chr.exact;
    if (auto check = is_acyclic_coloring(g, res.witness); !check)
        throw std::logic_error("acyclic solver produced an unverifiable witness");
    res.witness.acyclic_verified = true;
    return res;
}

AcyclicCheck is_acyclic_coloring(const Graph& g, const VertexColoring& col) {
    if (!col.proper(g)) return {AcyclicVerdict::improper, {-1, -1}};
    // one union-find per color pair; any rejected union closes a 2-colored cycle
    std::map<std::pair<int, int>, Dsu> chains;
    for (auto [u, v] : g.edges()) {
        std::pair<int, int> key = std::minmax(col.colors[u], col.colors[v]);
        auto [it, _] = chains.try_emplace(key, g.vertex_count());
        if (!it->second.unite(u, v)) return {AcyclicVerdict::cyclic_chain, key};
    }
    return {};
}

std::vector<KempeChain> kempe_chains(const Graph& g, const VertexColoring& col) {
    if (!col.proper(g)) raise(Errc::improper_coloring, "kempe_chains needs a proper coloring");
    std::vector<int> used(col.colors.begin(), col.colors.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<KempeChain> out;
    std::map<std::pair<int, int>, size_t> at;
    for (size_t a = 0; a < used.size(); ++a)
        for (size_t b = a + 1; b < used.size(); ++b) {
            at[{used[a], used[b]}] = out.size();
            out.push_back(KempeChain{{used[a], used[b]}, {}});
        }
    for (auto [u, v] : g.edges()) {
        std::pair<int, int> key = std::minmax(col.colors[u], col.colors[v]);
        out[at.at(key)].edges.edges.push_back(make_edge(u, v));
    }
    for (auto& chain : out) chain.edges = EdgeSet::of(std::move(chain.edges.edges));
    return out;
}

} // namespace foliage
