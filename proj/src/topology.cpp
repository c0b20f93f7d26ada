#include "foliage/topology.hpp"

#include "foliage/generators.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

namespace foliage {

namespace {

Graph without_vertex(const Graph& g, int v) {
    std::vector<int> rest;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) rest.push_back(u);
    return induced_subgraph(g, rest);
}

} // namespace

std::vector<uint64_t> bfs_canonical_key(const Graph& g) {
    int n = g.vertex_count();
    int bits = n * (n - 1) / 2;
    auto pack = [&](const std::vector<int>& label) {
        // label[v] = new index of old vertex v; bits in graph6 column order
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[label[v]] = v;
        std::vector<uint64_t> words((bits + 63) / 64 + 1, 0);
        words[0] = static_cast<uint64_t>(n); // size leads the key
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.adjacent(inv[i], inv[j]))
                    words[1 + bit / 64] |= uint64_t{1} << (bit % 64);
        return words;
    };

    std::vector<uint64_t> best;
    for (int start = 0; start < std::max(n, 1); ++start) {
        if (n == 0) break;
        std::vector<int> label(n, -1);
        int next = 0;
        std::deque<int> queue;
        auto enqueue = [&](int v) {
            label[v] = next++;
            queue.push_back(v);
        };
        enqueue(start);
        auto visit_pending = [&](int u) {
            // neighbors join in (degree desc, index asc) order
            std::vector<int> pend;
            g.neighbors(u).for_each([&](int v) {
                if (label[v] < 0) pend.push_back(v);
            });
            std::stable_sort(pend.begin(), pend.end(), [&](int a, int b) {
                return g.degree(a) > g.degree(b);
            });
            for (int v : pend) enqueue(v);
        };
        while (next < n) {
            if (queue.empty()) {
                // disconnected: continue from the best unlabeled vertex
                int pick = -1, pickdeg = -1;
                for (int v = 0; v < n; ++v)
                    if (label[v] < 0 && g.degree(v) > pickdeg) {
                        pick = v;
                        pickdeg = g.degree(v);
                    }
                enqueue(pick);
            }
            int u = queue.front();
            queue.pop_front();
            visit_pending(u);
        }
        auto words = pack(label);
        if (best.empty() || words < best) best = words;
    }
    if (n == 0) best = {0};
    return best;
}

bool TopologyContext::is_contractible(const Graph& g) {
    if (g.vertex_count() > size_cap_)
        raise(Errc::size_cap_exceeded,
              "contractibility recursion caps at n <= " + std::to_string(size_cap_));
    return contractible_impl(g);
}

bool TopologyContext::contractible_impl(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false; // the empty graph is a sphere, not contractible
    if (n == 1) return true;

    std::vector<uint64_t> key;
    if (memoize_) {
        key = bfs_canonical_key(g);
        std::shared_lock lock(mu_);
        auto it = contractible_.find(key);
        if (it != contractible_.end()) return it->second;
    }

    // low-degree vertices first: smaller unit spheres to recurse on
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    bool result = false;
    for (int v : order) {
        if (!contractible_impl(unit_sphere(g, v))) continue;
        if (contractible_impl(without_vertex(g, v))) {
            result = true;
            break;
        }
    }

    if (memoize_) {
        std::unique_lock lock(mu_);
        contractible_.emplace(std::move(key), result);
    }
    return result;
}

bool TopologyContext::is_sphere(const Graph& g, int d) {
    if (g.vertex_count() > size_cap_)
        raise(Errc::size_cap_exceeded,
              "sphere recursion caps at n <= " + std::to_string(size_cap_));
    return sphere_impl(g, d);
}

bool TopologyContext::sphere_impl(const Graph& g, int d) {
    int n = g.vertex_count();
    if (d < -1) return false;
    if (d == -1) return n == 0;
    if (n == 0) return false;

    std::pair<int, std::vector<uint64_t>> key;
    if (memoize_) {
        key = {d, bfs_canonical_key(g)};
        std::shared_lock lock(mu_);
        auto it = sphere_.find(key);
        if (it != sphere_.end()) return it->second;
    }

    bool result = true;
    for (int v = 0; v < n && result; ++v)
        if (!sphere_impl(unit_sphere(g, v), d - 1)) result = false;
    if (result) {
        result = false;
        for (int v = 0; v < n && !result; ++v)
            if (contractible_impl(without_vertex(g, v))) result = true;
    }

    if (memoize_) {
        std::unique_lock lock(mu_);
        sphere_.emplace(std::move(key), result);
    }
    return result;
}

bool TopologyContext::is_manifold(const Graph& g, int d) {
    if (d == 1) {
        // classical discrete circles: every unit sphere is a two-point set.
        // The strict recursion would reject C3, whose unit spheres are
        // adjacent pairs; every other dimension uses the recursion as is.
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != 2) return false;
        return true;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_sphere(unit_sphere(g, v), d - 1)) return false;
    return true;
}

int TopologyContext::contractible_deletion(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_contractible(without_vertex(g, v))) return v;
    return -1;
}

std::vector<int> TopologyContext::contraction_order(const Graph& g) {
    std::vector<int> order;
    Graph h = g;
    while (h.vertex_count() > 1) {
        std::vector<int> by_degree(h.vertex_count());
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return h.degree(a) < h.degree(b); });
        int picked = -1;
        for (int w : by_degree) {
            if (!is_contractible(unit_sphere(h, w))) continue;
            Graph rest = without_vertex(h, w);
            if (is_contractible(rest)) {
                picked = w;
                h = rest;
                break;
            }
        }
        if (picked < 0) return {}; // not contractible: no order exists
        order.push_back(picked);
    }
    return order;
}

SphereVerdict sphere_verdict(TopologyContext& topo, const Graph& g, int d) {
    SphereVerdict v;
    v.d = d;
    v.verdict = topo.is_sphere(g, d);
    if (!v.verdict || d < 0) return v;
    v.removal = topo.contractible_deletion(g);
    v.contraction = topo.contraction_order(without_vertex(g, v.removal));
    return v;
}

bool replay_sphere_verdict(TopologyContext& topo, const Graph& g, const SphereVerdict& v) {
    if (v.d == -1) return v.verdict == (g.vertex_count() == 0);
    if (!v.verdict) return !topo.is_sphere(g, v.d);
    if (g.vertex_count() == 0 || v.removal < 0) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!topo.is_sphere(unit_sphere(g, u), v.d - 1)) return false;
    Graph h = without_vertex(g, v.removal);
    // walk the contraction: each removed vertex needs a contractible unit
    // sphere, and a single vertex must remain at the end
    for (int w : v.contraction) {
        if (w < 0 || w >= h.vertex_count()) return false;
        if (!topo.is_contractible(unit_sphere(h, w))) return false;
        h = without_vertex(h, w);
    }
    return h.vertex_count() == 1;
}

// --- blow-up -------------------------------------------------------------------

namespace {

Rational full_density(const Graph& g) {
    if (g.vertex_count() < 2) return Rational(0, 1);
    return Rational(g.edge_count(), g.vertex_count() - 1);
}

// edge maximizing |S(x) ∩ S(y)|, ties to the lexicographically first edge
std::pair<Edge, int> best_refinement_edge(const Graph& g) {
    Edge best{-1, -1};
    int best_common = -1;
    for (auto e : g.edges()) {
        int common = common_neighbors(g, e.first, e.second).count();
        if (common > best_common) {
            best_common = common;
            best = e;
        }
    }
    return {best, best_common};
}

} // namespace

BlowupResult arboricity_blowup(const Graph& g, int target, const BlowupOptions& opts) {
    BlowupResult res{g, {}, false, true, std::nullopt};
    Rational goal(target - 1, 1);
    TopologyContext topo(opts.sphere_cap);

    auto push_step = [&](BlowupStep::Kind kind, Edge e, int common) {
        BlowupStep step;
        step.kind = kind;
        step.refined_x = e.first;
        step.refined_y = e.second;
        step.common = common;
        step.n = res.graph.vertex_count();
        step.m = res.graph.edge_count();
        step.density = full_density(res.graph);
        res.trace.push_back(step);
    };
    auto check_manifold = [&](const Graph& h) {
        if (opts.manifold_dim < 0) return;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > opts.sphere_cap) {
                res.manifold_checked = false; // unit sphere too big to verify
                return;
            }
        if (!topo.is_manifold(h, opts.manifold_dim))
            throw std::logic_error("refinement broke the manifold property");
    };

    push_step(BlowupStep::Kind::initial, {-1, -1}, 0);
    check_manifold(res.graph);

    // already dense enough: nothing to do
    if (res.graph.vertex_count() <= 20) {
        Rational w = nash_williams_bound(res.graph);
        if (w.ceil() >= target) {
            res.reached = true;
            res.final_w = w;
            return res;
        }
    }

    int bary_used = 0;
    while (full_density(res.graph) < goal) {
        // caps exhausted: hand the trace back unfinished rather than throwing
        if (static_cast<int>(res.trace.size()) > opts.max_steps ||
            res.graph.vertex_count() > opts.max_vertices)
            return res;
        auto [e, common] = best_refinement_edge(res.graph);
        if (common >= target - 1) {
            res.graph = edge_refine(res.graph, e.first, e.second);
            push_step(BlowupStep::Kind::edge_refine, e, common);
        } else if (bary_used < opts.max_barycentric) {
            res.graph = barycentric_refinement(res.graph);
            ++bary_used;
            push_step(BlowupStep::Kind::barycentric, {-1, -1}, 0);
        } else {
            return res; // no dense edge and the barycentric budget is spent
        }
        check_manifold(res.graph);
    }
    res.reached = true;
    if (res.graph.vertex_count() <= 20) res.final_w = nash_williams_bound(res.graph);
    return res;
}

int min_arboricity_bound(int d) {
    if (d < 1) raise(Errc::invalid_size, "dimension must be >= 1");
    return d + 1;
}

bool manifold_degree_bound_holds(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2 * d) return false;
    return true;
}

} // namespace foliage
