#include "foliage/hms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace foliage {

void OneFactorization::verify() const {
    int expected_rounds = c % 2 == 0 ? c - 1 : c;
    int per_round = c / 2;
    if (static_cast<int>(rounds.size()) != expected_rounds)
        throw std::logic_error("one-factorization round count");
    std::set<std::pair<int, int>> seen;
    for (const auto& round : rounds) {
        if (static_cast<int>(round.size()) != per_round)
            throw std::logic_error("one-factorization round size");
        std::set<int> colors_in_round;
        for (auto [a, b] : round) {
            if (a >= b || a < 0 || b >= c) throw std::logic_error("bad pair");
            if (!colors_in_round.insert(a).second || !colors_in_round.insert(b).second)
                throw std::logic_error("pairs within a round are not disjoint");
            if (!seen.insert({a, b}).second)
                throw std::logic_error("pair scheduled twice");
        }
    }
    if (static_cast<int>(seen.size()) != c * (c - 1) / 2)
        throw std::logic_error("schedule misses a pair");
}

OneFactorization one_factorization(int c) {
    if (c < 2) raise(Errc::invalid_color_count, "one_factorization needs c >= 2");
    // circle method on an even number of players; odd c adds a phantom whose
    // partner sits the round out
    int players = c % 2 == 0 ? c : c + 1;
    int phantom = c % 2 == 0 ? -1 : c;
    OneFactorization fact;
    fact.c = c;
    for (int r = 0; r < players - 1; ++r) {
        std::vector<std::pair<int, int>> round;
        auto add = [&](int a, int b) {
            if (a == phantom || b == phantom) return;
            round.push_back(std::minmax(a, b));
        };
        add(players - 1, r);
        for (int i = 1; i < players / 2; ++i)
            add((r + i) % (players - 1), (r - i + players - 1) % (players - 1));
        std::sort(round.begin(), round.end());
        fact.rounds.push_back(std::move(round));
    }
    fact.verify();
    return fact;
}

ForestPartition bundle_forests(const Graph& g, const VertexColoring& col) {
    if (auto check = is_acyclic_coloring(g, col); !check)
        raise(Errc::not_acyclic, "bundle_forests needs an acyclic coloring");

    // Kempe chains are keyed by the coloring's dense rank of each color value
    // so the schedule runs over 0..c-1.
    std::vector<int> used(col.colors.begin(), col.colors.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::map<int, int> rank;
    for (size_t i = 0; i < used.size(); ++i) rank[used[i]] = static_cast<int>(i);
    int c = static_cast<int>(used.size());

    ForestPartition fp;
    if (c < 2) {
        // at most one color class: no edges to bundle
        fp.parts.assign(c, {});
        fp.verify(g);
        return fp;
    }

    std::map<std::pair<int, int>, std::vector<Edge>> chain_edges;
    for (auto [u, v] : g.edges())
        chain_edges[std::minmax(rank.at(col.colors[u]), rank.at(col.colors[v]))]
            .push_back(make_edge(u, v));

    OneFactorization fact = one_factorization(c);
    for (const auto& round : fact.rounds) {
        std::vector<Edge> part;
        for (auto pair : round) {
            auto it = chain_edges.find(pair);
            if (it != chain_edges.end())
                part.insert(part.end(), it->second.begin(), it->second.end());
        }
        fp.parts.push_back(EdgeSet::of(std::move(part)));
    }
    fp.verify(g); // disjoint chains of a round must union to a forest
    return fp;
}

HmsVerdict verify_refined_hms(const Graph& g, const ColoringSearch& acy,
                              const ArboricityResult& arb) {
    if (!acy.exact)
        raise(Errc::incomplete_report, "refined HMS verification needs an exact acy");
    HmsVerdict verdict;
    verdict.arb = arb.k;
    verdict.acy = acy.count;
    int cap = acy.count == 0 ? 0
                             : (acy.count % 2 == 0 ? acy.count - 1 : acy.count);
    verdict.inequality_pass = verdict.arb <= cap;

    ForestPartition bundle = bundle_forests(g, acy.witness);
    verdict.bundle_parts = static_cast<int>(bundle.parts.size());
    for (const auto& part : bundle.parts)
        if (!part.empty()) ++verdict.bundle_nonempty_parts;
    verdict.bundle_pass = verdict.bundle_parts == bundled_part_count(acy.count);
    return verdict;
}

} // namespace foliage
