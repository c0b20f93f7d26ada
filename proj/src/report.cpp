#include "foliage/report.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "foliage/generators.hpp"
#include "foliage/graph_io.hpp"

namespace foliage {

using nlohmann::json;

bool InvariantReport::all_verdicts_pass() const {
    if (!hms || !hms->pass()) return false;
    return all_pass(foliage);
}

InvariantReport report(const Graph& g, const ReportBudget& budget) {
    InvariantReport r;
    r.graph6 = emit_graph6(g);
    r.name = g.name();
    r.n = g.vertex_count();
    r.m = g.edge_count();

    r.chr = chromatic_number(g, budget.solver);
    r.acy = acyclic_chromatic_number(g, budget.solver);
    r.arb = arboricity(g, budget.subset_cap);
    r.ver = vertex_arboricity(g, budget.solver);
    r.sta = vertex_star_arboricity(g, budget.solver);

    if (!r.chr.witness.proper(g))
        throw std::logic_error("chromatic witness failed verification");
    r.ver.witness.verify(g, false);
    r.sta.witness.verify(g, true);

    if (r.acy.exact) {
        r.hms_bundle = bundle_forests(g, r.acy.witness);
        r.hms = verify_refined_hms(g, r.acy, r.arb);
    }
    if (r.all_exact()) {
        InvariantSummary s{r.chr.count, r.acy.count, r.arb.k,
                           r.ver.count, r.sta.count, r.arb.bound, true};
        r.foliage = verify_foliage(g, s);
    }
    return r;
}

// --- corpus ------------------------------------------------------------------

namespace {

struct GraphCheck {
    bool capped = false;
    bool hms_ok = true;
    bool foliage_ok = true;
    std::vector<std::string> failed; // names of failed checks
    int gap = 0;                     // acy - arb
    bool tight_even = false;
};

GraphCheck check_one(const Graph& g, const ReportBudget& budget) {
    GraphCheck out;
    InvariantReport r = report(g, budget);
    if (!r.all_exact()) {
        out.capped = true;
        return out;
    }
    out.gap = r.acy.count - r.arb.k;
    out.tight_even = r.acy.count % 2 == 0 && r.arb.k == r.acy.count - 1;
    if (!r.hms->inequality_pass) out.failed.push_back("hms-inequality");
    if (!r.hms->bundle_pass) out.failed.push_back("hms-bundle-count");
    out.hms_ok = r.hms->pass();
    for (const auto& verdict : r.foliage)
        if (!verdict.pass) out.failed.push_back(verdict.name);
    out.foliage_ok = all_pass(r.foliage);
    return out;
}

} // namespace

CorpusSummary verify_corpus(const CorpusOptions& opts) {
    if (opts.n_max > opts.size_cap)
        raise(Errc::size_cap_exceeded,
              "corpus sweep caps at n <= " + std::to_string(opts.size_cap));
    CorpusSummary sum;
    sum.n_max = opts.n_max;
    for (int n = 1; n <= opts.n_max; ++n) {
        const int64_t total = static_cast<int64_t>(labeled_graph_count(n));
        std::vector<GraphCheck> results(total);
#ifdef _OPENMP
        int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs)
#endif
        for (int64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, static_cast<uint64_t>(mask));
            if (opts.connected_only && !is_connected(g)) continue;
            results[mask] = check_one(g, opts.budget);
        }
        // sequential reduction in mask order keeps the summary deterministic
        for (int64_t mask = 0; mask < total; ++mask) {
            const GraphCheck& c = results[mask];
            if (opts.connected_only &&
                !is_connected(graph_from_mask(n, static_cast<uint64_t>(mask))))
                continue;
            ++sum.graphs;
            if (c.capped) {
                ++sum.budget_capped;
                continue;
            }
            if (!c.failed.empty()) {
                ++sum.violations;
                for (const auto& name : c.failed) ++sum.violations_by_check[name];
            }
            if (c.gap >= 0) {
                if (sum.gap_histogram.size() <= static_cast<size_t>(c.gap))
                    sum.gap_histogram.resize(c.gap + 1, 0);
                ++sum.gap_histogram[c.gap];
            }
            if (c.tight_even) {
                ++sum.tight_even_count;
                if (static_cast<int>(sum.tight_even_witnesses.size()) < opts.max_witnesses)
                    sum.tight_even_witnesses.push_back(
                        emit_graph6(graph_from_mask(n, static_cast<uint64_t>(mask))));
            }
        }
    }
    return sum;
}

void corpus_csv(std::ostream& out, const CorpusOptions& opts) {
    if (opts.n_max > opts.size_cap)
        raise(Errc::size_cap_exceeded,
              "corpus sweep caps at n <= " + std::to_string(opts.size_cap));
    out << csv_report_header();
    for (int n = 1; n <= opts.n_max; ++n) {
        const int64_t total = static_cast<int64_t>(labeled_graph_count(n));
        std::vector<std::string> rows(total);
#ifdef _OPENMP
        int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs)
#endif
        for (int64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, static_cast<uint64_t>(mask));
            if (opts.connected_only && !is_connected(g)) continue;
            rows[mask] = emit_report(report(g, opts.budget), EmitFormat::csv);
        }
        for (const auto& row : rows) out << row;
    }
}

// --- Erdős–Rényi -----------------------------------------------------------------

ErStats er_experiment(const ErOptions& opts) {
    if (opts.n < 2) raise(Errc::invalid_size, "er_experiment needs n >= 2");
    if (!(opts.p >= 0.0 && opts.p <= 1.0))
        raise(Errc::invalid_probability, std::to_string(opts.p));
    if (opts.trials < 1) raise(Errc::invalid_size, "trials must be >= 1");

    ErStats stats;
    stats.n = opts.n;
    stats.p = opts.p;
    stats.trials = opts.trials;
    stats.seed = opts.seed;
    stats.analytic_full_ratio = opts.p * opts.n / 2.0;

    std::vector<double> ratio(opts.trials), wval(opts.trials), arbs(opts.trials);
    std::vector<char> dominated(opts.trials);
#ifdef _OPENMP
    int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (int t = 0; t < opts.trials; ++t) {
        // one independent stream per trial: results identical for any job count
        uint64_t trial_seed = SplitMix64(opts.seed).stream(static_cast<uint64_t>(t)).next();
        Graph g = erdos_renyi(opts.n, opts.p, trial_seed);
        ratio[t] = static_cast<double>(g.edge_count()) / (opts.n - 1);
        ArboricityResult a = arboricity(g);
        wval[t] = a.bound.to_double();
        arbs[t] = a.k;
        dominated[t] = Rational(g.edge_count(), opts.n - 1) <= a.bound;
    }

    double sum = 0, sum2 = 0, wsum = 0, asum = 0;
    for (int t = 0; t < opts.trials; ++t) {
        sum += ratio[t];
        sum2 += ratio[t] * ratio[t];
        wsum += wval[t];
        asum += arbs[t];
        stats.w_ge_ratio += dominated[t] ? 1 : 0;
    }
    stats.mean_full_ratio = sum / opts.trials;
    stats.mean_w = wsum / opts.trials;
    stats.mean_arb = asum / opts.trials;
    double var = opts.trials > 1
                     ? (sum2 - sum * sum / opts.trials) / (opts.trials - 1)
                     : 0.0;
    stats.stderr_full_ratio = std::sqrt(std::max(var, 0.0) / opts.trials);
    return stats;
}

// --- serialization ------------------------------------------------------------------

EmitFormat parse_format(const std::string& name) {
    if (name == "json") return EmitFormat::json;
    if (name == "dot") return EmitFormat::dot;
    if (name == "csv") return EmitFormat::csv;
    raise(Errc::unsupported_format, name);
}

namespace {

json coloring_to_json(const VertexColoring& col) {
    return json{{"colors", col.colors}, {"c", col.c}, {"acyclic", col.acyclic_verified}};
}

json edgeset_to_json(const EdgeSet& es) {
    json arr = json::array();
    for (auto [u, v] : es.edges) arr.push_back(json::array({u, v}));
    return arr;
}

json partition_to_json(const ForestPartition& fp) {
    json arr = json::array();
    for (size_t p = 0; p < fp.parts.size(); ++p)
        arr.push_back(json{{"part", p}, {"edges", edgeset_to_json(fp.parts[p])}});
    return arr;
}

json vertex_partition_to_json(const VertexForestPartition& vp) {
    json arr = json::array();
    for (size_t p = 0; p < vp.parts.size(); ++p)
        arr.push_back(json{{"part", p}, {"vertices", vp.parts[p]}});
    return arr;
}

json rational_to_json(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}};
}

json verdicts_to_json(const std::vector<InequalityVerdict>& verdicts) {
    json arr = json::array();
    for (const auto& v : verdicts)
        arr.push_back(json{{"name", v.name}, {"pass", v.pass}, {"vacuous", v.vacuous}});
    return arr;
}

json report_to_json(const InvariantReport& r) {
    json j;
    j["graph"] = {{"graph6", r.graph6}, {"name", r.name}, {"n", r.n}, {"m", r.m}};
    j["invariants"] = {
        {"chr", {{"value", r.chr.count}, {"exact", r.chr.exact}}},
        {"acy", {{"value", r.acy.count}, {"exact", r.acy.exact}}},
        {"arb", {{"value", r.arb.k}, {"exact", true}}},
        {"ver", {{"value", r.ver.count}, {"exact", r.ver.exact}}},
        {"sta", {{"value", r.sta.count}, {"exact", r.sta.exact}}},
        {"nash_williams", rational_to_json(r.arb.bound)},
    };
    j["certificates"] = {
        {"chr_coloring", coloring_to_json(r.chr.witness)},
        {"acy_coloring", coloring_to_json(r.acy.witness)},
        {"arb_partition", partition_to_json(r.arb.partition)},
        {"ver_partition", vertex_partition_to_json(r.ver.witness)},
        {"sta_partition", vertex_partition_to_json(r.sta.witness)},
    };
    if (r.hms_bundle) j["certificates"]["hms_bundle"] = partition_to_json(*r.hms_bundle);
    if (r.hms)
        j["hms"] = {{"arb", r.hms->arb},
                    {"acy", r.hms->acy},
                    {"inequality_pass", r.hms->inequality_pass},
                    {"bundle_pass", r.hms->bundle_pass},
                    {"bundle_parts", r.hms->bundle_parts},
                    {"bundle_nonempty_parts", r.hms->bundle_nonempty_parts}};
    j["verdicts"] = verdicts_to_json(r.foliage);
    j["all_pass"] = r.all_exact() && r.all_verdicts_pass();
    return j;
}

} // namespace

std::string coloring_json(const VertexColoring& col) {
    return coloring_to_json(col).dump();
}

std::string forest_partition_json(const ForestPartition& fp) {
    return partition_to_json(fp).dump();
}

std::string emit_report(const InvariantReport& r, EmitFormat format) {
    switch (format) {
    case EmitFormat::json:
        return report_to_json(r).dump(2) + "\n";
    case EmitFormat::dot: {
        Graph g = parse_graph6(r.graph6, r.name);
        std::vector<std::vector<Edge>> classes;
        for (const auto& part : r.arb.partition.parts) classes.push_back(part.edges);
        return emit_dot(g, &r.acy.witness.colors, &classes);
    }
    case EmitFormat::csv: {
        std::string row = r.graph6;
        auto add = [&](const std::string& s) { row += "," + s; };
        add(std::to_string(r.n));
        add(std::to_string(r.m));
        add(std::to_string(r.chr.count));
        add(std::to_string(r.acy.count));
        add(std::to_string(r.arb.k));
        add(std::to_string(r.ver.count));
        add(std::to_string(r.sta.count));
        add(r.arb.bound.str());
        add(r.all_exact() ? "1" : "0");
        add(r.all_exact() && r.all_verdicts_pass() ? "1" : "0");
        return row + "\n";
    }
    }
    raise(Errc::unsupported_format, "emit_report");
}

std::string csv_report_header() {
    return "graph6,n,m,chr,acy,arb,ver,sta,W,exact,all_pass\n";
}

std::string emit_summary_json(const CorpusSummary& s) {
    json j;
    j["n_max"] = s.n_max;
    j["graphs"] = s.graphs;
    j["violations"] = s.violations;
    j["budget_capped"] = s.budget_capped;
    j["violations_by_check"] = s.violations_by_check;
    j["gap_histogram"] = s.gap_histogram;
    j["tight_even_count"] = s.tight_even_count;
    j["tight_even_witnesses"] = s.tight_even_witnesses;
    return j.dump(2) + "\n";
}

std::string emit_er_json(const ErStats& s) {
    json j;
    j["n"] = s.n;
    j["p"] = s.p;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["analytic_full_ratio"] = s.analytic_full_ratio;
    j["mean_full_ratio"] = s.mean_full_ratio;
    j["stderr_full_ratio"] = s.stderr_full_ratio;
    j["mean_w"] = s.mean_w;
    j["mean_arb"] = s.mean_arb;
    j["w_ge_ratio"] = s.w_ge_ratio;
    // the analytic value tracks the full-graph ratio, not E[W]: W is a max
    // over subgraphs, so mean_w may sit strictly above it
    j["w_gap"] = s.mean_w - s.mean_full_ratio;
    return j.dump(2) + "\n";
}

} // namespace foliage
