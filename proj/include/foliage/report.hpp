#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foliage/coloring.hpp"
#include "foliage/forests.hpp"
#include "foliage/graph.hpp"
#include "foliage/hms.hpp"

namespace foliage {

struct ReportBudget {
    SearchBudget solver;
    int subset_cap = 20; // Nash-Williams enumeration
};

/// Everything the solvers can say about one graph: the five invariants with
/// exactness flags, the exact Nash-Williams bound, witness certificates, and
/// the per-inequality verdicts. Every exact value carries a certificate that
/// was verified before the report is handed out.
struct InvariantReport {
    std::string graph6;
    std::string name;
    int n = 0;
    int m = 0;

    ColoringSearch chr;
    ColoringSearch acy;
    ArboricityResult arb;
    PartitionSearch ver;
    PartitionSearch sta;

    std::optional<ForestPartition> hms_bundle; // bundling of the acy witness
    std::optional<HmsVerdict> hms;             // only on exact values
    std::vector<InequalityVerdict> foliage;    // only on exact values

    bool all_exact() const { return chr.exact && acy.exact && ver.exact && sta.exact; }
    bool all_verdicts_pass() const;
};

/// Runs all five solvers plus both verifiers. Budget exhaustion surfaces as
/// capped flags (and missing verdicts), never as an error.
InvariantReport report(const Graph& g, const ReportBudget& budget = {});

// --- corpus verification -------------------------------------------------------

struct CorpusOptions {
    int n_max = 6;
    int size_cap = 6; // refuse larger sweeps
    bool connected_only = false;
    int jobs = 0; // 0: library default thread count
    ReportBudget budget;
    int max_witnesses = 25; // tightness examples kept in the summary
};

struct CorpusSummary {
    int n_max = 0;
    uint64_t graphs = 0;
    uint64_t violations = 0;
    uint64_t budget_capped = 0;
    std::map<std::string, uint64_t> violations_by_check;
    std::vector<uint64_t> gap_histogram; // index: acy - arb
    uint64_t tight_even_count = 0;       // arb == acy-1 with acy even
    std::vector<std::string> tight_even_witnesses; // graph6, first few
};

/// Runs the per-graph checks on every simple graph on 1..n_max labeled
/// vertices. Whole graphs are farmed out to OpenMP workers; results are
/// reduced in mask order, so the summary does not depend on the job count.
CorpusSummary verify_corpus(const CorpusOptions& opts = {});

/// Same sweep, emitting one CSV report row per graph (mask order) to `out`.
void corpus_csv(std::ostream& out, const CorpusOptions& opts = {});

// --- Erdős–Rényi experiment ------------------------------------------------------

struct ErOptions {
    int n = 8;
    double p = 0.5;
    int trials = 1000;
    uint64_t seed = 1;
    int jobs = 0;
};

struct ErStats {
    int n = 0;
    double p = 0;
    int trials = 0;
    uint64_t seed = 0;
    double analytic_full_ratio = 0; // p*n/2, the expectation of |E|/(n-1)
    double mean_full_ratio = 0;
    double stderr_full_ratio = 0;
    double mean_w = 0;   // mean of the true maximum W(G)
    double mean_arb = 0;
    int w_ge_ratio = 0;  // trials with W >= |E|/(n-1); the max dominates sample-wise
};

ErStats er_experiment(const ErOptions& opts = {});

// --- serialization ----------------------------------------------------------------

enum class EmitFormat { json, dot, csv };

EmitFormat parse_format(const std::string& name); // throws UnsupportedFormat

/// Stable JSON schema (keys sorted, deterministic given the same inputs).
std::string emit_report(const InvariantReport& r, EmitFormat format);
std::string csv_report_header();

std::string emit_summary_json(const CorpusSummary& s);
std::string emit_er_json(const ErStats& s);

std::string coloring_json(const VertexColoring& col);
std::string forest_partition_json(const ForestPartition& fp);

} // namespace foliage
