// foliage: exact graph-invariant reports, decomposition certificates, and
// corpus verification from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "foliage/config.hpp"
#include "foliage/generators.hpp"
#include "foliage/graph_io.hpp"
#include "foliage/report.hpp"
#include "foliage/tait.hpp"
#include "foliage/topology.hpp"

using namespace foliage;

namespace {

Graph load_graph(const std::string& path, const std::string& format) {
    if (path == "-") return read_graph(std::cin, format);
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, "cannot open " + path);
    return read_graph(in, format, path);
}

void emit_graph(const Graph& g, const std::string& format) {
    if (format == "g6")
        std::cout << emit_graph6(g) << "\n";
    else if (format == "edges")
        std::cout << emit_edge_list(g);
    else if (format == "dot")
        std::cout << emit_dot(g);
    else
        raise(Errc::unsupported_format, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic / arboricity invariants with certificates"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string config_path = "foliage.toml";
    app.add_option("--config", config_path, "configuration file (flat TOML)");
    // the config file must load before flag parsing so flags override it;
    // pre-scan argv for --config since CLI11 has not run yet
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    ToolConfig cfg = load_config(config_path);

    uint64_t budget_nodes = cfg.budget_nodes;
    uint64_t seed = cfg.seed;
    int jobs = cfg.jobs;
    int cap_n = cfg.cap_n;
    std::string format = cfg.format;
    std::string input_format = "auto";
    app.add_option("--budget-nodes", budget_nodes, "search-node cap per solver call");
    app.add_option("--seed", seed, "PRNG seed");
    app.add_option("--jobs", jobs, "worker threads (0 = all cores)");
    app.add_option("--cap-n", cap_n, "corpus vertex cap");
    app.add_option("--format", format, "output format: json | dot | csv");
    app.add_option("--input-format", input_format, "graph input format: auto | g6 | edges");

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "construct fixture families");
    std::string family;
    std::vector<std::string> params;
    std::string gen_format = "g6";
    gen->add_option("family", family,
                    "cycle | complete | cross-polytope | prism | icosahedron | er | all | "
                    "barycentric | edge-refine")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--gen-format", gen_format, "g6 | edges | dot");

    // report ----------------------------------------------------------------
    auto* rep = app.add_subcommand("report", "full invariant report for one graph");
    std::string rep_input = "-";
    rep->add_option("graph", rep_input, "input file or - for stdin");

    // hms -------------------------------------------------------------------
    auto* hms_cmd =
        app.add_subcommand("hms", "acyclic coloring, factorization rounds, bundled forests");
    std::string hms_input = "-";
    hms_cmd->add_option("graph", hms_input, "input file or - for stdin");

    // tait ------------------------------------------------------------------
    auto* tait_cmd =
        app.add_subcommand("tait", "Klein edge coloring round trip on a triangulation");
    std::string tait_input = "-";
    tait_cmd->add_option("graph", tait_input, "input file or - for stdin");

    // topo ------------------------------------------------------------------
    auto* topo_cmd = app.add_subcommand("topo", "sphere / manifold predicates and the blow-up");
    std::string topo_input = "-";
    int sphere_d = -2, manifold_d = -2, blowup_target = 0, blowup_dim = -1;
    topo_cmd->add_option("graph", topo_input, "input file or - for stdin");
    topo_cmd->add_option("--sphere", sphere_d, "check is_sphere(g, d)");
    topo_cmd->add_option("--manifold", manifold_d, "check is_manifold(g, d)");
    topo_cmd->add_option("--blowup", blowup_target,
                         "run the density blow-up toward this arboricity");
    topo_cmd->add_option("--dim", blowup_dim, "manifold dimension asserted during the blow-up");

    // corpus ------------------------------------------------------------------
    auto* corpus_cmd =
        app.add_subcommand("corpus", "verify every inequality on all graphs up to --cap-n");
    bool corpus_connected = false;
    corpus_cmd->add_flag("--connected-only", corpus_connected, "restrict to connected graphs");

    // er ---------------------------------------------------------------------
    auto* er_cmd = app.add_subcommand("er", "Monte Carlo Nash-Williams experiment on G(n,p)");
    int er_n = 8;
    double er_p = 0.5;
    int er_trials = 1000;
    er_cmd->add_option("n", er_n, "vertices")->required();
    er_cmd->add_option("p", er_p, "edge probability")->required();
    er_cmd->add_option("--trials", er_trials, "sample count");

    CLI11_PARSE(app, argc, argv);

    try {
        ReportBudget budget;
        budget.solver.max_nodes = budget_nodes;

        if (*gen) {
            auto need = [&](size_t k) {
                if (params.size() < k) raise(Errc::invalid_size, "missing parameter");
                return std::stoi(params[k - 1]);
            };
            if (family == "cycle")
                emit_graph(cycle(need(1)), gen_format);
            else if (family == "complete")
                emit_graph(complete(need(1)), gen_format);
            else if (family == "cross-polytope")
                emit_graph(cross_polytope(need(1)), gen_format);
            else if (family == "prism")
                emit_graph(prism(need(1)), gen_format);
            else if (family == "icosahedron")
                emit_graph(icosahedron(), gen_format);
            else if (family == "er") {
                if (params.size() < 2) raise(Errc::invalid_size, "er needs n and p");
                emit_graph(erdos_renyi(std::stoi(params[0]), std::stod(params[1]), seed),
                           gen_format);
            } else if (family == "all") {
                all_graphs(need(1), [&](const Graph& g) { emit_graph(g, gen_format); });
            } else if (family == "barycentric") {
                if (params.empty()) raise(Errc::invalid_size, "barycentric needs a graph file");
                emit_graph(barycentric_refinement(load_graph(params[0], input_format)),
                           gen_format);
            } else if (family == "edge-refine") {
                if (params.size() < 3)
                    raise(Errc::invalid_size, "edge-refine needs a graph file and an edge");
                Graph g = load_graph(params[0], input_format);
                emit_graph(edge_refine(g, std::stoi(params[1]), std::stoi(params[2])),
                           gen_format);
            } else {
                raise(Errc::unsupported_format, "unknown family " + family);
            }
            return 0;
        }

        if (*rep) {
            Graph g = load_graph(rep_input, input_format);
            InvariantReport r = report(g, budget);
            if (format == "csv") std::cout << csv_report_header();
            std::cout << emit_report(r, parse_format(format));
            if (!r.all_exact()) return 2;
            return r.all_verdicts_pass() ? 0 : 1;
        }

        if (*hms_cmd) {
            Graph g = load_graph(hms_input, input_format);
            auto acy = acyclic_chromatic_number(g, budget.solver);
            ForestPartition bundle = bundle_forests(g, acy.witness);
            int nonempty = 0;
            for (const auto& part : bundle.parts)
                if (!part.empty()) ++nonempty;
            std::cout << "{\n  \"acy_coloring\": " << coloring_json(acy.witness) << ",\n"
                      << "  \"exact\": " << (acy.exact ? "true" : "false") << ",\n";
            if (acy.witness.c >= 2) {
                OneFactorization fact = one_factorization(acy.witness.c);
                std::cout << "  \"rounds\": [";
                for (size_t r = 0; r < fact.rounds.size(); ++r) {
                    std::cout << (r ? ", " : "") << "[";
                    for (size_t i = 0; i < fact.rounds[r].size(); ++i)
                        std::cout << (i ? ", " : "") << "[" << fact.rounds[r][i].first << ", "
                                  << fact.rounds[r][i].second << "]";
                    std::cout << "]";
                }
                std::cout << "],\n";
            }
            std::cout << "  \"forests\": " << forest_partition_json(bundle) << ",\n"
                      << "  \"parts\": " << bundle.parts.size()
                      << ",\n  \"nonempty_parts\": " << nonempty << "\n}\n";
            return acy.exact ? 0 : 2;
        }

        if (*tait_cmd) {
            Graph g = load_graph(tait_input, input_format);
            auto chr = chromatic_number(g, budget.solver);
            if (chr.count > 4) raise(Errc::too_many_colors, "graph is not 4-colorable");
            auto ec = differentiate(g, chr.witness);
            auto back = integrate(g, ec);
            bool roundtrip = differentiate(g, back).label == ec.label;
            auto dual = dual_edge_arboricity_note(g);
            TopologyContext topo;
            bool sphere = g.vertex_count() <= topo.size_cap() && topo.is_sphere(g, 2);
            std::cout << "{\n  \"coloring\": " << coloring_json(chr.witness) << ",\n"
                      << "  \"roundtrip\": " << (roundtrip ? "true" : "false") << ",\n"
                      << "  \"is_2_sphere\": " << (sphere ? "true" : "false") << ",\n"
                      << "  \"dual_vertices\": " << dual_graph(g).vertex_count() << ",\n"
                      << "  \"dual_arboricity\": " << dual.k << "\n}\n";
            return roundtrip ? 0 : 1;
        }

        if (*topo_cmd) {
            Graph g = load_graph(topo_input, input_format);
            TopologyContext topo;
            if (sphere_d >= -1) {
                SphereVerdict v = sphere_verdict(topo, g, sphere_d);
                std::cout << "{\"is_sphere\": " << (v.verdict ? "true" : "false")
                          << ", \"d\": " << sphere_d;
                if (v.verdict && sphere_d >= 0) {
                    std::cout << ", \"removal\": " << v.removal << ", \"contraction\": [";
                    for (size_t i = 0; i < v.contraction.size(); ++i)
                        std::cout << (i ? ", " : "") << v.contraction[i];
                    std::cout << "]";
                }
                std::cout << "}\n";
                return 0;
            }
            if (manifold_d >= 0) {
                bool ok = topo.is_manifold(g, manifold_d);
                std::cout << "{\"is_manifold\": " << (ok ? "true" : "false")
                          << ", \"d\": " << manifold_d << "}\n";
                return 0;
            }
            if (blowup_target > 0) {
                BlowupOptions opts;
                opts.manifold_dim = blowup_dim;
                BlowupResult res = arboricity_blowup(g, blowup_target, opts);
                std::cout << "{\n  \"reached\": " << (res.reached ? "true" : "false")
                          << ",\n  \"manifold_checked\": "
                          << (res.manifold_checked ? "true" : "false") << ",\n  \"trace\": [";
                for (size_t i = 0; i < res.trace.size(); ++i) {
                    const auto& s = res.trace[i];
                    std::cout << (i ? ",\n    " : "\n    ") << "{\"n\": " << s.n
                              << ", \"m\": " << s.m << ", \"density\": \"" << s.density.str()
                              << "\"}";
                }
                std::cout << "\n  ]";
                if (res.final_w)
                    std::cout << ",\n  \"final_w\": \"" << res.final_w->str() << "\"";
                std::cout << "\n}\n";
                return res.reached ? 0 : 2;
            }
            raise(Errc::unsupported_format, "topo needs --sphere, --manifold, or --blowup");
        }

        if (*corpus_cmd) {
            CorpusOptions opts;
            opts.n_max = cap_n;
            opts.connected_only = corpus_connected;
            opts.jobs = jobs;
            opts.budget = budget;
            if (format == "csv") {
                corpus_csv(std::cout, opts); // one report row per graph
                return 0;
            }
            CorpusSummary sum = verify_corpus(opts);
            std::cout << emit_summary_json(sum);
            if (sum.violations > 0) return 1; // a falsified inequality breaks the build
            if (sum.budget_capped > 0) return 2;
            return 0;
        }

        if (*er_cmd) {
            ErOptions opts;
            opts.n = er_n;
            opts.p = er_p;
            opts.trials = er_trials;
            opts.seed = seed;
            opts.jobs = jobs;
            std::cout << emit_er_json(er_experiment(opts));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
