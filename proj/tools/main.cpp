// Command-line front end: graph generation and export, classical centrality
// measures, QUBO construction/export, ground-state solving, and the tau-sweep
// node hierarchy.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecq/centrality.hpp"
#include "ecq/error.hpp"
#include "ecq/graph.hpp"
#include "ecq/graph_io.hpp"
#include "ecq/qubo.hpp"
#include "ecq/qubo_file.hpp"
#include "ecq/ranking.hpp"
#include "ecq/report.hpp"
#include "ecq/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitStrictWarning = 4;

struct CommonOpts {
    std::string graph_source;
    bool json = false;
    bool strict = false;
};

struct SolverOpts {
    std::string solver = "auto";
    std::uint64_t reads = 1000;
    std::uint64_t sweeps = 1000;
    std::uint64_t seed = 1;
};

ecq::SolverConfig make_solver_config(const SolverOpts& o) {
    ecq::SolverConfig cfg;
    if (o.solver == "auto")
        cfg.kind = ecq::SolverKind::automatic;
    else if (o.solver == "exhaustive")
        cfg.kind = ecq::SolverKind::exhaustive;
    else if (o.solver == "fixed-weight")
        cfg.kind = ecq::SolverKind::fixed_weight;
    else if (o.solver == "sa")
        cfg.kind = ecq::SolverKind::sa;
    else
        throw std::invalid_argument("unknown solver '" + o.solver + "'");
    cfg.sa.reads = o.reads;
    cfg.sa.sweeps = o.sweeps;
    cfg.sa.seed = o.seed;
    return cfg;
}

std::string set_to_string(const ecq::Graph& g, const std::vector<int>& nodes, bool names) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out << (i ? "," : "") << (names ? g.node_name(nodes[i]) : std::to_string(nodes[i]));
    out << "}";
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

void print_graph_header(std::ostream& out, const std::string& name, const ecq::Graph& g) {
    out << "# graph " << name << "  n=" << g.node_count() << "  m=" << g.edge_count();
    if (g.node_count() >= 2)
        out << "  density=" << std::setprecision(5) << ecq::density(g) << std::setprecision(17);
    out << "\n";
}

// ---------------------------------------------------------------------------

int cmd_graph(const CommonOpts& common, const std::string& format, const std::string& out_path) {
    ecq::Graph g = ecq::load_graph(common.graph_source);
    if (format == "json") {
        write_output(out_path, ecq::graph_to_json(g));
    } else if (format == "edgelist") {
        write_output(out_path, ecq::serialize_edge_list(g));
    } else if (format == "dot") {
        std::vector<int> cat(static_cast<std::size_t>(g.node_count()), 0);
        write_output(out_path, ecq::graph_to_dot(g, cat, ecq::default_palette()));
    } else {
        throw std::invalid_argument("unknown graph format '" + format + "'");
    }
    return kExitOk;
}

int cmd_centrality(const CommonOpts& common, const std::string& measure, double gamma,
                   double penalty, int restarts, std::uint64_t seed, double tol) {
    ecq::Graph g = ecq::load_graph(common.graph_source);
    std::vector<double> scores;
    nlohmann::json extra;
    bool warning = false;
    if (measure == "ec") {
        ecq::CentralityVector cv = ecq::eigencentrality(g, tol);
        scores = cv.scores;
        extra = {{"lambda1", cv.lambda1}, {"iterations", cv.iterations}, {"residual", cv.residual}};
    } else if (measure == "degree") {
        scores = ecq::degree_centrality(g);
    } else if (measure == "walk") {
        ecq::WalkCentrality wc = ecq::walk_centrality(g, gamma);
        scores = wc.scores;
        extra = {{"gamma", gamma}};
    } else if (measure == "relax") {
        ecq::RelaxationResult rr = ecq::penalty_relaxation(g, penalty, restarts, seed);
        scores = rr.scores;
        warning = !rr.converged;
        extra = {{"penalty", penalty},
                 {"restarts", restarts},
                 {"seed", seed},
                 {"objective", rr.objective},
                 {"converged", rr.converged}};
    } else {
        throw std::invalid_argument("unknown measure '" + measure + "'");
    }

    auto groups = ecq::rank_groups(scores);
    if (common.json) {
        nlohmann::json j;
        j["format_version"] = 1;
        j["graph"] = {{"name", common.graph_source},
                      {"n", g.node_count()},
                      {"m", g.edge_count()}};
        j["measure"] = measure;
        j["scores"] = scores;
        j["rank_groups"] = groups;
        j["warning"] = warning;
        if (!extra.is_null()) j["params"] = extra;
        std::cout << j.dump(2) << "\n";
    } else {
        print_graph_header(std::cout, common.graph_source, g);
        std::cout << "# measure " << measure;
        for (auto it = extra.begin(); it != extra.end(); ++it)
            std::cout << "  " << it.key() << "=" << it.value().dump();
        std::cout << "\nrank  node  score\n";
        int rank = 1;
        std::cout << std::setprecision(10) << std::fixed;
        for (const auto& grp : groups) {
            for (int v : grp) {
                std::cout << std::left << std::setw(5) << rank << " " << std::setw(12)
                          << g.node_name(v) << " " << std::right
                          << scores[static_cast<std::size_t>(v)];
                if (grp.size() > 1) std::cout << "  tie" << set_to_string(g, grp, false);
                std::cout << "\n";
            }
            rank += static_cast<int>(grp.size());
        }
        std::cout.unsetf(std::ios::fixed);
        if (warning) std::cout << "# warning: minimizer did not reach the f-spread tolerance\n";
    }
    return warning && common.strict ? kExitStrictWarning : kExitOk;
}

int cmd_qubo_export(const CommonOpts& common, int tau, double p0, double p1,
                    const std::string& out_path) {
    ecq::Graph g = ecq::load_graph(common.graph_source);
    auto [dp0, dp1] = ecq::default_penalties(g.node_count());
    if (p0 <= 0.0) p0 = dp0;
    if (p1 <= 0.0) p1 = dp1;
    ecq::QuboMatrix q = ecq::build_ec_qubo(g, tau, p0, p1);
    write_output(out_path, ecq::qubo_file_string(q));
    if (common.json) {
        nlohmann::json j{{"format_version", 1}, {"graph", common.graph_source}, {"tau", tau},
                         {"p0", p0},            {"p1", p1},                     {"out", out_path}};
        std::cout << j.dump(2) << "\n";
    } else if (!out_path.empty() && out_path != "-") {
        std::cerr << "# wrote qubo (n=" << q.size() << ", tau=" << tau << ", p0=" << p0
                  << ", p1=" << p1 << ") to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_solve(const CommonOpts& common, int tau, double p0, double p1, const SolverOpts& sopt) {
    ecq::Graph g = ecq::load_graph(common.graph_source);
    auto [dp0, dp1] = ecq::default_penalties(g.node_count());
    if (p0 <= 0.0) p0 = dp0;
    if (p1 <= 0.0) p1 = dp1;
    ecq::QuboMatrix q = ecq::build_ec_qubo(g, tau, p0, p1);
    ecq::SolverConfig cfg = make_solver_config(sopt);
    ecq::SampleSet s = ecq::run_solver(q, tau, cfg);

    ecq::RunReport rep;
    rep.graph_name = common.graph_source;
    rep.n = g.node_count();
    rep.m = g.edge_count();
    rep.density = g.node_count() >= 2 ? ecq::density(g) : 0.0;
    rep.method = s.meta.method;
    rep.tau = tau;
    rep.p0 = p0;
    rep.p1 = p1;
    rep.reads = s.meta.reads;
    rep.sweeps = s.meta.sweeps;
    rep.seed = s.meta.seed;
    rep.ground_sets = ecq::ground_nodes(s);
    rep.ground_energy = s.ground_energy();
    rep.degeneracy = s.degeneracy();
    rep.runtime_ms = s.meta.runtime_ms;

    ecq::CentralityVector ec = ecq::eigencentrality(g);
    ecq::TopTau top = ecq::top_tau(ec.scores, tau);
    rep.ec_top_tau = top.nodes;
    rep.ec_tie_group = top.tie_group;
    rep.matches_ec = !rep.ground_sets.empty();
    for (const auto& set : rep.ground_sets)
        rep.matches_ec = rep.matches_ec && ecq::tie_aware_top_match(ec.scores, set);
    for (const auto& set : rep.ground_sets)
        if (static_cast<int>(set.size()) != tau) rep.warning = true;

    if (common.json) {
        nlohmann::json j = rep;
        std::cout << j.dump(2) << "\n";
    } else {
        print_graph_header(std::cout, common.graph_source, g);
        std::cout << "# qubo ec tau=" << tau << "  p0=" << p0 << "  p1=" << p1 << "\n";
        std::cout << "# solver " << rep.method;
        if (rep.method.rfind("sa", 0) == 0)
            std::cout << "  reads=" << rep.reads << "  sweeps=" << rep.sweeps
                      << "  seed=" << rep.seed;
        std::cout << "\n";
        std::cout << "ground energy : " << rep.ground_energy << "\n";
        std::cout << "degeneracy    : " << rep.degeneracy << "\n";
        std::cout << "ground sets   : ";
        const std::size_t show = std::min<std::size_t>(rep.ground_sets.size(), 20);
        for (std::size_t i = 0; i < show; ++i)
            std::cout << (i ? " " : "") << set_to_string(g, rep.ground_sets[i], true);
        if (show < rep.ground_sets.size())
            std::cout << " ... (" << rep.ground_sets.size() << " stored)";
        std::cout << "\n";
        std::cout << "ec top-tau    : " << set_to_string(g, rep.ec_top_tau, true)
                  << "  tie group " << set_to_string(g, rep.ec_tie_group, true) << "\n";
        std::cout << "matches ec    : " << (rep.matches_ec ? "yes" : "no") << " (tie-aware)\n";
        if (rep.warning) std::cout << "# warning: a ground sample violates the cardinality tau\n";
        std::cout << "runtime       : " << rep.runtime_ms << " ms\n";
    }
    return rep.warning && common.strict ? kExitStrictWarning : kExitOk;
}

int cmd_rank(const CommonOpts& common, const SolverOpts& sopt, bool with_ec) {
    ecq::Graph g = ecq::load_graph(common.graph_source);
    ecq::SolverConfig cfg = make_solver_config(sopt);
    ecq::TauSweep sweep = ecq::tau_sweep(g, cfg, 0, common.graph_source);
    ecq::RankReport report = ecq::rank_from_sweep(sweep);
    std::vector<double> ec_scores;
    if (with_ec) ec_scores = ecq::eigencentrality(g).scores;

    if (common.json) {
        std::cout << ecq::rank_report_json(sweep, report, ec_scores);
    } else {
        print_graph_header(std::cout, common.graph_source, g);
        std::cout << "# solver " << sweep.solver << "\n";
        std::cout << ecq::rank_report_table(sweep, report);
        if (with_ec) {
            auto groups = ecq::rank_groups(ec_scores);
            std::cout << "# classical ec ranking: ";
            int rank = 1;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                std::cout << (i ? "  " : "") << rank << ":" << set_to_string(g, groups[i], true);
                rank += static_cast<int>(groups[i].size());
            }
            std::cout << "\n";
            ecq::RankAgreement agr = ecq::compare_rankings(report, ec_scores);
            std::cout << "# agreement: prefix=" << agr.prefix << "  kendall=" << agr.kendall
                      << "\n";
        }
        if (!report.anomalies.empty()) {
            std::cout << "# anomalies at tau:";
            for (int t : report.anomalies) std::cout << " " << t;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_dot(const CommonOpts& common, const std::string& nodes_csv, int tau,
            const std::string& measure, double gamma, int buckets, const SolverOpts& sopt,
            const std::string& out_path) {
    ecq::Graph g = ecq::load_graph(common.graph_source);
    std::vector<int> cat;
    if (!nodes_csv.empty()) {
        std::vector<int> highlight;
        std::istringstream ls(nodes_csv);
        std::string tok;
        while (std::getline(ls, tok, ',')) highlight.push_back(std::stoi(tok));
        cat = ecq::categories_from_highlight(g.node_count(), highlight);
    } else if (tau > 0) {
        ecq::QuboMatrix q = ecq::build_ec_qubo(g, tau);
        ecq::SampleSet s = ecq::run_solver(q, tau, make_solver_config(sopt));
        cat = ecq::categories_from_highlight(g.node_count(), ecq::ground_nodes(s).front());
    } else if (!measure.empty()) {
        std::vector<double> scores;
        if (measure == "ec")
            scores = ecq::eigencentrality(g).scores;
        else if (measure == "degree")
            scores = ecq::degree_centrality(g);
        else if (measure == "walk")
            scores = ecq::walk_centrality(g, gamma).scores;
        else
            throw std::invalid_argument("unknown measure '" + measure + "'");
        cat = ecq::categories_from_scores(scores, buckets);
    } else {
        throw std::invalid_argument("dot: pass one of --nodes, --tau, or --measure");
    }
    std::vector<std::string> palette = ecq::default_palette();
    if (!measure.empty() && buckets != static_cast<int>(palette.size())) {
        // interpolate is overkill; repeat endpoints for unusual bucket counts
        palette.assign(static_cast<std::size_t>(buckets), palette.back());
        palette.front() = ecq::default_palette().front();
    }
    if (!nodes_csv.empty() || tau > 0)
        palette = {ecq::default_palette().front(), ecq::default_palette().back()};
    write_output(out_path, ecq::graph_to_dot(g, cat, palette));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvector centrality via QUBO ground states"};
    app.require_subcommand(1);

    CommonOpts common;
    SolverOpts sopt;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--graph", common.graph_source,
                       "builtin name, name:params, or edge-list path")
            ->required();
        sc->add_flag("--json", common.json, "machine-readable output");
        sc->add_flag("--strict", common.strict, "escalate solver warnings to exit code 4");
    };
    auto add_solver = [&](CLI::App* sc) {
        sc->add_option("--solver", sopt.solver, "auto|exhaustive|fixed-weight|sa")
            ->default_val("auto");
        sc->add_option("--reads", sopt.reads, "sa reads")->default_val(1000);
        sc->add_option("--sweeps", sopt.sweeps, "sa sweeps per read")->default_val(1000);
        sc->add_option("--seed", sopt.seed, "sa master seed")->default_val(1);
    };

    // graph
    std::string graph_format = "json", out_path;
    {
        auto* sc = app.add_subcommand("graph", "export a graph");
        add_common(sc);
        sc->add_option("--format", graph_format, "json|edgelist|dot")->default_val("json");
        sc->add_option("--out", out_path, "output path ('-' for stdout)");
    }
    // centrality
    std::string measure = "ec";
    double gamma = 1.0, penalty = 10.0, tol = 1e-10;
    int restarts = 8;
    std::uint64_t cseed = 1;
    {
        auto* sc = app.add_subcommand("centrality", "classical centrality measures");
        add_common(sc);
        sc->add_option("--measure", measure, "ec|degree|walk|relax")->default_val("ec");
        sc->add_option("--gamma", gamma, "walk-centrality gamma")->default_val(1.0);
        sc->add_option("--penalty", penalty, "relaxation penalty P")->default_val(10.0);
        sc->add_option("--restarts", restarts, "relaxation restarts")->default_val(8);
        sc->add_option("--seed", cseed, "relaxation seed")->default_val(1);
        sc->add_option("--tol", tol, "ec residual tolerance")->default_val(1e-10);
    }
    // qubo-export
    int tau = 1;
    double p0 = 0.0, p1 = 0.0;
    {
        auto* sc = app.add_subcommand("qubo-export", "write the centrality QUBO as text");
        add_common(sc);
        sc->add_option("--tau", tau, "target cardinality")->required();
        sc->add_option("--p0", p0, "reward penalty (default 1/sqrt(n))");
        sc->add_option("--p1", p1, "cardinality penalty (default 5n)");
        sc->add_option("--out", out_path, "output path ('-' for stdout)");
    }
    // solve
    {
        auto* sc = app.add_subcommand("solve", "find ground states of the centrality QUBO");
        add_common(sc);
        sc->add_option("--tau", tau, "target cardinality")->required();
        sc->add_option("--p0", p0, "reward penalty (default 1/sqrt(n))");
        sc->add_option("--p1", p1, "cardinality penalty (default 5n)");
        add_solver(sc);
    }
    // rank
    bool no_ec = false;
    {
        auto* sc = app.add_subcommand("rank", "tau-sweep node hierarchy");
        add_common(sc);
        add_solver(sc);
        sc->add_flag("--no-ec", no_ec, "omit the classical ec comparison");
    }
    // dot
    std::string nodes_csv, dot_measure;
    int buckets = 3, dot_tau = 0;
    {
        auto* sc = app.add_subcommand("dot", "DOT rendering with centrality coloring");
        add_common(sc);
        sc->add_option("--nodes", nodes_csv, "comma-separated node set to highlight");
        sc->add_option("--tau", dot_tau, "solve for tau and highlight the ground set");
        sc->add_option("--measure", dot_measure, "ec|degree|walk bucket coloring");
        sc->add_option("--gamma", gamma, "walk-centrality gamma")->default_val(1.0);
        sc->add_option("--buckets", buckets, "number of color buckets")->default_val(3);
        add_solver(sc);
        sc->add_option("--out", out_path, "output path ('-' for stdout)")->required();
    }

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("graph")) return cmd_graph(common, graph_format, out_path);
        if (app.got_subcommand("centrality"))
            return cmd_centrality(common, measure, gamma, penalty, restarts, cseed, tol);
        if (app.got_subcommand("qubo-export"))
            return cmd_qubo_export(common, tau, p0, p1, out_path);
        if (app.got_subcommand("solve")) return cmd_solve(common, tau, p0, p1, sopt);
        if (app.got_subcommand("rank")) return cmd_rank(common, sopt, !no_ec);
        if (app.got_subcommand("dot"))
            return cmd_dot(common, nodes_csv, dot_tau, dot_measure, gamma, buckets, sopt, out_path);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ecq::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
