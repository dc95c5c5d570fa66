#include <homlab/constructions.hpp>
#include <homlab/corpus.hpp>
#include <homlab/games.hpp>
#include <homlab/homgraph.hpp>
#include <homlab/io.hpp>
#include <homlab/rng.hpp>
#include <homlab/solvers.hpp>
#include <homlab/tree_ball.hpp>
#include <homlab/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace homlab;

constexpr int kExitGuard = 2;

struct OutputOpts {
    std::string format = "text";
    std::string out_path;  // empty: stdout
    bool timing = false;
};

void add_output_flags(CLI::App & cmd, OutputOpts & o, bool graph_output)
{
    cmd.add_option("--format", o.format, graph_output ? "text|json|dot" : "text|json")
        ->check(CLI::IsMember(graph_output ? std::vector<std::string>{"text", "json", "dot"}
                                           : std::vector<std::string>{"text", "json"}));
    cmd.add_option("-o,--out", o.out_path, "output file (default stdout)");
    if (!graph_output)
        cmd.add_flag("--timing", o.timing, "include wall-clock time in JSON output");
}

void emit(const OutputOpts & o, const std::string & text)
{
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f{o.out_path};
    if (!f)
        throw std::runtime_error{"cannot write " + o.out_path};
    f << text;
}

std::string render_graph(const FiniteGraph & g, const OutputOpts & o, const RoleMap & roles = {})
{
    std::ostringstream os;
    if (o.format == "json")
        os << graph_to_json(g, roles).dump(2) << "\n";
    else if (o.format == "dot")
        write_dot(os, g);
    else
        write_dimacs(os, g);
    return os.str();
}

std::string render_graph(const EdgeLabeledGraph & g, const OutputOpts & o, const RoleMap & roles = {})
{
    std::ostringstream os;
    if (o.format == "json")
        os << graph_to_json(g, roles).dump(2) << "\n";
    else if (o.format == "dot")
        write_dot(os, g);
    else
        os << graph_to_json(g, roles).dump(2) << "\n";  // DIMACS cannot carry labels
    return os.str();
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int n = 0, k = 2, delta = 3, radius = 2;
    std::string name;
    std::uint64_t seed = 1;
    int g0_depth = 4;
    std::string product_g, product_h;
    OutputOpts out;
};

int run_gen(const GenArgs & a)
{
    if (a.kind == "kn") {
        emit(a.out, render_graph(complete_graph(a.n), a.out));
    }
    else if (a.kind == "cycle") {
        emit(a.out, render_graph(cycle_graph(a.n), a.out));
    }
    else if (a.kind == "hdelta") {
        auto hd = h_delta(a.delta);
        RoleMap roles;
        for (int i = 0; i < a.delta - 1; ++i) {
            roles["v0"].push_back(hd.v0_vertex(i));
            roles["v1"].push_back(hd.v1_vertex(i));
        }
        for (int i = 0; i < a.delta - 1; ++i)
            for (int j = 0; j < a.delta - 1; ++j)
                roles["product"].push_back(hd.p_vertex(i, j));
        roles["apex"].push_back(hd.apex());
        emit(a.out, render_graph(hd.graph(), a.out, roles));
    }
    else if (a.kind == "product") {
        auto g = load_graph(a.product_g);
        auto h = load_graph(a.product_h);
        emit(a.out, render_graph(categorical_product(g, h), a.out));
    }
    else if (a.kind == "treeball") {
        TreeBall ball{a.delta, a.radius};
        emit(a.out, render_graph(ball.as_labeled_graph(), a.out));
    }
    else if (a.kind == "g0") {
        Rng rng{a.seed};
        auto seq = random_g0_seq(a.delta, a.g0_depth, rng);
        auto trunc = g0_truncation(a.delta, seq);
        RoleMap roles;
        roles["original"] = trunc.original_vertex;
        emit(a.out, render_graph(trunc.graph, a.out, roles));
    }
    else if (a.kind == "named") {
        emit(a.out, render_graph(named_graph(a.name), a.out));
    }
    else if (a.kind == "shiftgraph") {
        emit(a.out, render_graph(shift_graph_slice(a.n, a.k), a.out));
    }
    else {
        throw CLI::ValidationError{"gen", "unknown kind: " + a.kind};
    }
    return 0;
}

// --- solve -------------------------------------------------------------

struct SolveArgs {
    std::string task;
    std::string graph_path, g_path, h_path;
    int delta = 3;
    bool override_guard = false;
    OutputOpts out;
};

json stats_json(const SearchStats & s)
{
    return json{{"nodes_expanded", s.nodes_expanded}};
}

int run_solve(const SolveArgs & a)
{
    json result;
    auto start = std::chrono::steady_clock::now();
    try {
        if (a.task == "hom") {
            auto g = load_graph(a.g_path);
            auto h = load_graph(a.h_path);
            auto r = find_hom(g, h);
            result["status"] = r.map ? "FOUND" : "NONE";
            if (r.map)
                result["witness"] = *r.map;
            result["stats"] = stats_json(r.stats);
        }
        else if (a.task == "chrom") {
            auto g = load_graph(a.graph_path);
            auto r = chromatic_number(g, a.override_guard);
            result["status"] = "OK";
            result["chi"] = r.chi;
            result["witness"] = r.colouring;
            result["stats"] = stats_json(r.stats);
        }
        else if (a.task == "chromlab") {
            auto g = load_labeled_graph(a.graph_path);
            auto r = edge_labeled_chromatic_number(g);
            result["status"] = "OK";
            result["chi"] = r.chi;
            result["witness"] = r.classes;
        }
        else if (a.task == "deltastar") {
            auto g = load_graph(a.graph_path);
            auto w = delta_star(g, a.delta, a.override_guard);
            result["status"] = w ? "FOUND" : "NONE";
            if (w) {
                result["witness"] = {{"r0", w->r0}, {"r1", w->r1}, {"c0", w->c0}, {"c1", w->c1}};
                result["theta"] = theta_hom(g, *w, a.delta);
            }
        }
        else if (a.task == "theta") {
            auto g = load_graph(a.graph_path);
            auto w = delta_star(g, a.delta, a.override_guard);
            if (!w) {
                result["status"] = "NONE";
            }
            else {
                result["status"] = "FOUND";
                result["witness"] = theta_hom(g, *w, a.delta);
            }
        }
        else if (a.task == "antigame" || a.task == "sinkless") {
            auto g = load_labeled_graph(a.graph_path);
            auto orient = sinkless_orientation(g.graph());
            if (!orient) {
                result["status"] = "NONE";
            }
            else if (a.task == "sinkless") {
                result["status"] = "FOUND";
                json dirs = json::array();
                const auto & edges = g.graph().edges();
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    bool fwd = orient->dir[e];
                    dirs.push_back({fwd ? edges[e].first : edges[e].second,
                        fwd ? edges[e].second : edges[e].first});
                }
                result["witness"] = std::move(dirs);
            }
            else {
                result["status"] = "FOUND";
                result["witness"] = edge_grabbing_from_orientation(g, *orient);
            }
        }
        else if (a.task == "hedetniemi") {
            auto g = load_graph(a.g_path);
            auto h = load_graph(a.h_path);
            auto gap = hedetniemi_gap(g, h, a.override_guard);
            result["status"] = "OK";
            result["chi_g"] = gap.chi_g;
            result["chi_h"] = gap.chi_h;
            result["chi_product"] = gap.chi_product;
            result["gap"] = std::min(gap.chi_g, gap.chi_h) - gap.chi_product;
        }
        else {
            throw CLI::ValidationError{"solve", "unknown task: " + a.task};
        }
    }
    catch (const SizeGuardError & e) {
        result["status"] = "GUARD";
        result["error"] = e.what();
        emit(a.out, result.dump(2) + "\n");
        return kExitGuard;
    }
    if (a.out.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        result["wall_ms"] = ms.count();
    }
    if (a.out.format == "text") {
        std::ostringstream os;
        os << result["status"].get<std::string>();
        if (result.contains("chi"))
            os << " chi=" << result["chi"].get<int>();
        if (result.contains("gap"))
            os << " gap=" << result["gap"].get<int>();
        os << "\n";
        emit(a.out, os.str());
    }
    else {
        emit(a.out, result.dump(2) + "\n");
    }
    return 0;
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    std::string budget = "large";
    OutputOpts out;
};

int run_verify(const VerifyArgs & a)
{
    auto report = run_suite(a.suite, a.seed, budget_from_string(a.budget));
    if (a.out.format == "json") {
        json j;
        j["suite"] = report.suite;
        j["seed"] = a.seed;
        j["budget"] = a.budget;
        auto claims = json::array();
        for (const auto & c : report.claims)
            claims.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["claims"] = std::move(claims);
        j["all_passed"] = report.all_passed();
        emit(a.out, j.dump(2) + "\n");
    }
    else {
        std::ostringstream os;
        os << "suite " << report.suite << " (seed " << a.seed << ", budget " << a.budget << ")\n";
        for (const auto & c : report.claims)
            os << (c.passed ? "  PASS " : "  FAIL ") << c.name << ": " << c.detail << "\n";
        emit(a.out, os.str());
    }
    return report.all_passed() ? 0 : 1;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"finite workbench for homomorphism graphs, colouring games and delta-(*) solvers"};
    app.require_subcommand(1);
    // keep -h free: --h names the right-hand input graph below
    app.set_help_flag("--help", "print help");

    GenArgs gen;
    auto * cmd_gen = app.add_subcommand("gen", "emit a constructed graph");
    cmd_gen->set_help_flag("--help", "print help");
    cmd_gen->add_option("kind", gen.kind,
            "kn|cycle|hdelta|product|treeball|g0|named|shiftgraph")->required();
    cmd_gen->add_option("--n", gen.n, "vertex / ground-set size");
    cmd_gen->add_option("--k", gen.k, "subset size (shiftgraph)");
    cmd_gen->add_option("--delta", gen.delta, "degree parameter");
    cmd_gen->add_option("--r,--radius", gen.radius, "ball radius (treeball)");
    cmd_gen->add_option("--depth", gen.g0_depth, "level count (g0)");
    cmd_gen->add_option("--name", gen.name, "petersen|grotzsch|chvatal (named)");
    cmd_gen->add_option("--seed", gen.seed, "seed for the g0 level sequence");
    cmd_gen->add_option("--g", gen.product_g, "left factor file (product)");
    cmd_gen->add_option("--h", gen.product_h, "right factor file (product)");
    add_output_flags(*cmd_gen, gen.out, true);

    SolveArgs solve;
    solve.out.format = "json";
    auto * cmd_solve = app.add_subcommand("solve", "run a solver task");
    cmd_solve->set_help_flag("--help", "print help");
    cmd_solve->add_option("task", solve.task,
            "hom|chrom|chromlab|deltastar|theta|antigame|sinkless|hedetniemi")->required();
    cmd_solve->add_option("--graph", solve.graph_path, "input graph file");
    cmd_solve->add_option("--g", solve.g_path, "pattern / left graph file");
    cmd_solve->add_option("--h", solve.h_path, "target / right graph file");
    cmd_solve->add_option("--delta", solve.delta, "degree parameter");
    cmd_solve->add_flag("--override-guard", solve.override_guard, "run past instance size guards");
    add_output_flags(*cmd_solve, solve.out, false);

    VerifyArgs verify;
    auto * cmd_verify = app.add_subcommand("verify", "run a claim verification suite");
    cmd_verify->set_help_flag("--help", "print help");
    cmd_verify->add_option("suite", verify.suite, "prop53|sandwich|homgraph|games|all")->required();
    cmd_verify->add_option("--seed", verify.seed, "seed for randomized corpora");
    cmd_verify->add_option("--budget", verify.budget, "small|medium|large")
        ->check(CLI::IsMember({"small", "medium", "large"}));
    add_output_flags(*cmd_verify, verify.out, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed())
            return run_gen(gen);
        if (cmd_solve->parsed())
            return run_solve(solve);
        return run_verify(verify);
    }
    catch (const CLI::Error & e) {
        return app.exit(e);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
