#include "gpoly/canonical.hpp"
#include "gpoly/csf.hpp"
#include "gpoly/enumerate.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph_io.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/mprime.hpp"
#include "gpoly/reconstruct.hpp"
#include "gpoly/star_expansion.hpp"
#include "gpoly/substitutions.hpp"
#include "gpoly/verify.hpp"
#include "gpoly/vpoly.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gpoly;

namespace {

struct InputOptions {
    std::string path = "-";
    std::string format = "auto";
};

std::string slurp(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw InvalidInput("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

MarkedGraph load_graph(const InputOptions& in)
{
    GraphFormat f = in.format == "auto" ? GraphFormat::automatic : parse_graph_format(in.format);
    return read_graph(slurp(in.path), f);
}

void add_input(CLI::App* app, InputOptions& in, bool with_format = true)
{
    app->add_option("--input", in.path, "Input file, or - for stdin")->capture_default_str();
    if (with_format)
        app->add_option("--format", in.format, "Graph format")
            ->check(CLI::IsMember({"auto", "json", "graph6"}))
            ->capture_default_str();
}

void print_poly(const ZPoly& f, bool json)
{
    if (json)
        std::cout << zpoly_to_json(f).dump() << "\n";
    else
        std::cout << to_string(f) << "\n";
}

ZPoly read_poly(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return zpoly_from_json(nlohmann::json::parse(text));
    return parse_zpoly(text);
}

MarkOrder parse_order(const std::string& name)
{
    if (name == "lex")
        return lex_order();
    if (name.rfind("hash:", 0) == 0)
        return hashed_order(std::stoull(name.substr(5)));
    throw InvalidInput("unknown order " + name + " (use lex or hash:<seed>)");
}

RunReport run_bench()
{
    RunReport r;
    r.command = "bench";
    MarkedGraph k6 = unweighted_graph(6, {});
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            k6.add_edge(a, b);
    // Three centers in a path carrying 3, 2 and 1 leaves.
    MarkedGraph spider = unweighted_graph(9, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8}});
    {
        PhaseTimer t(r, "star_expansion K6");
        star_expansion(k6);
    }
    {
        PhaseTimer t(r, "csf_power K6");
        csf_power(k6);
    }
    {
        PhaseTimer t(r, "m_poly_states K6");
        m_poly_states(k6);
    }
    {
        PhaseTimer t(r, "m_poly_dc K6");
        m_poly_dc(k6);
    }
    {
        PhaseTimer t(r, "d_poly spider");
        d_poly(spider);
    }
    {
        PhaseTimer t(r, "free trees n=12");
        r.counts["free_trees_n12"] = static_cast<long>(enumerate_free_trees(12).size());
    }
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph polynomial invariants and tree reconstruction"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Include phase timings in JSON reports");

    InputOptions in;
    bool json = false;

    auto* csf = app.add_subcommand("csf", "Chromatic symmetric function");
    std::string basis = "st";
    bool emit_tree = false;
    add_input(csf, in);
    csf->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"st", "p"}))->capture_default_str();
    csf->add_flag("--emit-tree", emit_tree, "Print the deletion-near-contraction tree");

    auto* mpoly = app.add_subcommand("mpoly", "M-polynomial");
    auto* wpoly = app.add_subcommand("wpoly", "W-polynomial");
    auto* dpoly = app.add_subcommand("dpoly", "D-polynomial (undotted M of the core)");
    for (auto* sub : {mpoly, wpoly, dpoly}) {
        add_input(sub, in);
        sub->add_flag("--json", json, "Print the polynomial as JSON");
    }

    auto* vpoly = app.add_subcommand("vpoly", "V-polynomial with symbolic edge weights");
    std::string semigroup = "mark";
    add_input(vpoly, in);
    vpoly->add_option("--semigroup", semigroup, "Vertex labels")
        ->check(CLI::IsMember({"mark", "weight"}))
        ->capture_default_str();

    auto* mprime = app.add_subcommand("mprime", "M' of a marked forest");
    std::string order = "lex";
    add_input(mprime, in);
    mprime->add_option("--order", order, "Mark order: lex or hash:<seed>")->capture_default_str();
    mprime->add_flag("--json", json, "Print the polynomial as JSON");

    auto* core_cmd = app.add_subcommand("core", "Absorb all absorbable edges");
    add_input(core_cmd, in);

    auto* recon = app.add_subcommand("reconstruct", "Recover a star, 2-star or proper tree");
    std::string from = "d";
    add_input(recon, in, false);
    recon->add_option("--from", from, "Input invariant")->check(CLI::IsMember({"d", "m", "csf"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Verification campaigns");
    verify->require_subcommand(1);
    auto* stanley = verify->add_subcommand("stanley", "Star expansions of all free trees");
    int max_n = 10;
    unsigned workers = 1;
    stanley->add_option("--max-n", max_n, "Largest tree order")->capture_default_str();
    stanley->add_option("--workers", workers, "Worker threads")->capture_default_str();
    auto* invariants = verify->add_subcommand("invariants", "Randomized property battery");
    InvariantOptions inv;
    invariants->add_option("--seed", inv.seed, "64-bit seed")->capture_default_str();
    invariants->add_option("--trials", inv.trials, "Trials per invariant")->capture_default_str();
    invariants->add_option("--only", inv.only, "Run only ids with this prefix");
    invariants->add_flag("--mutate-undot-sign", inv.mutate_undot_sign, "Inject a sign error into the Pascal check");

    auto* bench = app.add_subcommand("bench", "Time the main engines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (csf->parsed()) {
            MarkedGraph g = load_graph(in);
            if (basis == "p") {
                std::cout << to_string(csf_power(g)) << "\n";
            } else {
                DncOptions opts;
                opts.emit_tree = emit_tree;
                DncResult r = dnc_expand(g, opts);
                if (r.tree)
                    std::cout << render_tree(*r.tree);
                std::cout << to_string(r.st) << "\n";
            }
        } else if (mpoly->parsed()) {
            print_poly(m_poly(load_graph(in)), json);
        } else if (wpoly->parsed()) {
            print_poly(w_poly(load_graph(in)), json);
        } else if (dpoly->parsed()) {
            print_poly(d_poly(load_graph(in)), json);
        } else if (vpoly->parsed()) {
            MarkedGraph g = load_graph(in);
            if (semigroup == "mark")
                std::cout << to_string(v_poly_states(g, mark_labels(g), mark_semigroup())) << "\n";
            else
                std::cout << to_string(v_poly_states(g, weight_labels(g), weight_semigroup())) << "\n";
        } else if (mprime->parsed()) {
            print_poly(m_prime(load_graph(in), parse_order(order)), json);
        } else if (core_cmd->parsed()) {
            std::cout << graph_to_json(core(load_graph(in))).dump() << "\n";
        } else if (recon->parsed()) {
            std::string text = slurp(in.path);
            MarkedGraph t = from == "csf" ? tree_from_csf_star(parse_symfn(text, Basis::st))
                            : from == "m" ? tree_from_m(read_poly(text))
                                          : tree_from_d(read_poly(text));
            std::cout << graph_to_json(t).dump() << "\n";
        } else if (stanley->parsed()) {
            RunReport r = verify_stanley(max_n, workers);
            std::cout << report_to_json(r, timing).dump(2) << "\n";
            return exit_code_for(r);
        } else if (invariants->parsed()) {
            RunReport r = verify_invariants(inv);
            std::cout << report_to_json(r, timing).dump(2) << "\n";
            return exit_code_for(r);
        } else if (bench->parsed()) {
            std::cout << report_to_json(run_bench(), true).dump(2) << "\n";
        }
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const ReconstructionError& e) {
        std::cerr << "reconstruction failed: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
