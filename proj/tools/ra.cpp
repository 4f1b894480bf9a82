// ra: command-line front end for the relalg toolkit.
//
// Exit codes: 0 success / sat / NP-hard / all contradictions reproduced,
// 1 check failed / unsat / a probe survivor, 2 usage or input error,
// 3 classification unresolved / probe hypotheses not met.

#include "relalg/catalog.hpp"
#include "relalg/detectors.hpp"
#include "relalg/error.hpp"
#include "relalg/io.hpp"
#include "relalg/network.hpp"
#include "relalg/oracle.hpp"
#include "relalg/probe.hpp"
#include "relalg/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace relalg;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;
constexpr int exit_inconclusive = 3;

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A path, or the name of a built-in algebra.
std::string algebra_text(const std::string &source)
{
    if (std::filesystem::exists(source))
        return read_file(source);
    if (auto entry = find_catalog_entry(source))
        return std::string(entry->text);
    throw UsageError("no such file or built-in algebra: '" + source + "'");
}

RelationAlgebra load_algebra(const std::string &source)
{
    return parse_algebra(algebra_text(source));
}

struct Options {
    std::string format = "text";
    std::string algebra;
    std::string network;
    int clique_bound = default_clique_bound;
    bool witness = false;
    int max_nodes = default_oracle_nodes;
    int theorem = 0;
    std::string show;

    bool structured() const { return format == "structured"; }
};

int run_check(const Options &o)
{
    auto ra = parse_algebra_unchecked(algebra_text(o.algebra));
    auto report = validate(ra);
    std::cout << (o.structured() ? structured_check(ra, report) : text_check(ra, report));
    return report.ok() ? exit_ok : exit_negative;
}

int run_classify(const Options &o)
{
    auto ra = load_algebra(o.algebra);
    auto report = classify(ra, o.clique_bound);
    std::cout << (o.structured() ? structured_hardness(ra, report) : text_hardness(ra, report));
    return report.verdict == Verdict::np_hard ? exit_ok : exit_inconclusive;
}

int run_solve(const Options &o)
{
    auto ra = load_algebra(o.algebra);
    auto net = parse_network(read_file(o.network), ra);
    auto result = solve(ra, net.network);
    std::cout << (o.structured() ? structured_solve(ra, result, net.name)
                                 : text_solve(ra, result, net.name, o.witness));
    return result.sat() ? exit_ok : exit_negative;
}

int run_oracle(const Options &o)
{
    auto ra = load_algebra(o.algebra);
    auto net = parse_network(read_file(o.network), ra);
    auto result = oracle_solve(ra, net.network, o.max_nodes);
    std::cout << (o.structured() ? structured_oracle(ra, result, net.name) : text_oracle(ra, result, net.name));
    return result.sat ? exit_ok : exit_negative;
}

int smallest_prime_above(int m)
{
    int p = m + 1;
    while (!is_prime(p))
        ++p;
    return p;
}

int run_probe(const Options &o)
{
    auto ra = load_algebra(o.algebra);
    ProbeSummary summary;
    summary.algebra = ra.name();

    if (o.theorem == 0 || o.theorem == 5) {
        if (auto t5 = detect_theorem5(ra, o.clique_bound)) {
            const int m = t5->classes.count;
            if (m == 2) {
                try {
                    auto p = probe_theorem5_case1(ra, t5->equivalence);
                    summary.runs.push_back({"5 (two classes)",
                                            "e = " + ra.format(t5->equivalence) + ", " + std::to_string(p.eliminated) +
                                                "/" + std::to_string(p.candidates) + " cyclic class functions refuted",
                                            p.reproduced});
                } catch (const UsageError &e) {
                    summary.skipped.push_back(std::string("5: ") + e.what());
                }
            } else {
                const int p = smallest_prime_above(m);
                auto probe = probe_theorem5_case2(m, p);
                summary.runs.push_back({"5 (" + std::to_string(m) + " classes)",
                                        "arity " + std::to_string(p) + ", tuple disagreeing with its rotation",
                                        probe.reproduced});
            }
        } else {
            summary.skipped.push_back("5: no non-trivial equivalence with finitely many (>= 2) classes");
        }
    }
    if (o.theorem == 0 || o.theorem == 6) {
        if (auto a = detect_theorem6(ra)) {
            auto p = probe_theorem6(ra, *a);
            summary.runs.push_back({"6", "atom " + ra.atom_name(*a) + ", " + std::to_string(*p.search.candidates) +
                                             " cyclic ternary candidates, " +
                                             std::to_string(p.search.survivors.size()) + " survivors",
                                    p.reproduced});
        } else {
            summary.skipped.push_back("6: no symmetric atom with forbidden triangle in a primitive algebra");
        }
    }

    std::cout << (o.structured() ? structured_probe(summary) : text_probe(summary));
    if (summary.runs.empty())
        return exit_inconclusive;
    for (const auto &r : summary.runs)
        if (!r.reproduced)
            return exit_negative;
    return exit_ok;
}

int run_catalog(const Options &o)
{
    if (!o.show.empty()) {
        auto entry = find_catalog_entry(o.show);
        if (!entry)
            throw UsageError("no built-in algebra named '" + o.show + "'");
        std::cout << entry->text;
        return exit_ok;
    }
    for (const auto &e : catalog())
        std::cout << e.name << (e.valid ? "" : " (invalid)") << "  " << e.summary << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Finite relation algebras: table checks, network solving, hardness criteria"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    auto *check = app.add_subcommand("check", "Validate an algebra's composition table");
    check->add_option("algebra", o.algebra, "Algebra file or built-in name")->required();

    auto *cls = app.add_subcommand("classify", "Report which hardness criteria apply");
    cls->add_option("algebra", o.algebra, "Algebra file or built-in name")->required();
    cls->add_option("--clique-bound", o.clique_bound, "Largest class count tried")->check(CLI::Range(2, 64));

    auto *slv = app.add_subcommand("solve", "Decide a network by atomic refinement and closure");
    slv->add_option("algebra", o.algebra, "Algebra file or built-in name")->required();
    slv->add_option("network", o.network, "Network file")->required();
    slv->add_flag("--witness", o.witness, "Print the atomic closed witness network");

    auto *orc = app.add_subcommand("oracle", "Decide a small network by brute force over finite models");
    orc->add_option("algebra", o.algebra, "Algebra file or built-in name")->required();
    orc->add_option("network", o.network, "Network file")->required();
    orc->add_option("--max-nodes", o.max_nodes, "Refuse larger networks")->check(CLI::Range(1, 6));

    auto *prb = app.add_subcommand("probe", "Replay the cyclic-operation contradictions");
    prb->add_option("algebra", o.algebra, "Algebra file or built-in name")->required();
    prb->add_option("--theorem", o.theorem, "Only this criterion (5 or 6)")->check(CLI::IsMember({5, 6}));
    prb->add_option("--clique-bound", o.clique_bound, "Largest class count tried")->check(CLI::Range(2, 64));

    auto *cat = app.add_subcommand("catalog", "List built-in algebras");
    cat->add_option("--show", o.show, "Print the text of one entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (app.got_subcommand(check))
            return run_check(o);
        if (app.got_subcommand(cls))
            return run_classify(o);
        if (app.got_subcommand(slv))
            return run_solve(o);
        if (app.got_subcommand(orc))
            return run_oracle(o);
        if (app.got_subcommand(prb))
            return run_probe(o);
        if (app.got_subcommand(cat))
            return run_catalog(o);
    } catch (const std::exception &e) {
        std::cerr << "ra: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
