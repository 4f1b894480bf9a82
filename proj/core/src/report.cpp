#include "relalg/report.hpp"

#include "relalg/error.hpp"
#include "relalg/io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace relalg {

using nlohmann::json;

namespace {

json element_json(const RelationAlgebra &ra, Element x)
{
    json out = json::array();
    for (auto a : x.atoms())
        out.push_back(ra.atom_name(a));
    return out;
}

Element element_from(const RelationAlgebra &ra, const json &j)
{
    Element x;
    for (const auto &name : j) {
        auto a = ra.find_atom(name.get<std::string>());
        if (!a)
            throw UsageError("report names unknown atom '" + name.get<std::string>() + "'");
        x |= Element::atom(*a);
    }
    return x;
}

json network_json(const RelationAlgebra &ra, const Network &net)
{
    json labels = json::array();
    for (auto l : net.labels())
        labels.push_back(element_json(ra, l));
    return {{"nodes", net.node_count()}, {"labels", labels}};
}

Network network_from(const RelationAlgebra &ra, const json &j)
{
    const int n = j.at("nodes").get<int>();
    Network net(n, Element{});
    const auto &labels = j.at("labels");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            net.set(x, y, element_from(ra, labels.at(static_cast<std::size_t>(x) * n + y)));
    return net;
}

json header(std::string_view command, std::string_view algebra)
{
    return {{"schema", report_schema}, {"command", command}, {"algebra", algebra}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }


}  // namespace

std::string structured_check(const RelationAlgebra &ra, const ValidationReport &report)
{
    auto j = header("check", ra.name());
    j["valid"] = report.ok();
    j["violations"] = json::array();
    for (const auto &v : report.violations) {
        json w = json::array();
        for (auto a : v.witness)
            w.push_back(a.value() < ra.size() ? ra.atom_name(a) : "?");
        j["violations"].push_back({{"law", to_string(v.law)}, {"witness", w}, {"detail", v.detail}});
    }
    return dump(j);
}

std::string text_check(const RelationAlgebra &ra, const ValidationReport &report)
{
    std::ostringstream os;
    os << "algebra " << ra.name() << ": " << (report.ok() ? "valid" : "INVALID") << '\n';
    for (const auto &v : report.violations)
        os << "  " << describe(ra, v) << '\n';
    return os.str();
}

std::string structured_hardness(const RelationAlgebra &ra, const HardnessReport &r)
{
    auto j = header("classify", r.algebra);
    j["primitive"] = r.primitive;
    j["domain_at_least_3"] = r.domain_at_least_3;
    j["equivalence_elements"] = json::array();
    for (auto e : r.equivalence_elements)
        j["equivalence_elements"].push_back(element_json(ra, e));
    if (r.theorem5) {
        json classes = {{"kind", r.theorem5->classes.finite() ? "finite" : "at_least"},
                        {"count", r.theorem5->classes.count}};
        if (r.theorem5->classes.certificate)
            classes["certificate"] = network_json(ra, *r.theorem5->classes.certificate);
        j["theorem5"] = {{"equivalence", element_json(ra, r.theorem5->equivalence)}, {"classes", classes}};
    } else {
        j["theorem5"] = nullptr;
    }
    j["theorem6"] = r.theorem6 ? json(ra.atom_name(*r.theorem6)) : json(nullptr);
    j["verdict"] = r.verdict == Verdict::np_hard ? "np-hard" : "unresolved";
    j["notes"] = r.notes;
    return dump(j);
}

HardnessReport parse_structured_hardness(const RelationAlgebra &ra, std::string_view text)
{
    const auto j = json::parse(text);
    if (j.at("schema").get<std::string>() != report_schema)
        throw UsageError("unsupported report schema");
    HardnessReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.primitive = j.at("primitive").get<bool>();
    r.domain_at_least_3 = j.at("domain_at_least_3").get<bool>();
    for (const auto &e : j.at("equivalence_elements"))
        r.equivalence_elements.push_back(element_from(ra, e));
    if (const auto &t5 = j.at("theorem5"); !t5.is_null()) {
        Theorem5Evidence ev;
        ev.equivalence = element_from(ra, t5.at("equivalence"));
        const auto &c = t5.at("classes");
        ev.classes.kind = c.at("kind").get<std::string>() == "finite" ? ClassCount::Kind::finite
                                                                        : ClassCount::Kind::at_least;
        ev.classes.count = c.at("count").get<int>();
        if (c.contains("certificate"))
            ev.classes.certificate = network_from(ra, c.at("certificate"));
        r.theorem5 = std::move(ev);
    }
    if (const auto &t6 = j.at("theorem6"); !t6.is_null()) {
        auto a = ra.find_atom(t6.get<std::string>());
        if (!a)
            throw UsageError("report names unknown atom");
        r.theorem6 = *a;
    }
    r.verdict = j.at("verdict").get<std::string>() == "np-hard" ? Verdict::np_hard : Verdict::unresolved;
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string text_hardness(const RelationAlgebra &ra, const HardnessReport &r)
{
    std::ostringstream os;
    os << "algebra " << r.algebra << '\n';
    os << "  primitive:          " << (r.primitive ? "yes" : "no") << '\n';
    os << "  at least 3 points:  " << (r.domain_at_least_3 ? "yes" : "no") << '\n';
    os << "  equivalences:       ";
    if (r.equivalence_elements.empty())
        os << "none";
    for (std::size_t i = 0; i < r.equivalence_elements.size(); ++i)
        os << (i ? " " : "") << ra.format(r.equivalence_elements[i]);
    os << '\n';
    os << "  theorem 5:          ";
    if (r.theorem5)
        os << "e = " << ra.format(r.theorem5->equivalence) << ", classes = "
           << (r.theorem5->classes.finite() ? "" : ">=") << r.theorem5->classes.count << '\n';
    else
        os << "-\n";
    os << "  theorem 6:          " << (r.theorem6 ? "atom " + ra.atom_name(*r.theorem6) : std::string("-")) << '\n';
    os << "verdict: " << (r.verdict == Verdict::np_hard ? "NP-hard" : "unresolved") << '\n';
    for (const auto &n : r.notes)
        os << "  note: " << n << '\n';
    return os.str();
}

std::string structured_solve(const RelationAlgebra &ra, const SolveResult &result, std::string_view network_name)
{
    auto j = header("solve", ra.name());
    j["network"] = network_name;
    j["status"] = result.sat() ? "sat" : "unsat";
    j["semantics"] = "atomic closed refinement (satisfiability under a fully universal square representation)";
    j["branches"] = result.stats.branches;
    j["dead_ends"] = result.stats.dead_ends;
    j["witness"] = result.witness ? network_json(ra, *result.witness) : json(nullptr);
    if (result.conflict)
        j["conflict"] = {result.conflict->from + 1, result.conflict->via < 0 ? 0 : result.conflict->via + 1,
                         result.conflict->to + 1};
    return dump(j);
}

std::string text_solve(const RelationAlgebra &ra, const SolveResult &result, std::string_view network_name,
                       bool with_witness)
{
    std::ostringstream os;
    os << (result.sat() ? "sat" : "unsat") << '\n';
    if (result.conflict) {
        os << "# inconsistent at nodes " << result.conflict->from + 1;
        if (result.conflict->via >= 0)
            os << " " << result.conflict->via + 1;
        os << " " << result.conflict->to + 1 << '\n';
    }
    if (with_witness && result.witness)
        os << print_network(ra, *result.witness, std::string(network_name) + "-witness");
    return os.str();
}

std::string structured_oracle(const RelationAlgebra &ra, const OracleResult &result, std::string_view network_name)
{
    auto j = header("oracle", ra.name());
    j["network"] = network_name;
    j["status"] = result.sat ? "sat" : "unsat";
    if (result.model)
        j["model"] = network_json(ra, result.model->as_network());
    if (result.assignment) {
        std::vector<int> one_based;
        for (int p : *result.assignment)
            one_based.push_back(p + 1);
        j["assignment"] = one_based;
    }
    return dump(j);
}

std::string text_oracle(const RelationAlgebra &, const OracleResult &result, std::string_view)
{
    std::ostringstream os;
    os << (result.sat ? "sat" : "unsat") << '\n';
    if (result.assignment) {
        os << "# model of " << result.model->size() << " points; assignment:";
        for (int p : *result.assignment)
            os << ' ' << p + 1;
        os << '\n';
    }
    return os.str();
}

std::string structured_probe(const ProbeSummary &s)
{
    auto j = header("probe", s.algebra);
    j["runs"] = json::array();
    for (const auto &r : s.runs)
        j["runs"].push_back({{"theorem", r.theorem}, {"reproduced", r.reproduced}, {"detail", r.detail}});
    j["skipped"] = s.skipped;
    return dump(j);
}

std::string text_probe(const ProbeSummary &s)
{
    std::ostringstream os;
    os << "algebra " << s.algebra << '\n';
    for (const auto &r : s.runs)
        os << "  theorem " << r.theorem << ": " << (r.reproduced ? "contradiction reproduced" : "SURVIVOR FOUND")
           << " (" << r.detail << ")\n";
    for (const auto &k : s.skipped)
        os << "  skipped: " << k << '\n';
    return os.str();
}

}  // namespace relalg
