#include "support.hpp"

#include "relalg/error.hpp"
#include "relalg/io.hpp"
#include "relalg/report.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace relalg;
using namespace relalg::test;

namespace {

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::filesystem::path data_dir{RELALG_DATA_DIR};

}  // namespace

TEST_CASE("parse_algebra reads the shipped tables")
{
    auto r13 = parse_algebra(slurp(data_dir / "algebras" / "13.ra"));
    CHECK(r13.compose(el(r13, {"a"}), el(r13, {"a"})) == el(r13, {"id", "a"}));
    auto r17 = parse_algebra(slurp(data_dir / "algebras" / "17.ra"));
    CHECK(r17.compose(el(r17, {"b"}), el(r17, {"b"})) == r17.one());
}

TEST_CASE("every catalog entry ships as a data file with the same text")
{
    for (const auto &entry : catalog()) {
        CAPTURE(entry.name);
        auto path = data_dir / "algebras" / (std::string(entry.name) + ".ra");
        REQUIRE(std::filesystem::exists(path));
        CHECK(slurp(path) == entry.text);
    }
}

TEST_CASE("parse errors carry a position")
{
    const std::string undeclared = "algebra x\natoms id a\nidentity id\ncomp a a = id c\n";
    try {
        parse_algebra(undeclared);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 15);
        CHECK(std::string(e.what()).find("'c'") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_algebra("atoms id a\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra x\natoms id a\nidentity id\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra x\natoms id a\nidentity id\ncomp a a = id\ncomp a a = a\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra x\natoms id a\nidentity id\nconverse a=q\ncomp a a = id\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra x\natoms id a\nidentity id\nfrobnicate\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra x\natoms id id\nidentity id\n"), ParseError);
}

TEST_CASE("parse_algebra rejects tables that fail validation")
{
    CHECK_THROWS_AS(parse_algebra(find_catalog_entry("13-ab-id")->text), InvalidAlgebra);
    try {
        parse_algebra(find_catalog_entry("17-ba")->text);
    } catch (const InvalidAlgebra &e) {
        CHECK_FALSE(e.report().ok());
    }
}

TEST_CASE("more than 64 atoms is refused")
{
    std::string text = "algebra big\natoms";
    for (int i = 0; i < 65; ++i)
        text += " x" + std::to_string(i);
    text += "\nidentity x0\n";
    CHECK_THROWS(parse_algebra(text));
}

TEST_CASE("identity entries default only for a single identity atom")
{
    const std::string two_ids = "algebra d\natoms p q\nidentity p q\ncomp p p = p\ncomp q q = q\n";
    CHECK_THROWS_AS(parse_algebra(two_ids), ParseError);
    const std::string full = two_ids + "comp p q = 0\ncomp q p = 0\n";
    auto ra = parse_algebra(full);
    CHECK(ra.identity() == ra.one());
}

TEST_CASE("print_algebra round-trips")
{
    for (const auto &entry : catalog()) {
        auto ra = parse_algebra_unchecked(entry.text);
        auto again = parse_algebra_unchecked(print_algebra(ra));
        CHECK(again == ra);
        CHECK(print_algebra(again) == print_algebra(ra));
    }
    for (const auto &ra : small_integral_algebras())
        CHECK(parse_algebra(print_algebra(ra)) == ra);
}

TEST_CASE("parse_network")
{
    const auto &ra = ra17();
    auto tri = parse_network(slurp(data_dir / "networks" / "triangle.net"), ra);
    CHECK(tri.name == "triangle");
    CHECK(tri.network.node_count() == 3);
    CHECK(tri.network.at(0, 1) == el(ra, {"a"}));
    CHECK(tri.network.at(1, 2) == el(ra, {"a"}));
    CHECK(tri.network.at(0, 2) == el(ra, {"a"}));
    CHECK(tri.network.at(2, 0) == ra.one());
    CHECK_FALSE(solve(ra, tri.network).sat());

    auto blank = parse_network("network blank nodes 3\n", ra);
    CHECK(blank.network == Network(3, ra.one()));

    auto dflt = parse_network("network d nodes 2\ndefault b\n1 2 a\n", ra);
    CHECK(dflt.network.at(0, 1) == el(ra, {"a"}));
    CHECK(dflt.network.at(1, 0) == el(ra, {"b"}));

    auto bounds = parse_network("network z nodes 2\n1 2 0\n2 1 1\n", ra);
    CHECK(bounds.network.at(0, 1) == ra.zero());
    CHECK(bounds.network.at(1, 0) == ra.one());

    CHECK_THROWS_AS(parse_network("network d nodes 2\n1 2 a\n1 2 b\n", ra), ParseError);
    CHECK_THROWS_AS(parse_network("network d nodes 2\n1 3 a\n", ra), ParseError);
    CHECK_THROWS_AS(parse_network("network d nodes 2\n1 2 c\n", ra), ParseError);
    CHECK_THROWS_AS(parse_network("network d nodes 2\n0 2 a\n", ra), ParseError);
    CHECK_THROWS_AS(parse_network("nodes 2\n", ra), ParseError);
}

TEST_CASE("print_network round-trips")
{
    std::mt19937 rng(5);
    for (const auto *ra : {&ra13(), &ra17()})
        for (int n = 1; n <= 6; ++n) {
            auto net = random_network(*ra, n, rng);
            net.set(0, 0, ra->zero());
            auto back = parse_network(print_network(*ra, net, "r"), *ra);
            CHECK(back.name == "r");
            CHECK(back.network == net);
        }
}

TEST_CASE("structured hardness reports round-trip")
{
    for (const auto *ra : {&ra13(), &ra17(), &eq_universal(), &two_point()}) {
        auto report = classify(*ra);
        auto text = structured_hardness(*ra, report);
        CHECK(parse_structured_hardness(*ra, text) == report);
        auto j = nlohmann::json::parse(text);
        CHECK(j.at("schema") == report_schema);
        CHECK(j.at("command") == "classify");
    }
}

TEST_CASE("structured readers ignore unknown fields")
{
    auto report = classify(ra13());
    auto j = nlohmann::json::parse(structured_hardness(ra13(), report));
    j["future_field"] = {{"x", 1}};
    CHECK(parse_structured_hardness(ra13(), j.dump()) == report);
    j["schema"] = "relalg-report/v0";
    CHECK_THROWS_AS(parse_structured_hardness(ra13(), j.dump()), UsageError);
}

TEST_CASE("structured solve, check and oracle reports")
{
    const auto &ra = ra17();
    auto net = Network::complete(3, el(ra, {"a"}), ra.one());
    auto j = nlohmann::json::parse(structured_solve(ra, solve(ra, net), "t"));
    CHECK(j.at("status") == "unsat");
    CHECK(j.at("witness").is_null());

    auto k = nlohmann::json::parse(structured_check(ra, validate(ra)));
    CHECK(k.at("valid") == true);
    auto bad = parse_algebra_unchecked(find_catalog_entry("17-ba")->text);
    auto kb = nlohmann::json::parse(structured_check(bad, validate(bad)));
    CHECK(kb.at("valid") == false);
    CHECK_FALSE(kb.at("violations").empty());

    auto o = nlohmann::json::parse(structured_oracle(ra, oracle_solve(ra, Network(2, ra.one())), "o"));
    CHECK(o.at("status") == "sat");
    CHECK(o.at("assignment").size() == 2);
}

TEST_CASE("text solve prints a reparsable witness")
{
    const auto &ra = ra13();
    auto net = Network::complete(3, ra.one() - ra.identity(), ra.one());
    auto r = solve(ra, net);
    auto text = text_solve(ra, r, "w", true);
    REQUIRE(text.rfind("sat\n", 0) == 0);
    auto w = parse_network(text.substr(4), ra);
    CHECK(w.network == *r.witness);
}
