#include "support.hpp"

#include "relalg/error.hpp"
#include "relalg/io.hpp"

#include <doctest.h>

using namespace relalg;
using namespace relalg::test;

TEST_CASE("union")
{
    const auto &ra = ra13();
    CHECK(ra.join(el(ra, {"a"}), el(ra, {"b"})) == el(ra, {"a", "b"}));
    for (auto x : all_elements(ra))
        CHECK(ra.join(x, ra.zero()) == x);
    // id + a is "not b"
    CHECK(ra.join(ra.identity(), el(ra, {"a"})) == ra.complement(el(ra, {"b"})));
    CHECK_THROWS_AS(ra.join(Element::from_bits(8), el(ra, {"a"})), UsageError);
}

TEST_CASE("complement")
{
    const auto &ra = ra13();
    CHECK(ra.complement(ra.zero()) == ra.one());
    CHECK(ra.complement(el(ra, {"b"})) == el(ra, {"id", "a"}));
    for (auto x : all_elements(ra))
        CHECK(ra.complement(ra.complement(x)) == x);
}

TEST_CASE("converse")
{
    for (const auto *ra : {&ra13(), &ra17()}) {
        CHECK(ra->converse(ra->identity()) == ra->identity());
        for (auto x : all_elements(*ra))
            for (auto y : all_elements(*ra))
                CHECK(ra->converse(ra->join(x, y)) == ra->join(ra->converse(x), ra->converse(y)));
    }
    CHECK(ra17().converse(el(ra17(), {"a"})) == el(ra17(), {"a"}));
}

TEST_CASE("compose")
{
    CHECK(ra13().compose(el(ra13(), {"a"}), el(ra13(), {"a"})) == el(ra13(), {"id", "a"}));
    CHECK(ra17().compose(el(ra17(), {"a"}), el(ra17(), {"b"})) == el(ra17(), {"a", "b"}));
    for (auto x : all_elements(ra13()))
        CHECK(ra13().compose(x, ra13().zero()) == ra13().zero());
}

TEST_CASE("leq")
{
    for (auto x : all_elements(ra13()))
        CHECK(ra13().leq(ra13().zero(), x));
    const auto &r17 = ra17();
    CHECK_FALSE(r17.leq(el(r17, {"a"}), r17.compose(el(r17, {"a"}), el(r17, {"a"}))));
    const auto &r13 = ra13();
    CHECK(r13.leq(el(r13, {"b"}), r13.compose(el(r13, {"a"}), el(r13, {"b"}))));
}

TEST_CASE("allowed_triangle")
{
    CHECK_FALSE(ra17().allowed_triangle(at(ra17(), "a"), at(ra17(), "a"), at(ra17(), "a")));
    CHECK_FALSE(ra13().allowed_triangle(at(ra13(), "b"), at(ra13(), "b"), at(ra13(), "b")));
    for (const auto *ra : {&ra13(), &ra17()})
        for (int x = 0; x < ra->size(); ++x)
            CHECK(ra->allowed_triangle(at(*ra, "id"), AtomId(x), AtomId(x)));
}

TEST_CASE("multiplication tables reproduce every cell")
{
    // rows/cols id, a, b; "not b" = {id,a}, "not a" = {id,b}, 0' = {a,b}
    const auto &r13 = ra13();
    const char *atoms[] = {"id", "a", "b"};
    const Element t13[3][3] = {
        {el(r13, {"id"}), el(r13, {"a"}), el(r13, {"b"})},
        {el(r13, {"a"}), el(r13, {"id", "a"}), el(r13, {"b"})},
        {el(r13, {"b"}), el(r13, {"b"}), el(r13, {"id", "a"})},
    };
    const auto &r17 = ra17();
    const Element t17[3][3] = {
        {el(r17, {"id"}), el(r17, {"a"}), el(r17, {"b"})},
        {el(r17, {"a"}), el(r17, {"id", "b"}), el(r17, {"a", "b"})},
        {el(r17, {"b"}), el(r17, {"a", "b"}), r17.one()},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(r13.compose(at(r13, atoms[i]), at(r13, atoms[j])) == t13[i][j]);
            CHECK(r17.compose(at(r17, atoms[i]), at(r17, atoms[j])) == t17[i][j]);
        }
}

TEST_CASE("validate accepts the catalog and rejects the negative controls with a witness")
{
    int controls = 0;
    for (const auto &entry : catalog()) {
        auto ra = parse_algebra_unchecked(entry.text);
        auto report = validate(ra);
        CAPTURE(entry.name);
        CHECK(report.ok() == entry.valid);
        if (!entry.valid) {
            ++controls;
            REQUIRE_FALSE(report.violations.empty());
            CHECK_FALSE(report.violations.front().witness.empty());
        }
    }
    CHECK(controls >= 5);
}

TEST_CASE("a;b rewritten to id fails associativity or the cycle law")
{
    auto ra = parse_algebra_unchecked(find_catalog_entry("13-ab-id")->text);
    auto report = validate(ra);
    bool found = false;
    for (const auto &v : report.violations)
        if (v.law == Law::associativity || v.law == Law::cycle_law) {
            found = true;
            CHECK(v.witness.size() == 3);
        }
    CHECK(found);
}

TEST_CASE("a non-involutive converse is reported")
{
    auto ra = RelationAlgebra::make("bad", {"id", "a", "b", "c"}, Element::from_bits(1),
                                    {AtomId(0), AtomId(2), AtomId(3), AtomId(1)},
                                    std::vector<Element>(16, Element::from_bits(15)));
    auto report = validate(ra);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().law == Law::converse_involution);
}

TEST_CASE("structural problems are rejected at construction")
{
    CHECK_THROWS_AS(RelationAlgebra::make("x", {}, Element{}, {}, {}), MalformedAlgebra);
    CHECK_THROWS_AS(RelationAlgebra::make("x", {"id"}, Element{}, {AtomId(0)}, {Element::from_bits(1)}),
                    MalformedAlgebra);
    CHECK_THROWS_AS(RelationAlgebra::make("x", {"id"}, Element::from_bits(1), {AtomId(0)}, {}), MalformedAlgebra);
    CHECK_THROWS_AS(RelationAlgebra::make("x", {"id"}, Element::from_bits(1), {AtomId(0)}, {Element::from_bits(2)}),
                    MalformedAlgebra);
    CHECK_THROWS_AS(RelationAlgebra::make("x", {"id", "id"}, Element::from_bits(1), {AtomId(0), AtomId(1)},
                                          std::vector<Element>(4, Element::from_bits(1))),
                    MalformedAlgebra);
    std::vector<std::string> names;
    for (int i = 0; i < 65; ++i)
        names.push_back("x" + std::to_string(i));
    CHECK_THROWS_AS(RelationAlgebra::make("big", names, Element::from_bits(1), std::vector<AtomId>(65), {}),
                    MalformedAlgebra);
}

TEST_CASE("a 64-atom algebra fits one word")
{
    // the diagonal algebra: 64 identity atoms, i;i = i, i;j = 0
    std::vector<std::string> names;
    std::vector<AtomId> conv;
    std::vector<Element> table(64 * 64);
    for (int i = 0; i < 64; ++i) {
        names.push_back("i" + std::to_string(i));
        conv.emplace_back(i);
        table[i * 64 + i] = Element::atom(AtomId(i));
    }
    auto ra = RelationAlgebra::make("diag64", names, Element::from_bits(~std::uint64_t{0}), conv, table);
    CHECK(ra.one().size() == 64);
    CHECK(validate(ra).ok());
    CHECK(ra.compose(ra.one(), ra.one()) == ra.one());
}

TEST_CASE("lattice laws over the catalog, exhaustively")
{
    for (const auto *ra : {&ra13(), &ra17(), &eq_universal(), &two_point()}) {
        auto elems = all_elements(*ra);
        for (auto x : elems) {
            CHECK(ra->converse(ra->converse(x)) == x);
            for (auto y : elems) {
                CHECK(ra->converse(ra->compose(x, y)) == ra->compose(ra->converse(y), ra->converse(x)));
                for (auto z : elems) {
                    CHECK(ra->compose(ra->join(x, y), z) == ra->join(ra->compose(x, z), ra->compose(y, z)));
                    CHECK(ra->compose(z, ra->join(x, y)) == ra->join(ra->compose(z, x), ra->compose(z, y)));
                    if (ra->leq(x, y)) {
                        CHECK(ra->leq(ra->compose(x, z), ra->compose(y, z)));
                        CHECK(ra->leq(ra->compose(z, x), ra->compose(z, y)));
                    }
                }
            }
        }
    }
}

TEST_CASE("single-entry mutations of validated tables are caught or stay lawful")
{
    // every one-bit flip of #13 and #17: whatever validate accepts must
    // satisfy associativity on all element triples, not just atoms
    for (const auto *base : {&ra13(), &ra17()}) {
        const int n = base->size();
        for (int cell = 0; cell < n * n; ++cell)
            for (int bit = 0; bit < n; ++bit) {
                std::vector<Element> table;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        table.push_back(base->compose(AtomId(a), AtomId(b)));
                table[cell] = Element::from_bits(table[cell].bits() ^ (1U << bit));
                std::vector<AtomId> conv;
                for (int a = 0; a < n; ++a)
                    conv.push_back(base->converse(AtomId(a)));
                auto ra = RelationAlgebra::make("m", base->atom_names(), base->identity(), conv, table);
                if (!validate(ra).ok())
                    continue;
                for (auto x : all_elements(ra))
                    for (auto y : all_elements(ra))
                        for (auto z : all_elements(ra))
                            CHECK(ra.compose(ra.compose(x, y), z) == ra.compose(x, ra.compose(y, z)));
            }
    }
}

TEST_CASE("the small-algebra sweep finds the catalog members")
{
    const auto &sweep = small_integral_algebras();
    auto has = [&](const RelationAlgebra &target) {
        for (const auto &ra : sweep) {
            bool same = ra.size() == target.size();
            for (int a = 0; same && a < ra.size(); ++a) {
                same = ra.converse(AtomId(a)) == target.converse(AtomId(a));
                for (int b = 0; same && b < ra.size(); ++b)
                    same = ra.compose(AtomId(a), AtomId(b)) == target.compose(AtomId(a), AtomId(b));
            }
            if (same)
                return true;
        }
        return false;
    };
    CHECK(has(ra13()));
    CHECK(has(ra17()));
    CHECK(has(eq_universal()));
    CHECK(has(two_point()));
}
