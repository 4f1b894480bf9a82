#include "relalg/catalog.hpp"

#include "relalg/error.hpp"
#include "relalg/io.hpp"

#include <array>

namespace relalg {

namespace {

constexpr std::string_view ra13 = R"(# Andreka-Maddux #13: id + a is an equivalence with two classes
algebra 13
atoms id a b
identity id
comp a a = id a
comp a b = b
comp b a = b
comp b b = id a
)";

constexpr std::string_view ra17 = R"(# Andreka-Maddux #17: the Henson graph, a = edge, b = non-edge
algebra 17
atoms id a b
identity id
comp a a = id b
comp a b = a b
comp b a = a b
comp b b = id a b
)";

constexpr std::string_view eq_universal = R"(# equality and inequality on an infinite set
algebra eq-universal
atoms id a
identity id
comp a a = id a
)";

constexpr std::string_view two_point = R"(# equality and inequality on a two-element set
algebra two-point
atoms id b
identity id
comp b b = id
)";

constexpr std::string_view mut13_ab_id = R"(# #13 with a;b rewritten to id
algebra 13-ab-id
atoms id a b
identity id
comp a a = id a
comp a b = id
comp b a = b
comp b b = id a
)";

constexpr std::string_view mut13_aa_no_id = R"(# #13 with id dropped from a;a
algebra 13-aa-no-id
atoms id a b
identity id
comp a a = a
comp a b = b
comp b a = b
comp b b = id a
)";

constexpr std::string_view mut13_id_a = R"(# #13 with id;a widened to a + b
algebra 13-id-a
atoms id a b
identity id
comp id a = a b
comp a a = id a
comp a b = b
comp b a = b
comp b b = id a
)";

constexpr std::string_view mut17_bb_no_id = R"(# #17 with id dropped from b;b
algebra 17-bb-no-id
atoms id a b
identity id
comp a a = id b
comp a b = a b
comp b a = a b
comp b b = a b
)";

constexpr std::string_view mut17_ba = R"(# #17 with b;a no longer the converse of a;b
algebra 17-ba
atoms id a b
identity id
comp a a = id b
comp a b = a b
comp b a = a
comp b b = id a b
)";

constexpr std::string_view mut13_swap_converse = R"(# #13 with converse exchanging id and a
algebra 13-conv
atoms id a b
identity id
converse id=a a=id
comp a a = id a
comp a b = b
comp b a = b
comp b b = id a
)";

constexpr std::array<CatalogEntry, 10> entries{{
    {"13", "id + a is an equivalence with two classes", ra13, true},
    {"17", "triangle-free graphs, (a,a,a) forbidden", ra17, true},
    {"eq-universal", "equality and inequality, a;a = 1", eq_universal, true},
    {"two-point", "two-element set, b;b = id", two_point, true},
    {"13-ab-id", "negative control", mut13_ab_id, false},
    {"13-aa-no-id", "negative control", mut13_aa_no_id, false},
    {"13-id-a", "negative control", mut13_id_a, false},
    {"13-conv", "negative control", mut13_swap_converse, false},
    {"17-bb-no-id", "negative control", mut17_bb_no_id, false},
    {"17-ba", "negative control", mut17_ba, false},
}};

}  // namespace

std::span<const CatalogEntry> catalog()
{
    return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name)
{
    for (const auto &e : entries)
        if (e.name == name)
            return e;
    return std::nullopt;
}

RelationAlgebra catalog_algebra(std::string_view name)
{
    auto entry = find_catalog_entry(name);
    if (!entry)
        throw UsageError("no built-in algebra named '" + std::string(name) + "'");
    if (!entry->valid)
        throw UsageError("'" + std::string(name) + "' is a negative control and does not validate");
    return parse_algebra(entry->text);
}

}  // namespace relalg
