#include "relalg/algebra.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <sstream>

namespace relalg {

namespace {

Element universe_of(int n)
{
    return Element::from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

RelationAlgebra RelationAlgebra::make(std::string name, std::vector<std::string> atom_names, Element identity,
                                      std::vector<AtomId> converse_map, std::vector<Element> table)
{
    const auto n = atom_names.size();
    if (n == 0)
        throw MalformedAlgebra("algebra has no atoms");
    if (n > max_atoms)
        throw MalformedAlgebra("algebra has " + std::to_string(n) + " atoms; at most 64 are supported");
    if (converse_map.size() != n)
        throw MalformedAlgebra("converse map must have one entry per atom");
    if (table.size() != n * n)
        throw MalformedAlgebra("composition table must have one entry per atom pair");

    const auto universe = universe_of(static_cast<int>(n));
    if (identity.empty())
        throw MalformedAlgebra("identity must contain at least one atom");
    if (!identity.subset_of(universe))
        throw MalformedAlgebra("identity refers to atoms outside the universe");
    for (auto c : converse_map)
        if (c.value() >= static_cast<int>(n))
            throw MalformedAlgebra("converse map refers to an unknown atom");
    for (auto e : table)
        if (!e.subset_of(universe))
            throw MalformedAlgebra("composition table refers to an unknown atom");

    auto names = atom_names;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw MalformedAlgebra("duplicate atom name");

    RelationAlgebra ra;
    ra.name_ = std::move(name);
    ra.atom_names_ = std::move(atom_names);
    ra.identity_ = identity;
    ra.universe_ = universe;
    ra.converse_map_ = std::move(converse_map);
    ra.table_ = std::move(table);
    return ra;
}

std::optional<AtomId> RelationAlgebra::find_atom(std::string_view name) const
{
    for (std::size_t i = 0; i < atom_names_.size(); ++i)
        if (atom_names_[i] == name)
            return AtomId(static_cast<int>(i));
    return std::nullopt;
}

void RelationAlgebra::require(Element x) const
{
    if (!in_universe(x))
        throw UsageError("element " + std::to_string(x.bits()) + " does not belong to algebra '" + name_ + "'");
}

Element RelationAlgebra::join(Element x, Element y) const
{
    require(x);
    require(y);
    return x | y;
}

Element RelationAlgebra::meet(Element x, Element y) const
{
    require(x);
    require(y);
    return x & y;
}

Element RelationAlgebra::complement(Element x) const
{
    require(x);
    return universe_ - x;
}

bool RelationAlgebra::leq(Element x, Element y) const
{
    require(x);
    require(y);
    return x.subset_of(y);
}

Element RelationAlgebra::converse(Element x) const
{
    require(x);
    return converse_unchecked(x);
}

Element RelationAlgebra::compose(Element x, Element y) const
{
    require(x);
    require(y);
    return compose_unchecked(x, y);
}

Element RelationAlgebra::converse_unchecked(Element x) const noexcept
{
    Element out;
    for (auto b = x.bits(); b != 0; b &= b - 1)
        out |= Element::atom(converse_map_[std::countr_zero(b)]);
    return out;
}

Element RelationAlgebra::compose_unchecked(Element x, Element y) const noexcept
{
    const auto n = atom_names_.size();
    Element out;
    for (auto bx = x.bits(); bx != 0; bx &= bx - 1) {
        const auto row = static_cast<std::size_t>(std::countr_zero(bx)) * n;
        for (auto by = y.bits(); by != 0; by &= by - 1)
            out |= table_[row + std::countr_zero(by)];
        if (out == universe_)
            break;
    }
    return out;
}

std::string RelationAlgebra::format(Element x) const
{
    if (x.empty())
        return "0";
    if (x == universe_ && size() > 1)
        return "1";
    std::string out = "{";
    bool first = true;
    for (auto a : x.atoms()) {
        if (!first)
            out += ',';
        first = false;
        out += a.value() < size() ? atom_names_[a.index] : "?" + std::to_string(a.value());
    }
    return out + "}";
}

std::string_view to_string(Law law)
{
    switch (law) {
    case Law::converse_involution: return "converse-involution";
    case Law::identity_law: return "identity-law";
    case Law::associativity: return "associativity";
    case Law::converse_antidistribution: return "converse-antidistribution";
    case Law::cycle_law: return "cycle-law";
    }
    return "unknown";
}

ValidationReport validate(const RelationAlgebra &ra)
{
    ValidationReport report;
    const int n = ra.size();
    auto atom = [](int i) { return AtomId(i); };
    auto add = [&](Law law, std::vector<AtomId> witness, std::string detail) {
        for (const auto &v : report.violations)
            if (v.law == law)
                return;
        report.violations.push_back({law, std::move(witness), std::move(detail)});
    };

    for (int x = 0; x < n; ++x)
        if (ra.converse(ra.converse(atom(x))) != atom(x))
            add(Law::converse_involution, {atom(x)}, "converse of converse differs");

    for (int x = 0; x < n; ++x) {
        auto ex = Element::atom(atom(x));
        if (ra.compose(ra.identity(), ex) != ex || ra.compose(ex, ra.identity()) != ex)
            add(Law::identity_law, {atom(x)}, "identity does not act neutrally");
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto ex = Element::atom(atom(x));
                auto ey = Element::atom(atom(y));
                auto ez = Element::atom(atom(z));
                if (ra.compose(ra.compose(ex, ey), ez) != ra.compose(ex, ra.compose(ey, ez)))
                    add(Law::associativity, {atom(x), atom(y), atom(z)}, "(x;y);z differs from x;(y;z)");
            }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto lhs = ra.converse(ra.compose(atom(x), atom(y)));
            auto rhs = ra.compose(ra.converse(atom(y)), ra.converse(atom(x)));
            if (lhs != rhs)
                add(Law::converse_antidistribution, {atom(x), atom(y)}, "converse of x;y differs from y~;x~");
        }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const bool t0 = ra.allowed_triangle(atom(a), atom(b), atom(c));
                const bool t1 = ra.allowed_triangle(ra.converse(atom(a)), atom(c), atom(b));
                const bool t2 = ra.allowed_triangle(atom(c), ra.converse(atom(b)), atom(a));
                if (t0 != t1 || t0 != t2)
                    add(Law::cycle_law, {atom(a), atom(b), atom(c)}, "rotations of the triangle disagree");
            }

    return report;
}

std::string describe(const RelationAlgebra &ra, const Violation &v)
{
    std::ostringstream os;
    os << to_string(v.law) << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i)
            os << ',';
        os << (v.witness[i].value() < ra.size() ? ra.atom_name(v.witness[i]) : "?");
    }
    os << "): " << v.detail;
    return os.str();
}

InvalidAlgebra::InvalidAlgebra(const RelationAlgebra &ra, ValidationReport report)
    : std::runtime_error("algebra '" + ra.name() + "' fails validation: " +
                         (report.violations.empty() ? std::string{} : describe(ra, report.violations.front()))),
      report_(std::move(report))
{
}

void require_valid(const RelationAlgebra &ra)
{
    auto report = validate(ra);
    if (!report.ok())
        throw InvalidAlgebra(ra, std::move(report));
}

}  // namespace relalg
