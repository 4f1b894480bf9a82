#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

inline constexpr int max_atoms = 64;

/// Position of an atom in its algebra's atom list.
struct AtomId {
    std::uint8_t index = 0;

    constexpr AtomId() = default;
    constexpr explicit AtomId(int i) : index(static_cast<std::uint8_t>(i)) {}

    constexpr int value() const noexcept { return index; }
    friend constexpr auto operator<=>(AtomId, AtomId) = default;
};

/// A union of atoms, stored as a bit mask over the atom universe.
class Element {
public:
    constexpr Element() = default;

    static constexpr Element from_bits(std::uint64_t bits) { return Element{bits}; }
    static constexpr Element atom(AtomId a) { return Element{std::uint64_t{1} << a.index}; }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool is_atom() const noexcept { return std::has_single_bit(bits_); }
    constexpr bool contains(AtomId a) const noexcept { return (bits_ >> a.index) & 1U; }
    constexpr bool subset_of(Element other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool meets(Element other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Lowest atom of a non-empty element.
    constexpr AtomId first() const noexcept { return AtomId(std::countr_zero(bits_)); }

    std::vector<AtomId> atoms() const
    {
        std::vector<AtomId> out;
        for (auto b = bits_; b != 0; b &= b - 1)
            out.emplace_back(std::countr_zero(b));
        return out;
    }

    friend constexpr Element operator|(Element x, Element y) { return Element{x.bits_ | y.bits_}; }
    friend constexpr Element operator&(Element x, Element y) { return Element{x.bits_ & y.bits_}; }
    friend constexpr Element operator-(Element x, Element y) { return Element{x.bits_ & ~y.bits_}; }
    constexpr Element &operator|=(Element y)
    {
        bits_ |= y.bits_;
        return *this;
    }
    constexpr Element &operator&=(Element y)
    {
        bits_ &= y.bits_;
        return *this;
    }
    friend constexpr auto operator<=>(Element, Element) = default;

private:
    constexpr explicit Element(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Raised by RelationAlgebra::make when the table is not even structurally
/// usable (sizes, ranges, empty identity, atom cap).
class MalformedAlgebra : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite relation algebra given by its atoms, identity, converse map and
/// atom-level composition table. Non-atomic composition is lifted atomwise.
/// Immutable once built.
class RelationAlgebra {
public:
    /// `table[i * n + j]` is the composition of atom i with atom j.
    static RelationAlgebra make(std::string name, std::vector<std::string> atom_names, Element identity,
                                std::vector<AtomId> converse_map, std::vector<Element> table);

    const std::string &name() const noexcept { return name_; }
    int size() const noexcept { return static_cast<int>(atom_names_.size()); }
    const std::string &atom_name(AtomId a) const { return atom_names_.at(a.index); }
    const std::vector<std::string> &atom_names() const noexcept { return atom_names_; }
    std::optional<AtomId> find_atom(std::string_view name) const;

    Element zero() const noexcept { return {}; }
    Element one() const noexcept { return universe_; }
    Element identity() const noexcept { return identity_; }
    bool is_identity_atom(AtomId a) const noexcept { return identity_.contains(a); }
    bool in_universe(Element x) const noexcept { return x.subset_of(universe_); }

    Element join(Element x, Element y) const;
    Element meet(Element x, Element y) const;
    Element complement(Element x) const;
    bool leq(Element x, Element y) const;

    AtomId converse(AtomId a) const { return converse_map_[a.index]; }
    Element converse(Element x) const;

    Element compose(AtomId a, AtomId b) const { return table_[a.index * atom_names_.size() + b.index]; }
    Element compose(Element x, Element y) const;

    /// Whether a triangle x->y labelled a, y->z labelled b, x->z labelled c
    /// is consistent with the table, i.e. c <= a;b.
    bool allowed_triangle(AtomId a, AtomId b, AtomId c) const { return compose(a, b).contains(c); }

    /// Renders an element as `{x,y}`; `0` and `1` for the bounds.
    std::string format(Element x) const;

    /// Unchecked counterparts used on hot paths where masks are known to lie
    /// in the universe.
    Element compose_unchecked(Element x, Element y) const noexcept;
    Element converse_unchecked(Element x) const noexcept;

    friend bool operator==(const RelationAlgebra &, const RelationAlgebra &) = default;

private:
    RelationAlgebra() = default;
    void require(Element x) const;

    std::string name_;
    std::vector<std::string> atom_names_;
    Element identity_;
    Element universe_;
    std::vector<AtomId> converse_map_;
    std::vector<Element> table_;
};

enum class Law {
    converse_involution,
    identity_law,
    associativity,
    converse_antidistribution,
    cycle_law,
};

std::string_view to_string(Law law);

/// One failed law with the atoms that witness it.
struct Violation {
    Law law;
    std::vector<AtomId> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks the atom-level relation algebra laws. Each violated law is
/// reported once with its first witness in atom order.
ValidationReport validate(const RelationAlgebra &algebra);

class InvalidAlgebra : public std::runtime_error {
public:
    InvalidAlgebra(const RelationAlgebra &algebra, ValidationReport report);

    const ValidationReport &report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Throws InvalidAlgebra unless validate() passes.
void require_valid(const RelationAlgebra &algebra);

std::string describe(const RelationAlgebra &algebra, const Violation &violation);

}  // namespace relalg
