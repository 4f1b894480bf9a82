#pragma once

// Test-only helpers: catalog shortcuts, generators, and reference
// implementations that deliberately avoid the library's fast paths.

#include "relalg/algebra.hpp"
#include "relalg/catalog.hpp"
#include "relalg/network.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace relalg::test {

inline const RelationAlgebra &ra13()
{
    static const auto ra = catalog_algebra("13");
    return ra;
}

inline const RelationAlgebra &ra17()
{
    static const auto ra = catalog_algebra("17");
    return ra;
}

inline const RelationAlgebra &eq_universal()
{
    static const auto ra = catalog_algebra("eq-universal");
    return ra;
}

inline const RelationAlgebra &two_point()
{
    static const auto ra = catalog_algebra("two-point");
    return ra;
}

inline Element el(const RelationAlgebra &ra, std::initializer_list<const char *> names)
{
    Element x;
    for (auto n : names)
        x |= Element::atom(ra.find_atom(n).value());
    return x;
}

inline AtomId at(const RelationAlgebra &ra, const char *name) { return ra.find_atom(name).value(); }

/// Every element of an algebra with few atoms.
inline std::vector<Element> all_elements(const RelationAlgebra &ra)
{
    std::vector<Element> out;
    for (std::uint64_t b = 0; b <= ra.one().bits(); ++b)
        out.push_back(Element::from_bits(b));
    return out;
}

inline std::vector<Element> nonzero_elements(const RelationAlgebra &ra)
{
    auto all = all_elements(ra);
    all.erase(all.begin());
    return all;
}

/// All validated algebras with a single identity atom and at most two
/// further atoms, built by sweeping every composition table.
inline const std::vector<RelationAlgebra> &small_integral_algebras()
{
    static const std::vector<RelationAlgebra> algebras = [] {
        std::vector<RelationAlgebra> out;
        // two atoms: id, a
        for (std::uint64_t aa = 0; aa < 4; ++aa) {
            auto ra = RelationAlgebra::make("sweep2-" + std::to_string(aa), {"id", "a"}, Element::from_bits(1),
                                            {AtomId(0), AtomId(1)},
                                            {Element::from_bits(1), Element::from_bits(2), Element::from_bits(2),
                                             Element::from_bits(aa)});
            if (validate(ra).ok())
                out.push_back(std::move(ra));
        }
        // three atoms: id, a, b; either both symmetric or b = a~
        for (int swapped = 0; swapped < 2; ++swapped)
            for (std::uint64_t code = 0; code < 8 * 8 * 8 * 8; ++code) {
                auto entry = [&](int i) { return Element::from_bits((code >> (3 * i)) & 7); };
                std::vector<AtomId> conv = swapped ? std::vector{AtomId(0), AtomId(2), AtomId(1)}
                                                   : std::vector{AtomId(0), AtomId(1), AtomId(2)};
                std::vector<Element> table{
                    Element::from_bits(1), Element::from_bits(2), Element::from_bits(4),
                    Element::from_bits(2), entry(0),              entry(1),
                    Element::from_bits(4), entry(2),              entry(3),
                };
                auto ra = RelationAlgebra::make("sweep3-" + std::to_string(swapped) + "-" + std::to_string(code),
                                                {"id", "a", "b"}, Element::from_bits(1), conv, table);
                if (validate(ra).ok())
                    out.push_back(std::move(ra));
            }
        return out;
    }();
    return algebras;
}

/// Path consistency by repeated full sweeps over all triples. Returns the
/// fixpoint or nullopt if a label empties.
inline std::optional<Network> naive_closure(const RelationAlgebra &ra, Network net)
{
    const int n = net.node_count();
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    auto bound = Element{};
                    for (auto a : net.at(x, y).atoms())
                        for (auto b : net.at(y, z).atoms())
                            bound |= ra.compose(a, b);
                    auto narrowed = net.at(x, z) & bound;
                    if (narrowed != net.at(x, z)) {
                        net.set(x, z, narrowed);
                        changed = true;
                    }
                    if (narrowed.empty())
                        return std::nullopt;
                }
    }
    return net;
}

/// Random network with converse-consistent non-zero labels off the
/// diagonal and 1 on the diagonal.
inline Network random_network(const RelationAlgebra &ra, int n, std::mt19937 &rng)
{
    std::uniform_int_distribution<std::uint64_t> pick(1, ra.one().bits());
    Network net(n, ra.one());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            net.set_symmetric(ra, x, y, Element::from_bits(pick(rng)));
    return net;
}

}  // namespace relalg::test
