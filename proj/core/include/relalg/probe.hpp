#pragma once

#include "relalg/algebra.hpp"
#include "relalg/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace relalg {

/// A tuple of atoms, one per coordinate.
using Configuration = std::vector<AtomId>;

/// How an operation acts on X-configurations: each k-tuple over the atom
/// subset X is sent to one atom.
class BehaviourMap {
public:
    BehaviourMap(Element domain, int arity, std::vector<AtomId> image);

    Element domain() const noexcept { return domain_; }
    int arity() const noexcept { return arity_; }
    /// Whether every coordinate of `c` lies in the domain.
    bool covers(const Configuration &c) const;
    AtomId operator()(const Configuration &c) const;

    /// Configurations in index order: coordinate 0 varies fastest over the
    /// domain's atoms in table order.
    const std::vector<AtomId> &table() const noexcept { return image_; }

    friend bool operator==(const BehaviourMap &, const BehaviourMap &) = default;

private:
    Element domain_;
    int arity_;
    std::vector<AtomId> domain_atoms_;
    std::vector<AtomId> image_;
};

struct BehaviourSearch {
    int arity = 0;
    int domain_size = 0;
    int rotation_classes = 0;
    /// Cyclic maps into the domain before any filtering: domain_size to the
    /// power rotation_classes, when that fits in 64 bits.
    std::optional<std::uint64_t> candidates;
    /// Those also satisfying conservativity.
    std::optional<std::uint64_t> conservative;
    std::vector<BehaviourMap> survivors;
    bool truncated = false;
};

inline constexpr int max_probe_domain = 4;
inline constexpr int max_probe_arity = 5;

/// Cyclic, conservative behaviour maps on X-configurations compatible with
/// every componentwise allowed triangle: images of three X-configurations
/// form an allowed triangle, and when only the third side leaves X some atom
/// below the union of its coordinates closes the triangle.
BehaviourSearch enumerate_cyclic_behaviours(const RelationAlgebra &ra, Element domain, int arity,
                                            std::size_t survivor_limit = 1'000'000);

struct Theorem6Probe {
    AtomId identity;
    AtomId atom;
    /// Diversity atoms b with (a,a,b) allowed: the third sides that close
    /// the second triangle instance.
    std::vector<AtomId> auxiliary;
    BehaviourSearch search;
    bool reproduced = false;
};

/// Replays the ternary cyclic contradiction on {id, a}. Needs a single
/// identity atom and a symmetric atom a outside it.
Theorem6Probe probe_theorem6(const RelationAlgebra &ra, AtomId a);

struct Case1Options {
    /// Drop the "union excludes the identity => images differ" rule. The
    /// remaining equality system is always consistent.
    bool disequalities = true;
};

struct Case1Probe {
    /// Three-point placements of c1, c1' (same class) and c2 (other class).
    int placements = 0;
    int candidates = 0;
    int eliminated = 0;
    bool reproduced = false;
};

/// Two classes: every cyclic ternary class function leads to an
/// inconsistent equality/disequality system on the images of
/// {c1,c1',c2}^3.
Case1Probe probe_theorem5_case1(const RelationAlgebra &ra, Element e, Case1Options options = {});

struct Case2Probe {
    int classes = 0;
    int arity = 0;
    /// Class indices of the explicit tuple and of its rotation.
    std::vector<int> pattern;
    std::vector<int> rotation;
    bool pattern_holds = false;
    /// A tuple disagreeing everywhere with its rotation, found by search.
    std::optional<std::vector<int>> searched;
    /// Exhaustive refutation over all cyclic class functions; only run for
    /// the smallest parameters.
    std::optional<std::uint64_t> enumerated_survivors;
    bool reproduced = false;
};

/// m >= 3 classes, prime arity p > m.
Case2Probe probe_theorem5_case2(int classes, int arity);

/// Finite template with binary relations over points 0..size-1.
struct Template {
    int size = 0;
    std::vector<std::vector<std::pair<int, int>>> relations;
};

/// The relations of a finite structure, one per atom of the algebra.
Template template_of(const RelationAlgebra &ra, const FiniteStructure &s);

struct CyclicOperation {
    int arity;
    int domain;
    /// Indexed by tuple, coordinate 0 least significant.
    std::vector<int> table;

    friend bool operator==(const CyclicOperation &, const CyclicOperation &) = default;
};

/// All cyclic operations of the arity preserving every relation. Domain and
/// arity at most 3. An empty relation constrains nothing.
std::vector<CyclicOperation> cyclic_polymorphism_search(const Template &t, int arity);

bool is_prime(int p);

}  // namespace relalg
