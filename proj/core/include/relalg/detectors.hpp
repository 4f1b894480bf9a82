#pragma once

#include "relalg/algebra.hpp"
#include "relalg/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relalg {

inline constexpr int default_clique_bound = 8;

/// id <= e, e~ = e and e;e <= e.
bool is_equivalence_element(const RelationAlgebra &ra, Element e);

/// Least equivalence element above x.
Element equivalence_closure(const RelationAlgebra &ra, Element x);

/// Equivalence elements other than the identity and 1, sorted by mask.
/// Generated from closures of id+a for single atoms a, then closed under
/// joins.
std::vector<Element> nontrivial_equivalence_elements(const RelationAlgebra &ra);

/// Same set by sweeping every element above the identity. At most 16 atoms.
std::vector<Element> nontrivial_equivalence_elements_exhaustive(const RelationAlgebra &ra);

bool is_primitive(const RelationAlgebra &ra);

/// Number of classes of an equivalence element, read off the largest clique
/// of pairwise-inequivalent points the table admits.
struct ClassCount {
    enum class Kind { finite, at_least };

    Kind kind = Kind::finite;
    /// Finite: the exact count m. AtLeast: the bound K that was reached.
    int count = 1;
    /// An atomic closed network on `count` nodes, all off-diagonal labels
    /// below 1-e. For Finite(m) the solver also refuted m+1 nodes.
    std::optional<Network> certificate;

    bool finite() const noexcept { return kind == Kind::finite; }
    friend bool operator==(const ClassCount &, const ClassCount &) = default;
};

ClassCount class_count(const RelationAlgebra &ra, Element e, int bound = default_clique_bound);

struct Theorem5Evidence {
    Element equivalence;
    ClassCount classes;

    friend bool operator==(const Theorem5Evidence &, const Theorem5Evidence &) = default;
};

/// The first non-trivial equivalence element (mask order) with finitely many
/// classes, at least two. Inconclusive counts are appended to `notes`.
std::optional<Theorem5Evidence> detect_theorem5(const RelationAlgebra &ra, int bound = default_clique_bound,
                                                std::vector<std::string> *notes = nullptr);

/// Whether three pairwise distinct points fit together, i.e. a 3-node
/// network labelled with the complement of the identity is solvable.
bool domain_at_least_3(const RelationAlgebra &ra);

/// Symmetric atom a outside the identity with (a,a,a) forbidden, reported
/// only when the algebra is primitive and has at least three points.
std::optional<AtomId> detect_theorem6(const RelationAlgebra &ra);

struct EvenWalk {
    Element reach;
    /// Number of update steps applied, counting the final one that changed
    /// nothing.
    int iterations = 0;
};

/// Pairs joined by a walk of even length along a: the fixpoint of
/// L <- L + (a;a);L starting from id + a;a.
EvenWalk even_walk_closure(const RelationAlgebra &ra, AtomId a);

enum class Verdict { np_hard, unresolved };

struct HardnessReport {
    std::string algebra;
    bool primitive = false;
    bool domain_at_least_3 = false;
    std::vector<Element> equivalence_elements;
    std::optional<Theorem5Evidence> theorem5;
    std::optional<AtomId> theorem6;
    Verdict verdict = Verdict::unresolved;
    std::vector<std::string> notes;

    friend bool operator==(const HardnessReport &, const HardnessReport &) = default;
};

HardnessReport classify(const RelationAlgebra &ra, int bound = default_clique_bound);

}  // namespace relalg
