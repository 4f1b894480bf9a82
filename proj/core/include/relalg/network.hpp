#pragma once

#include "relalg/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace relalg {

/// A finite set of nodes with an algebra element on every ordered pair.
/// Raw networks need not be converse-consistent; see normalize().
class Network {
public:
    Network() = default;
    /// All labels, including the diagonal, start at `fill`.
    Network(int node_count, Element fill);

    /// Off-diagonal pairs get `off_diagonal`, the diagonal gets `diagonal`.
    static Network complete(int node_count, Element off_diagonal, Element diagonal);

    int node_count() const noexcept { return nodes_; }
    Element at(int x, int y) const { return labels_[index(x, y)]; }
    void set(int x, int y, Element label) { labels_[index(x, y)] = label; }
    /// Sets (x,y) and (y,x) consistently.
    void set_symmetric(const RelationAlgebra &ra, int x, int y, Element label);

    const std::vector<Element> &labels() const noexcept { return labels_; }
    std::vector<Element> &labels() noexcept { return labels_; }

    /// Pointwise inclusion of labels.
    bool refines(const Network &coarser) const;

    /// Nodes renamed by `perm`: node i of *this becomes node perm[i].
    Network permuted(const std::vector<int> &perm) const;

    friend bool operator==(const Network &, const Network &) = default;

private:
    std::size_t index(int x, int y) const;

    int nodes_ = 0;
    std::vector<Element> labels_;
};

/// Facts of an edge-labelled structure: `label` holds on (from, to).
struct StructureFact {
    int from;
    int to;
    Element label;
};

struct LabeledStructure {
    int size = 0;
    std::vector<StructureFact> facts;
};

/// Each pair gets the union of the relations holding on it, or 1 if none do.
Network from_structure(const RelationAlgebra &ra, const LabeledStructure &structure);

/// Where propagation ran dry. `via` is the middle node of the offending
/// triangle, or -1 when the empty label came from normalization.
struct Inconsistency {
    int from;
    int via;
    int to;
};

using Propagated = std::variant<Network, Inconsistency>;

inline bool consistent(const Propagated &p) { return std::holds_alternative<Network>(p); }

/// Intersects each label with the converse of its mirror and each diagonal
/// label with the identity.
Propagated normalize(const RelationAlgebra &ra, Network net);

/// Greatest fixpoint of label(x,z) <- label(x,z) & label(x,y);label(y,z)
/// over all triples, computed with a worklist of shrunk pairs. Expects a
/// normalized network.
Propagated closure(const RelationAlgebra &ra, Network net);

/// Every label a single atom (identity atoms on the diagonal) and every
/// oriented triple an allowed triangle.
bool is_atomic_closed(const RelationAlgebra &ra, const Network &net);

enum class SolveStatus { sat, unsat };

struct SolveStats {
    std::uint64_t branches = 0;
    std::uint64_t dead_ends = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::unsat;
    /// Atomic closed refinement of the normalized input; present iff sat.
    std::optional<Network> witness;
    /// Set when the input failed before any branching.
    std::optional<Inconsistency> conflict;
    SolveStats stats;

    bool sat() const noexcept { return status == SolveStatus::sat; }
};

struct SolveOptions {
    /// Run closure after every branching decision. When off, the search
    /// enumerates atomic refinements and only checks closedness at leaves;
    /// this exists to cross-check the propagator.
    bool propagate = true;
};

/// Decides whether the network has an atomic closed refinement. This is
/// satisfiability whenever the algebra has a fully universal square
/// representation.
SolveResult solve(const RelationAlgebra &ra, const Network &net, SolveOptions options = {});

}  // namespace relalg
