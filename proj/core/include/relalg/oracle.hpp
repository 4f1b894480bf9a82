#pragma once

#include "relalg/algebra.hpp"
#include "relalg/network.hpp"

#include <optional>
#include <vector>

namespace relalg {

/// A complete atomic closed network read as a finite model: one atom on
/// every ordered pair of points.
class FiniteStructure {
public:
    FiniteStructure() = default;
    FiniteStructure(int size, std::vector<AtomId> atom_of);

    int size() const noexcept { return size_; }
    AtomId at(int x, int y) const { return atom_of_[static_cast<std::size_t>(x) * size_ + y]; }
    const std::vector<AtomId> &atoms() const noexcept { return atom_of_; }

    Network as_network() const;

    friend bool operator==(const FiniteStructure &, const FiniteStructure &) = default;

private:
    int size_ = 0;
    std::vector<AtomId> atom_of_;
};

/// Identity atoms on the diagonal, converse-consistent, all triples allowed.
bool is_model(const RelationAlgebra &ra, const FiniteStructure &s);

/// Two equivalence classes of sizes n1 and n2: the within-class atom on
/// distinct points of one class, the across atom between classes. The
/// algebra must have the three-atom shape id, w, x with w;w = id+w,
/// w;x = x;w = x and x;x = id+w.
FiniteStructure build_two_classes(const RelationAlgebra &ra, int n1, int n2);

/// All labelled triangle-free graphs on n vertices (n <= 6), edges as the
/// forbidden-triangle atom and non-edges as the other diversity atom. The
/// algebra must have the shape id, e, f with e;e = id+f, e;f = f;e = e+f and
/// f;f = 1.
std::vector<FiniteStructure> enumerate_triangle_free(const RelationAlgebra &ra, int n);

/// Every model on exactly n points whose off-diagonal atoms avoid the
/// identity. No isomorphism reduction.
std::vector<FiniteStructure> enumerate_models(const RelationAlgebra &ra, int n, int max_points = 5);

/// An assignment of network nodes to points respecting every label.
std::optional<std::vector<int>> brute_force_satisfiable(const Network &net, const FiniteStructure &s);

inline constexpr int default_oracle_nodes = 4;

struct OracleResult {
    bool sat = false;
    std::optional<FiniteStructure> model;
    std::optional<std::vector<int>> assignment;
};

/// Ground truth by search over all models with at most as many points as
/// the network has nodes.
OracleResult oracle_solve(const RelationAlgebra &ra, const Network &net, int max_nodes = default_oracle_nodes);

}  // namespace relalg
