#pragma once

#include "relalg/algebra.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace relalg {

struct CatalogEntry {
    std::string_view name;
    std::string_view summary;
    std::string_view text;
    /// False for the negative controls, which must fail validation.
    bool valid;
};

/// Built-in algebras: Andreka-Maddux #13 and #17, the equality/inequality
/// algebra of an infinite set, the algebra of a two-element set, and
/// mutated tables that must be rejected.
std::span<const CatalogEntry> catalog();

std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

/// Parses and validates a valid entry. Throws UsageError for unknown names
/// and for negative controls.
RelationAlgebra catalog_algebra(std::string_view name);

}  // namespace relalg
