#pragma once

#include "relalg/algebra.hpp"
#include "relalg/network.hpp"

#include <string>
#include <string_view>

namespace relalg {

/// Line-oriented algebra description:
///
///     algebra <name>
///     atoms <name>+
///     identity <name>+
///     converse <a>=<b> ...        (unlisted atoms are self-converse)
///     comp <a> <b> = <name>+      (or 0 / 1)
///
/// `#` starts a comment. With a single identity atom, comp lines that have
/// it as an operand may be omitted. The parsed algebra is validated.
RelationAlgebra parse_algebra(std::string_view text);

/// Parses without running validate(); for inspecting broken tables.
RelationAlgebra parse_algebra_unchecked(std::string_view text);

/// Canonical text form: every comp entry written out.
std::string print_algebra(const RelationAlgebra &ra);

struct NamedNetwork {
    std::string name;
    Network network;
};

/// `network <name> nodes <n>`, then `<i> <j> <atom>+` lines with 1-based
/// nodes and at most one line per ordered pair, and optionally
/// `default <atom>+` for unlisted off-diagonal pairs (otherwise 1; an
/// unlisted diagonal pair is always 1). `0` and `1` are
/// accepted as labels.
NamedNetwork parse_network(std::string_view text, const RelationAlgebra &ra);

/// Lists every ordered pair explicitly.
std::string print_network(const RelationAlgebra &ra, const Network &net, std::string_view name);

}  // namespace relalg
