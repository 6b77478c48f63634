#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "blockrank/digraph.hpp"

namespace blockrank {

/// Line-based graph text format:
///
///     # comment
///     digraph <n>
///     a <u> <v> <p>[/<q>]
///
/// `#` starts a comment anywhere on a line; blank lines are ignored. A loop is
/// an arc line with u == v. Throws Error(ParseError) with a line number.
WeightedDigraph parse_digraph(std::string_view text);
WeightedDigraph read_digraph_file(const std::string& path);

/// Canonical form: header, then arcs sorted by (u, v), weights as `p` or `p/q`.
std::string format_digraph(const WeightedDigraph& g);

}  // namespace blockrank
