#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vdb/digraph.hpp"

namespace vdb {

/// Parses the edge-list text format: one "tail head" pair of non-negative
/// integers per line, '#' starts a comment, blank lines are ignored.
///
/// The vertex count is max id + 1 unless n_override is given. A canonical
/// "# n=<N>" header comment (as written by emit_edge_list) also fixes the
/// vertex count; an explicit n_override wins over the header.
///
/// Throws ParseError with the offending line number on malformed tokens,
/// loop arcs, duplicate arcs, or ids outside the fixed vertex count.
Digraph parse_edge_list(std::string_view text, std::optional<int> n_override = std::nullopt);

/// Canonical emitter: "# n=<N>" header, then one arc per line sorted
/// lexicographically. parse_edge_list round-trips its output exactly.
std::string emit_edge_list(const Digraph& d);

}  // namespace vdb
