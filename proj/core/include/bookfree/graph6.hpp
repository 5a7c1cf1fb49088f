#pragma once

#include <string>
#include <string_view>

#include "bookfree/graph.hpp"

namespace bookfree {

/// graph6 encoding: N(n) followed by the upper triangle in column order
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, each byte
/// offset by 63. The ">>graph6<<" header is never emitted.
std::string emit_graph6(const Graph& g);

/// Decodes one graph6 string. Accepts an optional ">>graph6<<" prefix.
/// Trailing bytes, bytes outside 63..126, truncated data and nonzero
/// padding bits raise ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

}  // namespace bookfree
