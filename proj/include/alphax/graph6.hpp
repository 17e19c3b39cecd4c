#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

/// Largest order representable with the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Standard graph6: header byte 63+n, then upper-triangle bits in column
/// order (0,1),(0,2),(1,2),(0,3),... packed six per byte, most significant
/// bit first, each byte offset by 63. Throws DomainError for n > 62.
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. A single trailing "\n" or "\r\n" is ignored.
/// Throws ParseError with the offending byte offset.
Graph decode_graph6(std::string_view text);

/// One graph per line; blank lines are skipped. ParseError offsets are
/// relative to the line, and the message names the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace alphax
