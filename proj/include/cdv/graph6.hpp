#pragma once

#include <string>
#include <string_view>

#include "cdv/graph.hpp"

namespace cdv {

/// graph6 encoding: N(n) followed by the upper triangle, column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte,
/// big-endian, zero padded, each byte offset by 63. n <= 62 uses one header
/// byte; 63 and 64 use the '~' + three-byte form.
std::string graph6_encode(const Graph& g);

/// Throws ParseError pointing at the first offending byte. A trailing
/// newline (and carriage return) is tolerated. The optional ">>graph6<<"
/// header is accepted.
Graph graph6_decode(std::string_view text);

}  // namespace cdv
