#pragma once

#include "speclab/graph.hpp"

#include <string>
#include <string_view>

namespace speclab {

/// Standard graph6: size header (n+63 for n <= 62, '~' plus 18 bits for
/// 63 <= n <= 258047), then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed six bits per printable byte.
std::string g6_encode(const Graph& g);

/// Inverse of g6_encode. Throws MalformedGraph6 on a bad header, a payload of
/// the wrong length, bytes outside '?'..'~', or nonzero padding bits.
Graph g6_decode(std::string_view text);

}  // namespace speclab
