#pragma once

#include <string>
#include <string_view>

#include "fanram/graph.hpp"

namespace fanram::graph6 {

/// Encode in graph6. Orders up to 62 use the one-byte size prefix, larger
/// orders the '~' + 18-bit form.
std::string encode(const Graph& g);

/// Decode graph6 text (no header, no trailing newline). Throws ParseError.
Graph decode(std::string_view text);

}  // namespace fanram::graph6
