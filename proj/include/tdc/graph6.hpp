#pragma once

#include <string>
#include <string_view>

#include "tdc/graph.hpp"

namespace tdc {

// graph6 text encoding: header N(n), then the upper-triangular adjacency in
// column-major order packed into 6-bit groups, each group + 63.
std::string graph6_encode(const Graph& g);

// Decodes one graph6 line (no trailing newline). A leading ">>graph6<<"
// header is accepted. Throws ParseError with a byte offset on bad input.
Graph graph6_decode(std::string_view text);

}  // namespace tdc
