#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <aspectra/graph.hpp>

namespace aspectra {

struct Graph6Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 record (no trailing newline). Accepts the single-byte
/// size header (n <= 62) and the 4-byte extended header (n <= 258047); the
/// 8-byte huge header is rejected. The payload must be exactly
/// ceil(n(n-1)/2 / 6) bytes in 63..126, anything after it is an error.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 encoding; parse_graph6(write_graph6(g)) == g.
std::string write_graph6(const Graph& g);

}  // namespace aspectra
