#pragma once

#include <iosfwd>
#include <string>

#include "ucp/instance.hpp"

// DIMACS graph format: "c" comment lines, one "p edge <n> <m>" problem line,
// then "e <u> <v>" lines with 1-based endpoints. The reader tolerates
// duplicate and reversed edges (they collapse to one) and ignores the
// declared edge count; it rejects loops, out-of-range endpoints, and
// malformed lines with a ParseError naming the line number.

namespace ucp {

GraphInstance parse_dimacs(const std::string& text);
GraphInstance read_dimacs_file(const std::string& path);

// Emits a canonical document: problem line, then edges in sorted order.
std::string write_dimacs(const GraphInstance& g);

}  // namespace ucp
