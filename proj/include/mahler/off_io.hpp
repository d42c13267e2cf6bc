#pragma once

#include <iosfwd>
#include <string>

#include "mahler/polytope.hpp"

namespace mahler {

// OFF polyhedron format:
//   OFF
//   V F E
//   x y z                (V lines)
//   m i_1 ... i_m        (F lines, zero-based vertex indices in boundary order)
// The edge count in the header may be 0; it is recomputed on read.
// Reading canonicalizes facet/edge labels and validates the result
// (ParseError on malformed text, InvalidPolytope on bad structure).
Polytope read_off(std::istream& in);
Polytope read_off_file(const std::string& path);

// Writes vertices with 17 significant digits; facet lines follow facet-label
// order, vertex indices are positions in vertex-label order.
void write_off(std::ostream& out, const Polytope& p);
void write_off_file(const std::string& path, const Polytope& p);

}  // namespace mahler
