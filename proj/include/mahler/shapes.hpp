#pragma once

#include <string>
#include <vector>

#include "mahler/polytope.hpp"

namespace mahler {

// Built-in reference bodies. "simplex" (alias "tetrahedron") is the self-dual
// one at conv{(1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1)}, "cube" is [-1,1]^3,
// "octahedron" is conv{+-e_i}; "dodecahedron"/"icosahedron" are the regular
// solids at golden-ratio coordinates.
Polytope make_shape(const std::string& name);
std::vector<std::string> shape_names();

}  // namespace mahler
