#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input points are collinear/coplanar within tolerance, or a deformation
// collapsed the vertex set.
struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// A polytope failed structural validation where a valid one was required.
struct InvalidPolytope : Error {
  explicit InvalidPolytope(const std::string& msg) : Error(msg) {}
};

// Polar center is not strictly interior (some facet margin below tolerance).
struct CenterNotInterior : Error {
  explicit CenterNotInterior(const std::string& msg) : Error(msg) {}
};

// Santalo solver hit its iteration cap before meeting the residual target.
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Vertices do not affinely span 3-space.
struct DegeneratePolytope : Error {
  explicit DegeneratePolytope(const std::string& msg) : Error(msg) {}
};

// A speed vector violates the per-facet affine constraints.
struct NotAdmissible : Error {
  NotAdmissible(const std::string& msg, std::vector<int> facets_in)
      : Error(msg), facets(std::move(facets_in)) {}
  std::vector<int> facets;  // offending facet labels
};

// normal_update asked for the moved normal of a theta-parallel facet whose
// speed values admit no affine extension.
struct ParallelFacet : Error {
  explicit ParallelFacet(const std::string& msg) : Error(msg) {}
};

// A checker's stated precondition does not hold for the given trace.
struct PreconditionUnmet : Error {
  explicit PreconditionUnmet(const std::string& msg) : Error(msg) {}
};

// A computed volume product fell below 64/9 - 1e-6. Either a serious bug or
// a counterexample; both stop the run.
struct BoundViolation : Error {
  explicit BoundViolation(const std::string& msg) : Error(msg) {}
};

// Malformed input file.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace mahler
