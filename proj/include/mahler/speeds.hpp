#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahler/polytope.hpp"

namespace mahler {

// Direction theta plus one scalar speed per vertex (aligned with the
// polytope's ascending vertex-label order). The deformation it generates is
// x_i(t) = x_i + t * alpha_i * theta.
struct SpeedAssignment {
  Vec3 theta;                 // unit
  std::vector<double> alpha;  // size V
};

// Basis of the admissible-speed space A_theta(P).
struct AdmissibleBasis {
  Vec3 theta;
  std::vector<std::vector<double>> basis;  // each of size V
  int dim = 0;
  int trivial_dim = 4;
  std::vector<bool> globally_affine;  // per basis vector
  std::vector<int> parallel_facets;   // facet labels treated as parallel
  bool near_parallel_tripped = false;  // some |theta.v| landed in (0, tol]
};

// |theta . v_k| <= 1e-10 after normalization.
inline constexpr double kParallelTol = 1e-10;
bool facet_parallel(const Polytope& p, int facet_label, const Vec3& theta);

// Kernel of the per-facet affine constraints: for each non-parallel facet
// with ring p_1..p_m (m >= 4) and each j >= 4, alpha_j must equal the affine
// combination of alpha_1, alpha_2, alpha_3 with the coefficients that express
// p_j over (p_1, p_2, p_3) in the facet plane. Exact rational arithmetic by
// default; `exact=false` uses floating SVD with relative threshold 1e-8.
AdmissibleBasis admissible_space(const Polytope& p, const Vec3& theta, bool exact = true);

// Violations of those constraints for a concrete speed vector; empty iff
// admissible within 1e-10 * max(1, |alpha|_inf).
struct ConstraintViolation {
  int facet;
  double residual;
};
std::vector<ConstraintViolation> admissibility_violations(const Polytope& p,
                                                          const SpeedAssignment& s);

// Evaluations of 1, x, y, z on the vertex set; always rank 4 for a valid
// polytope (throws DegeneratePolytope otherwise).
std::vector<std::vector<double>> trivial_space(const Polytope& p);

// A unit-norm admissible speed orthogonal to the trivial space, or nullopt
// when dim A_theta(P) = 4. Deterministic: largest projection norm among the
// kernel basis, ties to the lowest index.
std::optional<SpeedAssignment> nontrivial_speed(const Polytope& p, const Vec3& theta);

struct DimensionBoundReport {
  int max_facet;  // facet label with Delta vertices (lowest such label)
  Vec3 theta;     // direction of its lowest-labeled edge
  int dim;
  int bound;  // F - V + Delta + 1
  bool satisfied;
};
DimensionBoundReport dimension_bound_check(const Polytope& p);

enum class Alternative { PrimalMoves, PolarMoves, Both, Tetrahedron };
const char* to_string(Alternative a);

// Integer criteria Delta > V - F + 3 (primal) and d > F - V + 3 (polar);
// neither holds only for tetrahedra.
Alternative combinatorial_alternative(const Polytope& p);

// JSON report {theta, dim, trivial_dim, bound, basis, criteria, alternative}.
std::string speeds_report_json(const Polytope& p, const Vec3& theta);

}  // namespace mahler
