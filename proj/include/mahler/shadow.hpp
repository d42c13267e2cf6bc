#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mahler/polar.hpp"
#include "mahler/polytope.hpp"
#include "mahler/speeds.hpp"

namespace mahler {

// Serial is the reference path; Parallel runs the same per-sample code under
// OpenMP. Results are identical either way (samples are independent).
enum class ExecMode { Serial, Parallel };

struct ShadowSystem {
  Polytope base;
  SpeedAssignment speed;
  double half_width = 0.0;  // validated persistence range [-c, c]
};

struct SweepTrace {
  std::vector<double> ts;
  std::vector<double> volumes;
  std::vector<double> polar_volumes;
  std::vector<double> products;
  std::vector<bool> lattice_ok;
};

// Hull of the moved vertex set; vertex labels inherited from the survivors,
// edge/facet labels adopted from P whenever the combinatorics match.
Polytope deform(const Polytope& p, const SpeedAssignment& s, double t);

// Largest c <= cap (bisection, boundary tight to 1e-6 * cap) such that the
// lattice is unchanged at a 64-point sample of [-c, c]. Throws NotAdmissible
// if s fails the facet constraints.
double persistence_interval(const Polytope& p, const SpeedAssignment& s, double cap);

// Volumes, Santalo polar volumes and products at n equispaced t in [-c, c].
// Lattice changes mark lattice_ok false for the sample; solver errors
// propagate.
SweepTrace sweep(const Polytope& p, const SpeedAssignment& s, double c, int n,
                 ExecMode mode = ExecMode::Parallel, const SantaloOptions& opts = {});

struct ConvexityReport {
  double min_second_difference;  // raw second difference of 1/polar_volume
  double min_relative;           // scaled by max reciprocal polar volume
  bool lattice_all_ok;
  bool ok;  // min_relative >= -1e-7
};
ConvexityReport convexity_check(const SweepTrace& trace, double rel_tol = 1e-7);

struct ConstancyReport {
  double max_relative_deviation;  // max |P(t) - P(0)| / P(0)
  bool ok;                        // <= tol
};
// Requires the product minimum at the center sample (within rel tol);
// otherwise throws PreconditionUnmet.
ConstancyReport constancy_check(const SweepTrace& trace, double tol = 1e-6);

// Affine extension (w, beta) of the speed over facet k (minimal-norm fit, so
// w has no component along the facet normal).
struct FacetAffineExtension {
  Vec3 w;
  double beta;
  double fit_residual;
};
FacetAffineExtension facet_affine_extension(const Polytope& p, int facet_label,
                                            const SpeedAssignment& s);

// Moved (unnormalized) facet normal v_k(t) = (1 + t theta.w_k) v_k
// - t (theta.v_k) w_k. Throws ParallelFacet when the facet is parallel to
// theta and its speed values admit no affine extension.
Vec3 normal_update(const Polytope& p, int facet_label, const SpeedAssignment& s, double t);

// CSV trace: header "t,volume,polar_volume,product,lattice_ok", 17
// significant digits.
void write_trace_csv(std::ostream& out, const SweepTrace& trace);

}  // namespace mahler
