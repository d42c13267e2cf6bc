#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "mahler/polytope.hpp"

namespace mahler {

// Polar body about z: one vertex per facet of P at z + v_k/(h_k - z.v_k);
// the labeled lattice is dualized, so facet label k becomes vertex label k,
// vertex label i becomes facet label i, and edge labels carry over. Throws
// CenterNotInterior if any facet margin h_k - z.v_k <= 1e-12 * diam.
Polytope polar(const Polytope& p, const Vec3& z);

// volume(polar(p, z)).
double polar_volume(const Polytope& p, const Vec3& z);

struct SantaloResult {
  Vec3 point;           // computed s(P)
  double polar_volume;  // |P^{s(P)}|
  double product;       // |P| * |P^{s(P)}|
  double residual;      // ||centroid(P^z) - z|| at the returned z
  int iterations;
};

struct SantaloOptions {
  double tol = 1e-8;          // residual target, relative to diameter
  int iteration_cap = 10000;  // NonConvergence beyond this
};

// Minimizes z -> |P^z| over the interior. The first-order certificate is
// centroid(P^z) = z; the solver is a damped step along that residual in a
// vertex-whitened frame, with a coordinate-wise golden-section fallback.
SantaloResult santalo_point(const Polytope& p, const SantaloOptions& opts = {});
SantaloResult santalo_point(const Polytope& p, double tol);

// |P| * |P^{s(P)}|. Every value computed here passes through the global
// bound guard.
double volume_product(const Polytope& p);

// P(P^{s(P)}) <= P(P) + tol.
bool product_monotonicity_check(const Polytope& p, double tol = 1e-7);

// JSON report {vertices, facets, santalo_point, polar_volume, volume,
// product, residual, iterations}.
std::string product_report_json(const Polytope& p, const SantaloOptions& opts = {});

// Tetrahedral lower bound; every computed volume product is checked against
// it (minus slack) and counted. A violation throws BoundViolation.
namespace bound_guard {
inline constexpr double kMahlerBound = 64.0 / 9.0;
inline constexpr double kSlack = 1e-6;
void record(double product);
std::uint64_t count();
double min_seen();
void reset();
}  // namespace bound_guard

}  // namespace mahler
