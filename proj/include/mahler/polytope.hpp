#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mahler/face_lattice.hpp"
#include "mahler/vec3.hpp"

namespace mahler {

struct FacetPlane {
  Vec3 normal;     // outer unit normal
  double support;  // h with x . normal <= h on the polytope
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Immutable 3D convex polytope: vertex coordinates, labeled face lattice,
// facet planes, and the ordered facet rings used for triangulation. Rings are
// stored counterclockwise viewed from outside, rotated so the lowest vertex
// label comes first.
class Polytope {
 public:
  Polytope() = default;

  // Assembles a polytope from vertex coordinates and facet rings. Facet and
  // edge labels are canonical: facets ranked by their sorted vertex tuple,
  // edges ranked by their sorted endpoint pair. Does not throw on invariant
  // violations; inspect validate() (hull() and the readers do throw).
  static Polytope from_parts(std::vector<int> vertex_labels, std::vector<Vec3> points,
                             std::vector<std::vector<int>> facet_rings);

  // Full-control assembly (used by polarity, which dictates its own labels).
  static Polytope from_labeled_parts(std::vector<int> vertex_labels, std::vector<Vec3> points,
                                     std::map<int, std::vector<int>> rings_by_facet_label,
                                     std::map<std::pair<int, int>, int> edge_label_of_pair);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return lattice_.edge_count(); }
  int facet_count() const { return lattice_.facet_count(); }

  const std::vector<int>& vertex_labels() const { return labels_; }
  const std::vector<Vec3>& points() const { return points_; }
  const FaceLattice& lattice() const { return lattice_; }

  bool has_vertex(int label) const { return index_.count(label) != 0; }
  const Vec3& vertex(int label) const { return points_[index_.at(label)]; }
  int vertex_index(int label) const { return index_.at(label); }

  const std::map<int, std::vector<int>>& facet_rings() const { return rings_; }
  const std::vector<int>& facet_ring(int facet_label) const { return rings_.at(facet_label); }
  const FacetPlane& facet_plane(int facet_label) const { return planes_.at(facet_label); }
  const std::map<int, FacetPlane>& facet_planes() const { return planes_; }
  const std::array<int, 2>& edge(int edge_label) const { return edges_.at(edge_label); }
  const std::map<int, std::array<int, 2>>& edges() const { return edges_; }

  // Cheap structural sanity (Euler relation, two facets per edge, ring
  // arities) evaluated at construction; volume() and polarity refuse to work
  // on failures. validate() is the full diagnostic.
  bool structurally_ok() const { return structurally_ok_; }
  const std::string& structural_issue() const { return structural_issue_; }

  // Max pairwise vertex distance; cached at construction.
  double diameter() const { return diameter_; }

  // Mean of the vertices (the fan apex for volume/centroid).
  Vec3 vertex_mean() const;

  // Replaces every edge/facet label through the bijections implied by equal
  // vertex-label structure with `base`; returns false (and leaves *this
  // untouched) if the combinatorics differ. Used by deform() so that lattice
  // comparisons are anchored at vertex labels only.
  bool adopt_labels_from(const Polytope& base);

  // Fixed facet triangulation: fan from the lowest-labeled ring vertex.
  // Triples of vertex labels, deterministic for a given lattice.
  std::vector<std::array<int, 3>> facet_triangulation() const;

 private:
  std::vector<int> labels_;   // ascending vertex labels
  std::vector<Vec3> points_;  // aligned with labels_
  std::map<int, int> index_;  // label -> position
  FaceLattice lattice_;
  std::map<int, std::vector<int>> rings_;  // facet label -> ccw vertex labels
  std::map<int, FacetPlane> planes_;
  std::map<int, std::array<int, 2>> edges_;  // edge label -> endpoints (lo, hi)
  double diameter_ = 0.0;
  bool structurally_ok_ = false;
  std::string structural_issue_;

  void finalize();  // index_, planes_, diameter_
  friend Polytope affine_image(const Polytope&, const std::array<std::array<double, 3>, 3>&,
                               const Vec3&);
};

// --- polytope-core operations ---------------------------------------------

// Convex hull with coplanar facet merging. Vertex labels are the input
// indices of surviving extreme points; dropped (interior/duplicate) indices
// are appended to *dropped when given. Throws DegenerateInput on flat input
// and InvalidPolytope if the merged structure fails validation.
Polytope hull(const std::vector<Vec3>& points, std::vector<int>* dropped = nullptr);

// Lists every violated lattice/geometry invariant with offending labels.
ValidationReport validate(const Polytope& p);

// Fan-of-tetrahedra volume about the vertex mean over the fixed facet
// triangulation. Throws InvalidPolytope if validation fails.
double volume(const Polytope& p);

// Volume centroid (exact for the fan decomposition).
Vec3 centroid(const Polytope& p);

// (Delta, d): max vertices per facet, max edges per vertex.
struct FacetStats {
  int delta;
  int degree;
};
FacetStats facet_stats(const Polytope& p);

// Exact labeled lattice equality.
bool lattice_equal(const Polytope& p, const Polytope& q);

// Applies x -> M x + t; lattice and labels are preserved, planes recomputed.
Polytope affine_image(const Polytope& p, const std::array<std::array<double, 3>, 3>& m,
                      const Vec3& t);

// Relative tolerance anchors (multiplied by diameter).
inline constexpr double kCoplanarRelTol = 1e-9;  // hull facet merging
inline constexpr double kPlaneFitRelTol = 1e-7;  // validation of member incidence

}  // namespace mahler
