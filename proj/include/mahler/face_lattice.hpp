#pragma once

#include <array>
#include <map>
#include <vector>

namespace mahler {

// Labeled incidence structure of a 3-polytope: label sets I0/I1/I2 and the
// incidence maps
//   phi1 : vertex label -> labels of incident edges
//   phi2 : edge label   -> labels of the two incident facets
// Labels are arbitrary ints (vertex labels survive hull construction and
// polarity; they need not be contiguous). All incidence vectors are kept
// sorted ascending so that equality of lattices is plain map equality.
struct FaceLattice {
  std::vector<int> vertex_labels;  // ascending
  std::vector<int> edge_labels;    // ascending
  std::vector<int> facet_labels;   // ascending

  std::map<int, std::vector<int>> phi1;  // vertex -> edges
  std::map<int, std::vector<int>> phi2;  // edge -> facets

  int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
  int edge_count() const { return static_cast<int>(edge_labels.size()); }
  int facet_count() const { return static_cast<int>(facet_labels.size()); }

  // Derived vertex-facet incidence: facet label -> sorted vertex labels.
  std::map<int, std::vector<int>> phi0() const;

  // Endpoints of an edge, derived from phi1 (the two vertices listing it).
  std::map<int, std::array<int, 2>> edge_endpoints() const;

  // Exact labeled equality: label sets and both incidence maps coincide.
  bool operator==(const FaceLattice& other) const = default;
};

}  // namespace mahler
