#include "mahler/face_lattice.hpp"

#include <algorithm>

namespace mahler {

std::map<int, std::vector<int>> FaceLattice::phi0() const {
  // Vertex-facet incidence through phi1 and phi2: i belongs to facet k iff
  // some edge at i lies in k.
  std::map<int, std::vector<int>> result;
  for (int k : facet_labels) result[k] = {};
  for (const auto& [i, edges] : phi1) {
    for (int j : edges) {
      auto it = phi2.find(j);
      if (it == phi2.end()) continue;
      for (int k : it->second) result[k].push_back(i);
    }
  }
  for (auto& [k, verts] : result) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  }
  return result;
}

std::map<int, std::array<int, 2>> FaceLattice::edge_endpoints() const {
  std::map<int, std::vector<int>> at;
  for (const auto& [i, edges] : phi1)
    for (int j : edges) at[j].push_back(i);
  std::map<int, std::array<int, 2>> result;
  for (auto& [j, verts] : at) {
    std::sort(verts.begin(), verts.end());
    if (verts.size() == 2) result[j] = {verts[0], verts[1]};
  }
  return result;
}

}  // namespace mahler
