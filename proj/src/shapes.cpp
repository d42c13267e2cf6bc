#include "mahler/shapes.hpp"

#include <cmath>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

std::vector<Vec3> shape_points(const std::string& name) {
  if (name == "simplex" || name == "tetrahedron")
    return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  if (name == "cube") {
    std::vector<Vec3> pts;
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) pts.push_back({double(sx), double(sy), double(sz)});
    return pts;
  }
  if (name == "octahedron")
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  if (name == "icosahedron") {
    std::vector<Vec3> pts;
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        pts.push_back({0, s1 * 1.0, s2 * phi});
        pts.push_back({s1 * 1.0, s2 * phi, 0});
        pts.push_back({s1 * phi, 0, s2 * 1.0});
      }
    return pts;
  }
  if (name == "dodecahedron") {
    std::vector<Vec3> pts;
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) pts.push_back({double(sx), double(sy), double(sz)});
    const double inv = 1.0 / phi;
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        pts.push_back({0, s1 * inv, s2 * phi});
        pts.push_back({s1 * inv, s2 * phi, 0});
        pts.push_back({s1 * phi, 0, s2 * inv});
      }
    return pts;
  }
  throw Error("unknown shape: " + name);
}

}  // namespace

Polytope make_shape(const std::string& name) { return hull(shape_points(name)); }

std::vector<std::string> shape_names() {
  return {"simplex", "cube", "octahedron", "dodecahedron", "icosahedron"};
}

}  // namespace mahler
