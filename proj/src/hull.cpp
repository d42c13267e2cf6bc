//! Incremental convex hull with coplanar facet merging. Triangles are built
//! first (visibility walk with a relative tolerance), then stitched into
//! maximal facets whose rings become the labeled face lattice.

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "mahler/errors.hpp"
#include "mahler/polytope.hpp"

namespace mahler {

namespace {

struct TriFace {
  std::array<int, 3> v;  // input indices, ccw from outside
  Vec3 n;                // unit outward normal
  double h = 0.0;
  bool alive = true;
};

double bbox_diag(const std::vector<Vec3>& pts) {
  Vec3 lo = pts[0], hi = pts[0];
  for (const Vec3& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return norm(hi - lo);
}

}  // namespace

Polytope hull(const std::vector<Vec3>& points, std::vector<int>* dropped) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw DegenerateInput("hull: need at least 4 points");
  for (const Vec3& p : points)
    if (!p.finite()) throw DegenerateInput("hull: non-finite input coordinates");

  const double diag = bbox_diag(points);
  if (diag <= 0.0) throw DegenerateInput("hull: all points coincide");
  const double eps = kCoplanarRelTol * diag;

  // --- initial tetrahedron --------------------------------------------------
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    const Vec3 &a = points[i], &b = points[i0];
    if (std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z)) i0 = i;
  }
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    const double d = distance(points[i], points[i0]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) throw DegenerateInput("hull: points coincide within tolerance");
  int i2 = -1;
  best = eps;
  const Vec3 dir = points[i1] - points[i0];
  for (int i = 0; i < n; ++i) {
    const double d = norm(cross(dir, points[i] - points[i0])) / norm(dir);
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateInput("hull: points are collinear within tolerance");
  int i3 = -1;
  best = eps;
  const Vec3 nrm = normalized(cross(dir, points[i2] - points[i0]));
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(dot(points[i] - points[i0], nrm));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateInput("hull: points are coplanar within tolerance");

  const Vec3 interior =
      (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;

  std::vector<TriFace> faces;
  std::map<std::pair<int, int>, int> owner;  // directed edge -> face index

  auto add_face = [&](int a, int b, int c) {
    Vec3 nn = cross(points[b] - points[a], points[c] - points[a]);
    if (dot(interior - points[a], nn) > 0) {
      std::swap(b, c);
      nn = -nn;
    }
    const double len = norm(nn);
    if (len < 1e-300) throw DegenerateInput("hull: degenerate face normal");
    if (owner.count({a, b}) || owner.count({b, c}) || owner.count({c, a}))
      throw DegenerateInput("hull: inconsistent face orientation (degenerate input)");
    TriFace f;
    f.v = {a, b, c};
    f.n = nn / len;
    f.h = (dot(points[a], f.n) + dot(points[b], f.n) + dot(points[c], f.n)) / 3.0;
    const int id = static_cast<int>(faces.size());
    faces.push_back(f);
    owner[{a, b}] = id;
    owner[{b, c}] = id;
    owner[{c, a}] = id;
    return id;
  };

  add_face(i0, i1, i2);
  add_face(i0, i1, i3);
  add_face(i0, i2, i3);
  add_face(i1, i2, i3);

  // --- insert remaining points ---------------------------------------------
  std::set<int> in_tetra{i0, i1, i2, i3};
  for (int pi = 0; pi < n; ++pi) {
    if (in_tetra.count(pi)) continue;
    const Vec3& p = points[pi];

    int seed = -1;
    double seed_d = eps;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!faces[f].alive) continue;
      const double d = dot(p, faces[f].n) - faces[f].h;
      if (d > seed_d) {
        seed_d = d;
        seed = f;
      }
    }
    if (seed < 0) continue;  // interior or on the current boundary; dropped

    // Flood the visible region from the most-violated face.
    std::set<int> visible{seed};
    std::queue<int> todo;
    todo.push(seed);
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      const auto& fv = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        const int u = fv[e], v = fv[(e + 1) % 3];
        auto it = owner.find({v, u});
        if (it == owner.end()) continue;
        const int g = it->second;
        if (!faces[g].alive || visible.count(g)) continue;
        if (dot(p, faces[g].n) - faces[g].h > eps) {
          visible.insert(g);
          todo.push(g);
        }
      }
    }

    // Horizon: directed edges of visible faces whose twin is hidden.
    std::map<int, int> next_on_horizon;
    for (int f : visible) {
      const auto& fv = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        const int u = fv[e], v = fv[(e + 1) % 3];
        auto it = owner.find({v, u});
        const int g = it == owner.end() ? -1 : it->second;
        if (g < 0 || !visible.count(g)) {
          if (next_on_horizon.count(u))
            throw DegenerateInput("hull: non-simple horizon (degenerate input)");
          next_on_horizon[u] = v;
        }
      }
    }
    if (next_on_horizon.empty()) throw DegenerateInput("hull: empty horizon");
    const int start = next_on_horizon.begin()->first;
    std::vector<std::pair<int, int>> loop;
    int u = start;
    do {
      auto it = next_on_horizon.find(u);
      if (it == next_on_horizon.end())
        throw DegenerateInput("hull: open horizon (degenerate input)");
      loop.emplace_back(u, it->second);
      u = it->second;
      if (loop.size() > next_on_horizon.size())
        throw DegenerateInput("hull: horizon is not a single cycle");
    } while (u != start);
    if (loop.size() != next_on_horizon.size())
      throw DegenerateInput("hull: horizon is not a single cycle");

    for (int f : visible) {
      faces[f].alive = false;
      const auto& fv = faces[f].v;
      for (int e = 0; e < 3; ++e) owner.erase({fv[e], fv[(e + 1) % 3]});
    }
    for (const auto& [a, b] : loop) add_face(a, b, pi);
  }

  // --- containment sanity ---------------------------------------------------
  for (int pi = 0; pi < n; ++pi)
    for (const TriFace& f : faces) {
      if (!f.alive) continue;
      if (dot(points[pi], f.n) - f.h > 10 * eps)
        throw DegenerateInput("hull: containment check failed (degenerate input)");
    }

  // --- merge coplanar triangles into maximal facets -------------------------
  std::vector<int> alive_ids;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (faces[f].alive) alive_ids.push_back(f);
  std::sort(alive_ids.begin(), alive_ids.end(), [&](int a, int b) {
    auto ka = faces[a].v, kb = faces[b].v;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });

  std::map<int, int> group_of;
  int group_count = 0;
  for (int seed : alive_ids) {
    if (group_of.count(seed)) continue;
    const int g = group_count++;
    const Vec3 sn = faces[seed].n;
    const double sh = faces[seed].h;
    std::queue<int> todo;
    todo.push(seed);
    group_of[seed] = g;
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      const auto& fv = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        auto it = owner.find({fv[(e + 1) % 3], fv[e]});
        if (it == owner.end()) continue;
        const int nb = it->second;
        if (group_of.count(nb)) continue;
        if (dot(faces[nb].n, sn) <= 0) continue;
        bool coplanar = true;
        for (int w : faces[nb].v)
          if (std::abs(dot(points[w], sn) - sh) > eps) coplanar = false;
        if (!coplanar) continue;
        group_of[nb] = g;
        todo.push(nb);
      }
    }
  }

  // Boundary walk per group; ring vertices in ccw order from outside.
  std::vector<std::vector<int>> rings(group_count);
  std::set<int> ring_vertices;
  for (int g = 0; g < group_count; ++g) {
    std::map<int, int> succ;
    for (int f : alive_ids) {
      if (group_of[f] != g) continue;
      const auto& fv = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        const int a = fv[e], b = fv[(e + 1) % 3];
        auto it = owner.find({b, a});
        const int nb = it == owner.end() ? -1 : it->second;
        if (nb < 0 || group_of[nb] != g) {
          if (succ.count(a))
            throw InvalidPolytope("hull: merged facet boundary is not a simple cycle");
          succ[a] = b;
        }
      }
    }
    if (succ.empty()) throw InvalidPolytope("hull: merged facet has no boundary");
    const int start = succ.begin()->first;
    int u = start;
    std::vector<int> ring;
    do {
      ring.push_back(u);
      auto it = succ.find(u);
      if (it == succ.end()) throw InvalidPolytope("hull: merged facet boundary is open");
      u = it->second;
      if (ring.size() > succ.size())
        throw InvalidPolytope("hull: merged facet boundary is not a single cycle");
    } while (u != start);
    if (ring.size() != succ.size())
      throw InvalidPolytope("hull: merged facet boundary is not a single cycle");
    rings[g] = ring;
    for (int w : ring) ring_vertices.insert(w);
  }

  // Surviving vertices are exactly the ring members; everything else
  // (interior points, duplicates, flat-spot artifacts) is dropped.
  std::vector<int> labels(ring_vertices.begin(), ring_vertices.end());
  std::vector<Vec3> coords;
  coords.reserve(labels.size());
  for (int lbl : labels) coords.push_back(points[lbl]);

  Polytope result = Polytope::from_parts(labels, coords, rings);
  ValidationReport rep = validate(result);
  if (!rep.ok()) throw InvalidPolytope("hull: invalid result:\n" + rep.summary());

  if (dropped) {
    for (int pi = 0; pi < n; ++pi)
      if (!ring_vertices.count(pi)) dropped->push_back(pi);
  }
  return result;
}

}  // namespace mahler
