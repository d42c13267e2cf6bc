#include "mahler/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

std::vector<int> sorted_ring(const std::vector<int>& ring) {
  std::vector<int> s(ring);
  std::sort(s.begin(), s.end());
  return s;
}

void rotate_to_lowest(std::vector<int>& ring) {
  auto it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), it, ring.end());
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Assembly

Polytope Polytope::from_parts(std::vector<int> vertex_labels, std::vector<Vec3> points,
                              std::vector<std::vector<int>> facet_rings) {
  // Canonical facet labels: rank of the sorted vertex tuple.
  std::vector<std::pair<std::vector<int>, int>> keyed;
  keyed.reserve(facet_rings.size());
  for (int f = 0; f < static_cast<int>(facet_rings.size()); ++f)
    keyed.emplace_back(sorted_ring(facet_rings[f]), f);
  std::sort(keyed.begin(), keyed.end());

  std::map<int, std::vector<int>> rings_by_label;
  for (int rank = 0; rank < static_cast<int>(keyed.size()); ++rank)
    rings_by_label[rank] = facet_rings[keyed[rank].second];

  // Canonical edge labels: rank of the sorted endpoint pair.
  std::set<std::pair<int, int>> pairs;
  for (const auto& ring : facet_rings) {
    const int m = static_cast<int>(ring.size());
    for (int i = 0; i < m; ++i) {
      int a = ring[i], b = ring[(i + 1) % m];
      pairs.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::map<std::pair<int, int>, int> edge_label;
  int next = 0;
  for (const auto& pr : pairs) edge_label[pr] = next++;

  return from_labeled_parts(std::move(vertex_labels), std::move(points),
                            std::move(rings_by_label), std::move(edge_label));
}

Polytope Polytope::from_labeled_parts(std::vector<int> vertex_labels, std::vector<Vec3> points,
                                      std::map<int, std::vector<int>> rings_by_facet_label,
                                      std::map<std::pair<int, int>, int> edge_label_of_pair) {
  Polytope p;

  // Sort vertices by label, keeping coordinates aligned.
  std::vector<int> order(vertex_labels.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vertex_labels[a] < vertex_labels[b]; });
  for (int i : order) {
    p.labels_.push_back(vertex_labels[i]);
    p.points_.push_back(points[i]);
  }

  p.rings_ = std::move(rings_by_facet_label);

  // Lattice maps from rings + the edge labeling.
  FaceLattice& lat = p.lattice_;
  lat.vertex_labels = p.labels_;
  for (const auto& [k, ring] : p.rings_) lat.facet_labels.push_back(k);

  std::map<int, std::set<int>> phi1_sets;
  std::map<int, std::set<int>> phi2_sets;
  for (int i : lat.vertex_labels) phi1_sets[i] = {};
  for (const auto& [k, ring] : p.rings_) {
    const int m = static_cast<int>(ring.size());
    for (int i = 0; i < m; ++i) {
      int a = ring[i], b = ring[(i + 1) % m];
      auto it = edge_label_of_pair.find({std::min(a, b), std::max(a, b)});
      if (it == edge_label_of_pair.end()) continue;  // surfaced by validate
      const int j = it->second;
      phi2_sets[j].insert(k);
      phi1_sets[a].insert(j);
      phi1_sets[b].insert(j);
    }
  }
  for (const auto& [pr, j] : edge_label_of_pair) {
    lat.edge_labels.push_back(j);
    p.edges_[j] = {pr.first, pr.second};
  }
  std::sort(lat.edge_labels.begin(), lat.edge_labels.end());
  for (const auto& [i, s] : phi1_sets) lat.phi1[i] = std::vector<int>(s.begin(), s.end());
  for (const auto& [j, s] : phi2_sets) lat.phi2[j] = std::vector<int>(s.begin(), s.end());
  for (int j : lat.edge_labels)
    if (!lat.phi2.count(j)) lat.phi2[j] = {};

  p.finalize();
  return p;
}

void Polytope::finalize() {
  index_.clear();
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) index_[labels_[i]] = i;

  diameter_ = 0.0;
  for (size_t a = 0; a < points_.size(); ++a)
    for (size_t b = a + 1; b < points_.size(); ++b)
      diameter_ = std::max(diameter_, distance(points_[a], points_[b]));

  const Vec3 vm = vertex_mean();

  planes_.clear();
  for (auto& [k, ring] : rings_) {
    // Newell area vector; orientation fixed against the vertex mean.
    Vec3 n{0, 0, 0};
    bool labels_ok = true;
    for (size_t i = 0; i < ring.size(); ++i) {
      if (!index_.count(ring[i]) || !index_.count(ring[(i + 1) % ring.size()])) {
        labels_ok = false;
        break;
      }
      const Vec3& a = vertex(ring[i]);
      const Vec3& b = vertex(ring[(i + 1) % ring.size()]);
      n += cross(a, b);
    }
    if (!labels_ok || norm(n) == 0.0) {
      planes_[k] = FacetPlane{{0, 0, 0}, 0.0};
      continue;
    }
    Vec3 v = normalized(n);
    double h = 0.0;
    for (int i : ring) h += dot(vertex(i), v);
    h /= static_cast<double>(ring.size());
    if (dot(vm, v) > h) {  // inward; flip plane and ring
      v = -v;
      h = -h;
      std::reverse(ring.begin(), ring.end());
    }
    rotate_to_lowest(ring);
    planes_[k] = FacetPlane{v, h};
  }

  // Cheap structural sanity; full geometry checks live in validate().
  structurally_ok_ = true;
  structural_issue_.clear();
  const int V = vertex_count(), E = edge_count(), F = facet_count();
  auto fail = [&](const std::string& why) {
    structurally_ok_ = false;
    if (structural_issue_.empty()) structural_issue_ = why;
  };
  if (V < 4 || F < 4 || E < 6) fail("too few faces");
  if (V - E + F != 2) fail("Euler relation violated");
  for (const auto& [j, ks] : lattice_.phi2)
    if (ks.size() != 2) fail("edge not in exactly two facets");
  for (const auto& [k, ring] : rings_)
    if (ring.size() < 3) fail("facet ring with fewer than 3 vertices");
}

Vec3 Polytope::vertex_mean() const {
  Vec3 m{0, 0, 0};
  for (const Vec3& x : points_) m += x;
  return m / static_cast<double>(points_.size());
}

bool Polytope::adopt_labels_from(const Polytope& base) {
  if (labels_ != base.labels_) return false;
  if (facet_count() != base.facet_count() || edge_count() != base.edge_count()) return false;

  std::map<std::vector<int>, int> base_facet;
  for (const auto& [k, ring] : base.rings_) base_facet[sorted_ring(ring)] = k;
  std::map<int, int> facet_map;  // ours -> base
  for (const auto& [k, ring] : rings_) {
    auto it = base_facet.find(sorted_ring(ring));
    if (it == base_facet.end()) return false;
    facet_map[k] = it->second;
  }

  std::map<std::array<int, 2>, int> base_edge;
  for (const auto& [j, ab] : base.edges_) base_edge[ab] = j;
  std::map<int, int> edge_map;
  for (const auto& [j, ab] : edges_) {
    auto it = base_edge.find(ab);
    if (it == base_edge.end()) return false;
    edge_map[j] = it->second;
  }

  std::map<int, std::vector<int>> rings2, phi1_2, phi2_2;
  std::map<int, FacetPlane> planes2;
  std::map<int, std::array<int, 2>> edges2;
  for (const auto& [k, ring] : rings_) rings2[facet_map[k]] = ring;
  for (const auto& [k, pl] : planes_) planes2[facet_map[k]] = pl;
  for (const auto& [j, ab] : edges_) edges2[edge_map[j]] = ab;
  for (const auto& [i, js] : lattice_.phi1) {
    std::vector<int> mapped;
    for (int j : js) mapped.push_back(edge_map[j]);
    std::sort(mapped.begin(), mapped.end());
    phi1_2[i] = std::move(mapped);
  }
  for (const auto& [j, ks] : lattice_.phi2) {
    std::vector<int> mapped;
    for (int k : ks) mapped.push_back(facet_map[k]);
    std::sort(mapped.begin(), mapped.end());
    phi2_2[edge_map[j]] = std::move(mapped);
  }

  rings_ = std::move(rings2);
  planes_ = std::move(planes2);
  edges_ = std::move(edges2);
  lattice_.phi1 = std::move(phi1_2);
  lattice_.phi2 = std::move(phi2_2);
  lattice_.edge_labels.clear();
  for (const auto& [j, ab] : edges_) lattice_.edge_labels.push_back(j);
  lattice_.facet_labels.clear();
  for (const auto& [k, ring] : rings_) lattice_.facet_labels.push_back(k);
  return true;
}

std::vector<std::array<int, 3>> Polytope::facet_triangulation() const {
  std::vector<std::array<int, 3>> tris;
  for (const auto& [k, ring] : rings_) {
    const int m = static_cast<int>(ring.size());
    for (int i = 1; i + 1 < m; ++i) tris.push_back({ring[0], ring[i], ring[i + 1]});
  }
  return tris;
}

// ---------------------------------------------------------------------------
// Operations

ValidationReport validate(const Polytope& p) {
  ValidationReport rep;
  auto flag = [&rep](const std::string& v) { rep.violations.push_back(v); };
  auto flagf = [&](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    rep.violations.push_back(os.str());
  };

  const FaceLattice& lat = p.lattice();
  const int V = p.vertex_count(), E = p.edge_count(), F = p.facet_count();

  for (int i = 0; i < V; ++i)
    if (!p.points()[i].finite()) flagf("vertex ", p.vertex_labels()[i], " has non-finite coordinates");

  if (V - E + F != 2) flagf("Euler relation violated: V-E+F = ", V - E + F);

  // Each edge has exactly two endpoints and two facets.
  std::map<int, int> edge_vertex_count;
  for (const auto& [i, js] : lat.phi1)
    for (int j : js) edge_vertex_count[j]++;
  for (int j : lat.edge_labels) {
    const int c = edge_vertex_count.count(j) ? edge_vertex_count[j] : 0;
    if (c != 2) flagf("edge ", j, " has ", c, " endpoints");
    auto it = lat.phi2.find(j);
    const int fc = it == lat.phi2.end() ? 0 : static_cast<int>(it->second.size());
    if (fc != 2) flagf("edge ", j, " lies in ", fc, " facets");
  }

  // Vertex-facet incidence arities.
  auto phi0 = lat.phi0();
  long facet_vertex_sum = 0;
  for (int k : lat.facet_labels) {
    const int c = static_cast<int>(phi0[k].size());
    facet_vertex_sum += c;
    if (c < 3) flagf("facet ", k, " has ", c, " vertices");
  }
  std::map<int, int> facets_at_vertex;
  for (const auto& [k, verts] : phi0)
    for (int i : verts) facets_at_vertex[i]++;
  for (int i : lat.vertex_labels)
    if (facets_at_vertex[i] < 3) flagf("vertex ", i, " lies in ", facets_at_vertex[i], " facets");
  if (facet_vertex_sum != 2L * E)
    flagf("sum of facet vertex counts ", facet_vertex_sum, " != 2E = ", 2 * E);

  // Rings must agree with phi0 and walk along lattice edges.
  std::map<std::array<int, 2>, int> pair_to_edge;
  for (const auto& [j, ab] : p.edges()) pair_to_edge[ab] = j;
  for (const auto& [k, ring] : p.facet_rings()) {
    std::vector<int> rs(ring);
    std::sort(rs.begin(), rs.end());
    if (rs != phi0[k]) flagf("facet ", k, " ring disagrees with incidence maps");
    const int m = static_cast<int>(ring.size());
    for (int i = 0; i < m; ++i) {
      int a = ring[i], b = ring[(i + 1) % m];
      std::array<int, 2> ab{std::min(a, b), std::max(a, b)};
      auto it = pair_to_edge.find(ab);
      bool ok = it != pair_to_edge.end();
      if (ok) {
        const auto& ks = lat.phi2.at(it->second);
        ok = std::find(ks.begin(), ks.end(), k) != ks.end();
      }
      if (!ok) flagf("facet ", k, " boundary step (", a, ",", b, ") is not one of its edges");
    }
  }

  const double diam = p.diameter();
  if (diam <= 0.0) {
    flag("zero diameter");
    return rep;
  }

  // Full-dimensionality via the farthest-point filtration.
  {
    const auto& pts = p.points();
    const Vec3 a = pts[0];
    double best = 0;
    Vec3 b = a;
    for (const Vec3& q : pts) {
      if (distance(q, a) > best) {
        best = distance(q, a);
        b = q;
      }
    }
    Vec3 c = a;
    best = 0;
    for (const Vec3& q : pts) {
      const double d = norm(cross(b - a, q - a));
      if (d > best) {
        best = d;
        c = q;
      }
    }
    const Vec3 nrm = cross(b - a, c - a);
    double h = 0;
    for (const Vec3& q : pts) h = std::max(h, std::abs(dot(q - a, nrm)) / std::max(norm(nrm), 1e-300));
    if (h < kCoplanarRelTol * diam) flag("vertices do not affinely span 3-space");
  }

  // Facet planes: members on the plane, others strictly inside; vertices
  // within the merge tolerance of a foreign facet are surfaced as
  // near-degenerate.
  const double member_tol = kPlaneFitRelTol * diam;
  const double strict_tol = kCoplanarRelTol * diam;
  for (int k : lat.facet_labels) {
    const FacetPlane& pl = p.facet_plane(k);
    if (std::abs(norm(pl.normal) - 1.0) > 1e-8) {
      flagf("facet ", k, " has a degenerate normal");
      continue;
    }
    std::set<int> members(phi0[k].begin(), phi0[k].end());
    for (int i : lat.vertex_labels) {
      const double d = dot(p.vertex(i), pl.normal) - pl.support;
      if (members.count(i)) {
        if (std::abs(d) > member_tol)
          flagf("vertex ", i, " off the plane of its facet ", k, " by ", d);
      } else if (d > -strict_tol) {
        flagf("vertex ", i, " within tolerance of foreign facet ", k, " (margin ", -d, ")");
      }
    }
  }

  // Extremeness: the supporting normals at each vertex must span 3-space.
  for (int i : lat.vertex_labels) {
    std::vector<Vec3> normals;
    for (const auto& [k, verts] : phi0)
      if (std::binary_search(verts.begin(), verts.end(), i))
        normals.push_back(p.facet_plane(k).normal);
    bool extreme = false;
    for (size_t a = 0; a < normals.size() && !extreme; ++a)
      for (size_t b = a + 1; b < normals.size() && !extreme; ++b)
        for (size_t c = b + 1; c < normals.size() && !extreme; ++c)
          if (std::abs(det3(normals[a], normals[b], normals[c])) > 1e-10) extreme = true;
    if (!extreme) flagf("vertex ", i, " is not certified extreme by its facet normals");
  }

  return rep;
}

double volume(const Polytope& p) {
  if (!p.structurally_ok())
    throw InvalidPolytope("volume: invalid polytope: " + p.structural_issue());
  const Vec3 apex = p.vertex_mean();
  double six_vol = 0.0;
  for (const auto& tri : p.facet_triangulation()) {
    const Vec3 a = p.vertex(tri[0]) - apex;
    const Vec3 b = p.vertex(tri[1]) - apex;
    const Vec3 c = p.vertex(tri[2]) - apex;
    six_vol += std::abs(det3(a, b, c));
  }
  return six_vol / 6.0;
}

Vec3 centroid(const Polytope& p) {
  if (!p.structurally_ok())
    throw InvalidPolytope("centroid: invalid polytope: " + p.structural_issue());
  const Vec3 apex = p.vertex_mean();
  double six_vol = 0.0;
  Vec3 moment{0, 0, 0};  // sum of |det| * (apex+a+b+c)/4
  for (const auto& tri : p.facet_triangulation()) {
    const Vec3& a = p.vertex(tri[0]);
    const Vec3& b = p.vertex(tri[1]);
    const Vec3& c = p.vertex(tri[2]);
    const double d = std::abs(det3(a - apex, b - apex, c - apex));
    six_vol += d;
    moment += (apex + a + b + c) * (d / 4.0);
  }
  return moment / six_vol;
}

FacetStats facet_stats(const Polytope& p) {
  FacetStats st{0, 0};
  for (const auto& [k, ring] : p.facet_rings())
    st.delta = std::max(st.delta, static_cast<int>(ring.size()));
  for (const auto& [i, js] : p.lattice().phi1)
    st.degree = std::max(st.degree, static_cast<int>(js.size()));
  return st;
}

bool lattice_equal(const Polytope& p, const Polytope& q) { return p.lattice() == q.lattice(); }

Polytope affine_image(const Polytope& p, const std::array<std::array<double, 3>, 3>& m,
                      const Vec3& t) {
  Polytope out = p;
  for (Vec3& x : out.points_) {
    const Vec3 y{m[0][0] * x.x + m[0][1] * x.y + m[0][2] * x.z,
                 m[1][0] * x.x + m[1][1] * x.y + m[1][2] * x.z,
                 m[2][0] * x.x + m[2][1] * x.y + m[2][2] * x.z};
    x = y + t;
  }
  out.finalize();
  return out;
}

}  // namespace mahler
