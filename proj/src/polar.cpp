//! Polarity about interior centers, the Santalo point solver, and the volume
//! product with its global lower-bound guard.

#include "mahler/polar.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mahler/errors.hpp"
#include "mahler/golden.hpp"

namespace mahler {

namespace {

constexpr double kInteriorMarginRel = 1e-12;

// Facets around each vertex in cyclic order, walked edge to edge through the
// vertex figure.
std::map<int, std::vector<int>> vertex_figure_cycles(const Polytope& p) {
  const FaceLattice& lat = p.lattice();
  std::map<int, std::vector<int>> cycles;
  for (int i : lat.vertex_labels) {
    const std::vector<int>& incident_edges = lat.phi1.at(i);
    // facet -> the (two) incident edges of i it contains
    std::map<int, std::vector<int>> facet_edges;
    for (int j : incident_edges)
      for (int k : lat.phi2.at(j)) facet_edges[k].push_back(j);
    for (const auto& [k, js] : facet_edges)
      if (js.size() != 2)
        throw InvalidPolytope("vertex figure at " + std::to_string(i) +
                              " is not a simple cycle");
    const int k0 = facet_edges.begin()->first;
    int prev_edge = std::min(facet_edges[k0][0], facet_edges[k0][1]);
    std::vector<int> cycle;
    int k = k0;
    do {
      cycle.push_back(k);
      const auto& js = facet_edges[k];
      const int next_edge = js[0] == prev_edge ? js[1] : js[0];
      const auto& ks = lat.phi2.at(next_edge);
      k = ks[0] == k ? ks[1] : ks[0];
      prev_edge = next_edge;
      if (cycle.size() > facet_edges.size())
        throw InvalidPolytope("vertex figure at " + std::to_string(i) + " does not close");
    } while (k != k0);
    if (cycle.size() != facet_edges.size())
      throw InvalidPolytope("vertex figure at " + std::to_string(i) + " is disconnected");
    cycles[i] = std::move(cycle);
  }
  return cycles;
}

// Allocation-free dual volume/centroid evaluation against a fixed lattice;
// the workhorse of the Santalo iteration.
class PolarEvaluator {
 public:
  explicit PolarEvaluator(const Polytope& p) : min_margin_(kInteriorMarginRel * p.diameter()) {
    const auto& rings = p.facet_rings();
    std::map<int, int> facet_pos;
    int idx = 0;
    for (const auto& [k, ring] : rings) {
      facet_pos[k] = idx++;
      normals_.push_back(p.facet_plane(k).normal);
      supports_.push_back(p.facet_plane(k).support);
    }
    for (const auto& [i, cycle] : vertex_figure_cycles(p)) {
      std::vector<int> ring;
      ring.reserve(cycle.size());
      for (int k : cycle) ring.push_back(facet_pos[k]);
      dual_rings_.push_back(std::move(ring));
    }
    dual_pts_.resize(normals_.size());
  }

  int facet_count() const { return static_cast<int>(normals_.size()); }

  bool margins_ok(const Vec3& z) const {
    for (size_t k = 0; k < normals_.size(); ++k)
      if (supports_[k] - dot(z, normals_[k]) <= min_margin_) return false;
    return true;
  }

  // Smallest facet margin (positive inside).
  double margin(const Vec3& z) const {
    double m = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < normals_.size(); ++k)
      m = std::min(m, supports_[k] - dot(z, normals_[k]));
    return m;
  }

  bool eval(const Vec3& z, double* vol, Vec3* cen) {
    for (size_t k = 0; k < normals_.size(); ++k) {
      const double m = supports_[k] - dot(z, normals_[k]);
      if (m <= min_margin_) return false;
      dual_pts_[k] = z + normals_[k] / m;
    }
    Vec3 apex{0, 0, 0};
    for (const Vec3& y : dual_pts_) apex += y;
    apex = apex / static_cast<double>(dual_pts_.size());

    double six_vol = 0.0;
    Vec3 moment{0, 0, 0};
    for (const auto& ring : dual_rings_) {
      const Vec3& a0 = dual_pts_[ring[0]];
      for (size_t i = 1; i + 1 < ring.size(); ++i) {
        const Vec3& b = dual_pts_[ring[i]];
        const Vec3& c = dual_pts_[ring[i + 1]];
        const double d = std::abs(det3(a0 - apex, b - apex, c - apex));
        six_vol += d;
        if (cen) moment += (apex + a0 + b + c) * (d / 4.0);
      }
    }
    if (vol) *vol = six_vol / 6.0;
    if (cen) *cen = moment / six_vol;
    return true;
  }

 private:
  std::vector<Vec3> normals_;
  std::vector<double> supports_;
  std::vector<std::vector<int>> dual_rings_;  // facet positions around each vertex
  std::vector<Vec3> dual_pts_;
  double min_margin_;
};

}  // namespace

// ---------------------------------------------------------------------------

Polytope polar(const Polytope& p, const Vec3& z) {
  if (!p.structurally_ok())
    throw InvalidPolytope("polar: invalid polytope: " + p.structural_issue());
  const double min_margin = kInteriorMarginRel * p.diameter();

  std::vector<int> dual_labels;
  std::vector<Vec3> dual_points;
  for (const auto& [k, ring] : p.facet_rings()) {
    const FacetPlane& pl = p.facet_plane(k);
    const double margin = pl.support - dot(z, pl.normal);
    if (margin <= min_margin)
      throw CenterNotInterior("polar: center not interior (facet " + std::to_string(k) +
                              " margin " + std::to_string(margin) + ")");
    dual_labels.push_back(k);
    dual_points.push_back(z + pl.normal / margin);
  }

  std::map<int, std::vector<int>> dual_rings = vertex_figure_cycles(p);

  std::map<std::pair<int, int>, int> dual_edge_labels;
  for (const auto& [j, ks] : p.lattice().phi2) {
    if (ks.size() != 2) throw InvalidPolytope("polar: edge not in two facets");
    dual_edge_labels[{std::min(ks[0], ks[1]), std::max(ks[0], ks[1])}] = j;
  }

  Polytope dual = Polytope::from_labeled_parts(std::move(dual_labels), std::move(dual_points),
                                               std::move(dual_rings), std::move(dual_edge_labels));
  if (!dual.structurally_ok())
    throw InvalidPolytope("polar: dual structure invalid: " + dual.structural_issue());
  return dual;
}

double polar_volume(const Polytope& p, const Vec3& z) { return volume(polar(p, z)); }

// ---------------------------------------------------------------------------
// Santalo point

SantaloResult santalo_point(const Polytope& p, double tol) {
  SantaloOptions opts;
  opts.tol = tol;
  return santalo_point(p, opts);
}

SantaloResult santalo_point(const Polytope& p, const SantaloOptions& opts) {
  if (!p.structurally_ok())
    throw InvalidPolytope("santalo_point: invalid polytope: " + p.structural_issue());
  if (!(opts.tol > 0)) throw Error("santalo_point: tol must be positive");

  // Whiten by the vertex covariance so skewed bodies iterate as round ones;
  // the Santalo point is affine-equivariant.
  const Vec3 vm = p.vertex_mean();
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const Vec3& x : p.points()) {
    Eigen::Vector3d d(x.x - vm.x, x.y - vm.y, x.z - vm.z);
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(p.vertex_count());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  const Eigen::Vector3d lam = eig.eigenvalues();
  const Eigen::Matrix3d q = eig.eigenvectors();
  if (!(lam(0) > 1e-12 * lam(2)))
    throw DegeneratePolytope("santalo_point: vertex covariance nearly singular");
  Eigen::Matrix3d linv = Eigen::Matrix3d::Zero(), lmat = Eigen::Matrix3d::Zero();
  for (int d = 0; d < 3; ++d) {
    const double s = std::sqrt(lam(d));
    lmat.col(d) = q.col(d) * s;
    linv.row(d) = q.col(d).transpose() / s;
  }
  // x~ = Linv (x - vm)
  std::array<std::array<double, 3>, 3> m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = linv(r, c);
  const Vec3 shift{-linv.row(0).dot(Eigen::Vector3d(vm.x, vm.y, vm.z)),
                   -linv.row(1).dot(Eigen::Vector3d(vm.x, vm.y, vm.z)),
                   -linv.row(2).dot(Eigen::Vector3d(vm.x, vm.y, vm.z))};
  const Polytope pw = affine_image(p, m, shift);

  PolarEvaluator ev(pw);
  const double res_target = opts.tol * p.diameter();

  auto residual_orig = [&](const Vec3& rw) {
    // r_orig = L^{-T} r~ with L^{-T} = Q diag(1/sqrt(lam)).
    Eigen::Vector3d rv(rw.x, rw.y, rw.z);
    Eigen::Vector3d ro = q * Eigen::Vector3d(rv(0) / std::sqrt(lam(0)), rv(1) / std::sqrt(lam(1)),
                                             rv(2) / std::sqrt(lam(2)));
    return ro.norm();
  };

  Vec3 z = centroid(pw);
  double g = 0.0;
  Vec3 cen{0, 0, 0};
  if (!ev.eval(z, &g, &cen))
    throw CenterNotInterior("santalo_point: centroid not strictly interior");

  int iterations = 0;
  double step = 1.0;
  bool converged = false;
  int stalls = 0;

  while (iterations < opts.iteration_cap) {
    ++iterations;
    const Vec3 r = cen - z;
    if (residual_orig(r) <= 0.9 * res_target) {
      converged = true;
      break;
    }

    // Damped move away from the dual centroid (the descent direction for
    // z -> |P^z|), with objective backtracking.
    const Vec3 trial = z - r * step;
    double gt = 0.0;
    Vec3 ct{0, 0, 0};
    if (ev.eval(trial, &gt, &ct) && gt < g) {
      z = trial;
      g = gt;
      cen = ct;
      step = std::min(1.0, step * 1.5);
      stalls = 0;
      continue;
    }
    step *= 0.5;
    ++stalls;

    if (step < 1e-13 || stalls > 60) {
      // Coordinate-wise golden-section pass on the convex objective.
      for (int d = 0; d < 3 && iterations < opts.iteration_cap; ++d) {
        ++iterations;
        const Vec3 axis{d == 0 ? 1.0 : 0.0, d == 1 ? 1.0 : 0.0, d == 2 ? 1.0 : 0.0};
        // Bracket by doubling until the axis probe leaves the interior.
        auto inside = [&](double t) { return ev.margins_ok(z + axis * t); };
        double pos_cap = ev.margin(z);
        while (inside(pos_cap * 2) && pos_cap < 1e6) pos_cap *= 2;
        double neg_cap = ev.margin(z);
        while (inside(-neg_cap * 2) && neg_cap < 1e6) neg_cap *= 2;
        const double t_lo = -neg_cap, t_hi = pos_cap;
        auto fval = [&](double t) {
          double v = 0.0;
          return ev.eval(z + axis * t, &v, nullptr) ? v : std::numeric_limits<double>::infinity();
        };
        const auto [t_best, g_best] = golden_minimize(fval, t_lo, t_hi, 32);
        if (g_best < g) {
          z = z + axis * t_best;
          g = g_best;
        }
      }
      if (!ev.eval(z, &g, &cen))
        throw NonConvergence("santalo_point: fallback left the interior");
      step = 1.0;
      stalls = 0;
    }
  }

  if (!converged) {
    const Vec3 r = cen - z;
    if (residual_orig(r) > res_target)
      throw NonConvergence("santalo_point: residual " + std::to_string(residual_orig(r)) +
                           " above target " + std::to_string(res_target) + " after " +
                           std::to_string(iterations) + " iterations");
  }

  // Map back and certify in the original frame.
  Eigen::Vector3d zo = lmat * Eigen::Vector3d(z.x, z.y, z.z) + Eigen::Vector3d(vm.x, vm.y, vm.z);
  SantaloResult result;
  result.point = {zo(0), zo(1), zo(2)};
  const Polytope dual = polar(p, result.point);
  result.polar_volume = volume(dual);
  result.residual = norm(centroid(dual) - result.point);
  result.product = volume(p) * result.polar_volume;
  result.iterations = iterations;
  if (result.residual > res_target)
    throw NonConvergence("santalo_point: certificate residual " +
                         std::to_string(result.residual) + " above target " +
                         std::to_string(res_target));
  bound_guard::record(result.product);
  return result;
}

double volume_product(const Polytope& p) { return santalo_point(p).product; }

bool product_monotonicity_check(const Polytope& p, double tol) {
  const SantaloResult s = santalo_point(p);
  const Polytope star = polar(p, s.point);
  return volume_product(star) <= s.product + tol;
}

std::string product_report_json(const Polytope& p, const SantaloOptions& opts) {
  const SantaloResult s = santalo_point(p, opts);
  nlohmann::ordered_json j;
  j["vertices"] = p.vertex_count();
  j["facets"] = p.facet_count();
  j["santalo_point"] = {s.point.x, s.point.y, s.point.z};
  j["polar_volume"] = s.polar_volume;
  j["volume"] = volume(p);
  j["product"] = s.product;
  j["residual"] = s.residual;
  j["iterations"] = s.iterations;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Bound guard

namespace bound_guard {

namespace {
std::atomic<std::uint64_t> g_count{0};
std::atomic<double> g_min{std::numeric_limits<double>::infinity()};
}  // namespace

void record(double product) {
  g_count.fetch_add(1, std::memory_order_relaxed);
  double seen = g_min.load(std::memory_order_relaxed);
  while (product < seen && !g_min.compare_exchange_weak(seen, product)) {
  }
  if (product < kMahlerBound - kSlack) {
    std::ostringstream os;
    os << "volume product " << product << " below 64/9 - " << kSlack
       << ": bug or counterexample";
    throw BoundViolation(os.str());
  }
}

std::uint64_t count() { return g_count.load(); }
double min_seen() { return g_min.load(); }
void reset() {
  g_count.store(0);
  g_min.store(std::numeric_limits<double>::infinity());
}

}  // namespace bound_guard

}  // namespace mahler
