#include "mahler/off_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

// Next non-empty, non-comment line ('#' comments, OFF convention).
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return true;
  }
  return false;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Polytope read_off(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("OFF: empty input");
  {
    std::istringstream ls(line);
    std::string magic;
    ls >> magic;
    if (magic != "OFF") throw ParseError("OFF: missing OFF header");
    // Counts may share the header line.
    long v = 0, f = 0, e = 0;
    if (ls >> v >> f >> e) {
      line = std::to_string(v) + " " + std::to_string(f) + " " + std::to_string(e);
    } else if (!next_line(in, line)) {
      throw ParseError("OFF: missing counts line");
    }
  }
  long nv = 0, nf = 0, ne = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> nv >> nf >> ne)) throw ParseError("OFF: malformed counts line");
    if (nv < 4 || nf < 4) throw ParseError("OFF: too few vertices or facets");
  }

  std::vector<Vec3> pts;
  pts.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!next_line(in, line)) throw ParseError("OFF: truncated vertex list");
    std::istringstream ls(line);
    Vec3 p;
    if (!(ls >> p.x >> p.y >> p.z)) throw ParseError("OFF: malformed vertex line");
    pts.push_back(p);
  }

  std::vector<std::vector<int>> rings;
  rings.reserve(nf);
  for (long k = 0; k < nf; ++k) {
    if (!next_line(in, line)) throw ParseError("OFF: truncated facet list");
    std::istringstream ls(line);
    long m = 0;
    if (!(ls >> m) || m < 3) throw ParseError("OFF: malformed facet line");
    std::vector<int> ring;
    for (long i = 0; i < m; ++i) {
      long idx = 0;
      if (!(ls >> idx) || idx < 0 || idx >= nv) throw ParseError("OFF: facet index out of range");
      ring.push_back(static_cast<int>(idx));
    }
    rings.push_back(std::move(ring));
  }

  std::vector<int> labels(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) labels[i] = static_cast<int>(i);
  Polytope p = Polytope::from_parts(labels, pts, rings);
  ValidationReport rep = validate(p);
  if (!rep.ok()) throw InvalidPolytope("OFF: invalid polytope:\n" + rep.summary());
  return p;
}

Polytope read_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("OFF: cannot open " + path);
  return read_off(in);
}

void write_off(std::ostream& out, const Polytope& p) {
  out << "OFF\n";
  out << p.vertex_count() << " " << p.facet_count() << " " << p.edge_count() << "\n";
  for (const Vec3& x : p.points())
    out << fmt17(x.x) << " " << fmt17(x.y) << " " << fmt17(x.z) << "\n";
  // Vertex indices are positions in label order.
  for (const auto& [k, ring] : p.facet_rings()) {
    out << ring.size();
    for (int lbl : ring) out << " " << p.vertex_index(lbl);
    out << "\n";
  }
}

void write_off_file(const std::string& path, const Polytope& p) {
  std::ofstream out(path);
  if (!out) throw ParseError("OFF: cannot open " + path + " for writing");
  write_off(out, p);
}

}  // namespace mahler
