#pragma once

#include <string>
#include <vector>

#include "mahler/polytope.hpp"
#include "mahler/shadow.hpp"
#include "mahler/speeds.hpp"

namespace mahler {

enum class Side { Primal, Polar };
enum class Termination { ReachedTetrahedron, NoDecrease, IterationCap };
const char* to_string(Side s);
const char* to_string(Termination t);

struct DescentStep {
  Polytope snapshot;  // iterate before the move
  Side side;
  Vec3 theta;
  SpeedAssignment speed;
  double t_star;
  double product;  // volume product after the accepted move
};

struct DescentTrace {
  double initial_product = 0.0;
  std::vector<DescentStep> steps;
  double final_product = 0.0;
  Termination terminated = Termination::NoDecrease;
  std::vector<std::string> notes;  // solver errors, anomalies
};

struct DescentOptions {
  int cap_iter = 50;
  double step_cap = 0.5;  // persistence-interval cap per move
  double tol = 1e-6;      // relative decrease required to accept a move
};

// Repeatedly: pick the side indicated by the combinatorial alternative, take
// a non-trivial admissible speed there, line-search the volume product over
// the validated persistence interval, accept decreases. On the polar side
// the next iterate is the deformed polar body itself. Iterates are re-hulled
// between steps.
DescentTrace descend(const Polytope& p, const DescentOptions& opts = {});

// Hull of n points sampled uniformly on the unit sphere; deterministic per
// (n, seed), retrying seed+1 on degeneracy (bounded at 100).
Polytope random_polytope(int n, unsigned seed);

// One step per line: {step, side, theta, t_star, product, vertices}.
std::string trace_jsonl(const DescentTrace& trace);

}  // namespace mahler
