#pragma once

#include <functional>
#include <vector>

#include "mahler/polar.hpp"
#include "mahler/polytope.hpp"
#include "mahler/shadow.hpp"

namespace mahler {

// Data-parallel driver for the batch verification workloads: one independent
// task per polytope, no shared mutable state. The serial path is the
// reference; the parallel path must produce bit-identical results.

std::vector<double> batch_volume_products(const std::vector<Polytope>& ps,
                                          ExecMode mode = ExecMode::Parallel);

std::vector<SantaloResult> batch_santalo(const std::vector<Polytope>& ps,
                                         ExecMode mode = ExecMode::Parallel,
                                         const SantaloOptions& opts = {});

// Runs f(i) for i in [0, n) under the requested mode, rethrowing the first
// exception (lowest index) raised by any task.
void for_each_index(int n, ExecMode mode, const std::function<void(int)>& f);

}  // namespace mahler
