#pragma once

#include <gmpxx.h>

#include <vector>

namespace mahler {

// Dense exact linear algebra over mpq_class, sized for the small constraint
// systems here (tens of rows/columns). Doubles convert to mpq exactly, so
// ranks and kernels are free of rounding drift.
using RatVec = std::vector<mpq_class>;
using RatMat = std::vector<RatVec>;  // row-major

// In-place reduced row echelon form; returns the pivot columns (rank-many,
// ascending).
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Basis of the null space {x : m x = 0} with the standard free-column
// pattern: one vector per free column, 1 at the free column. cols is the
// variable count (needed when m has fewer rows than pivots demand or is
// empty).
std::vector<RatVec> kernel_basis(RatMat m, int cols);

std::vector<double> to_double(const RatVec& v);

}  // namespace mahler
