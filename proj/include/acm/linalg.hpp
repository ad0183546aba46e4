#pragma once

// Dense linear algebra over F_p.

#include <vector>

#include "acm/ring.hpp"

namespace acm {

using FpMatrix = std::vector<std::vector<Coeff>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(FpMatrix& m, int cols, const PrimeField& k);

int rank(FpMatrix m, int cols, const PrimeField& k);

/// Basis of {v : m v = 0}; each vector has length `cols`.
FpMatrix nullspace(FpMatrix m, int cols, const PrimeField& k);

}  // namespace acm
