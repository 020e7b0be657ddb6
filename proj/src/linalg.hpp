#pragma once

#include <vector>

#include "multideal/rational.hpp"

namespace multideal::detail {

using IntMatrix = std::vector<std::vector<Integer>>;

// Rank over the rationals (fraction-free elimination).
std::size_t rank(IntMatrix rows);

// Determinant of a square integer matrix (Bareiss).
Integer determinant(IntMatrix m);

// For an r × (r+1) integer matrix, the vector of signed maximal minors,
// which spans the kernel when the matrix has full row rank and is zero otherwise.
std::vector<Integer> cofactor_kernel(const IntMatrix& rows);

Integer gcd_of(const std::vector<Integer>& v);

}  // namespace multideal::detail
