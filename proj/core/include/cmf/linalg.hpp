#pragma once

#include <cstddef>
#include <vector>

#include "cmf/field.hpp"

namespace cmf {

using FpMatrix = std::vector<std::vector<Fp>>;

// In-place reduction to reduced row echelon form; returns the rank.
// Column order is the caller's; pivots are chosen left to right.
std::size_t row_reduce(const PrimeField& F, FpMatrix& rows);

std::size_t matrix_rank(const PrimeField& F, FpMatrix rows);

Fp determinant(const PrimeField& F, FpMatrix m);

// Throws SingularMatrix.
FpMatrix matrix_inverse(const PrimeField& F, FpMatrix m);

}  // namespace cmf
