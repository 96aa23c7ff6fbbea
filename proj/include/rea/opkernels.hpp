// Dense operator kernels: evaluating symbolic polynomials on matrices.
//
// The parallel path and the serial reference split the terms into the same
// fixed chunks and sum the chunk results in the same order, so both return
// bit-identical matrices independently of the thread count.
#pragma once

#include <Eigen/Dense>

#include <vector>

#include "rea/ncpoly.hpp"

namespace rea {

using CMat = Eigen::MatrixXcd;

// Numeric value of a coefficient times (q - q^{-1})^{-denom} at q0.
cplx coefficient_value(const LaurentScalar& c, int denom, double q0);

// Returns p(L) * X, where letter code c of p's alphabet acts as *letters[c].
// Letters may be null only if p does not use them.
CMat apply_poly(const NCPoly& p, const std::vector<const CMat*>& letters, const CMat& X, double q0, bool parallel = true);

// Number of fixed summation chunks shared by both paths.
inline constexpr int kApplyChunks = 32;

}  // namespace rea
