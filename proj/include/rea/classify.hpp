// Classification data: admissible root multisets, extended signatures,
// canonical eps-adapted weights and the *-characters of the reflection
// equation algebra.
#pragma once

#include <optional>
#include <vector>

#include "rea/braid.hpp"

namespace rea {

struct ExtendedSignature {
    double rmod1 = 0.0;  // in [0,1); 0 whenever nplus * nminus == 0
    int nplus = 0, nminus = 0, nzero = 0;
};

// Equality with rmod1 compared modulo 1 at tolerance tol.
bool ext_equal(const ExtendedSignature& a, const ExtendedSignature& b, double tol = 1e-9);

// Positive roots q^{2 alpha + 2 m_i}, negative roots -q^{2 beta + 2 n_j},
// plus nzero zeros; alpha, beta normalized so min m = min n = 0.
struct RootDecomposition {
    double alpha = 0.0, beta = 0.0;
    std::vector<int> m, n;  // sorted ascending
    int nzero = 0;
};

// Roots with |x| <= zero_tol * max|x| count as zero.
std::optional<RootDecomposition> admissible_roots(const std::vector<double>& roots, double q0, double tol = 1e-9,
                                                  double zero_tol = 1e-12);
ExtendedSignature ext_signature(const std::vector<double>& roots, double q0, double tol = 1e-9);
// Unique eps-adapted r whose values eta_k q^{2(r_k+k)-2} enumerate the nonzero roots.
std::vector<double> canonical_weight(const std::vector<double>& roots, const std::vector<int>& eps, double q0,
                                     double tol = 1e-9);

// Numeric and exact *-characters.
struct CharacterParams {
    int k = 0, l = 0;
    double a = 1.0, c = 1.0;
    std::vector<cplx> y;  // l unimodular numbers
};
Eigen::MatrixXcd star_character(const CharacterParams& p, int N);

struct ExactCharacterParams {
    int k = 0, l = 0;
    Rational a = 1, c = 1;
    std::vector<GaussRational> y;  // l points with |y| = 1
};
GaussMat star_character_exact(const ExactCharacterParams& p, int N);

// R Z_2 R Z_2 - Z_2 R Z_2 R for a scalar matrix Z, exactly.
GaussMat re_defect_exact(const GaussMat& Z, int N);
// Same numerically at q0; returns the max-abs entry.
double re_residual_scalar(const Eigen::MatrixXcd& Z, double q0);

}  // namespace rea
