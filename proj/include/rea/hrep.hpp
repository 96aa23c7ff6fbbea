// Representations of the reflection equation algebra by operator blocks Z,
// their verification, spectral data and adjoint transport.
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "rea/classify.hpp"
#include "rea/gtrep.hpp"
#include "rea/ncpoly.hpp"
#include "rea/report.hpp"

namespace rea {

// Z = (Z_ij) acting on a truncated space.  Basis vector n is interior when
// level[n] <= interior_level and mask[n] is set; only interior columns are
// trusted, since operator words leaving the truncation are not exact.
struct HermitianRep {
    int N = 1;
    int dim = 0;
    double q0 = 0.5;
    std::vector<CMat> Z;        // row-major N x N blocks
    std::vector<int> level;     // weight height (or ladder index) per basis vector
    std::vector<char> mask;     // extra interior restriction (1 = allowed)
    int interior_level = 0;
    std::string source;         // "gt", "n2:S_pos", "character", "transport_T", ...
    int rank = 0;
    std::vector<int> signature; // eta_k, k <= rank, when known from the construction
    std::optional<HWModuleSpec> spec;
    // Triangular block T_ab (a <= b) for GT-built reps; used for operator minors.
    std::vector<CMat> T;        // row-major N x N, empty if unavailable

    const CMat& z(int i, int j) const { return Z[static_cast<size_t>((i - 1) * N + (j - 1))]; }
    CMat& z(int i, int j) { return Z[static_cast<size_t>((i - 1) * N + (j - 1))]; }
    std::vector<int> interior() const;
    bool is_interior(int n) const;
    // Predicted roots eta_k q^{2(r_k+k)-2} and HC values of sigma_k when known.
    std::vector<double> predicted_roots;
    std::vector<double> predicted_sigma;
};

// Z_ij = sum_{k <= min(i,j)} eps~_[k] T*_ki T_kj on the rank-M subspace of a
// Gelfand-Tsetlin module.
HermitianRep build_bigcell_rep(const HWModuleSpec& spec, bool parallel = true);
HermitianRep zero_rep(int N, double q0);
// One-dimensional rep given by a scalar matrix (a *-character).
HermitianRep character_rep(const Eigen::MatrixXcd& chi, double q0);

// The explicit N = 2 family.
// CharZero is the character z = v = w = 0, u = q*lambda over the fibre {0, lambda}.
enum class N2Kind { SPos, SZero, SNegPlus, SNegMinus, Char, CharZero, Zero };
struct N2Params {
    N2Kind kind = N2Kind::Zero;
    double c = 1.0;       // S_pos: c (nonzero); S_neg, Char: c > 0
    int n = 0;            // S_pos: dimension n+1
    double lambda = 1.0;  // S_zero, CharZero
    double a = 1.0;       // S_neg, Char: a > 0
    double theta = 0.0;   // Char
};
HermitianRep n2_family(const N2Params& p, int D, double q0, int margin = 4);
// The fibre {lambda_1, lambda_2}: roots of x^2 - T x + D for the family.
std::vector<double> n2_fibre(const N2Params& p, double q0);
std::string n2_kind_name(N2Kind k);

// Symbolic polynomial in Z-generators applied to the interior columns.
CMat apply_to_interior(const NCPoly& p, const HermitianRep& rep, bool parallel = true);

struct RepCheck {
    Findings findings;
    std::vector<double> sigma;     // measured central values sigma_1..sigma_N
    double re = 0, selfadj = 0, ch = 0, hc = 0;
};
// Reflection equation, self-adjointness, centrality of sigma_k, Harish-Chandra
// prediction (when known) and Cayley-Hamilton with the measured sigma_k.
RepCheck verify_rep(const HermitianRep& rep, double tol = 1e-9, bool parallel = true);

struct SpectralComponent {
    int multiplicity = 0;              // interior dimension of the component
    std::vector<double> sigma;         // central values
    std::vector<double> roots;         // spectral weight, sorted descending
    std::vector<int> signature;        // eta_k for k <= rank
    int rank = 0;
    bool admissible = false;
    ExtendedSignature ext;
};
struct SpectralData {
    std::vector<SpectralComponent> components;
    bool factorial = true;
};
// Throws NotFactorial if sigma_k does not act by scalars and the interior does
// not split into joint eigenspaces.
SpectralData spectral_data(const HermitianRep& rep, bool parallel = true);

// Roots of x^N - s_1 x^{N-1} + ... + (-1)^N s_N, real parts, sorted descending.
std::vector<double> char_poly_roots(const std::vector<double>& sigma);

// Eigenvalues of a Hermitian operator whose eigenvectors are (numerically)
// supported on interior indices.
std::vector<double> interior_spectrum(const CMat& op, const HermitianRep& rep, double leak_tol = 1e-8);

// Operator-level minor Z_{I,J} = sum_K eps~_[K] (T_{K,I})^* T_{K,J} of a
// GT-built rep, with T_{K,J} the ordered permutation-sum minor.
CMat operator_minor(const HermitianRep& rep, const std::vector<int>& I, const std::vector<int>& J);
// Max relative residual of Z_[k] Z_{I,J} = q^{2|I cap [k]| - 2|J cap [k]|} Z_{I,J} Z_[k].
double minor_qcommutation_residual(const HermitianRep& rep);
// Max relative difference between operator_minor([k],[k]) and the symbolic
// leading minor evaluated as an operator word.
double leading_minor_crosscheck(const HermitianRep& rep, bool parallel = true);

// Adjoint transport.  The T(N) corepresentation is given by its matrix of
// operators T_ij (zero below the diagonal) on a finite-dimensional space.
struct TCorep {
    int N = 1;
    int dim = 1;
    std::vector<CMat> T;     // row-major N x N
    std::vector<int> level;  // weight height per basis vector
    std::string name;
};
TCorep scaling_corep(int N, double c);
// Finite-dimensional admissible T(N) module with eps = + (checked).
TCorep module_corep(const HWModuleSpec& spec);
// The 2-dimensional vector corepresentation of T_q(2) (eps = +, r = (0,1)).
TCorep vector_corep(double q0);

inline constexpr int kTransportCap = 20000;

HermitianRep adjoint_transport_T(const HermitianRep& rep, const TCorep& t);
// U is a 2x2 (in general N x N) block of operators; unitarity is checked on
// the interior of the corepresentation space.
HermitianRep adjoint_transport_U(const HermitianRep& rep, const SUq2Rep& u, int u_margin = 4, double tol = 1e-9);

}  // namespace rea
