// Gelfand-Tsetlin highest weight modules for the eps-deformed triangular
// algebra, realized as dense real matrices on a truncated orthonormal basis.
//
// A pattern P has entries P(i,k) >= 0 for 1 <= i <= k <= N-1.  The module is
// truncated by the weight height h(P) = sum_{i<=k} (k+1-i) P(i,k), which is a
// function of the torus weight; every weight space is therefore either fully
// kept or fully dropped.  e_i lowers h by one, f_i raises it by one.
#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rea/report.hpp"

namespace rea {

// Module matrices are kept in extended precision: leading minors and Z
// blocks subtract products that grow like q^{-2h} with the height h.
using real = long double;
using RMat = Eigen::Matrix<real, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<real, Eigen::Dynamic, 1>;
using CMat = Eigen::MatrixXcd;

struct GTPattern {
    int N = 1;
    std::vector<int> v;  // (i,k) stored at k(k-1)/2 + (i-1)

    GTPattern() = default;
    explicit GTPattern(int n) : N(n), v(static_cast<size_t>(n * (n - 1) / 2), 0) {}
    static int slot(int i, int k) { return k * (k - 1) / 2 + (i - 1); }
    int at(int i, int k) const { return (i >= 1 && k >= i && k <= N - 1) ? v[static_cast<size_t>(slot(i, k))] : 0; }
    int& ref(int i, int k) { return v[static_cast<size_t>(slot(i, k))]; }
    int total() const;
    int height() const;
    friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.v < b.v; }
    friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.v == b.v; }
};

std::string to_string(const GTPattern& P);

struct HWModuleSpec {
    int N = 2;
    std::vector<int> eps;    // length M <= N, entries in {-1,0,1}
    std::vector<double> r;   // length M
    int D = 12;              // truncation: height <= D
    double q0 = 0.5;
    int margin = -1;         // interior: height <= D - margin; -1 means 4N
    bool unitary = true;     // reject negative norms

    int M() const { return static_cast<int>(eps.size()); }
    int effective_margin() const { return margin < 0 ? 4 * N : margin; }
    // Padded data: eps~ = (eps,0,...,0), r~ = (r,1,...,1).
    std::vector<int> eps_padded() const;
    std::vector<double> r_padded() const;
};

// True iff for all s < t with eps_(s,t] = 1, (r_t + t) - (r_s + s) is a
// positive integer (to tolerance 1e-9).
bool eps_adapted(const std::vector<double>& r, const std::vector<int>& eps);

// eps_(a,b] = eps_{a+1} ... eps_b on a zero-padded vector (1-based).
int eps_interval_int(const std::vector<int>& eps, int a, int b);

// Norm c_P of the spanning vector xi(P), carried as sign * exp(log_abs).
struct NormValue {
    int sign = 1;            // -1, 0 or 1
    real log_abs = 0.0L;
    double value() const;
};
NormValue gt_norm_log(const GTPattern& P, const HWModuleSpec& spec);
double gt_norm(const GTPattern& P, const HWModuleSpec& spec);

// All patterns of size N with P(i,k) = 0 for i > M, ordered by (height, entries).
// If by_total is set the bound D applies to sum P instead of the height.
std::vector<GTPattern> gt_patterns(int N, int M, int D, bool by_total = false);

// Raising coefficient: e_i xi(P) = sum_j a_{j,i}(P) xi(P + d_{j,i-1} - d_{j,i}).
double gt_raise_coeff(const GTPattern& P, int j, int i, const HWModuleSpec& spec);

struct HWModule {
    HWModuleSpec spec;
    std::vector<GTPattern> basis;
    std::vector<int> height;
    std::vector<real> log_norm;     // log c_P of kept patterns (all c_P > 0)
    std::vector<RVec> K;            // K_1..K_N as diagonals (index 0 unused)
    std::vector<RMat> e, f;         // e_i, f_i for 1 <= i < N (index 0 unused)
    std::map<std::pair<int, int>, RMat> T;  // T_ij, i <= j; T_ii = K_i^{-1}

    int dim() const { return static_cast<int>(basis.size()); }
    int interior_height() const { return spec.D - spec.effective_margin(); }
    std::vector<int> interior() const;
    // T_ab with the zero-row convention (zero matrix for a > b).
    RMat Tmat(int a, int b) const;
    int index_of(const GTPattern& P) const;
};

// Builds the module; columns of e/f are assembled in parallel when requested.
HWModule build_hw_module(const HWModuleSpec& spec, bool parallel = true);

// Relation checks on interior vectors: unitarity, weight relations, the
// eps-deformed [e_i,f_j], Serre relations and the triangular relations.
Findings verify_hw_module(const HWModule& m, double tol = 1e-10);

// Scan of norms for patterns with sum P <= bound: counts of negative / zero.
struct NormScan {
    int patterns = 0, negative = 0, zero = 0;
    std::string first_negative;
};
NormScan scan_norms(const HWModuleSpec& spec, int bound);

// The SU_q(2) representation s on span(e_0..e_D): a e_n = (1-q^{2n})^{1/2}
// e_{n-1}, c e_n = q^n e_n.  U = [[a, -q c^*], [c, a^*]], optionally composed
// with the character chi_theta = diag(e^{2 pi i theta}, e^{-2 pi i theta}).
struct SUq2Rep {
    int D = 0;
    double q0 = 0.5;
    CMat a, c;
    std::vector<CMat> U;  // 2x2 block, row-major
    int interior_index() const { return D - 1; }
};
SUq2Rep suq2_rep(int D, double q0, std::optional<double> theta = std::nullopt);
// The 1-dimensional corepresentation chi_theta of U_q(2).
SUq2Rep u2_character(double theta);
// max |U*U - 1| over columns n <= D - 1.
double suq2_unitarity_residual(const SUq2Rep& s);

// Relative residual max|A - B| / max(1, max|A|, max|B|) over the given columns.
double rel_residual(const CMat& A, const CMat& B, const std::vector<int>& cols);
double rel_residual(const RMat& A, const RMat& B, const std::vector<int>& cols);

}  // namespace rea
