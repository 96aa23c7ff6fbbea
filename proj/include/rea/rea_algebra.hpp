// Reflection equation algebra O_q(H(N)): symbolic elements and a zero test
// routed through the Cholesky-type embedding into the triangular algebra.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rea/rewrite.hpp"

namespace rea {

// Convenience constructors.
NCPoly Zgen(int N, int i, int j);
NCPoly Xgen(int N, int i, int j);
// TRI generators: T_ab (a <= b, diagonal allowed), T*_ab, T_a^{-1}.
NCPoly Tgen(int N, int a, int b);
NCPoly Tstar(int N, int a, int b);
NCPoly Tinv(int N, int a);

// Matrix of generators Z = (Z_ij) and products of such matrices.
using PolyMatrix = std::vector<std::vector<NCPoly>>;
PolyMatrix Zmatrix(int N);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

// Embeds Z-polynomials into O_q^eps(T(N)) via Z_ij -> sum_{k<=min(i,j)}
// eps~_[k] T*_ki T_kj and straightens.  Keeps its straightening memo, so
// repeated calls with the same eps are cheap.
class TriEmbedding {
public:
    TriEmbedding(int N, std::vector<int> eps);
    NCPoly embed(const NCPoly& zpoly);
    const RewriteSystem& system() const { return *sys_; }
    // eps~_[k] = eps_1 ... eps_k (zero beyond the rank).
    int eps_prefix(int k) const;

private:
    int N_;
    std::vector<int> eps_;  // zero-padded to N
    std::unique_ptr<RewriteSystem> sys_;
    std::unique_ptr<Straightener> st_;
};

NCPoly embed_iT(const NCPoly& zpoly, const std::vector<int>& eps);

// Sound zero test in O_q(H(N)): the embedding with eps = + is injective.
class ReaZeroTest {
public:
    explicit ReaZeroTest(int N) : emb_(N, std::vector<int>(static_cast<size_t>(N), 1)) {}
    bool is_zero(const NCPoly& zpoly) { return emb_.embed(zpoly).is_zero(); }
    TriEmbedding& embedding() { return emb_; }

private:
    TriEmbedding emb_;
};

bool is_zero_rea(const NCPoly& zpoly, int N);

// Central elements sigma_k (1 <= k <= N); sigma_0 = 1.
NCPoly central_sigma(int k, int N);
// Leading quantum minor Z_[k].
NCPoly leading_minor_Z(int k, int N);
// Quantum minor X_{I,J} of the FRT generator matrix (row-ordered product).
NCPoly frt_minor(int N, const std::vector<int>& I, const std::vector<int>& J);
// Quantum determinant of the FRT matrix.
NCPoly frt_det(int N);

// One entrywise reflection-equation relation, LHS - RHS, indexed (i,j,k,l).
NCPoly rea_relation(int N, int i, int j, int k, int l);

// Permutation statistics used by the formulas above.
int perm_length(const std::vector<int>& p);          // inversions
int perm_anti_exceedance(const std::vector<int>& p); // #{l : p(l) < l}, 1-based values

}  // namespace rea
