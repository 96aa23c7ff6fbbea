#include <algorithm>
#include <string>

#include "rea/errors.hpp"
#include "rea/hrep.hpp"

namespace rea {

HermitianRep character_rep(const Eigen::MatrixXcd& chi, double q0) {
    const int N = static_cast<int>(chi.rows());
    if (N < 1 || chi.cols() != N) throw DomainError("character_rep: need a square matrix");
    HermitianRep rep = zero_rep(N, q0);
    rep.source = "character";
    rep.predicted_roots.clear();
    rep.predicted_sigma.clear();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) rep.z(i, j)(0, 0) = chi(i - 1, j - 1);
    return rep;
}

TCorep scaling_corep(int N, double c) {
    if (c == 0) throw DomainError("scaling_corep: c must be nonzero");
    TCorep t;
    t.N = N;
    t.dim = 1;
    t.T.assign(static_cast<size_t>(N * N), CMat::Zero(1, 1));
    for (int i = 0; i < N; ++i) t.T[static_cast<size_t>(i * N + i)](0, 0) = c;
    t.level = {0};
    t.name = "scaling(" + std::to_string(c) + ")";
    return t;
}

TCorep module_corep(const HWModuleSpec& spec) {
    if (spec.M() != spec.N) throw DomainError("module_corep: needs a full-rank weight");
    for (int e : spec.eps)
        if (e != 1) throw DomainError("module_corep: needs eps = (+,...,+)");
    HWModuleSpec s = spec;
    s.margin = 0;
    HWModule m = build_hw_module(s, false);
    // A finite module has an empty height shell below the truncation; every
    // higher shell is then empty as well, so the truncated module is exact.
    const int top = *std::max_element(m.height.begin(), m.height.end());
    if (top >= s.D) throw DomainError("module_corep: module is not finite below the truncation");
    TCorep t;
    t.N = spec.N;
    t.dim = m.dim();
    t.level = m.height;
    t.T.assign(static_cast<size_t>(t.N * t.N), CMat::Zero(t.dim, t.dim));
    for (int a = 1; a <= t.N; ++a)
        for (int b = a; b <= t.N; ++b) t.T[static_cast<size_t>((a - 1) * t.N + (b - 1))] = m.Tmat(a, b).cast<double>().cast<cplx>();
    t.name = "module(dim " + std::to_string(t.dim) + ")";
    return t;
}

TCorep vector_corep(double q0) {
    HWModuleSpec s;
    s.N = 2;
    s.eps = {1, 1};
    s.r = {0.0, 1.0};
    s.D = 6;
    s.q0 = q0;
    s.margin = 0;
    TCorep t = module_corep(s);
    if (t.dim != 2) throw DomainError("vector_corep: unexpected dimension " + std::to_string(t.dim));
    t.name = "vector";
    return t;
}

namespace {

void check_cap(long a, long b) {
    if (a * b > kTransportCap)
        throw DomainError("adjoint transport: dimension " + std::to_string(a * b) + " exceeds the cap " + std::to_string(kTransportCap));
}

// Z'_ij = sum_{k,l} Z_kl (x) (X_ki^* X_lj), tensor order H (x) V.
std::vector<CMat> transport_blocks(const HermitianRep& rep, const std::vector<CMat>& X, int m) {
    const int N = rep.N;
    auto x = [&](int a, int b) -> const CMat& { return X[static_cast<size_t>((a - 1) * N + (b - 1))]; };
    std::vector<CMat> out(static_cast<size_t>(N * N), CMat::Zero(rep.dim * m, rep.dim * m));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            CMat& acc = out[static_cast<size_t>((i - 1) * N + (j - 1))];
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    const CMat& Z = rep.z(k, l);
                    if (Z.isZero(0)) continue;
                    CMat W = x(k, i).adjoint() * x(l, j);
                    if (W.isZero(0)) continue;
                    for (int a = 0; a < rep.dim; ++a)
                        for (int b = 0; b < rep.dim; ++b)
                            if (Z(a, b) != cplx(0)) acc.block(a * m, b * m, m, m) += Z(a, b) * W;
                }
        }
    return out;
}

}  // namespace

HermitianRep adjoint_transport_T(const HermitianRep& rep, const TCorep& t) {
    if (t.N != rep.N || static_cast<int>(t.T.size()) != t.N * t.N) throw DomainError("adjoint_transport_T: size mismatch");
    check_cap(rep.dim, t.dim);
    HermitianRep out;
    out.N = rep.N;
    out.dim = rep.dim * t.dim;
    out.q0 = rep.q0;
    out.source = "transport_T(" + rep.source + "," + t.name + ")";
    out.Z = transport_blocks(rep, t.T, t.dim);
    // The total level h_H + h_V is preserved by central elements, so the
    // interior is cut by the total level.
    out.interior_level = rep.interior_level;
    for (int a = 0; a < rep.dim; ++a)
        for (int b = 0; b < t.dim; ++b) {
            out.level.push_back(rep.level[static_cast<size_t>(a)] + t.level[static_cast<size_t>(b)]);
            out.mask.push_back(rep.mask.empty() ? 1 : rep.mask[static_cast<size_t>(a)]);
        }
    return out;
}

HermitianRep adjoint_transport_U(const HermitianRep& rep, const SUq2Rep& u, int u_margin, double tol) {
    if (rep.N != 2) throw DomainError("adjoint_transport_U: only U_q(2) corepresentations are supported");
    const double res = suq2_unitarity_residual(u);
    if (res > tol) throw BadCorep("adjoint_transport_U: unitarity residual " + std::to_string(res));
    const int m = static_cast<int>(u.a.rows());
    check_cap(rep.dim, m);
    HermitianRep out;
    out.N = 2;
    out.dim = rep.dim * m;
    out.q0 = rep.q0;
    out.source = "transport_U(" + rep.source + ")";
    out.Z = transport_blocks(rep, u.U, m);
    // Central elements act as sigma_k (x) 1; interior is the product of the
    // interiors, the corepresentation index staying u_margin below the cut.
    out.interior_level = rep.interior_level;
    for (int a = 0; a < rep.dim; ++a)
        for (int b = 0; b < m; ++b) {
            out.level.push_back(rep.level[static_cast<size_t>(a)]);
            const bool in_u = m == 1 || b <= u.D - u_margin;
            const bool in_h = rep.mask.empty() || rep.mask[static_cast<size_t>(a)];
            out.mask.push_back(in_u && in_h ? 1 : 0);
        }
    return out;
}

}  // namespace rea
