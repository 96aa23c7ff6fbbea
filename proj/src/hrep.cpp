#include "rea/hrep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rea/braid.hpp"
#include "rea/identities.hpp"
#include "rea/opkernels.hpp"
#include "rea/rea_algebra.hpp"

namespace rea {

std::vector<int> HermitianRep::interior() const {
    std::vector<int> idx;
    for (int n = 0; n < dim; ++n)
        if (is_interior(n)) idx.push_back(n);
    return idx;
}

bool HermitianRep::is_interior(int n) const {
    const size_t s = static_cast<size_t>(n);
    return level[s] <= interior_level && (mask.empty() || mask[s]);
}

namespace {

std::vector<double> elementary_symmetric(const std::vector<double>& x, int N) {
    std::vector<double> e(static_cast<size_t>(N) + 1, 0.0);
    e[0] = 1;
    for (double v : x)
        for (int k = N; k >= 1; --k) e[static_cast<size_t>(k)] += v * e[static_cast<size_t>(k - 1)];
    return {e.begin() + 1, e.end()};
}

CMat interior_identity(const HermitianRep& rep, const std::vector<int>& in) {
    CMat X = CMat::Zero(rep.dim, static_cast<Eigen::Index>(in.size()));
    for (size_t c = 0; c < in.size(); ++c) X(in[c], static_cast<Eigen::Index>(c)) = 1;
    return X;
}

// Rows of an operator restricted to the given index list.
CMat take_rows(const CMat& A, const std::vector<int>& rows) {
    CMat B(static_cast<Eigen::Index>(rows.size()), A.cols());
    for (size_t r = 0; r < rows.size(); ++r) B.row(static_cast<Eigen::Index>(r)) = A.row(rows[r]);
    return B;
}

double max_abs(const CMat& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

double rel_diff(const CMat& A, const CMat& B) {
    return max_abs(A - B) / std::max({1.0, max_abs(A), max_abs(B)});
}

Finding make_finding(const std::string& name, double residual, double tol, const std::string& detail = {}) {
    Finding f;
    f.check = name;
    f.residual = residual;
    f.pass = residual < tol;
    f.detail = detail;
    return f;
}

}  // namespace

HermitianRep zero_rep(int N, double q0) {
    if (N < 1) throw DomainError("zero_rep: N must be >= 1");
    HermitianRep rep;
    rep.N = N;
    rep.dim = 1;
    rep.q0 = q0;
    rep.Z.assign(static_cast<size_t>(N * N), CMat::Zero(1, 1));
    rep.level = {0};
    rep.interior_level = 0;
    rep.source = "zero";
    rep.predicted_roots.assign(static_cast<size_t>(N), 0.0);
    rep.predicted_sigma.assign(static_cast<size_t>(N), 0.0);
    return rep;
}

HermitianRep build_bigcell_rep(const HWModuleSpec& spec, bool parallel) {
    const int N = spec.N, M = spec.M();
    for (int e : spec.eps)
        if (e != 1 && e != -1) throw DomainError("bigcell: eps must be a sign vector");
    if (M == 0) {
        HermitianRep z = zero_rep(N, spec.q0);
        z.spec = spec;
        return z;
    }
    HWModule mod = build_hw_module(spec, parallel);
    // Rank-M subspace: patterns with P(i,k) = 0 for i > M.  It is invariant
    // under T_kj and T*_kj for k <= M.
    std::vector<int> sub;
    for (int n = 0; n < mod.dim(); ++n) {
        const GTPattern& P = mod.basis[static_cast<size_t>(n)];
        bool ok = true;
        for (int k = 1; k <= N - 1 && ok; ++k)
            for (int i = M + 1; i <= k; ++i)
                if (P.at(i, k) != 0) ok = false;
        if (ok) sub.push_back(n);
    }
    const int d = static_cast<int>(sub.size());
    auto restrict_op = [&](const RMat& A) {
        RMat B(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) B(a, b) = A(sub[static_cast<size_t>(a)], sub[static_cast<size_t>(b)]);
        return B;
    };
    auto to_cmat = [](const RMat& A) { return CMat(A.cast<double>().cast<cplx>()); };
    HermitianRep rep;
    rep.N = N;
    rep.dim = d;
    rep.q0 = spec.q0;
    rep.spec = spec;
    rep.source = "gt";
    rep.rank = M;
    rep.interior_level = mod.interior_height();
    for (int n : sub) rep.level.push_back(mod.height[static_cast<size_t>(n)]);
    std::vector<RMat> T(static_cast<size_t>(N * N), RMat::Zero(d, d));
    for (int a = 1; a <= M; ++a)
        for (int b = a; b <= N; ++b) T[static_cast<size_t>((a - 1) * N + (b - 1))] = restrict_op(mod.Tmat(a, b));
    std::vector<int> eta(static_cast<size_t>(M));
    int p = 1;
    for (int k = 0; k < M; ++k) eta[static_cast<size_t>(k)] = p *= spec.eps[static_cast<size_t>(k)];
    rep.signature = eta;
    // Z is accumulated in extended precision and rounded once: the terms grow
    // with the height while their signed sum stays bounded.
    rep.Z.assign(static_cast<size_t>(N * N), CMat());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            RMat acc = RMat::Zero(d, d);
            for (int k = 1; k <= std::min({i, j, M}); ++k) {
                const RMat& Tki = T[static_cast<size_t>((k - 1) * N + (i - 1))];
                const RMat& Tkj = T[static_cast<size_t>((k - 1) * N + (j - 1))];
                acc += static_cast<real>(eta[static_cast<size_t>(k - 1)]) * (Tki.transpose() * Tkj);
            }
            rep.z(i, j) = to_cmat(acc);
        }
    rep.T.reserve(T.size());
    for (const RMat& t : T) rep.T.push_back(to_cmat(t));
    const double q = spec.q0;
    rep.predicted_roots.assign(static_cast<size_t>(N), 0.0);
    for (int k = 1; k <= M; ++k)
        rep.predicted_roots[static_cast<size_t>(k - 1)] = eta[static_cast<size_t>(k - 1)] * std::pow(q, 2 * (spec.r[static_cast<size_t>(k - 1)] + k) - 2);
    rep.predicted_sigma = elementary_symmetric(rep.predicted_roots, N);
    std::sort(rep.predicted_roots.begin(), rep.predicted_roots.end(), std::greater<>());
    return rep;
}

CMat apply_to_interior(const NCPoly& p, const HermitianRep& rep, bool parallel) {
    if (p.algebra() != AlgebraKind::REA || p.N() != rep.N) throw AlgebraMismatch("apply_to_interior: expects a Z-polynomial of matching size");
    const Alphabet A(AlgebraKind::REA, rep.N);
    std::vector<const CMat*> letters(static_cast<size_t>(A.size()), nullptr);
    for (int c = 0; c < A.size(); ++c) {
        const GenId& g = A.gen(static_cast<char>(c));
        letters[static_cast<size_t>(c)] = &rep.z(g.row, g.col);
    }
    return apply_poly(p, letters, interior_identity(rep, rep.interior()), rep.q0, parallel);
}

namespace {

// Block vectors on C^N (x) C^N (x) H: block a*N+b is a dim x ncols matrix.
using BlockVec = std::vector<CMat>;

BlockVec apply_Z2(const HermitianRep& rep, const BlockVec& v) {
    const int N = rep.N;
    BlockVec out(v.size(), CMat::Zero(v[0].rows(), v[0].cols()));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int d = 0; d < N; ++d) {
                const CMat& x = v[static_cast<size_t>(a * N + d)];
                if (x.isZero(0)) continue;
                out[static_cast<size_t>(a * N + b)] += rep.z(b + 1, d + 1) * x;
            }
    return out;
}

BlockVec apply_R(const Eigen::MatrixXcd& R, const BlockVec& v) {
    BlockVec out(v.size(), CMat::Zero(v[0].rows(), v[0].cols()));
    for (Eigen::Index r = 0; r < R.rows(); ++r)
        for (Eigen::Index c = 0; c < R.cols(); ++c)
            if (R(r, c) != cplx(0)) out[static_cast<size_t>(r)] += R(r, c) * v[static_cast<size_t>(c)];
    return out;
}

}  // namespace

RepCheck verify_rep(const HermitianRep& rep, double tol, bool parallel) {
    RepCheck rc;
    const int N = rep.N;
    const std::vector<int> in = rep.interior();
    if (in.empty()) throw TruncationTooSmall("verify_rep: no interior basis vectors");
    const CMat X = interior_identity(rep, in);
    const Eigen::MatrixXcd R = to_numeric(build_rhat(N).R, rep.q0);

    // (a) Reflection equation R Z2 R Z2 = Z2 R Z2 R on interior vectors.
    double re = 0;
    for (int c = 0; c < N * N; ++c) {
        BlockVec v(static_cast<size_t>(N * N), CMat::Zero(rep.dim, X.cols()));
        v[static_cast<size_t>(c)] = X;
        BlockVec lhs = apply_R(R, apply_Z2(rep, apply_R(R, apply_Z2(rep, v))));
        BlockVec rhs = apply_Z2(rep, apply_R(R, apply_Z2(rep, apply_R(R, v))));
        double num = 0, scale = 1;
        for (size_t b = 0; b < lhs.size(); ++b) {
            num = std::max(num, max_abs(lhs[b] - rhs[b]));
            scale = std::max({scale, max_abs(lhs[b]), max_abs(rhs[b])});
        }
        re = std::max(re, num / scale);
    }
    rc.re = re;
    rc.findings.push_back(make_finding("reflection_equation", re, tol));

    // (b) Self-adjointness Z_ij^* = Z_ji.
    double sa = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) sa = std::max(sa, rel_residual(CMat(rep.z(i, j).adjoint()), rep.z(j, i), in));
    rc.selfadj = sa;
    rc.findings.push_back(make_finding("self_adjoint", sa, tol));

    // (c) Central elements: centrality as operators and scalar values.
    double cent = 0, nonscalar = 0;
    const Eigen::Index n0 = in.front();
    for (int k = 1; k <= N; ++k) {
        NCPoly s = central_sigma(k, N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                // Compare sigma Z and Z sigma separately: the commutator alone
                // has no natural scale when both products are large.
                const NCPoly zij = Zgen(N, i, j);
                cent = std::max(cent, rel_diff(apply_to_interior(s * zij, rep, parallel), apply_to_interior(zij * s, rep, parallel)));
            }
        CMat S = apply_to_interior(s, rep, parallel);
        const double val = S(n0, 0).real();
        rc.sigma.push_back(val);
        nonscalar = std::max(nonscalar, max_abs(S - val * X) / (1 + std::abs(val)));
    }
    rc.findings.push_back(make_finding("sigma_central", cent, tol));
    const bool factorial = nonscalar < 1e-8;
    {
        Finding f = make_finding("sigma_scalar", nonscalar, 1e-8);
        if (!factorial) {
            f.pass = true;  // informational for decomposable (transported) reps
            f.detail = "not factorial on the interior";
        }
        rc.findings.push_back(f);
    }
    if (!rep.predicted_sigma.empty() && factorial) {
        double hc = 0;
        for (int k = 0; k < N; ++k) {
            const double pred = rep.predicted_sigma[static_cast<size_t>(k)];
            hc = std::max(hc, std::abs(rc.sigma[static_cast<size_t>(k)] - pred) / std::max(1.0, std::abs(pred)));
        }
        rc.hc = hc;
        rc.findings.push_back(make_finding(rep.source == "gt" ? "harish_chandra" : "central_character", hc, std::min(tol, 1e-10)));
    }

    // (d) Cayley-Hamilton: with scalar sigma_k via block matrix powers, or
    // with sigma_k as operators otherwise.
    double ch = 0;
    if (factorial) {
        std::vector<std::vector<CMat>> W(static_cast<size_t>(N) + 1);
        W[0].assign(static_cast<size_t>(N * N), CMat::Zero(rep.dim, X.cols()));
        for (int l = 0; l < N; ++l) W[0][static_cast<size_t>(l * N + l)] = X;
        for (int m = 1; m <= N; ++m) {
            W[static_cast<size_t>(m)].assign(static_cast<size_t>(N * N), CMat::Zero(rep.dim, X.cols()));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int l = 0; l < N; ++l)
                        W[static_cast<size_t>(m)][static_cast<size_t>(i * N + j)] += rep.z(i + 1, l + 1) * W[static_cast<size_t>(m - 1)][static_cast<size_t>(l * N + j)];
        }
        for (int e = 0; e < N * N; ++e) {
            CMat acc = W[static_cast<size_t>(N)][static_cast<size_t>(e)];
            double scale = std::max(1.0, max_abs(acc));
            for (int k = 1; k <= N; ++k) {
                CMat t = ((k % 2) ? -1.0 : 1.0) * rc.sigma[static_cast<size_t>(k - 1)] * W[static_cast<size_t>(N - k)][static_cast<size_t>(e)];
                scale = std::max(scale, max_abs(t));
                acc += t;
            }
            ch = std::max(ch, max_abs(acc) / scale);
        }
    } else {
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) ch = std::max(ch, rel_diff(apply_to_interior(cayley_hamilton_entry(N, i, j), rep, parallel), CMat::Zero(rep.dim, X.cols())));
    }
    rc.ch = ch;
    rc.findings.push_back(make_finding("cayley_hamilton", ch, tol));
    return rc;
}

std::vector<double> char_poly_roots(const std::vector<double>& sigma) {
    const int N = static_cast<int>(sigma.size());
    double rho = 0;
    for (int k = 1; k <= N; ++k) rho = std::max(rho, std::pow(std::abs(sigma[static_cast<size_t>(k - 1)]), 1.0 / k));
    // Trailing coefficients that vanish at the scale of the roots give zeros.
    int deg = N;
    while (deg > 0 && std::abs(sigma[static_cast<size_t>(deg - 1)]) <= 1e-9 * std::pow(rho, deg)) --deg;
    std::vector<double> roots(static_cast<size_t>(N - deg), 0.0);
    if (deg > 0) {
        // Companion matrix of x^deg + c_1 x^{deg-1} + ... + c_deg, c_k = (-1)^k s_k.
        Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
        for (int k = 1; k <= deg; ++k) C(0, k - 1) = -((k % 2) ? -1.0 : 1.0) * sigma[static_cast<size_t>(k - 1)];
        for (int i = 1; i < deg; ++i) C(i, i - 1) = 1;
        Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
        for (Eigen::Index i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()(i).real());
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::vector<double> interior_spectrum(const CMat& op, const HermitianRep& rep, double leak_tol) {
    CMat H = 0.5 * (op + op.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(H);
    std::vector<double> out;
    for (Eigen::Index c = 0; c < H.cols(); ++c) {
        double leak = 0;
        for (int n = 0; n < rep.dim; ++n)
            if (!rep.is_interior(n)) leak += std::norm(es.eigenvectors()(n, c));
        if (leak <= leak_tol) out.push_back(es.eigenvalues()(c));
    }
    return out;
}

SpectralData spectral_data(const HermitianRep& rep, bool parallel) {
    const int N = rep.N;
    const std::vector<int> in = rep.interior();
    if (in.empty()) throw TruncationTooSmall("spectral_data: no interior basis vectors");
    const Eigen::Index m = static_cast<Eigen::Index>(in.size());
    std::vector<int> out_rows;
    for (int n = 0; n < rep.dim; ++n)
        if (!rep.is_interior(n)) out_rows.push_back(n);

    std::vector<CMat> B;  // sigma_k restricted to the interior block
    bool scalar = true;
    for (int k = 1; k <= N; ++k) {
        CMat S = apply_to_interior(central_sigma(k, N), rep, parallel);
        CMat blk = take_rows(S, in);
        const cplx s = blk.trace() / static_cast<double>(m);
        if (max_abs(blk - s * CMat::Identity(m, m)) >= 1e-8 * (1 + std::abs(s)) || max_abs(take_rows(S, out_rows)) >= 1e-8 * (1 + std::abs(s)))
            scalar = false;
        if (!scalar && max_abs(take_rows(S, out_rows)) > 1e-8 * std::max(1.0, max_abs(S)))
            throw NotFactorial("spectral_data: central elements leave the interior; cannot split components");
        B.push_back(std::move(blk));
    }

    // Joint eigenspaces of the sigma_k (one if they act by scalars).
    std::vector<CMat> bases;
    if (scalar) {
        bases.push_back(CMat::Identity(m, m));
    } else {
        CMat C = CMat::Zero(m, m);
        const double w[] = {1.0, 0.6180339887498949, 0.4142135623730951, 0.2360679774997897, 0.1547005383792515};
        for (int k = 0; k < N; ++k) C += (w[k % 5] / std::max(1.0, max_abs(B[static_cast<size_t>(k)]))) * B[static_cast<size_t>(k)];
        C = 0.5 * (C + C.adjoint());
        Eigen::SelfAdjointEigenSolver<CMat> es(C);
        const auto& ev = es.eigenvalues();
        const double span = std::max(1.0, ev.cwiseAbs().maxCoeff());
        Eigen::Index start = 0;
        for (Eigen::Index i = 1; i <= m; ++i)
            if (i == m || ev(i) - ev(i - 1) > 1e-7 * span) {
                bases.push_back(es.eigenvectors().middleCols(start, i - start));
                start = i;
            }
    }

    // Leading minors restricted to the interior block, for signatures.
    std::vector<CMat> L;
    for (int k = 1; k <= N; ++k) L.push_back(take_rows(apply_to_interior(leading_minor_Z(k, N), rep, parallel), in));

    SpectralData sd;
    sd.factorial = scalar;
    for (const CMat& V : bases) {
        SpectralComponent comp;
        comp.multiplicity = static_cast<int>(V.cols());
        for (int k = 0; k < N; ++k) {
            CMat BV = B[static_cast<size_t>(k)] * V;
            const double s = (V.adjoint() * BV).trace().real() / static_cast<double>(V.cols());
            if (max_abs(BV - s * V) > 1e-7 * (1 + std::abs(s))) throw NotFactorial("spectral_data: central elements are not jointly diagonal");
            comp.sigma.push_back(s);
        }
        comp.roots = char_poly_roots(comp.sigma);
        for (double x : comp.roots) comp.rank += x != 0.0;
        int prev = 1;
        for (int k = 1; k <= comp.rank; ++k) {
            CMat Lk = V.adjoint() * L[static_cast<size_t>(k - 1)] * V;
            Lk = 0.5 * (Lk + Lk.adjoint());
            Eigen::SelfAdjointEigenSolver<CMat> es(Lk, Eigen::EigenvaluesOnly);
            const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
            const double thr = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
            int sgn = lo > thr ? 1 : (hi < -thr ? -1 : 0);
            if (sgn == 0) {
                comp.signature.clear();
                break;
            }
            comp.signature.push_back(sgn * prev);
            prev = sgn;
        }
        auto dec = admissible_roots(comp.roots, rep.q0);
        comp.admissible = dec.has_value();
        if (comp.admissible) comp.ext = ext_signature(comp.roots, rep.q0);
        sd.components.push_back(std::move(comp));
    }
    return sd;
}

CMat operator_minor(const HermitianRep& rep, const std::vector<int>& I, const std::vector<int>& J) {
    if (rep.T.empty() || !rep.spec) throw DomainError("operator_minor: representation carries no triangular block");
    if (I.size() != J.size() || I.empty()) throw DomainError("operator_minor: need |I| = |J| >= 1");
    const int N = rep.N, M = rep.spec->M();
    const double q = rep.q0;
    auto Tm = [&](int a, int b) -> const CMat& { return rep.T[static_cast<size_t>((a - 1) * N + (b - 1))]; };
    auto tri_minor = [&](const std::vector<int>& K, const std::vector<int>& L) {
        const size_t k = K.size();
        CMat out = CMat::Zero(rep.dim, rep.dim);
        std::vector<int> s(k);
        std::iota(s.begin(), s.end(), 0);
        do {
            bool zero = false;
            for (size_t p = 0; p < k; ++p)
                if (K[p] > L[static_cast<size_t>(s[p])]) zero = true;
            if (zero) continue;
            const int len = perm_length(s);
            CMat m = std::pow(-q, len) * CMat::Identity(rep.dim, rep.dim);
            for (size_t p = 0; p < k; ++p) m = m * Tm(K[p], L[static_cast<size_t>(s[p])]);
            out += m;
        } while (std::next_permutation(s.begin(), s.end()));
        return out;
    };
    std::vector<int> eta = rep.signature;
    CMat Z = CMat::Zero(rep.dim, rep.dim);
    for (const auto& K : subsets(M, static_cast<int>(I.size()))) {
        int sign = 1;
        for (int k : K) sign *= eta[static_cast<size_t>(k - 1)];
        Z += static_cast<double>(sign) * (tri_minor(K, I).adjoint() * tri_minor(K, J));
    }
    return Z;
}

double minor_qcommutation_residual(const HermitianRep& rep) {
    const int N = rep.N;
    const std::vector<int> in = rep.interior();
    double worst = 0;
    std::vector<CMat> lead;
    for (int k = 1; k <= N; ++k) {
        std::vector<int> K(static_cast<size_t>(k));
        std::iota(K.begin(), K.end(), 1);
        lead.push_back(operator_minor(rep, K, K));
    }
    for (int s = 1; s <= N; ++s)
        for (const auto& I : subsets(N, s))
            for (const auto& J : subsets(N, s)) {
                CMat ZIJ = operator_minor(rep, I, J);
                for (int k = 1; k <= N; ++k) {
                    int e = 0;
                    for (int i : I) e += 2 * (i <= k);
                    for (int j : J) e -= 2 * (j <= k);
                    worst = std::max(worst, rel_residual(CMat(lead[static_cast<size_t>(k - 1)] * ZIJ), CMat(std::pow(rep.q0, e) * ZIJ * lead[static_cast<size_t>(k - 1)]), in));
                }
            }
    return worst;
}

double leading_minor_crosscheck(const HermitianRep& rep, bool parallel) {
    const std::vector<int> in = rep.interior();
    double worst = 0;
    for (int k = 1; k <= rep.N; ++k) {
        std::vector<int> K(static_cast<size_t>(k));
        std::iota(K.begin(), K.end(), 1);
        CMat op = operator_minor(rep, K, K);
        CMat sym = apply_to_interior(leading_minor_Z(k, rep.N), rep, parallel);
        CMat cols(rep.dim, static_cast<Eigen::Index>(in.size()));
        for (size_t c = 0; c < in.size(); ++c) cols.col(static_cast<Eigen::Index>(c)) = op.col(in[c]);
        worst = std::max(worst, rel_diff(cols, sym));
    }
    return worst;
}

}  // namespace rea
