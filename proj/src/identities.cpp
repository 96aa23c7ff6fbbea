#include "rea/identities.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "rea/braid.hpp"

namespace rea {

namespace {

struct Item {
    std::string name;
    NCPoly poly;
};

// Zero-tests a batch of polynomials (all REA or all FRT).  Each thread owns
// its straightening memo; the verdicts do not depend on the schedule.
GroupResult zero_batch(int N, const std::vector<Item>& items, bool parallel) {
    GroupResult g;
    g.checked = static_cast<int>(items.size());
    if (items.empty()) return g;
    const AlgebraKind alg = items.front().poly.algebra();
    std::vector<char> ok(items.size(), 1);
    std::unique_ptr<RewriteSystem> frt;
    if (alg == AlgebraKind::FRT) frt = std::make_unique<RewriteSystem>(RewriteSystem::frt(N));
    std::exception_ptr failure;
#pragma omp parallel if (parallel)
    {
        std::unique_ptr<ReaZeroTest> zt;
        std::unique_ptr<Straightener> st;
        if (alg == AlgebraKind::REA) zt = std::make_unique<ReaZeroTest>(N);
        else st = std::make_unique<Straightener>(*frt);
#pragma omp for schedule(dynamic, 1)
        for (long n = 0; n < static_cast<long>(items.size()); ++n) {
            try {
                const NCPoly& p = items[static_cast<size_t>(n)].poly;
                ok[static_cast<size_t>(n)] = alg == AlgebraKind::REA ? zt->is_zero(p) : st->straighten(p).is_zero();
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (size_t n = 0; n < items.size(); ++n)
        if (!ok[n]) {
            if (g.failed == 0) g.first_failure = items[n].name;
            ++g.failed;
        }
    return g;
}

std::string idx(std::initializer_list<int> v) {
    std::string s = "[";
    bool first = true;
    for (int x : v) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + "]";
}

std::string set_str(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::vector<int> pick(const std::vector<int>& I, const std::vector<int>& K) {
    std::vector<int> r;
    for (int p : K) r.push_back(I[static_cast<size_t>(p - 1)]);
    return r;
}

std::vector<int> complement_pick(const std::vector<int>& I, const std::vector<int>& K) {
    std::vector<int> r;
    for (size_t p = 0; p < I.size(); ++p)
        if (std::find(K.begin(), K.end(), static_cast<int>(p) + 1) == K.end()) r.push_back(I[p]);
    return r;
}

LaurentScalar minus_q_pow(int e) { return qpow(e) * LaurentScalar((e % 2 + 2) % 2 ? -1 : 1); }

}  // namespace

NCPoly cayley_hamilton_entry(int N, int i, int j) {
    PolyMatrix Zm = Zmatrix(N);
    PolyMatrix P(static_cast<size_t>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) P[static_cast<size_t>(a)].push_back(NCPoly::constant(AlgebraKind::REA, N, LaurentScalar(a == b ? 1 : 0)));
    std::vector<PolyMatrix> pw{P};
    for (int k = 1; k <= N; ++k) pw.push_back(matmul(pw.back(), Zm));
    NCPoly s(AlgebraKind::REA, N);
    for (int k = 0; k <= N; ++k) {
        NCPoly t = central_sigma(k, N) * pw[static_cast<size_t>(N - k)][static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
        if (k % 2) s -= t;
        else s += t;
    }
    return s;
}

GroupResult check_cayley_hamilton(int N, bool parallel) {
    std::vector<Item> items;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) items.push_back({"cayley_hamilton" + idx({i, j}), cayley_hamilton_entry(N, i, j)});
    return zero_batch(N, items, parallel);
}

GroupResult check_laplace(int N, bool parallel) {
    std::vector<Item> items;
    for (int k = 1; k <= std::min(N, 3); ++k)
        for (const auto& I : subsets(N, k))
            for (const auto& J : subsets(N, k)) {
                NCPoly XIJ = frt_minor(N, I, J);
                for (int l = 1; l <= k; ++l)
                    for (const auto& K : subsets(k, l))
                        for (const auto& Kp : subsets(k, l)) {
                            const int wtK = std::accumulate(K.begin(), K.end(), 0);
                            NCPoly row(AlgebraKind::FRT, N), col(AlgebraKind::FRT, N);
                            for (const auto& P : subsets(k, l)) {
                                const int wtP = std::accumulate(P.begin(), P.end(), 0);
                                LaurentScalar c = minus_q_pow(wtP - wtK);
                                row += c * (frt_minor(N, pick(I, K), pick(J, P)) * frt_minor(N, complement_pick(I, Kp), complement_pick(J, P)));
                                col += c * (frt_minor(N, pick(I, P), pick(J, K)) * frt_minor(N, complement_pick(I, P), complement_pick(J, Kp)));
                            }
                            NCPoly lhs = K == Kp ? XIJ : NCPoly(AlgebraKind::FRT, N);
                            std::string tag = "I=" + set_str(I) + ",J=" + set_str(J) + ",K=" + set_str(K) + ",K'=" + set_str(Kp);
                            items.push_back({"laplace_row(" + tag + ")", lhs - row});
                            items.push_back({"laplace_column(" + tag + ")", lhs - col});
                        }
            }
    return zero_batch(N, items, parallel);
}

GroupResult check_leading_minors(int N, bool parallel) {
    std::vector<Item> items;
    const Alphabet A(AlgebraKind::REA, N);
    std::vector<NCPoly> D;
    for (int k = 1; k <= N; ++k) D.push_back(leading_minor_Z(k, N));
    for (int k = 1; k <= N; ++k) {
        const NCPoly& Dk = D[static_cast<size_t>(k - 1)];
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                int e = 2 * (i <= k) - 2 * (j <= k);
                items.push_back({"leading_minor_qcomm" + idx({k, i, j}), Dk * Zgen(N, i, j) - qpow(e) * (Zgen(N, i, j) * Dk)});
            }
        items.push_back({"leading_minor_selfadjoint" + idx({k}), Dk.star(A) - Dk});
        for (int l = k + 1; l <= N; ++l) items.push_back({"leading_minor_commute" + idx({k, l}), commutator(Dk, D[static_cast<size_t>(l - 1)])});
    }
    // Image of Z_[k] under the embedding is T_1^2 ... T_k^2.
    GroupResult g = zero_batch(N, items, parallel);
    TriEmbedding emb(N, std::vector<int>(static_cast<size_t>(N), 1));
    for (int k = 1; k <= N; ++k) {
        NCPoly expect = NCPoly::constant(AlgebraKind::TRI, N, LaurentScalar(1));
        for (int t = 1; t <= k; ++t) expect = expect * Tgen(N, t, t) * Tgen(N, t, t);
        ++g.checked;
        if (!(emb.embed(D[static_cast<size_t>(k - 1)]) == expect)) {
            if (g.failed == 0) g.first_failure = "leading_minor_image" + idx({k});
            ++g.failed;
        }
    }
    return g;
}

GroupResult check_det_central(int N) {
    std::vector<Item> items;
    NCPoly det = frt_det(N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) items.push_back({"det_central" + idx({i, j}), commutator(det, Xgen(N, i, j))});
    return zero_batch(N, items, false);
}

GroupResult check_rea_relations(int N, bool parallel) {
    std::vector<Item> items;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) items.push_back({"rea_relation" + idx({i, j, k, l}), rea_relation(N, i, j, k, l)});
    return zero_batch(N, items, parallel);
}

GroupResult check_sigma_central(int N, bool parallel) {
    std::vector<Item> items;
    const Alphabet A(AlgebraKind::REA, N);
    for (int k = 1; k <= N; ++k) {
        NCPoly s = central_sigma(k, N);
        items.push_back({"sigma_selfadjoint" + idx({k}), s.star(A) - s});
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) items.push_back({"sigma_central" + idx({k, i, j}), commutator(s, Zgen(N, i, j))});
    }
    return zero_batch(N, items, parallel);
}

GroupResult check_n2_presentation() {
    const int N = 2;
    const Alphabet A(AlgebraKind::REA, N);
    NCPoly z = Zgen(N, 1, 1), w = Zgen(N, 1, 2), v = Zgen(N, 2, 1), u = Zgen(N, 2, 2);
    NCPoly T = qpow(1) * z + qpow(-1) * u;
    NCPoly D = u * z - qpow(-2) * (v * w);
    std::vector<Item> items{
        {"trace_is_scaled_sigma1", T - qpow(-1) * central_sigma(1, N)},
        {"det_is_scaled_sigma2", D - qpow(-2) * central_sigma(2, N)},
        {"det_is_leading_minor", D - leading_minor_Z(2, N)},
        {"z_w", z * w - qpow(2) * (w * z)},
        {"v_z", v * z - qpow(2) * (z * v)},
        {"v_w", qpow(-2) * (v * w) - (-D + qpow(1) * (T * z) - qpow(2) * (z * z))},
        {"w_v", qpow(-2) * (w * v) - (-D + qpow(-1) * (T * z) - qpow(-2) * (z * z))},
        {"T_selfadjoint", T.star(A) - T},
        {"D_selfadjoint", D.star(A) - D},
    };
    for (const char* nm : {"z", "w", "v", "u"}) {
        NCPoly g = std::string(nm) == "z" ? z : std::string(nm) == "w" ? w : std::string(nm) == "v" ? v : u;
        items.push_back({std::string("T_central_") + nm, commutator(T, g)});
        items.push_back({std::string("D_central_") + nm, commutator(D, g)});
    }
    return zero_batch(N, items, false);
}

GroupResult check_braid_hecke(int N) {
    GroupResult g;
    auto bp = build_rhat(N);
    const int n = N;
    ExactMat I = ExactMat::identity(n);
    ExactMat R12 = kron(bp.R, I), R23 = kron(I, bp.R);
    auto record = [&](bool ok, const std::string& name) {
        ++g.checked;
        if (!ok) {
            if (g.failed == 0) g.first_failure = name;
            ++g.failed;
        }
    };
    record(R12 * R23 * R12 == R23 * R12 * R23, "braid_relation");
    ExactMat In2 = ExactMat::identity(n * n);
    record(((bp.R - scaled(In2, qpow(-1))) * (bp.R + scaled(In2, qpow(1)))).is_zero(), "hecke_relation");
    record(bp.R * bp.Rinv == In2 && bp.Rinv * bp.R == In2, "inverse");
    record(bp.R == transpose(bp.R), "symmetric");
    return g;
}

GroupResult check_minor_exchange(int N) {
    GroupResult g;
    RewriteSystem frt = RewriteSystem::frt(N);
    Straightener st(frt);
    for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
            MinorBraiding mb = minor_braiding(N, k, l);
            const auto& Sk = mb.ek.basis;
            const auto& Sl = mb.el.basis;
            const int dk = static_cast<int>(Sk.size()), dl = static_cast<int>(Sl.size());
            // Cache the minors needed.
            std::map<std::pair<std::vector<int>, std::vector<int>>, NCPoly> minors;
            auto M = [&](const std::vector<int>& I, const std::vector<int>& J) -> const NCPoly& {
                auto key = std::make_pair(I, J);
                auto it = minors.find(key);
                if (it == minors.end()) it = minors.emplace(key, frt_minor(N, I, J)).first;
                return it->second;
            };
            bool ok = true;
            for (int A = 0; A < dl && ok; ++A)
                for (int B = 0; B < dk && ok; ++B)
                    for (int J = 0; J < dk && ok; ++J)
                        for (int L = 0; L < dl && ok; ++L) {
                            NCPoly diff(AlgebraKind::FRT, N);
                            const int row = A * dk + B;
                            for (int I = 0; I < dk; ++I)
                                for (int Mi = 0; Mi < dl; ++Mi) {
                                    const auto& c = mb.R(row, I * dl + Mi);
                                    if (!c.is_zero()) diff += c * (M(Sk[static_cast<size_t>(I)], Sk[static_cast<size_t>(J)]) * M(Sl[static_cast<size_t>(Mi)], Sl[static_cast<size_t>(L)]));
                                }
                            for (int C = 0; C < dl; ++C)
                                for (int D = 0; D < dk; ++D) {
                                    const auto& c = mb.R(C * dk + D, J * dl + L);
                                    if (!c.is_zero()) diff -= c * (M(Sl[static_cast<size_t>(A)], Sl[static_cast<size_t>(C)]) * M(Sk[static_cast<size_t>(B)], Sk[static_cast<size_t>(D)]));
                                }
                            ok = st.straighten(diff).is_zero();
                        }
            ++g.checked;
            if (!ok) {
                if (g.failed == 0) g.first_failure = "minor_exchange" + idx({k, l});
                ++g.failed;
            }
        }
    return g;
}

Findings identity_suite(int N, const SuiteOptions& opt) {
    if (N < 1) throw DomainError("identity_suite: N must be >= 1");
    Findings out;
    auto add = [&](const std::string& name, const GroupResult& g) {
        Finding f;
        f.check = name;
        f.pass = g.failed == 0;
        f.residual = g.failed;
        f.detail = std::to_string(g.checked) + " instances, " + std::to_string(g.failed) + " failed";
        if (!g.first_failure.empty()) f.detail += "; first failure " + g.first_failure;
        out.push_back(std::move(f));
    };
    if (opt.braid) {
        add("braid_hecke", check_braid_hecke(N));
        if (N <= 3) add("minor_exchange", check_minor_exchange(N));
    }
    if (opt.rea_relations) add("rea_relations", check_rea_relations(N, opt.parallel));
    if (opt.n2_presentation && N == 2) add("n2_presentation", check_n2_presentation());
    if (opt.cayley_hamilton) add("cayley_hamilton", check_cayley_hamilton(N, opt.parallel));
    if (opt.sigma_central) add("sigma_central", check_sigma_central(N, opt.parallel));
    if (opt.leading_minors) add("leading_minors", check_leading_minors(N, opt.parallel));
    if (opt.laplace) add("laplace", check_laplace(N, opt.parallel));
    if (opt.det_central) add("det_central", check_det_central(N));
    return out;
}

}  // namespace rea
