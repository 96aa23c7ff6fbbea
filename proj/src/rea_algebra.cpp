#include "rea/rea_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "rea/braid.hpp"

namespace rea {

namespace {

const Alphabet& alphabet_for(AlgebraKind k, int N) {
    // Small per-thread cache; alphabets are cheap but looked up constantly.
    thread_local std::vector<std::unique_ptr<Alphabet>> cache[3];
    auto& v = cache[static_cast<int>(k)];
    if (v.size() <= static_cast<size_t>(N)) v.resize(static_cast<size_t>(N) + 1);
    if (!v[static_cast<size_t>(N)]) v[static_cast<size_t>(N)] = std::make_unique<Alphabet>(k, N);
    return *v[static_cast<size_t>(N)];
}

LaurentScalar signed_qpow(int e, int sign) { return qpow(e) * LaurentScalar(sign); }

}  // namespace

NCPoly Zgen(int N, int i, int j) { return NCPoly::generator(alphabet_for(AlgebraKind::REA, N), {AlgebraKind::REA, GenKind::Z, i, j}); }
NCPoly Xgen(int N, int i, int j) { return NCPoly::generator(alphabet_for(AlgebraKind::FRT, N), {AlgebraKind::FRT, GenKind::X, i, j}); }

NCPoly Tgen(int N, int a, int b) {
    if (a > b) return NCPoly(AlgebraKind::TRI, N);
    return NCPoly::generator(alphabet_for(AlgebraKind::TRI, N), {AlgebraKind::TRI, GenKind::T, a, b});
}

NCPoly Tstar(int N, int a, int b) {
    if (a > b) return NCPoly(AlgebraKind::TRI, N);
    if (a == b) return Tgen(N, a, a);
    return NCPoly::generator(alphabet_for(AlgebraKind::TRI, N), {AlgebraKind::TRI, GenKind::Tstar, a, b});
}

NCPoly Tinv(int N, int a) {
    return NCPoly::generator(alphabet_for(AlgebraKind::TRI, N), {AlgebraKind::TRI, GenKind::Tinv, a, a});
}

PolyMatrix Zmatrix(int N) {
    PolyMatrix m(static_cast<size_t>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) m[static_cast<size_t>(i - 1)].push_back(Zgen(N, i, j));
    return m;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    const size_t n = a.size();
    PolyMatrix r(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly s(a[i][0].algebra(), a[i][0].N());
            for (size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
            r[i].push_back(std::move(s));
        }
    return r;
}

// ---------------------------------------------------------------------------

TriEmbedding::TriEmbedding(int N, std::vector<int> eps) : N_(N), eps_(std::move(eps)) {
    if (static_cast<int>(eps_.size()) > N) throw DomainError("embedding: eps longer than N");
    eps_.resize(static_cast<size_t>(N), 0);
    sys_ = std::make_unique<RewriteSystem>(RewriteSystem::tri(N, eps_));
    st_ = std::make_unique<Straightener>(*sys_);
}

int TriEmbedding::eps_prefix(int k) const {
    int p = 1;
    for (int t = 1; t <= k; ++t) p *= eps_[static_cast<size_t>(t - 1)];
    return p;
}

NCPoly TriEmbedding::embed(const NCPoly& zpoly) {
    if (zpoly.algebra() != AlgebraKind::REA || zpoly.N() != N_) throw AlgebraMismatch("embed_iT expects a Z-polynomial of matching size");
    const Alphabet& Z = alphabet_for(AlgebraKind::REA, N_);
    const Alphabet& T = sys_->alphabet();
    // Image of each Z letter as a list of (coefficient, two-letter word).
    std::vector<std::vector<std::pair<LaurentScalar, Word>>> image(static_cast<size_t>(Z.size()));
    for (int c = 0; c < Z.size(); ++c) {
        const GenId& g = Z.gen(static_cast<char>(c));
        for (int k = 1; k <= std::min(g.row, g.col); ++k) {
            int s = eps_prefix(k);
            if (s == 0) continue;
            Word w;
            w.push_back(static_cast<char>(T.tri_star(k, g.row)));
            w.push_back(static_cast<char>(T.tri_plain(k, g.col)));
            image[static_cast<size_t>(c)].emplace_back(LaurentScalar(s), w);
        }
    }
    NCPoly out(AlgebraKind::TRI, N_);
    out = out.with_extra_denom(zpoly.denom());
    for (const auto& [w, c] : zpoly.terms()) {
        TermMap cur;
        cur.emplace(Word(), c);
        for (auto z = w.rbegin(); z != w.rend() && !cur.empty(); ++z) {
            TermMap next;
            for (const auto& [coef, tw] : image[static_cast<unsigned char>(*z)]) {
                TermMap part = st_->left_multiply(tw, cur);
                for (auto& [w2, c2] : part) {
                    auto [pos, inserted] = next.try_emplace(w2, coef * c2);
                    if (!inserted) pos->second += coef * c2;
                }
            }
            cur.clear();
            for (auto& [w2, c2] : next)
                if (!c2.is_zero()) cur.emplace(w2, std::move(c2));
        }
        for (const auto& [w2, c2] : cur) out.add_term(w2, c2);
    }
    return out;
}

NCPoly embed_iT(const NCPoly& zpoly, const std::vector<int>& eps) {
    TriEmbedding e(zpoly.N(), eps);
    return e.embed(zpoly);
}

bool is_zero_rea(const NCPoly& zpoly, int N) {
    ReaZeroTest t(N);
    return t.is_zero(zpoly);
}

// ---------------------------------------------------------------------------

int perm_length(const std::vector<int>& p) {
    int c = 0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++c;
    return c;
}

int perm_anti_exceedance(const std::vector<int>& p) {
    int c = 0;
    for (size_t l = 0; l < p.size(); ++l)
        if (p[l] < static_cast<int>(l) + 1) ++c;
    return c;
}

NCPoly central_sigma(int k, int N) {
    if (k < 0 || k > N) throw DomainError("central_sigma: need 0 <= k <= N");
    if (k == 0) return NCPoly::constant(AlgebraKind::REA, N, LaurentScalar(1));
    NCPoly out(AlgebraKind::REA, N);
    for (const auto& I : subsets(N, k)) {
        const int wt = std::accumulate(I.begin(), I.end(), 0);
        std::vector<int> img = I;  // sigma restricted to I, as images of i_1 < ... < i_k
        do {
            // Full permutation of [N] fixing the complement of I.
            std::vector<int> full(static_cast<size_t>(N));
            std::iota(full.begin(), full.end(), 1);
            for (size_t p = 0; p < I.size(); ++p) full[static_cast<size_t>(I[p] - 1)] = img[p];
            const int len = perm_length(full);
            const int aex = perm_anti_exceedance(full);
            LaurentScalar c = signed_qpow(2 * N * k - 2 * wt - len - aex, len % 2 ? -1 : 1);
            NCPoly m = NCPoly::constant(AlgebraKind::REA, N, c);
            for (int p = k - 1; p >= 0; --p) m = m * Zgen(N, I[static_cast<size_t>(p)], img[static_cast<size_t>(p)]);
            out += m;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return out;
}

NCPoly leading_minor_Z(int k, int N) {
    if (k < 1 || k > N) throw DomainError("leading_minor_Z: need 1 <= k <= N");
    NCPoly out(AlgebraKind::REA, N);
    std::vector<int> s(static_cast<size_t>(k));
    std::iota(s.begin(), s.end(), 1);
    do {
        const int len = perm_length(s);
        const int aex = perm_anti_exceedance(s);
        NCPoly m = NCPoly::constant(AlgebraKind::REA, N, signed_qpow(-len - aex, len % 2 ? -1 : 1));
        for (int p = k; p >= 1; --p) m = m * Zgen(N, p, s[static_cast<size_t>(p - 1)]);
        out += m;
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

NCPoly frt_minor(int N, const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) throw DomainError("frt_minor: |I| != |J|");
    const size_t k = I.size();
    if (k == 0) return NCPoly::constant(AlgebraKind::FRT, N, LaurentScalar(1));
    NCPoly out(AlgebraKind::FRT, N);
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    do {
        const int len = perm_length(s);
        NCPoly m = NCPoly::constant(AlgebraKind::FRT, N, signed_qpow(len, len % 2 ? -1 : 1));
        for (size_t p = 0; p < k; ++p) m = m * Xgen(N, I[p], J[static_cast<size_t>(s[p])]);
        out += m;
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

NCPoly frt_det(int N) {
    std::vector<int> all(static_cast<size_t>(N));
    std::iota(all.begin(), all.end(), 1);
    return frt_minor(N, all, all);
}

NCPoly rea_relation(int N, int i, int j, int k, int l) {
    auto d = [](int a, int b) { return a == b ? 1 : 0; };
    auto lt = [](int a, int b) { return a < b ? 1 : 0; };
    const LaurentScalar c = qinv_minus_q();
    auto Z = [&](int a, int b) { return Zgen(N, a, b); };
    NCPoly lhs(AlgebraKind::REA, N), rhs(AlgebraKind::REA, N);
    lhs += qpow(-d(i, k) - d(j, k)) * (Z(i, j) * Z(k, l));
    if (lt(k, i)) lhs += (c * qpow(-d(i, j))) * (Z(k, j) * Z(i, l));
    if (d(j, k))
        for (int p = 1; p < j; ++p) lhs += (c * qpow(-d(i, j))) * (Z(i, p) * Z(p, l));
    if (d(i, j) && lt(k, i))
        for (int p = 1; p < i; ++p) lhs += (c * c) * (Z(k, p) * Z(p, l));
    rhs += qpow(-d(i, l) - d(j, l)) * (Z(k, l) * Z(i, j));
    if (lt(l, j)) rhs += (c * qpow(-d(i, j))) * (Z(k, j) * Z(i, l));
    if (d(i, l))
        for (int p = 1; p < i; ++p) rhs += (c * qpow(-d(i, j))) * (Z(k, p) * Z(p, j));
    if (d(i, j) && lt(l, j))
        for (int p = 1; p < j; ++p) rhs += (c * c) * (Z(k, p) * Z(p, l));
    return lhs - rhs;
}

}  // namespace rea
