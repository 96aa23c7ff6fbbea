#include "rea/braid.hpp"

#include <algorithm>
#include <numeric>

namespace rea {

Eigen::MatrixXcd to_numeric(const ExactMat& m, double q0) {
    Eigen::MatrixXcd r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = scalar_eval(m(i, j), q0);
    return r;
}

Eigen::MatrixXcd to_numeric(const GaussMat& m, double q0) {
    Eigen::MatrixXcd r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = scalar_eval(m(i, j), q0);
    return r;
}

GaussMat to_gauss(const ExactMat& m) {
    GaussMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = to_gauss(m.a[i]);
    return r;
}

int eps_interval(const std::vector<int>& eps, int a, int b) {
    int p = 1;
    for (int t = a + 1; t <= b; ++t) p *= eps.at(static_cast<size_t>(t - 1));
    return p;
}

// Image of e_k (x) e_l (1-based) as at most two (k', l', coefficient) terms.
static void rhat_pair(int k, int l, bool inverse, const std::vector<int>& eps,
                      std::vector<std::tuple<int, int, LaurentScalar>>& out) {
    out.clear();
    if (k == l) {
        out.emplace_back(k, k, qpow(inverse ? 1 : -1));
        return;
    }
    out.emplace_back(l, k, LaurentScalar(1));
    if (!inverse && l < k) {
        int s = eps.empty() ? 1 : eps_interval(eps, l, k);
        if (s != 0) out.emplace_back(k, l, qinv_minus_q() * LaurentScalar(s));
    }
    if (inverse && k < l) {
        int s = eps.empty() ? 1 : eps_interval(eps, k, l);
        if (s != 0) out.emplace_back(k, l, q_minus_qinv() * LaurentScalar(s));
    }
}

BraidPair build_rhat(int N, const std::optional<std::vector<int>>& eps) {
    if (N < 1) throw DomainError("build_rhat: N must be >= 1");
    std::vector<int> e;
    if (eps) {
        if (static_cast<int>(eps->size()) != N) throw DomainError("build_rhat: eps must have length N");
        e = *eps;
    }
    BraidPair bp{ExactMat(N * N, N * N), ExactMat(N * N, N * N)};
    std::vector<std::tuple<int, int, LaurentScalar>> terms;
    for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
            int col = (k - 1) * N + (l - 1);
            rhat_pair(k, l, false, e, terms);
            for (auto& [a, b, c] : terms) bp.R((a - 1) * N + (b - 1), col) += c;
            rhat_pair(k, l, true, e, terms);
            for (auto& [a, b, c] : terms) bp.Rinv((a - 1) * N + (b - 1), col) += c;
        }
    return bp;
}

static long ipow(int b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

static std::vector<int> digits(long idx, int N, int len) {
    std::vector<int> d(static_cast<size_t>(len));
    for (int p = len - 1; p >= 0; --p) {
        d[static_cast<size_t>(p)] = static_cast<int>(idx % N) + 1;
        idx /= N;
    }
    return d;
}

static long index_of_digits(const std::vector<int>& d, int N) {
    long idx = 0;
    for (int x : d) idx = idx * N + (x - 1);
    return idx;
}

TensorVec apply_rhat_legs(const TensorVec& v, int N, int len, int pos, bool inverse, const std::vector<int>& eps) {
    TensorVec out;
    std::vector<std::tuple<int, int, LaurentScalar>> terms;
    for (const auto& [idx, c] : v) {
        auto d = digits(idx, N, len);
        rhat_pair(d[static_cast<size_t>(pos)], d[static_cast<size_t>(pos) + 1], inverse, eps, terms);
        for (auto& [a, b, coef] : terms) {
            d[static_cast<size_t>(pos)] = a;
            d[static_cast<size_t>(pos) + 1] = b;
            auto& slot = out[index_of_digits(d, N)];
            slot += c * coef;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<std::vector<int>> subsets(int N, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > N) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int p = k - 1;
        while (p >= 0 && cur[static_cast<size_t>(p)] == N - k + p + 1) --p;
        if (p < 0) break;
        ++cur[static_cast<size_t>(p)];
        for (int t = p + 1; t < k; ++t) cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t) - 1] + 1;
    }
    return out;
}

int ExtBasis::index_of(const std::vector<int>& I) const {
    auto it = std::find(basis.begin(), basis.end(), I);
    if (it == basis.end()) throw DomainError("index set not in exterior basis");
    return static_cast<int>(it - basis.begin());
}

static int inversions(const std::vector<int>& p) {
    int c = 0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++c;
    return c;
}

ExtBasis exterior_power(int N, int k) {
    if (N < 1 || k < 0 || k > N) throw DomainError("exterior_power: need 0 <= k <= N");
    ExtBasis eb;
    eb.N = N;
    eb.k = k;
    eb.basis = subsets(N, k);
    const long dimT = ipow(N, k);
    const int dimL = static_cast<int>(eb.basis.size());
    eb.embed = ExactMat(static_cast<int>(dimT), dimL);
    eb.project = ExactMat(dimL, static_cast<int>(dimT));
    for (int c = 0; c < dimL; ++c) {
        std::vector<int> p = eb.basis[static_cast<size_t>(c)];
        do {
            int inv = inversions(p);
            eb.embed(static_cast<int>(index_of_digits(p, N)), c) = qpow(inv) * LaurentScalar(inv % 2 ? -1 : 1);
        } while (std::next_permutation(p.begin(), p.end()));
        eb.project(c, static_cast<int>(index_of_digits(eb.basis[static_cast<size_t>(c)], N))) = LaurentScalar(1);
    }
    return eb;
}

// Positive braid carrying the first k legs past the last l legs.
static TensorVec block_braid(TensorVec v, int N, int k, int l, bool inverse) {
    const int len = k + l;
    if (!inverse) {
        for (int s = k - 1; s >= 0; --s)
            for (int pos = s; pos < s + l; ++pos) v = apply_rhat_legs(v, N, len, pos, false);
    } else {
        // Inverse of the braid moving the first l legs past the last k legs.
        for (int s = 0; s < k; ++s)
            for (int pos = s + l - 1; pos >= s; --pos) v = apply_rhat_legs(v, N, len, pos, true);
    }
    return v;
}

MinorBraiding minor_braiding(int N, int k, int l) {
    if (N < 1 || k < 1 || l < 1 || k > N || l > N) throw DomainError("minor_braiding: need 1 <= k,l <= N");
    MinorBraiding mb;
    mb.N = N;
    mb.k = k;
    mb.l = l;
    mb.ek = exterior_power(N, k);
    mb.el = exterior_power(N, l);
    const int dk = static_cast<int>(mb.ek.basis.size()), dl = static_cast<int>(mb.el.basis.size());
    mb.R = ExactMat(dl * dk, dk * dl);
    mb.Rinv = ExactMat(dk * dl, dl * dk);

    auto lift = [&](const ExtBasis& a, int ia, const ExtBasis& b, int ib) {
        TensorVec v;
        const long db = ipow(N, b.k);
        for (int r = 0; r < a.embed.rows; ++r) {
            const auto& ca = a.embed(r, ia);
            if (ca.is_zero()) continue;
            for (int s = 0; s < b.embed.rows; ++s) {
                const auto& cb = b.embed(s, ib);
                if (!cb.is_zero()) v[r * db + s] = ca * cb;
            }
        }
        return v;
    };
    // Left inverse of the embedding: read the coefficient of the sorted tensor.
    auto read = [&](const TensorVec& v, const ExtBasis& a, const ExtBasis& b, ExactMat& M, int col) {
        const int nb = static_cast<int>(b.basis.size());
        for (int ia = 0; ia < static_cast<int>(a.basis.size()); ++ia)
            for (int ib = 0; ib < nb; ++ib) {
                std::vector<int> d = a.basis[static_cast<size_t>(ia)];
                d.insert(d.end(), b.basis[static_cast<size_t>(ib)].begin(), b.basis[static_cast<size_t>(ib)].end());
                auto it = v.find(index_of_digits(d, N));
                if (it != v.end()) M(ia * nb + ib, col) = it->second;
            }
    };

    for (int I = 0; I < dk; ++I)
        for (int Jp = 0; Jp < dl; ++Jp) read(block_braid(lift(mb.ek, I, mb.el, Jp), N, k, l, false), mb.el, mb.ek, mb.R, I * dl + Jp);
    for (int Ip = 0; Ip < dl; ++Ip)
        for (int J = 0; J < dk; ++J) read(block_braid(lift(mb.el, Ip, mb.ek, J), N, k, l, true), mb.ek, mb.el, mb.Rinv, Ip * dk + J);
    return mb;
}

const LaurentScalar& MinorBraiding::coeff(const std::vector<int>& I, const std::vector<int>& J,
                                          const std::vector<int>& Ip, const std::vector<int>& Jp) const {
    const int dk = static_cast<int>(ek.basis.size());
    const int dl = static_cast<int>(el.basis.size());
    int row = el.index_of(Ip) * dk + ek.index_of(J);
    int col = ek.index_of(I) * dl + el.index_of(Jp);
    return R(row, col);
}

}  // namespace rea
