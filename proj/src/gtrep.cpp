#include "rea/gtrep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "rea/errors.hpp"

namespace rea {

int GTPattern::total() const {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

int GTPattern::height() const {
    int h = 0;
    for (int k = 1; k <= N - 1; ++k)
        for (int i = 1; i <= k; ++i) h += (k + 1 - i) * at(i, k);
    return h;
}

std::string to_string(const GTPattern& P) {
    std::ostringstream os;
    os << "[";
    for (int k = 1; k <= P.N - 1; ++k) {
        if (k > 1) os << ";";
        for (int i = 1; i <= k; ++i) os << (i > 1 ? "," : "") << P.at(i, k);
    }
    os << "]";
    return os.str();
}

std::vector<int> HWModuleSpec::eps_padded() const {
    std::vector<int> e = eps;
    e.resize(static_cast<size_t>(N), 0);
    return e;
}

std::vector<double> HWModuleSpec::r_padded() const {
    std::vector<double> x = r;
    x.resize(static_cast<size_t>(N), 1.0);
    return x;
}

int eps_interval_int(const std::vector<int>& eps, int a, int b) {
    int p = 1;
    for (int t = a + 1; t <= b; ++t) p *= t - 1 < static_cast<int>(eps.size()) ? eps[static_cast<size_t>(t - 1)] : 0;
    return p;
}

bool eps_adapted(const std::vector<double>& r, const std::vector<int>& eps) {
    if (r.size() != eps.size()) throw DomainError("eps_adapted: r and eps have different lengths");
    const int M = static_cast<int>(r.size());
    for (int s = 1; s <= M; ++s)
        for (int t = s + 1; t <= M; ++t) {
            if (eps_interval_int(eps, s, t) != 1) continue;
            const double d = (r[static_cast<size_t>(t - 1)] + t) - (r[static_cast<size_t>(s - 1)] + s);
            const double n = std::round(d);
            if (std::abs(d - n) > 1e-9 || n < 1) return false;
        }
    return true;
}

double NormValue::value() const { return sign == 0 ? 0.0 : static_cast<double>(sign * std::exp(log_abs)); }

namespace {

constexpr real kZeroExp = 1e-9;

void check_spec(const HWModuleSpec& s) {
    if (s.N < 1) throw DomainError("module: N must be >= 1");
    if (s.M() > s.N) throw DomainError("module: rank M exceeds N");
    if (s.r.size() != s.eps.size()) throw DomainError("module: r and eps lengths differ");
    for (int e : s.eps)
        if (e < -1 || e > 1) throw DomainError("module: eps entries must be -1, 0 or 1");
    if (!(s.q0 > 0 && s.q0 < 1)) throw DomainError("module: q0 must lie in (0,1)");
    if (s.D < 0) throw DomainError("module: truncation must be >= 0");
}

// Accumulates log|1 - s q^x| into (sign, log) form.
void mul_poch_factor(NormValue& acc, int s, real x, real lq) {
    if (s == 0 || acc.sign == 0) return;
    if (s == 1) {
        if (std::abs(x) < kZeroExp) { acc.sign = 0; return; }
        // 1 - q^x = -expm1(x log q); negative exactly when x < 0.
        const real v = -std::expm1(x * lq);
        if (v < 0) acc.sign = -acc.sign;
        acc.log_abs += std::log(std::abs(v));
    } else {
        acc.log_abs += std::log1p(std::exp(x * lq));
    }
}

std::vector<real> widen(const std::vector<double>& x) { return {x.begin(), x.end()}; }

struct Ctx {
    int N;
    real q, lq;
    std::vector<int> eps;   // padded
    std::vector<real> r;  // padded
    explicit Ctx(const HWModuleSpec& s) : N(s.N), q(s.q0), lq(std::log(q)), eps(s.eps_padded()), r(widen(s.r_padded())) {}
    real rr(int k) const { return r[static_cast<size_t>(k - 1)]; }
    int ei(int a, int b) const { return eps_interval_int(eps, a, b); }
    static int S(const GTPattern& P, int a, int k) {
        int s = 0;
        for (int l = k; l <= P.N - 1; ++l) s += P.at(a, l);
        return s;
    }
    // [x]_e and [x]^e.
    real br_lo(real x, int e) const { return (e * std::pow(q, x) - std::pow(q, -x)) / (q - 1 / q); }
    real br_hi(real x, int e) const { return (std::pow(q, x) - e * std::pow(q, -x)) / (q - 1 / q); }
};

NormValue norm_of(const GTPattern& P, const Ctx& c) {
    NormValue acc;
    const int N = c.N;
    const real lcoef = std::log(1 / c.q - c.q);
    for (int k = 1; k <= N - 1; ++k)
        for (int i = 1; i <= k; ++i) {
            const int m = P.at(i, k);
            if (m == 0) continue;
            for (int j = i; j <= k; ++j) {
                const real x1 = 2 * (c.rr(j) - c.rr(i)) + 2 * (j - i + 1) + 2 * (Ctx::S(P, j, k) - Ctx::S(P, i, k));
                const real x2 = 2 * (c.rr(j + 1) - c.rr(i)) + 2 * (j - i + 1) - 2 * m + 2 * (Ctx::S(P, j + 1, k + 1) - Ctx::S(P, i, k + 1));
                const int s1 = c.ei(i, j), s2 = c.ei(i, j + 1);
                for (int t = 0; t < m; ++t) {
                    mul_poch_factor(acc, s1, x1 + 2 * t, c.lq);
                    mul_poch_factor(acc, s2, x2 + 2 * t, c.lq);
                }
                const real ex = (c.rr(j) + j - c.rr(i) - i) + (Ctx::S(P, j, k) - Ctx::S(P, i, k)) + (c.rr(j + 1) + j + 1 - c.rr(i) - i) +
                                  (Ctx::S(P, j + 1, k + 1) - Ctx::S(P, i, k + 1));
                acc.log_abs += -2.0 * m * lcoef - m * ex * c.lq;
            }
        }
    if (acc.sign == 0) acc.log_abs = 0;
    return acc;
}

real raise_coeff(const GTPattern& P, int j, int i, const Ctx& c) {
    auto A = [&](int k) { return -c.rr(k) + c.rr(j) - Ctx::S(P, k, i + 1) + Ctx::S(P, j, i) + j - k; };
    auto Ap = [&](int k) { return -c.rr(k) + c.rr(j) - Ctx::S(P, k, i) + Ctx::S(P, j, i) + j - k; };
    auto B = [&](int k, real x) { return k <= j ? c.br_lo(x, c.ei(k, j)) : c.br_hi(x, c.ei(j, k)); };
    real num = 1, den = 1;
    for (int k = 1; k <= i + 1; ++k) num *= B(k, A(k));
    for (int k = 1; k <= i; ++k)
        if (k != j) den *= B(k, Ap(k));
    return -num / den;
}

// Shift in the e-direction (sgn = +1): P + d_{j,i-1} - d_{j,i}; f-direction
// is sgn = -1.  Returns false if an entry would turn negative.
bool shifted(const GTPattern& P, int j, int i, int sgn, GTPattern& out) {
    out = P;
    if (j <= i - 1) out.ref(j, i - 1) += sgn;
    out.ref(j, i) -= sgn;
    for (int x : out.v)
        if (x < 0) return false;
    return true;
}

}  // namespace

NormValue gt_norm_log(const GTPattern& P, const HWModuleSpec& spec) {
    check_spec(spec);
    return norm_of(P, Ctx(spec));
}

double gt_norm(const GTPattern& P, const HWModuleSpec& spec) { return gt_norm_log(P, spec).value(); }

double gt_raise_coeff(const GTPattern& P, int j, int i, const HWModuleSpec& spec) { return static_cast<double>(raise_coeff(P, j, i, Ctx(spec))); }

std::vector<GTPattern> gt_patterns(int N, int M, int D, bool by_total) {
    std::vector<GTPattern> out;
    GTPattern P(N);
    const int n = static_cast<int>(P.v.size());
    // Slot -> (i,k) and weight for the bound.
    std::vector<int> row(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    for (int k = 1; k <= N - 1; ++k)
        for (int i = 1; i <= k; ++i) {
            row[static_cast<size_t>(GTPattern::slot(i, k))] = i;
            w[static_cast<size_t>(GTPattern::slot(i, k))] = by_total ? 1 : k + 1 - i;
        }
    std::function<void(int, int)> rec = [&](int s, int used) {
        if (s == n) { out.push_back(P); return; }
        const size_t us = static_cast<size_t>(s);
        if (row[us] > M) { P.v[us] = 0; rec(s + 1, used); return; }
        for (int x = 0; used + x * w[us] <= D; ++x) {
            P.v[us] = x;
            rec(s + 1, used + x * w[us]);
        }
        P.v[us] = 0;
    };
    rec(0, 0);
    std::stable_sort(out.begin(), out.end(), [&](const GTPattern& a, const GTPattern& b) {
        const int ha = by_total ? a.total() : a.height(), hb = by_total ? b.total() : b.height();
        return ha != hb ? ha < hb : a.v < b.v;
    });
    return out;
}

std::vector<int> HWModule::interior() const {
    std::vector<int> idx;
    for (int n = 0; n < dim(); ++n)
        if (height[static_cast<size_t>(n)] <= interior_height()) idx.push_back(n);
    return idx;
}

RMat HWModule::Tmat(int a, int b) const {
    auto it = T.find({a, b});
    if (it == T.end()) return RMat::Zero(dim(), dim());
    return it->second;
}

int HWModule::index_of(const GTPattern& P) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), P, [](const GTPattern& x, const GTPattern& y) {
        const int hx = x.height(), hy = y.height();
        return hx != hy ? hx < hy : x.v < y.v;
    });
    if (it != basis.end() && *it == P) return static_cast<int>(it - basis.begin());
    return -1;
}

HWModule build_hw_module(const HWModuleSpec& spec, bool parallel) {
    check_spec(spec);
    if (spec.D < spec.effective_margin())
        throw TruncationTooSmall("module: truncation " + std::to_string(spec.D) + " is below the interior margin " +
                                 std::to_string(spec.effective_margin()));
    if (spec.unitary) {
        for (int e : spec.eps)
            if (e == 0) throw DomainError("module: unitary mode needs eps in {-1,1}^M");
        if (!eps_adapted(spec.r, spec.eps)) throw NegativeNorm("module: weight is not eps-adapted");
    }
    const Ctx c(spec);
    const int N = spec.N;
    HWModule mod;
    mod.spec = spec;
    // The module is built on all patterns (the rank-M subspace is extracted by
    // the caller); rows beyond M see eps~ = 0 and carry positive norms.
    for (const auto& P : gt_patterns(N, N, spec.D)) {
        NormValue nv = norm_of(P, c);
        if (nv.sign < 0 && spec.unitary) throw NegativeNorm("module: negative norm at pattern " + to_string(P));
        if (nv.sign <= 0) continue;
        mod.basis.push_back(P);
        mod.height.push_back(P.height());
        mod.log_norm.push_back(nv.log_abs);
    }
    const int dim = mod.dim();
    mod.K.resize(static_cast<size_t>(N) + 1);
    for (int i = 1; i <= N; ++i) {
        RVec d(dim);
        for (int n = 0; n < dim; ++n) {
            const GTPattern& P = mod.basis[static_cast<size_t>(n)];
            int ex = 0;
            for (int j = 1; j < i; ++j) ex += P.at(j, i - 1);
            for (int l = i; l <= N - 1; ++l) ex -= P.at(i, l);
            d(n) = std::pow(c.q, -c.rr(i) + ex);
        }
        mod.K[static_cast<size_t>(i)] = d;
    }
    mod.e.assign(static_cast<size_t>(N), RMat());
    mod.f.assign(static_cast<size_t>(N), RMat());
    for (int i = 1; i < N; ++i) {
        mod.e[static_cast<size_t>(i)] = RMat::Zero(dim, dim);
        mod.f[static_cast<size_t>(i)] = RMat::Zero(dim, dim);
    }
    // Orthonormal basis xi(P)/sqrt(c_P): e gets sqrt(c_Q/c_P), f sqrt(c_P/c_Q).
    // Columns are independent, so they are filled concurrently.
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int n = 0; n < dim; ++n) {
        const GTPattern& P = mod.basis[static_cast<size_t>(n)];
        GTPattern Q;
        for (int i = 1; i < N; ++i)
            for (int j = 1; j <= i; ++j) {
                if (shifted(P, j, i, +1, Q)) {
                    const int m = mod.index_of(Q);
                    if (m >= 0)
                        mod.e[static_cast<size_t>(i)](m, n) =
                            raise_coeff(P, j, i, c) * std::exp(0.5 * (mod.log_norm[static_cast<size_t>(m)] - mod.log_norm[static_cast<size_t>(n)]));
                }
                if (shifted(P, j, i, -1, Q)) {
                    const int m = mod.index_of(Q);
                    if (m >= 0)
                        mod.f[static_cast<size_t>(i)](m, n) =
                            raise_coeff(Q, j, i, c) * std::exp(0.5 * (mod.log_norm[static_cast<size_t>(n)] - mod.log_norm[static_cast<size_t>(m)]));
                }
            }
    }
    // Triangular generators.
    for (int i = 1; i <= N; ++i) mod.T[{i, i}] = mod.K[static_cast<size_t>(i)].cwiseInverse().asDiagonal();
    const real q = c.q;
    for (int i = 1; i < N; ++i) {
        const RVec& Ki = mod.K[static_cast<size_t>(i)];
        const RVec& Ki1 = mod.K[static_cast<size_t>(i + 1)];
        RVec right = (Ki.cwiseQuotient(Ki1)).cwiseSqrt().cwiseInverse().cwiseProduct(Ki1.cwiseInverse());
        mod.T[{i, i + 1}] = (1 / q - q) * std::sqrt(q) * (mod.f[static_cast<size_t>(i)] * right.asDiagonal());
    }
    for (int d = 2; d < N; ++d)
        for (int i = 1; i + d <= N; ++i) {
            const int j = i + d;
            const RMat& A = mod.T.at({i, i + 1});
            const RMat& B = mod.T.at({i + 1, j});
            mod.T[{i, j}] = ((A * B - B * A) * mod.K[static_cast<size_t>(i + 1)].asDiagonal()) / (q - 1 / q);
        }
    return mod;
}

double rel_residual(const RMat& A, const RMat& B, const std::vector<int>& cols) {
    real num = 0, scale = 1;
    for (int n : cols) {
        num = std::max(num, (A.col(n) - B.col(n)).cwiseAbs().maxCoeff());
        scale = std::max({scale, A.col(n).cwiseAbs().maxCoeff(), B.col(n).cwiseAbs().maxCoeff()});
    }
    return static_cast<double>(num / scale);
}

double rel_residual(const CMat& A, const CMat& B, const std::vector<int>& cols) {
    double num = 0, scale = 1;
    for (int n : cols) {
        num = std::max(num, (A.col(n) - B.col(n)).cwiseAbs().maxCoeff());
        scale = std::max({scale, A.col(n).cwiseAbs().maxCoeff(), B.col(n).cwiseAbs().maxCoeff()});
    }
    return num / scale;
}

namespace {

struct Worst {
    double value = 0;
    std::string where;
    void take(double v, const std::string& w) {
        if (v > value || where.empty()) {
            if (v >= value) { value = v; where = w; }
        }
    }
};

Finding finding(const std::string& name, const Worst& w, double tol) {
    Finding f;
    f.check = name;
    f.residual = w.value;
    f.pass = w.value < tol;
    f.detail = w.where.empty() ? "no instances" : "worst at " + w.where;
    return f;
}

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string ijkl(int i, int j, int k, int l) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

}  // namespace

Findings verify_hw_module(const HWModule& m, double tol) {
    const int N = m.spec.N;
    const int dim = m.dim();
    const real q = m.spec.q0;
    const std::vector<int> in = m.interior();
    const std::vector<int> eps = m.spec.eps_padded();
    const Ctx c(m.spec);
    Findings out;
    // Every relation is tested on the interior columns only, so products are
    // evaluated right to left on the block W of interior unit vectors.
    RMat W = RMat::Zero(dim, static_cast<Eigen::Index>(in.size()));
    for (size_t i = 0; i < in.size(); ++i) W(in[i], static_cast<Eigen::Index>(i)) = 1;
    std::vector<int> all(in.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const RMat Z = RMat::Zero(dim, static_cast<Eigen::Index>(in.size()));
    auto on = [&](std::initializer_list<const RMat*> fs) {
        RMat x = W;
        for (auto it = std::rbegin(fs); it != std::rend(fs); ++it) x = **it * x;
        return x;
    };
    auto res = [&](const RMat& A, const RMat& B) { return rel_residual(A, B, all); };

    // Unitarity: the f matrix assembled from the lowering shift equals e^T.
    Worst unit;
    for (int i = 1; i < N; ++i) {
        const RMat Et = m.e[static_cast<size_t>(i)].transpose();
        unit.take(res(on({&Et}), on({&m.f[static_cast<size_t>(i)]})), "i=" + std::to_string(i));
    }
    out.push_back(finding("gt_unitarity", unit, tol));

    std::vector<RMat> Kd(static_cast<size_t>(N + 1)), Kinv(static_cast<size_t>(N + 1));
    for (int a = 1; a <= N; ++a) {
        Kd[static_cast<size_t>(a)] = m.K[static_cast<size_t>(a)].asDiagonal();
        Kinv[static_cast<size_t>(a)] = m.K[static_cast<size_t>(a)].cwiseInverse().asDiagonal();
    }
    // Weight relations K_a e_i K_a^{-1} = q^{<a, alpha_i>} e_i with alpha_i = e_i - e_{i+1}.
    Worst wt;
    for (int a = 1; a <= N; ++a)
        for (int i = 1; i < N; ++i) {
            const int pr = (a == i) - (a == i + 1);
            const RMat& E = m.e[static_cast<size_t>(i)];
            const RMat& F = m.f[static_cast<size_t>(i)];
            const RMat& Ka = Kd[static_cast<size_t>(a)];
            const RMat& Ki = Kinv[static_cast<size_t>(a)];
            wt.take(res(on({&Ka, &E, &Ki}), std::pow(q, pr) * on({&E})), "K" + std::to_string(a) + ",e" + std::to_string(i));
            wt.take(res(on({&Ka, &F, &Ki}), std::pow(q, -pr) * on({&F})), "K" + std::to_string(a) + ",f" + std::to_string(i));
        }
    out.push_back(finding("gt_weight_relations", wt, tol));

    // [e_i, f_j] = delta_ij (eps_{i+1} Khat_i - Khat_i^{-1}) / (q - q^{-1}).
    Worst ef;
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            const RMat& E = m.e[static_cast<size_t>(i)];
            const RMat& F = m.f[static_cast<size_t>(j)];
            RMat lhs = on({&E, &F}) - on({&F, &E});
            RMat rhs = Z;
            if (i == j) {
                const RMat Kh = Kd[static_cast<size_t>(i)] * Kinv[static_cast<size_t>(i + 1)];
                const RMat Khi = Kinv[static_cast<size_t>(i)] * Kd[static_cast<size_t>(i + 1)];
                rhs = (eps[static_cast<size_t>(i)] * on({&Kh}) - on({&Khi})) / (q - 1 / q);
            }
            ef.take(res(lhs, rhs), ij(i, j));
        }
    out.push_back(finding("gt_ef_commutator", ef, tol));

    // Serre relations for adjacent indices.
    Worst serre;
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            if (std::abs(i - j) != 1) continue;
            for (int side = 0; side < 2; ++side) {
                const RMat& A = side ? m.f[static_cast<size_t>(i)] : m.e[static_cast<size_t>(i)];
                const RMat& B = side ? m.f[static_cast<size_t>(j)] : m.e[static_cast<size_t>(j)];
                RMat x = on({&A, &A, &B}) - (q + 1 / q) * on({&A, &B, &A}) + on({&B, &A, &A});
                serre.take(res(x, Z), std::string(side ? "f" : "e") + ij(i, j));
            }
        }
    out.push_back(finding("gt_serre", serre, tol));

    // T_ab and T_ab^* for a <= b; zero otherwise.
    std::map<std::pair<int, int>, RMat> Tm, Sm;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            Tm[{a, b}] = m.Tmat(a, b);
            Sm[{a, b}] = Tm[{a, b}].transpose();
        }
    auto Tg = [&](int a, int b) -> const RMat* { return &Tm.at({a, b}); };
    auto St = [&](int a, int b) -> const RMat* { return &Sm.at({a, b}); };

    // Holomorphic triangular relations.
    Worst hol;
    for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = k; l <= N; ++l) {
                    const RMat *A = Tg(i, j), *B = Tg(k, l);
                    const std::string w = ijkl(i, j, k, l);
                    if (i < k && j == l && k < j) hol.take(res(on({A, B}), q * on({B, A})), w);
                    if (i == k && j < l && i < j) hol.take(res(on({A, B}), q * on({B, A})), w);
                    if (i < k && j > l) hol.take(res(on({A, B}), on({B, A})), w);
                    if (i < k && j < l) hol.take(res(on({A, B}) - on({B, A}), (q - 1 / q) * on({Tg(i, l), Tg(k, j)})), w);
                    if (i == k && j == l && i < j) hol.take(res(on({A, Tg(i, i)}), on({Tg(i, i), A}) / q), w);
                    if (i == k && j == l && i < j) hol.take(res(on({A, Tg(j, j)}), q * on({Tg(j, j), A})), w);
                }
    out.push_back(finding("gt_triangular_relations", hol, tol));

    // Mixed relations between T and T*.
    Worst mix;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    const std::string w = ijkl(i, j, k, l);
                    if (i != j && k != l) mix.take(res(on({Tg(k, j), St(l, i)}), on({St(l, i), Tg(k, j)})), w);
                    if (k != l && i == 1) {
                        RMat rhs = Z;
                        for (int p = 1; p < j; ++p) rhs -= (1 - q * q) * on({Tg(k, p), St(l, p)});
                        mix.take(res(on({Tg(k, j), St(l, j)}) - q * on({St(l, j), Tg(k, j)}), rhs), w);
                    }
                    if (i != j && l == 1) {
                        RMat rhs = Z;
                        for (int p = k + 1; p <= std::min(i, j); ++p) rhs += (1 - q * q) * c.ei(k, p) * on({St(p, i), Tg(p, j)});
                        mix.take(res(q * on({Tg(k, j), St(k, i)}) - on({St(k, i), Tg(k, j)}), rhs), w);
                    }
                    if (i == 1 && l == 1) {
                        RMat rhs = Z;
                        for (int p = k + 1; p <= j; ++p) rhs += (1 - q * q) * c.ei(k, p) * on({St(p, j), Tg(p, j)});
                        for (int p = k; p < j; ++p) rhs -= (1 - q * q) * on({Tg(k, p), St(k, p)});
                        mix.take(res(on({Tg(k, j), St(k, j)}) - on({St(k, j), Tg(k, j)}), rhs), w);
                    }
                }
    out.push_back(finding("gt_mixed_relations", mix, tol));
    return out;
}

NormScan scan_norms(const HWModuleSpec& spec, int bound) {
    check_spec(spec);
    const Ctx c(spec);
    NormScan s;
    for (const auto& P : gt_patterns(spec.N, spec.M(), bound, true)) {
        ++s.patterns;
        NormValue v = norm_of(P, c);
        if (v.sign < 0) {
            if (s.negative == 0) s.first_negative = to_string(P);
            ++s.negative;
        } else if (v.sign == 0) {
            ++s.zero;
        }
    }
    return s;
}

}  // namespace rea
