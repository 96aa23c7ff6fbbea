#include "rea/classify.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace rea {

namespace {

void check_q0(double q0) {
    if (!(q0 > 0 && q0 < 1)) throw DomainError("classify: q0 must lie in (0,1)");
}

double frac1(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    return f;
}

// Splits exponents t_i = log_{q^2}|x_i| into base + distinct integers.
bool lattice_split(std::vector<double> t, double tol, double& base, std::vector<int>& ints) {
    ints.clear();
    if (t.empty()) return true;
    std::sort(t.begin(), t.end());
    base = t.front();
    for (double x : t) {
        const double d = x - base;
        const double n = std::round(d);
        if (std::abs(d - n) > tol) return false;
        ints.push_back(static_cast<int>(n));
    }
    for (size_t i = 1; i < ints.size(); ++i)
        if (ints[i] == ints[i - 1]) return false;
    return true;
}

}  // namespace

bool ext_equal(const ExtendedSignature& a, const ExtendedSignature& b, double tol) {
    if (a.nplus != b.nplus || a.nminus != b.nminus || a.nzero != b.nzero) return false;
    double d = std::abs(a.rmod1 - b.rmod1);
    d = std::min(d, 1.0 - d);
    return d <= tol;
}

std::optional<RootDecomposition> admissible_roots(const std::vector<double>& roots, double q0, double tol, double zero_tol) {
    check_q0(q0);
    double scale = 0;
    for (double x : roots) scale = std::max(scale, std::abs(x));
    const double l2 = 2 * std::log(q0);
    RootDecomposition d;
    std::vector<double> tp, tn;
    for (double x : roots) {
        if (std::abs(x) <= zero_tol * scale || x == 0.0) {
            ++d.nzero;
            continue;
        }
        (x > 0 ? tp : tn).push_back(std::log(std::abs(x)) / l2);
    }
    if (!lattice_split(tp, tol, d.alpha, d.m)) return std::nullopt;
    if (!lattice_split(tn, tol, d.beta, d.n)) return std::nullopt;
    return d;
}

ExtendedSignature ext_signature(const std::vector<double>& roots, double q0, double tol) {
    auto d = admissible_roots(roots, q0, tol);
    if (!d) throw NotAdmissible("ext_signature: root multiset is not admissible");
    ExtendedSignature s;
    s.nplus = static_cast<int>(d->m.size());
    s.nminus = static_cast<int>(d->n.size());
    s.nzero = d->nzero;
    if (s.nplus > 0 && s.nminus > 0) {
        s.rmod1 = frac1(d->beta - d->alpha);
        if (s.rmod1 > 1 - tol) s.rmod1 = 0;
    }
    return s;
}

std::vector<double> canonical_weight(const std::vector<double>& roots, const std::vector<int>& eps, double q0, double tol) {
    auto d = admissible_roots(roots, q0, tol);
    if (!d) throw NotAdmissible("canonical_weight: root multiset is not admissible");
    const int M = static_cast<int>(eps.size());
    std::vector<int> eta(static_cast<size_t>(M));
    int p = 1, npos = 0;
    for (int k = 0; k < M; ++k) {
        if (eps[static_cast<size_t>(k)] != 1 && eps[static_cast<size_t>(k)] != -1) throw DomainError("canonical_weight: eps must be a sign vector");
        p *= eps[static_cast<size_t>(k)];
        eta[static_cast<size_t>(k)] = p;
        npos += p == 1;
    }
    if (static_cast<int>(d->m.size()) != npos || static_cast<int>(d->n.size()) != M - npos)
        throw SignMismatch("canonical_weight: root signs do not match the signature of eps");
    // Within each sign class, eps-adaptedness forces decreasing |root|, that
    // is increasing exponent along k.
    std::vector<double> r(static_cast<size_t>(M));
    size_t ip = 0, in = 0;
    for (int k = 1; k <= M; ++k) {
        const double t = eta[static_cast<size_t>(k - 1)] == 1 ? d->alpha + d->m[ip++] : d->beta + d->n[in++];
        r[static_cast<size_t>(k - 1)] = t + 1 - k;
    }
    return r;
}

namespace {

void check_char(int k, int l, size_t ny, int N) {
    if (N < 1 || k < 0 || l < 0 || k + l > N - l) throw DomainError("star_character: need k,l >= 0 and k + 2l <= N");
    if (static_cast<int>(ny) != l) throw DomainError("star_character: need exactly l entries y");
}

}  // namespace

Eigen::MatrixXcd star_character(const CharacterParams& p, int N) {
    check_char(p.k, p.l, p.y.size(), N);
    if (!(p.a > 0) || p.c == 0) throw DomainError("star_character: need a > 0 and c != 0");
    for (const auto& y : p.y)
        if (std::abs(std::abs(y) - 1) > 1e-12) throw DomainError("star_character: y must be unimodular");
    Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(N, N);
    for (int i = p.k + p.l + 1; i <= N; ++i) Z(i - 1, i - 1) += p.a;
    for (int i = N - p.l + 1; i <= N; ++i) Z(i - 1, i - 1) -= 1 / p.a;
    for (int i = 0; i < p.l; ++i) {
        Z(p.k + i, N - i - 1) += p.y[static_cast<size_t>(i)];
        Z(N - i - 1, p.k + i) += std::conj(p.y[static_cast<size_t>(i)]);
    }
    return p.c * Z;
}

GaussMat star_character_exact(const ExactCharacterParams& p, int N) {
    check_char(p.k, p.l, p.y.size(), N);
    if (sgn(p.a) <= 0 || sgn(p.c) == 0) throw DomainError("star_character: need a > 0 and c != 0");
    for (const auto& y : p.y)
        if (y.re * y.re + y.im * y.im != 1) throw DomainError("star_character: y must be unimodular");
    std::vector<GaussRational> z(static_cast<size_t>(N * N));
    auto at = [&](int i, int j) -> GaussRational& { return z[static_cast<size_t>((i - 1) * N + (j - 1))]; };
    for (int i = p.k + p.l + 1; i <= N; ++i) at(i, i) += GaussRational(p.a);
    for (int i = N - p.l + 1; i <= N; ++i) at(i, i) += GaussRational(Rational(-1 / p.a));
    for (int i = 0; i < p.l; ++i) {
        at(p.k + i + 1, N - i) += p.y[static_cast<size_t>(i)];
        at(N - i, p.k + i + 1) += p.y[static_cast<size_t>(i)].conj();
    }
    GaussMat m(N, N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            GaussRational v = at(i, j) * GaussRational(p.c);
            if (!v.is_zero()) m(i - 1, j - 1) = GaussLaurent(v);
        }
    return m;
}

GaussMat re_defect_exact(const GaussMat& Z, int N) {
    GaussMat R = to_gauss(build_rhat(N).R);
    GaussMat Z2 = kron(GaussMat::identity(N), Z);
    return R * Z2 * R * Z2 - Z2 * R * Z2 * R;
}

double re_residual_scalar(const Eigen::MatrixXcd& Z, double q0) {
    const int N = static_cast<int>(Z.rows());
    Eigen::MatrixXcd R = to_numeric(build_rhat(N).R, q0);
    Eigen::MatrixXcd Z2 = Eigen::kroneckerProduct(Eigen::MatrixXcd::Identity(N, N), Z);
    return (R * Z2 * R * Z2 - Z2 * R * Z2 * R).cwiseAbs().maxCoeff();
}

}  // namespace rea
