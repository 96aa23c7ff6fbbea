#include <algorithm>
#include <cmath>
#include <numbers>

#include "rea/errors.hpp"
#include "rea/hrep.hpp"

namespace rea {

std::string n2_kind_name(N2Kind k) {
    switch (k) {
        case N2Kind::SPos: return "S_pos";
        case N2Kind::SZero: return "S_zero";
        case N2Kind::SNegPlus: return "S_neg+";
        case N2Kind::SNegMinus: return "S_neg-";
        case N2Kind::Char: return "char";
        case N2Kind::CharZero: return "char_zero";
        case N2Kind::Zero: return "zero";
    }
    return "?";
}

std::vector<double> n2_fibre(const N2Params& p, double q0) {
    const double q = q0;
    switch (p.kind) {
        case N2Kind::SPos: return {p.c * std::pow(q, p.n + 1), p.c * std::pow(q, -p.n - 1)};
        case N2Kind::SZero:
        case N2Kind::CharZero: return {0.0, p.lambda};
        case N2Kind::SNegPlus:
        case N2Kind::SNegMinus:
        case N2Kind::Char: return {p.c * p.a, -p.c / p.a};
        case N2Kind::Zero: return {0.0, 0.0};
    }
    return {};
}

namespace {

void check_params(const N2Params& p) {
    switch (p.kind) {
        case N2Kind::SPos:
            if (p.c == 0 || p.n < 0) throw DomainError("n2_family: S_pos needs c != 0 and n >= 0");
            break;
        case N2Kind::SZero:
        case N2Kind::CharZero:
            if (p.lambda == 0) throw DomainError("n2_family: lambda must be nonzero");
            break;
        case N2Kind::SNegPlus:
        case N2Kind::SNegMinus:
        case N2Kind::Char:
            if (!(p.c > 0) || !(p.a > 0)) throw DomainError("n2_family: need c > 0 and a > 0");
            break;
        case N2Kind::Zero: break;
    }
}

}  // namespace

// Irreducible representations of O_q(H(2)) with z = Z_11, w = Z_12, v = Z_21,
// u = Z_22.  Central elements T = q z + q^{-1} u and D = u z - q^{-2} v w act
// by lambda_1 + lambda_2 and lambda_1 lambda_2 for the fibre {lambda_1, lambda_2}.
// Infinite families act on span(e_0..e_D): z e_n = lambda_n e_n with
// lambda_n = q^{2n} lambda_0, v e_n = beta_n e_{n-1}, w = v^*, and
// beta_n^2 = q^2 (-D + q T lambda_{n-1} - q^2 lambda_{n-1}^2).
HermitianRep n2_family(const N2Params& p, int D, double q0, int margin) {
    check_params(p);
    if (!(q0 > 0 && q0 < 1)) throw DomainError("n2_family: q0 must lie in (0,1)");
    const double q = q0;
    const std::vector<double> fib = n2_fibre(p, q0);
    const double Tc = fib[0] + fib[1], Dc = fib[0] * fib[1];

    HermitianRep rep;
    rep.N = 2;
    rep.q0 = q0;
    rep.source = "n2:" + n2_kind_name(p.kind);
    rep.predicted_sigma = {q * Tc, q * q * Dc};
    rep.predicted_roots = {q * fib[0], q * fib[1]};
    std::sort(rep.predicted_roots.begin(), rep.predicted_roots.end(), std::greater<>());

    if (p.kind == N2Kind::Zero || p.kind == N2Kind::Char || p.kind == N2Kind::CharZero) {
        Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(2, 2);
        if (p.kind == N2Kind::Char) {
            const cplx v = q * p.c * std::polar(1.0, 2 * std::numbers::pi * p.theta);
            chi(1, 0) = v;
            chi(0, 1) = std::conj(v);
            chi(1, 1) = q * Tc;
        } else if (p.kind == N2Kind::CharZero) {
            chi(1, 1) = q * p.lambda;
        }
        HermitianRep c = character_rep(chi, q0);
        c.source = rep.source;
        c.predicted_sigma = rep.predicted_sigma;
        c.predicted_roots = rep.predicted_roots;
        return c;
    }

    int dim = 0;
    double lam0 = 0;
    switch (p.kind) {
        case N2Kind::SPos:
            dim = p.n + 1;
            lam0 = p.c * std::pow(q, -p.n);
            break;
        case N2Kind::SZero: lam0 = q * p.lambda; break;
        case N2Kind::SNegPlus: lam0 = q * p.c * p.a; break;
        case N2Kind::SNegMinus: lam0 = -q * p.c / p.a; break;
        default: break;
    }
    if (p.kind != N2Kind::SPos) {
        if (D < margin + 1) throw TruncationTooSmall("n2_family: truncation must exceed the margin");
        dim = D + 1;
    }
    rep.dim = dim;
    rep.rank = fib[0] != 0 && fib[1] != 0 ? 2 : 1;
    rep.Z.assign(4, CMat::Zero(dim, dim));
    CMat& z = rep.z(1, 1);
    CMat& w = rep.z(1, 2);
    CMat& v = rep.z(2, 1);
    CMat& u = rep.z(2, 2);
    std::vector<double> lam(static_cast<size_t>(dim));
    for (int n = 0; n < dim; ++n) lam[static_cast<size_t>(n)] = lam0 * std::pow(q, 2 * n);
    for (int n = 0; n < dim; ++n) {
        z(n, n) = lam[static_cast<size_t>(n)];
        u(n, n) = q * (Tc - q * lam[static_cast<size_t>(n)]);
        if (n >= 1) {
            const double l = lam[static_cast<size_t>(n - 1)];
            const double b2 = q * q * (-Dc + q * Tc * l - q * q * l * l);
            if (b2 < -1e-12 * std::max(1.0, std::abs(Dc))) throw DomainError("n2_family: negative ladder coefficient");
            v(n - 1, n) = std::sqrt(std::max(0.0, b2));
        }
    }
    w = v.adjoint();
    rep.level.resize(static_cast<size_t>(dim));
    for (int n = 0; n < dim; ++n) rep.level[static_cast<size_t>(n)] = p.kind == N2Kind::SPos ? 0 : n;
    rep.interior_level = p.kind == N2Kind::SPos ? 0 : D - margin;
    return rep;
}

}  // namespace rea
