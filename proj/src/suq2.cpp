#include <cmath>
#include <numbers>

#include "rea/errors.hpp"
#include "rea/exactq.hpp"
#include "rea/gtrep.hpp"

namespace rea {

namespace {

void set_block(SUq2Rep& s, const CMat& a, const CMat& c, double q) {
    s.a = a;
    s.c = c;
    s.U = {a, -q * c.adjoint(), c, a.adjoint()};
}

}  // namespace

SUq2Rep suq2_rep(int D, double q0, std::optional<double> theta) {
    if (D < 1) throw DomainError("suq2_rep: truncation must be >= 1");
    if (!(q0 > 0 && q0 < 1)) throw DomainError("suq2_rep: q0 must lie in (0,1)");
    SUq2Rep s;
    s.D = D;
    s.q0 = q0;
    CMat a = CMat::Zero(D + 1, D + 1), c = CMat::Zero(D + 1, D + 1);
    for (int n = 0; n <= D; ++n) {
        c(n, n) = std::pow(q0, n);
        if (n >= 1) a(n - 1, n) = std::sqrt(1 - std::pow(q0, 2 * n));
    }
    set_block(s, a, c, q0);
    if (theta) {
        // Composition with the diagonal character: column j picks up chi_jj.
        const cplx ph = std::polar(1.0, 2 * std::numbers::pi * *theta);
        s.U[0] *= ph;
        s.U[2] *= ph;
        s.U[1] *= std::conj(ph);
        s.U[3] *= std::conj(ph);
    }
    return s;
}

SUq2Rep u2_character(double theta) {
    SUq2Rep s;
    s.D = 0;
    const cplx ph = std::polar(1.0, 2 * std::numbers::pi * theta);
    s.a = CMat::Constant(1, 1, ph);
    s.c = CMat::Zero(1, 1);
    s.U = {s.a, CMat::Zero(1, 1), CMat::Zero(1, 1), CMat::Constant(1, 1, std::conj(ph))};
    return s;
}

double suq2_unitarity_residual(const SUq2Rep& s) {
    const int n = static_cast<int>(s.a.rows());
    std::vector<int> cols;
    for (int i = 0; i < std::max(1, n - 1); ++i) cols.push_back(i);
    double worst = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CMat m = CMat::Zero(n, n);
            for (int k = 0; k < 2; ++k) m += s.U[static_cast<size_t>(2 * k + i)].adjoint() * s.U[static_cast<size_t>(2 * k + j)];
            CMat target = i == j ? CMat(CMat::Identity(n, n)) : CMat(CMat::Zero(n, n));
            worst = std::max(worst, rel_residual(m, target, cols));
        }
    return worst;
}

}  // namespace rea
