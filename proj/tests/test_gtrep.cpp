#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rea/errors.hpp"
#include "rea/gtrep.hpp"

using namespace rea;

namespace {

constexpr double q0 = 0.5;

HWModuleSpec spec2(std::vector<int> eps, std::vector<double> r, int D = 12) {
    HWModuleSpec s;
    s.N = 2;
    s.eps = std::move(eps);
    s.r = std::move(r);
    s.D = D;
    s.q0 = q0;
    s.margin = 4;
    return s;
}

GTPattern p11(int m) {
    GTPattern P(2);
    P.ref(1, 1) = m;
    return P;
}

// For N = 2 the norm of the pattern P_11 = m is, up to positive factors,
// (q^2;q^2)_m (eps_2 q^{2(r_2-r_1)+2-2m}; q^2)_m.
int oracle_sign(double r1, double r2, int m, int eps2 = 1) {
    double p = 1;
    for (int t = 0; t < m; ++t) {
        p *= 1 - std::pow(q0, 2 + 2 * t);
        p *= 1 - eps2 * std::pow(q0, 2 * (r2 - r1) + 2 - 2 * m + 2 * t);
    }
    if (std::abs(p) < 1e-14) return 0;
    return p > 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("eps-adapted weights") {
    CHECK(eps_adapted({0, 0}, {1, 1}));
    CHECK_FALSE(eps_adapted({0, -1}, {1, 1}));
    CHECK_FALSE(eps_adapted({0, 0.5}, {1, 1}));
    for (double b : {-3.0, -0.5, 0.0, 0.7, 4.0}) CHECK(eps_adapted({0.2, b}, {1, -1}));
    CHECK(eps_adapted({0, 0, 1}, {1, 1, 1}));
    CHECK_FALSE(eps_adapted({0, -1, 0}, {1, 1, 1}));
    CHECK(eps_adapted({0, 0, 0}, {1, 1, 1}));
}

TEST_CASE("norm examples") {
    CHECK(gt_norm(GTPattern(2), spec2({1, 1}, {0, 0})) == doctest::Approx(1.0));
    CHECK(gt_norm(GTPattern(3), []{ HWModuleSpec s; s.N = 3; s.eps = {1, -1, 1}; s.r = {0.3, 0.1, 0.1}; return s; }()) == doctest::Approx(1.0));
    CHECK(gt_norm(p11(1), spec2({1, 1}, {0, 0})) == 0.0);
    for (int m = 0; m <= 10; ++m) {
        CHECK(gt_norm(p11(m), spec2({1, -1}, {0.3, 0.8})) > 0);
        CHECK(gt_norm(p11(m), spec2({1, -1}, {-2.0, 1.5})) > 0);
    }
}

TEST_CASE("norm signs agree with the q-Pochhammer oracle") {
    for (int e2 : {1, -1})
        for (double r2 : {-2.5, -1.0, -0.3, 0.0, 0.4, 1.0, 2.0, 3.6})
            for (int m = 0; m <= 8; ++m) {
                HWModuleSpec s = spec2({1, e2}, {0.0, r2});
                s.unitary = false;
                NormValue v = gt_norm_log(p11(m), s);
                INFO("eps2=" << e2 << " r2=" << r2 << " m=" << m);
                CHECK(v.sign == oracle_sign(0.0, r2, m, e2));
            }
}

TEST_CASE("unitary mode rejects negative norms") {
    HWModuleSpec s = spec2({1, 1}, {0.0, 0.5});
    CHECK_THROWS_AS(build_hw_module(s), NegativeNorm);
    s.unitary = false;
    NormScan scan = scan_norms(s, 8);
    CHECK(scan.negative > 0);
    CHECK_FALSE(scan.first_negative.empty());
}

TEST_CASE("non-adapted weights are detected by the scan") {
    // Non-integer gaps give negative norms; r_2 - r_1 = -1 (gap zero) gives
    // zero norms instead, since the first factor of every m >= 1 vanishes.
    for (double r2 : {-0.5, 0.3, 1.25, -1.5}) {
        HWModuleSpec s = spec2({1, 1}, {0.0, r2});
        s.unitary = false;
        CHECK(scan_norms(s, 4).negative > 0);
    }
    HWModuleSpec z = spec2({1, 1}, {0.0, 0.0});
    z.unitary = false;
    NormScan sz = scan_norms(z, 4);
    CHECK(sz.negative == 0);
    CHECK(sz.zero == 4);
    HWModuleSpec g = spec2({1, 1}, {0.0, -1.0});
    g.unitary = false;
    CHECK_FALSE(eps_adapted(g.r, g.eps));
    HWModuleSpec s3;
    s3.N = 3;
    s3.eps = {1, 1, 1};
    s3.r = {0.0, 0.3, 0.3};
    s3.unitary = false;
    CHECK(scan_norms(s3, 4).negative > 0);
    s3.r = {0.0, 0.0, 0.0};
    CHECK(scan_norms(s3, 8).negative == 0);
}

TEST_CASE("pattern enumeration") {
    CHECK(gt_patterns(2, 2, 10).size() == 11);
    CHECK(gt_patterns(3, 3, 4, true).size() == 35);  // C(4+3,3)
    // Rank-one weights only move the first row.
    for (const auto& P : gt_patterns(3, 1, 5)) CHECK(P.at(2, 2) == 0);
}

TEST_CASE("module examples") {
    HWModule one = build_hw_module(spec2({1, 1}, {0, 0}));
    CHECK(one.dim() == 1);

    const double a = 0.3, b = 0.8;
    HWModule m = build_hw_module(spec2({1, -1}, {a, b}, 10));
    REQUIRE(m.dim() == 11);
    RMat T1 = m.Tmat(1, 1);
    std::vector<double> ev;
    for (int i = 0; i < m.dim(); ++i) ev.push_back(static_cast<double>(T1(i, i)));
    std::sort(ev.begin(), ev.end(), std::greater<>());
    for (int k = 0; k <= 10; ++k) CHECK(ev[static_cast<size_t>(k)] == doctest::Approx(std::pow(q0, a + k)).epsilon(1e-12));
    CHECK((T1 - RMat(T1.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("module relations hold on the interior") {
    std::vector<HWModuleSpec> specs{spec2({1, -1}, {0.3, 0.8}, 16), spec2({1, 1}, {0.1, 2.1}, 16), spec2({-1, 1}, {0.0, 2.0}, 16)};
    HWModuleSpec s3;
    s3.N = 3;
    s3.eps = {1, -1, 1};
    s3.r = {0.2, 0.5, 0.5};
    s3.D = 12;
    specs.push_back(s3);
    HWModuleSpec rank1;
    rank1.N = 3;
    rank1.eps = {-1};
    rank1.r = {0.4};
    rank1.D = 12;
    specs.push_back(rank1);
    for (const auto& s : specs) {
        HWModule m = build_hw_module(s);
        for (const auto& f : verify_hw_module(m, 1e-10)) {
            INFO(f.check << " " << f.residual << " " << f.detail);
            CHECK(f.pass);
        }
    }
}

TEST_CASE("parallel module build matches the serial reference") {
    HWModuleSpec s;
    s.N = 3;
    s.eps = {1, -1, -1};
    s.r = {0.2, 0.5, 1.2};
    s.D = 14;
    HWModule a = build_hw_module(s, true), b = build_hw_module(s, false);
    REQUIRE(a.dim() == b.dim());
    for (const auto& [key, M] : a.T) CHECK(M == b.T.at(key));
}

TEST_CASE("SU_q(2) representation") {
    SUq2Rep s = suq2_rep(12, q0);
    CHECK(std::abs(s.c(3, 3) - std::pow(q0, 3)) < 1e-15);
    CHECK(s.a.col(0).isZero(0));
    CHECK(suq2_unitarity_residual(s) < 1e-12);
    CHECK(suq2_unitarity_residual(suq2_rep(12, q0, 0.3)) < 1e-12);
    CHECK(suq2_unitarity_residual(u2_character(0.7)) < 1e-15);
    CHECK_THROWS_AS(suq2_rep(0, q0), DomainError);
}
