#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>

#include "rea/identities.hpp"
#include "rea/rea_algebra.hpp"

using namespace rea;

namespace {

struct Lcg {
    std::uint64_t s;
    int next(int n) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((s >> 33) % static_cast<std::uint64_t>(n));
    }
};

NCPoly random_poly(const Alphabet& A, Lcg& g, int max_deg, int terms) {
    NCPoly p(A.kind(), A.N());
    for (int t = 0; t < terms; ++t) {
        Word w;
        const int d = 1 + g.next(max_deg);
        for (int i = 0; i < d; ++i) w += static_cast<char>(g.next(A.size()));
        p += NCPoly::monomial(A.kind(), A.N(), w, LaurentScalar(make_rational(g.next(7) - 3, 1 + g.next(3)), g.next(5) - 2));
    }
    return p;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("FRT straightening examples") {
    const RewriteSystem frt = RewriteSystem::frt(2);
    auto X = [](int i, int j) { return Xgen(2, i, j); };
    CHECK(straighten(X(1, 2) * X(1, 1), frt) == qpow(-1) * (X(1, 1) * X(1, 2)));
    CHECK(straighten(X(2, 2) * X(1, 1), frt) == X(1, 1) * X(2, 2) - q_minus_qinv() * (X(1, 2) * X(2, 1)));
    CHECK(straighten(X(1, 1) * X(2, 2), frt) == X(1, 1) * X(2, 2));
}

TEST_CASE("straightening is a linear projection") {
    const RewriteSystem frt = RewriteSystem::frt(2);
    Lcg g{11};
    for (int t = 0; t < 20; ++t) {
        NCPoly p = random_poly(frt.alphabet(), g, 4, 3), r = random_poly(frt.alphabet(), g, 4, 3);
        const LaurentScalar a = qpow(1) + LaurentScalar(2), b = qpow(-2);
        NCPoly lhs = straighten(a * p + b * r, frt);
        CHECK(lhs == straighten(a * straighten(p, frt) + b * straighten(r, frt), frt));
        CHECK(straighten(lhs, frt) == lhs);
        for (const auto& [w, c] : lhs.terms()) CHECK(frt.is_normal(w));
    }
}

TEST_CASE("FRT normal monomials have the commutative count") {
    // O_q(M_2) has a PBW basis: degree-d normal words number C(d+3,3).
    const RewriteSystem frt = RewriteSystem::frt(2);
    const Alphabet& A = frt.alphabet();
    for (int d = 1; d <= 4; ++d) {
        std::set<Word> support;
        long words = 1;
        for (int i = 0; i < d; ++i) words *= A.size();
        for (long n = 0; n < words; ++n) {
            Word w;
            long m = n;
            for (int i = 0; i < d; ++i, m /= A.size()) w += static_cast<char>(m % A.size());
            if (frt.is_normal(w)) support.insert(w);
            for (const auto& [u, c] : straighten(NCPoly::monomial(A.kind(), 2, w, LaurentScalar(1)), frt).terms()) CHECK(frt.is_normal(u));
        }
        CHECK(static_cast<long>(support.size()) == binom(d + 3, 3));
    }
}

TEST_CASE("TRI straightening respects the star operation") {
    const RewriteSystem tri = RewriteSystem::tri(2, {1, -1});
    const Alphabet& A = tri.alphabet();
    Lcg g{5};
    for (int t = 0; t < 20; ++t) {
        NCPoly p = random_poly(A, g, 3, 3);
        CHECK(straighten(p.star(A), tri) == straighten(straighten(p, tri).star(A), tri));
    }
}

TEST_CASE("parallel straightening matches the serial reference") {
    const RewriteSystem tri = RewriteSystem::tri(3, {1, 1, -1});
    Lcg g{9};
    for (int t = 0; t < 5; ++t) {
        NCPoly p = random_poly(tri.alphabet(), g, 4, 40);
        CHECK(straighten_parallel(p, tri) == straighten(p, tri));
    }
}

TEST_CASE("embedding into the triangular algebra") {
    const std::vector<int> plus{1, 1};
    const RewriteSystem tri = RewriteSystem::tri(2, plus);
    auto T = [](int a, int b) { return Tgen(2, a, b); };
    CHECK(embed_iT(Zgen(2, 1, 1), plus) == straighten(T(1, 1) * T(1, 1), tri));
    CHECK(embed_iT(Zgen(2, 1, 2), plus) == straighten(T(1, 1) * T(1, 2), tri));
    CHECK(embed_iT(Zgen(2, 2, 2), plus) == straighten(Tstar(2, 1, 2) * T(1, 2) + T(2, 2) * T(2, 2), tri));
    CHECK(embed_iT(leading_minor_Z(2, 2), plus) == straighten(T(1, 1) * T(1, 1) * T(2, 2) * T(2, 2), tri));
}

TEST_CASE("REA zero test") {
    const NCPoly z = Zgen(2, 1, 1), w = Zgen(2, 1, 2);
    CHECK(is_zero_rea(z * w - qpow(2) * (w * z), 2));
    CHECK_FALSE(is_zero_rea(z, 2));
    CHECK_FALSE(is_zero_rea(z * w - w * z, 2));
    CHECK(is_zero_rea(rea_relation(2, 1, 1, 2, 2), 2));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(is_zero_rea(rea_relation(3, i, j, 3, 1), 3));
}

TEST_CASE("central elements and leading minors at N=2") {
    const NCPoly z = Zgen(2, 1, 1), w = Zgen(2, 1, 2), v = Zgen(2, 2, 1), u = Zgen(2, 2, 2);
    CHECK(qpow(-1) * central_sigma(1, 2) == qpow(1) * z + qpow(-1) * u);
    CHECK(qpow(-2) * central_sigma(2, 2) == u * z - qpow(-2) * (v * w));
    CHECK(leading_minor_Z(1, 2) == z);
    CHECK(leading_minor_Z(2, 2) == u * z - qpow(-2) * (v * w));
    for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) CHECK(is_zero_rea(commutator(central_sigma(k, 2), Zgen(2, i, j)), 2));
    // Z_[1] q^2-commutes with Z_12.
    CHECK(is_zero_rea(z * w - qpow(2) * (w * z), 2));
}

TEST_CASE("identity suite") {
    for (int N = 1; N <= 2; ++N)
        for (const auto& f : identity_suite(N)) {
            INFO(f.check << " " << f.detail);
            CHECK(f.pass);
        }
    SuiteOptions opt;
    opt.parallel = false;
    opt.cayley_hamilton = false;
    for (const auto& f : identity_suite(3, opt)) {
        INFO(f.check << " " << f.detail);
        CHECK(f.pass);
    }
}

TEST_CASE("group checks at N=3") {
    CHECK(check_cayley_hamilton(3, true).failed == 0);
    CHECK(check_laplace(3, true).failed == 0);
    CHECK(check_minor_exchange(3).failed == 0);
    CHECK(check_braid_hecke(4).failed == 0);
    GroupResult r = check_rea_relations(3, true);
    CHECK(r.checked == 81);
    CHECK(r.failed == 0);
}

TEST_CASE("Cayley-Hamilton at N=1 is Z - sigma_1") {
    CHECK(is_zero_rea(cayley_hamilton_entry(1, 1, 1), 1));
    CHECK(is_zero_rea(Zgen(1, 1, 1) - central_sigma(1, 1), 1));
}

TEST_CASE("permutation statistics") {
    CHECK(perm_length({1, 2, 3}) == 0);
    CHECK(perm_length({3, 2, 1}) == 3);
    CHECK(perm_anti_exceedance({2, 1}) == 1);
    CHECK(perm_anti_exceedance({1, 2, 3}) == 0);
}
