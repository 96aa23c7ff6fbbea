#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unsupported/Eigen/KroneckerProduct>

#include "rea/braid.hpp"

using namespace rea;

namespace {

constexpr double q0 = 0.5;

// Independent numeric braid operator, built from its action on basis tensors:
// e_k(x)e_k -> q^{-1} e_k(x)e_k, e_k(x)e_l -> e_l(x)e_k (+ (q^{-1}-q) e_k(x)e_l if l<k).
Eigen::MatrixXd oracle_rhat(int N, double q) {
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(N * N, N * N);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
            const int col = k * N + l;
            if (k == l) {
                R(col, col) = 1 / q;
                continue;
            }
            R(l * N + k, col) += 1;
            if (l < k) R(col, col) += 1 / q - q;
        }
    return R;
}

double max_err(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("N=1 braid operator is q^{-1}") {
    BraidPair bp = build_rhat(1);
    REQUIRE(bp.R.rows == 1);
    CHECK(bp.R(0, 0) == qpow(-1));
    CHECK(bp.Rinv(0, 0) == qpow(1));
}

TEST_CASE("N=2 braid operator entries") {
    BraidPair bp = build_rhat(2);
    auto idx = [](int k, int l) { return (k - 1) * 2 + (l - 1); };
    const ExactMat& R = bp.R;
    CHECK(R(idx(1, 1), idx(1, 1)) == qpow(-1));
    CHECK(R(idx(2, 1), idx(1, 2)) == LaurentScalar(1));
    CHECK(R(idx(1, 2), idx(1, 2)).is_zero());
    CHECK(R(idx(1, 2), idx(2, 1)) == LaurentScalar(1));
    CHECK(R(idx(2, 1), idx(2, 1)) == qinv_minus_q());
    CHECK(R(idx(2, 2), idx(2, 2)) == qpow(-1));
}

TEST_CASE("braid operator agrees with the dense oracle") {
    for (int N = 1; N <= 4; ++N) {
        BraidPair bp = build_rhat(N);
        CHECK(max_err(to_numeric(bp.R, q0), oracle_rhat(N, q0).cast<cplx>()) < 1e-14);
    }
}

TEST_CASE("inverse, Hecke and braid relations hold exactly") {
    for (int N = 1; N <= 3; ++N) {
        BraidPair bp = build_rhat(N);
        const ExactMat I = ExactMat::identity(N * N);
        CHECK(bp.R * bp.Rinv == I);
        CHECK(bp.Rinv * bp.R == I);
        const ExactMat a = bp.R - scaled(I, qpow(-1));
        const ExactMat b = bp.R + scaled(I, qpow(1));
        CHECK((a * b).is_zero());
        const ExactMat In = ExactMat::identity(N);
        const ExactMat R12 = kron(bp.R, In), R23 = kron(In, bp.R);
        CHECK(R12 * R23 * R12 == R23 * R12 * R23);
    }
}

TEST_CASE("braid relation also holds for the dense oracle at N=4") {
    const int N = 4;
    Eigen::MatrixXd R = oracle_rhat(N, q0);
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N, N);
    Eigen::MatrixXd R12 = Eigen::kroneckerProduct(R, I), R23 = Eigen::kroneckerProduct(I, R);
    CHECK((R12 * R23 * R12 - R23 * R12 * R23).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sign-twisted braid operator keeps the Hecke relation") {
    for (const auto& eps : std::vector<std::vector<int>>{{1, -1}, {1, 0}, {-1, 1, 0}}) {
        const int N = static_cast<int>(eps.size());
        BraidPair bp = build_rhat(N, eps);
        const ExactMat I = ExactMat::identity(N * N);
        CHECK(bp.R * bp.Rinv == I);
    }
    CHECK_THROWS_AS(build_rhat(2, std::vector<int>{1}), DomainError);
}

TEST_CASE("exterior powers") {
    ExtBasis e22 = exterior_power(2, 2);
    REQUIRE(e22.basis.size() == 1);
    CHECK(e22.basis[0] == std::vector<int>{1, 2});
    CHECK(exterior_power(3, 0).basis.size() == 1);
    ExtBasis e32 = exterior_power(3, 2);
    CHECK(e32.basis == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    for (int N = 1; N <= 4; ++N)
        for (int k = 0; k <= N; ++k) {
            ExtBasis e = exterior_power(N, k);
            CHECK(e.project * e.embed == ExactMat::identity(static_cast<int>(e.basis.size())));
        }
}

TEST_CASE("exterior power is the eigenspace of -q of the braid operator") {
    // Degree-two wedges are annihilated by (R + q), i.e. R acts by -q.
    for (int N = 2; N <= 3; ++N) {
        ExtBasis e = exterior_power(N, 2);
        BraidPair bp = build_rhat(N);
        const ExactMat lhs = bp.R * e.embed;
        CHECK(lhs == scaled(e.embed, LaurentScalar(-1) * qpow(1)));
    }
}

TEST_CASE("minor braiding") {
    for (int N = 1; N <= 3; ++N) {
        MinorBraiding mb = minor_braiding(N, 1, 1);
        CHECK(mb.R == build_rhat(N).R);
    }
    for (int N = 2; N <= 3; ++N)
        for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l) {
                MinorBraiding mb = minor_braiding(N, k, l);
                CHECK(mb.R * mb.Rinv == ExactMat::identity(mb.R.rows));
            }
    // Equal index sets pick up q^{-|I|}.
    MinorBraiding mb = minor_braiding(3, 2, 2);
    const std::vector<int> I{1, 3};
    CHECK(mb.coeff(I, I, I, I) == qpow(-2));
    CHECK_THROWS_AS(minor_braiding(2, 3, 1), DomainError);
}
