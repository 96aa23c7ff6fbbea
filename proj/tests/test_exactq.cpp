#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "rea/exactq.hpp"

using namespace rea;

namespace {

// Small deterministic generator for property tests.
struct Lcg {
    std::uint64_t s;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

LaurentScalar random_laurent(Lcg& g, int span = 20) {
    LaurentScalar a;
    const int n = g.next(0, 4);
    for (int i = 0; i < n; ++i) a += LaurentScalar(make_rational(g.next(-9, 9), g.next(1, 7)), g.next(-span, span));
    return a;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
    CHECK((qinv_minus_q() + q_minus_qinv()).is_zero());
    CHECK((LaurentScalar(1) - qpow(2)) * (LaurentScalar(1) + qpow(2)) == LaurentScalar(1) - qpow(4));
    CHECK(qpow(2).inverse() == qpow(-2));
    CHECK_THROWS_AS((LaurentScalar(1) + qpow(1)).inverse(), NonInvertible);
}

TEST_CASE("evaluation examples") {
    CHECK(scalar_eval(qpow(-2), 0.5).real() == doctest::Approx(4.0));
    CHECK(scalar_eval(q_minus_qinv(), 0.5).real() == doctest::Approx(-1.5));
    CHECK(scalar_eval(LaurentScalar(), 0.3) == cplx(0.0));
    CHECK_THROWS_AS(scalar_eval(qpow(1), 1.5), DomainError);
}

TEST_CASE("tagged scalars refuse implicit mode mixing") {
    Scalar e(qpow(1)), n(cplx(0.5));
    CHECK_THROWS_AS(e + n, ModeMismatch);
    Scalar en = e.evaluated(0.5);
    CHECK((en + n).numeric() == cplx(1.0));
    CHECK(scalar_arith(e, e, ScalarOp::Mul).exact() == qpow(2));
    CHECK(scalar_arith(e, e, ScalarOp::Inv).exact() == qpow(-1));
}

TEST_CASE("ring axioms hold exactly on random triples") {
    Lcg g{42};
    for (int t = 0; t < 200; ++t) {
        LaurentScalar a = random_laurent(g), b = random_laurent(g), c = random_laurent(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Lcg g{7};
    for (int t = 0; t < 200; ++t) {
        LaurentScalar a = random_laurent(g), b = random_laurent(g);
        const cplx lhs = scalar_eval(a * b, 0.5), rhs = scalar_eval(a, 0.5) * scalar_eval(b, 0.5);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)) * 1e3);
    }
}

TEST_CASE("text round trip") {
    Lcg g{3};
    for (int t = 0; t < 50; ++t) {
        LaurentScalar a = random_laurent(g);
        CHECK(parse_laurent(to_string(a)) == a);
    }
    CHECK(parse_laurent("q") == qpow(1));
    CHECK(parse_laurent("-q^-1") == -qpow(-1));
    CHECK(parse_laurent("3/2*q^2 + 1") == LaurentScalar(make_rational(3, 2), 2) + LaurentScalar(1));
    CHECK_THROWS_AS(parse_laurent("q^^2"), ParseError);
}

TEST_CASE("rationals and gaussian rationals") {
    CHECK(parse_rational("0.25") == make_rational(1, 4));
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(parse_q0("1/2") == 0.5);
    CHECK_THROWS_AS(parse_q0("2"), DomainError);
    for (int k = -5; k <= 5; ++k) {
        GaussRational y = unit_circle_point(make_rational(k, 3));
        CHECK(y * y.conj() == GaussRational(1));
    }
    GaussRational z(make_rational(2, 3), make_rational(-1, 5));
    CHECK(z * z.inverse() == GaussRational(1));
}

TEST_CASE("decimals with leading zeros are read in base ten") {
    CHECK(parse_rational("0.25") == make_rational(1, 4));
    CHECK(parse_rational("0.8") == make_rational(4, 5));
    CHECK(parse_rational("-0.09") == make_rational(-9, 100));
    CHECK(parse_rational("007") == make_rational(7));
}
