// Exact coefficient arithmetic: rationals, Gaussian rationals and Laurent
// polynomials in q, plus explicit evaluation into complex doubles.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rea/errors.hpp"

namespace rea {

using cplx = std::complex<double>;

// Arbitrary precision rational, kept in lowest terms with positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

// Element of Q(i); used for characters whose entries lie on the unit circle.
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }
    GaussRational inverse() const;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    GaussRational& operator+=(const GaussRational& b) { re += b.re; im += b.im; return *this; }
    GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
};

std::string to_string(const GaussRational& g);

// Unimodular point ((1 - t^2) + 2t i) / (1 + t^2) for rational t.
GaussRational unit_circle_point(const Rational& t);

// Helpers so Laurent<F> can be written once for both coefficient fields.
inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool coeff_is_zero(const GaussRational& g) { return g.is_zero(); }
inline cplx coeff_eval(const Rational& r) { return {r.get_d(), 0.0}; }
inline cplx coeff_eval(const GaussRational& g) { return {g.re.get_d(), g.im.get_d()}; }
inline Rational coeff_inverse(const Rational& r) { return 1 / r; }
inline GaussRational coeff_inverse(const GaussRational& g) { return g.inverse(); }
inline Rational coeff_conj(const Rational& r) { return r; }
inline GaussRational coeff_conj(const GaussRational& g) { return g.conj(); }

// Finite Laurent polynomial sum_k c_k q^k.  Terms are kept sorted by exponent
// with no zero coefficients, so structural equality is mathematical equality.
template <class F>
class Laurent {
public:
    using Term = std::pair<int, F>;

    Laurent() = default;
    Laurent(long c) { if (c != 0) terms_.emplace_back(0, F(c)); }
    Laurent(const F& c, int e = 0) { if (!coeff_is_zero(c)) terms_.emplace_back(e, c); }

    static Laurent q_pow(int e) { return Laurent(F(1), e); }
    // Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    static Laurent from_terms(std::vector<Term> t);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }

    Laurent inverse() const;
    // Complex conjugation of coefficients; q itself is real.
    Laurent conj() const;
    Laurent shifted(int e) const;  // multiply by q^e
    cplx eval(double q0) const;

    Laurent& operator+=(const Laurent& b) { *this = *this + b; return *this; }
    Laurent& operator-=(const Laurent& b) { *this = *this - b; return *this; }
    Laurent& operator*=(const Laurent& b) { *this = *this * b; return *this; }

    friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, false); }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, true); }
    friend Laurent operator-(const Laurent& a) {
        Laurent r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) { return multiply(a, b); }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

private:
    std::vector<Term> terms_;

    static Laurent merge(const Laurent& a, const Laurent& b, bool subtract);
    static Laurent multiply(const Laurent& a, const Laurent& b);
};

using LaurentScalar = Laurent<Rational>;
using GaussLaurent = Laurent<GaussRational>;

// Frequently used constants.
inline LaurentScalar qpow(int e) { return LaurentScalar::q_pow(e); }
inline LaurentScalar q_minus_qinv() { return qpow(1) - qpow(-1); }   // q - q^{-1}
inline LaurentScalar qinv_minus_q() { return qpow(-1) - qpow(1); }   // q^{-1} - q

// Evaluation at a numeric q0 in (0,1); throws DomainError otherwise.
cplx scalar_eval(const LaurentScalar& a, double q0);
cplx scalar_eval(const GaussLaurent& a, double q0);
double parse_q0(const std::string& s);

GaussLaurent to_gauss(const LaurentScalar& a);

// Sparse "c*q^k" text form; parse accepts everything to_string emits plus
// the usual shorthands ("q", "-q^-1", "3/2*q^2 + 1").
std::string to_string(const LaurentScalar& a);
LaurentScalar parse_laurent(const std::string& s);

// Tagged scalar: exact Laurent polynomial or numeric complex value.
class Scalar {
public:
    enum class Mode { Exact, Numeric };

    Scalar() : v_(LaurentScalar()) {}
    Scalar(LaurentScalar a) : v_(std::move(a)) {}
    Scalar(cplx z) : v_(z) {}

    Mode mode() const { return v_.index() == 0 ? Mode::Exact : Mode::Numeric; }
    const LaurentScalar& exact() const;
    cplx numeric() const;
    bool is_zero() const;
    // Explicit conversion from exact to numeric mode.
    Scalar evaluated(double q0) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    Scalar inverse() const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

private:
    std::variant<LaurentScalar, cplx> v_;
};

enum class ScalarOp { Add, Mul, Neg, Inv };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

// ---------------------------------------------------------------------------

template <class F>
Laurent<F> Laurent<F>::from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> merged;
    for (auto& term : t) {
        if (!merged.empty() && merged.back().first == term.first)
            merged.back().second += term.second;
        else
            merged.push_back(std::move(term));
    }
    Laurent r;
    for (auto& term : merged)
        if (!coeff_is_zero(term.second)) r.terms_.push_back(std::move(term));
    return r;
}

template <class F>
Laurent<F> Laurent<F>::merge(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
            r.terms_.emplace_back(b.terms_[j].first, subtract ? F(-b.terms_[j].second) : b.terms_[j].second);
            ++j;
        } else {
            F c = subtract ? F(a.terms_[i].second - b.terms_[j].second) : F(a.terms_[i].second + b.terms_[j].second);
            if (!coeff_is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

template <class F>
Laurent<F> Laurent<F>::multiply(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const Laurent& m = a.terms_.size() == 1 ? a : b;
        const Laurent& p = a.terms_.size() == 1 ? b : a;
        Laurent r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) r.terms_.emplace_back(t.first + m.terms_[0].first, t.second * m.terms_[0].second);
        return r;
    }
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<F> acc(static_cast<size_t>(hi - lo + 1));
    std::vector<char> used(acc.size(), 0);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            size_t k = static_cast<size_t>(x.first + y.first - lo);
            if (used[k]) acc[k] += x.second * y.second;
            else { acc[k] = x.second * y.second; used[k] = 1; }
        }
    Laurent r;
    for (size_t k = 0; k < acc.size(); ++k)
        if (used[k] && !coeff_is_zero(acc[k])) r.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
    return r;
}

template <class F>
Laurent<F> Laurent<F>::inverse() const {
    if (!is_monomial()) throw NonInvertible("exact inverse requires a monomial c*q^k");
    return Laurent(coeff_inverse(terms_[0].second), -terms_[0].first);
}

template <class F>
Laurent<F> Laurent<F>::conj() const {
    Laurent r;
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, coeff_conj(t.second));
    return r;
}

template <class F>
Laurent<F> Laurent<F>::shifted(int e) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += e;
    return r;
}

template <class F>
cplx Laurent<F>::eval(double q0) const {
    cplx s = 0;
    for (const auto& t : terms_) s += coeff_eval(t.second) * std::pow(q0, t.first);
    return s;
}

}  // namespace rea
