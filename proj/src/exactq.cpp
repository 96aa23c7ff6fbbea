#include "rea/exactq.hpp"

#include <cctype>
#include <sstream>

namespace rea {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational");
    // Accept decimals such as "0.5" by converting to a fraction.
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal: " + s);
        mpz_class num(ip + fp, 10), den(1);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    Rational r;
    try {
        if (t[0] == '+') t = t.substr(1);
        if (r.set_str(t, 10) != 0) throw ParseError("bad rational: " + s);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + s);
    }
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussRational GaussRational::inverse() const {
    Rational n = re * re + im * im;
    if (sgn(n) == 0) throw NonInvertible("inverse of zero");
    return {re / n, -im / n};
}

std::string to_string(const GaussRational& g) {
    if (sgn(g.im) == 0) return to_string(g.re);
    std::string s = "(" + to_string(g.re);
    s += sgn(g.im) < 0 ? "-" : "+";
    s += to_string(Rational(abs(g.im))) + "i)";
    return s;
}

GaussRational unit_circle_point(const Rational& t) {
    Rational d = 1 + t * t;
    return {Rational((1 - t * t) / d), Rational(2 * t / d)};
}

static void check_q0(double q0) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw DomainError("q0 must lie in (0,1)");
}

cplx scalar_eval(const LaurentScalar& a, double q0) {
    check_q0(q0);
    return a.eval(q0);
}

cplx scalar_eval(const GaussLaurent& a, double q0) {
    check_q0(q0);
    return a.eval(q0);
}

double parse_q0(const std::string& s) {
    double q0 = parse_rational(s).get_d();
    check_q0(q0);
    return q0;
}

GaussLaurent to_gauss(const LaurentScalar& a) {
    std::vector<GaussLaurent::Term> t;
    for (const auto& [e, c] : a.terms()) t.emplace_back(e, GaussRational(c));
    return GaussLaurent::from_terms(std::move(t));
}

std::string to_string(const LaurentScalar& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentScalar parse_laurent(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty Laurent polynomial");
    std::vector<LaurentScalar::Term> terms;
    size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("expected sign in: " + s);
        }
        // Coefficient: digits with optional '/'.
        size_t j = i;
        while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
        Rational coeff(1);
        bool have_coeff = j > i;
        if (have_coeff) coeff = parse_rational(t.substr(i, j - i));
        i = j;
        int exp = 0;
        if (i < t.size() && t[i] == '*') {
            if (!have_coeff) throw ParseError("dangling '*' in: " + s);
            ++i;
            if (i >= t.size() || t[i] != 'q') throw ParseError("expected q after '*' in: " + s);
        }
        if (i < t.size() && t[i] == 'q') {
            ++i;
            exp = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                bool paren = i < t.size() && (t[i] == '(' || t[i] == '{');
                if (paren) ++i;
                size_t k = i;
                if (k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
                size_t d = k;
                while (d < t.size() && std::isdigit(static_cast<unsigned char>(t[d]))) ++d;
                if (d == k) throw ParseError("expected exponent in: " + s);
                exp = std::stoi(t.substr(i, d - i));
                i = d;
                if (paren) {
                    if (i >= t.size() || (t[i] != ')' && t[i] != '}')) throw ParseError("unbalanced exponent in: " + s);
                    ++i;
                }
            }
        } else if (!have_coeff) {
            throw ParseError("empty term in: " + s);
        }
        terms.emplace_back(exp, sign < 0 ? Rational(-coeff) : coeff);
    }
    return LaurentScalar::from_terms(std::move(terms));
}

const LaurentScalar& Scalar::exact() const {
    if (mode() != Mode::Exact) throw ModeMismatch("scalar is numeric");
    return std::get<0>(v_);
}

cplx Scalar::numeric() const {
    if (mode() != Mode::Numeric) throw ModeMismatch("scalar is exact; evaluate explicitly");
    return std::get<1>(v_);
}

bool Scalar::is_zero() const {
    return mode() == Mode::Exact ? std::get<0>(v_).is_zero() : std::get<1>(v_) == cplx(0.0);
}

Scalar Scalar::evaluated(double q0) const {
    if (mode() == Mode::Numeric) return *this;
    return Scalar(scalar_eval(std::get<0>(v_), q0));
}

static void same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) throw ModeMismatch("exact and numeric scalars mixed");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    same_mode(a, b);
    if (a.mode() == Scalar::Mode::Exact) return Scalar(a.exact() + b.exact());
    return Scalar(a.numeric() + b.numeric());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    same_mode(a, b);
    if (a.mode() == Scalar::Mode::Exact) return Scalar(a.exact() - b.exact());
    return Scalar(a.numeric() - b.numeric());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    same_mode(a, b);
    if (a.mode() == Scalar::Mode::Exact) return Scalar(a.exact() * b.exact());
    return Scalar(a.numeric() * b.numeric());
}

Scalar operator-(const Scalar& a) {
    if (a.mode() == Scalar::Mode::Exact) return Scalar(-a.exact());
    return Scalar(-a.numeric());
}

Scalar Scalar::inverse() const {
    if (mode() == Mode::Exact) return Scalar(exact().inverse());
    if (numeric() == cplx(0.0)) throw NonInvertible("inverse of numeric zero");
    return Scalar(cplx(1.0) / numeric());
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Neg: return -a;
        case ScalarOp::Inv: return a.inverse();
    }
    throw DomainError("unknown scalar operation");
}

}  // namespace rea
