#include "rea/ncpoly.hpp"

#include <algorithm>

namespace rea {

Alphabet::Alphabet(AlgebraKind alg, int N) : alg_(alg), N_(N) {
    if (N < 1 || N > 12) throw DomainError("alphabet size N must be in 1..12");
    index_.assign(static_cast<size_t>(5 * (N + 1) * (N + 1)), -1);
    auto add = [&](GenKind k, int r, int c) {
        index_[static_cast<size_t>(key(k, r, c))] = static_cast<int>(gens_.size());
        gens_.push_back({alg, k, r, c});
    };
    if (alg == AlgebraKind::FRT || alg == AlgebraKind::REA) {
        GenKind k = alg == AlgebraKind::FRT ? GenKind::X : GenKind::Z;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) add(k, i, j);
    } else {
        // plain (lexicographic) < diagonal (T_i, T_i^{-1}) < star (reverse lexicographic)
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) add(GenKind::T, i, j);
        for (int i = 1; i <= N; ++i) {
            add(GenKind::T, i, i);
            add(GenKind::Tinv, i, i);
        }
        for (int i = N; i >= 1; --i)
            for (int j = N; j > i; --j) add(GenKind::Tstar, i, j);
    }
    if (gens_.size() > 255) throw DomainError("alphabet too large");
    star_.resize(gens_.size());
    for (size_t c = 0; c < gens_.size(); ++c) {
        const GenId& g = gens_[c];
        int s = -1;
        switch (g.kind) {
            case GenKind::X: s = -1; break;
            case GenKind::Z: s = index_[static_cast<size_t>(key(GenKind::Z, g.col, g.row))]; break;
            case GenKind::T: s = g.row == g.col ? static_cast<int>(c) : index_[static_cast<size_t>(key(GenKind::Tstar, g.row, g.col))]; break;
            case GenKind::Tinv: s = static_cast<int>(c); break;
            case GenKind::Tstar: s = index_[static_cast<size_t>(key(GenKind::T, g.row, g.col))]; break;
        }
        star_[c] = static_cast<char>(s);
    }
}

char Alphabet::code(const GenId& g) const {
    if (g.alg != alg_) throw AlgebraMismatch("generator from a different algebra");
    if (g.row < 1 || g.row > N_ || g.col < 1 || g.col > N_) throw DomainError("generator index out of range");
    int c = index_[static_cast<size_t>(key(g.kind, g.row, g.col))];
    if (c < 0) throw DomainError("no such generator in this algebra");
    return static_cast<char>(c);
}

char Alphabet::star(char c) const {
    if (alg_ == AlgebraKind::FRT) throw AlgebraMismatch("FRT algebra has no *-structure here");
    return star_[static_cast<unsigned char>(c)];
}

std::string Alphabet::name(char c) const {
    const GenId& g = gen(c);
    auto ij = [&](int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; };
    switch (g.kind) {
        case GenKind::X: return "X" + ij(g.row, g.col);
        case GenKind::Z: return "Z" + ij(g.row, g.col);
        case GenKind::T: return g.row == g.col ? "T[" + std::to_string(g.row) + "]" : "T" + ij(g.row, g.col);
        case GenKind::Tinv: return "Tinv[" + std::to_string(g.row) + "]";
        case GenKind::Tstar: return "T*" + ij(g.row, g.col);
    }
    return "?";
}

int Alphabet::tri_plain(int a, int b) const {
    if (a > b) return -1;
    return static_cast<unsigned char>(code({AlgebraKind::TRI, GenKind::T, a, b}));
}

int Alphabet::tri_star(int a, int b) const {
    if (a > b) return -1;
    if (a == b) return tri_diag(a);
    return static_cast<unsigned char>(code({AlgebraKind::TRI, GenKind::Tstar, a, b}));
}

int Alphabet::tri_diag(int a, bool inverse) const {
    return static_cast<unsigned char>(code({AlgebraKind::TRI, inverse ? GenKind::Tinv : GenKind::T, a, a}));
}

bool Alphabet::is_plain(char c) const {
    const GenId& g = gen(c);
    return g.kind == GenKind::T && g.row < g.col;
}
bool Alphabet::is_diag(char c) const {
    const GenId& g = gen(c);
    return (g.kind == GenKind::T && g.row == g.col) || g.kind == GenKind::Tinv;
}
bool Alphabet::is_star(char c) const { return gen(c).kind == GenKind::Tstar; }

// ---------------------------------------------------------------------------

NCPoly NCPoly::constant(AlgebraKind alg, int N, const LaurentScalar& c) {
    NCPoly p(alg, N);
    p.add_term(Word(), c);
    return p;
}

NCPoly NCPoly::generator(const Alphabet& A, const GenId& g) {
    NCPoly p(A.kind(), A.N());
    p.add_term(Word(1, A.code(g)), LaurentScalar(1));
    return p;
}

NCPoly NCPoly::monomial(AlgebraKind alg, int N, const Word& w, const LaurentScalar& c) {
    NCPoly p(alg, N);
    p.add_term(w, c);
    return p;
}

int NCPoly::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.size()));
    return d;
}

void NCPoly::add_term(const Word& w, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::with_extra_denom(int k) const {
    NCPoly r = *this;
    r.denom_ += k;
    return r;
}

static LaurentScalar qq_power(int k) {
    LaurentScalar r(1);
    for (int i = 0; i < k; ++i) r *= q_minus_qinv();
    return r;
}

NCPoly NCPoly::raised_to_denom(int d) const {
    if (d < denom_) throw DomainError("cannot lower the denominator power");
    if (d == denom_) return *this;
    NCPoly r(alg_, N_);
    r.denom_ = d;
    LaurentScalar f = qq_power(d - denom_);
    for (const auto& [w, c] : terms_) r.add_term(w, c * f);
    return r;
}

void NCPoly::check_compatible(const NCPoly& b) const {
    if (alg_ != b.alg_ || N_ != b.N_) throw AlgebraMismatch("polynomials from different algebras");
}

NCPoly& NCPoly::operator+=(const NCPoly& b) {
    check_compatible(b);
    if (b.denom_ > denom_) *this = raised_to_denom(b.denom_);
    const NCPoly& bb = b.denom_ < denom_ ? b.raised_to_denom(denom_) : b;
    for (const auto& [w, c] : bb.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) {
    return *this += LaurentScalar(-1) * b;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.check_compatible(b);
    NCPoly r(a.alg_, a.N_);
    r.denom_ = a.denom_ + b.denom_;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

NCPoly operator*(const LaurentScalar& c, const NCPoly& p) {
    NCPoly r(p.alg_, p.N_);
    r.denom_ = p.denom_;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : p.terms_) r.terms_.emplace(w, c * x);
    return r;
}

NCPoly NCPoly::star(const Alphabet& A) const {
    if (A.kind() != alg_ || A.N() != N_) throw AlgebraMismatch("alphabet does not match polynomial");
    NCPoly r(alg_, N_);
    r.denom_ = denom_;
    for (const auto& [w, c] : terms_) {
        Word s(w.rbegin(), w.rend());
        for (auto& ch : s) ch = A.star(ch);
        r.add_term(s, c.conj());
    }
    return r;
}

std::string NCPoly::to_string(const Alphabet& A) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Word, LaurentScalar>*> v;
    for (const auto& t : terms_) v.push_back(&t);
    std::sort(v.begin(), v.end(), [](auto* x, auto* y) {
        if (x->first.size() != y->first.size()) return x->first.size() < y->first.size();
        return std::lexicographical_compare(x->first.begin(), x->first.end(), y->first.begin(), y->first.end(),
                                            [](char p, char q) { return static_cast<unsigned char>(p) < static_cast<unsigned char>(q); });
    });
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " + ";
        s += "(" + rea::to_string(v[i]->second) + ")";
        for (char c : v[i]->first) s += "*" + A.name(c);
    }
    if (denom_ != 0) s = "(" + s + ")*(q - q^-1)^" + std::to_string(-denom_);
    return s;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.alg_ != b.alg_ || a.N_ != b.N_) return false;
    if (a.denom_ != b.denom_) {
        int d = std::max(a.denom_, b.denom_);
        return a.raised_to_denom(d) == b.raised_to_denom(d);
    }
    return a.terms_ == b.terms_;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

}  // namespace rea
