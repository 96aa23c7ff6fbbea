// Noncommutative polynomials in indexed generators with exact coefficients.
//
// A monomial is a word over a small alphabet; each letter is one byte holding
// a generator code assigned by Alphabet.  Codes are chosen so that the normal
// form of every rewriting system is "codes non-decreasing".
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rea/exactq.hpp"

namespace rea {

enum class AlgebraKind { FRT, TRI, REA };
enum class GenKind { X, T, Tinv, Tstar, Z };

// Generator identity.  For TRI, kind T with row == col is the diagonal T_i,
// Tinv is its inverse, Tstar needs row < col (diagonal generators are
// self-adjoint).
struct GenId {
    AlgebraKind alg;
    GenKind kind;
    int row, col;
    friend bool operator==(const GenId&, const GenId&) = default;
};

using Word = std::string;

// Generator code tables for one algebra and size N.
class Alphabet {
public:
    Alphabet(AlgebraKind alg, int N);

    AlgebraKind kind() const { return alg_; }
    int N() const { return N_; }
    int size() const { return static_cast<int>(gens_.size()); }

    char code(const GenId& g) const;
    const GenId& gen(char c) const { return gens_[static_cast<unsigned char>(c)]; }
    // Code of the adjoint generator; throws for FRT (no *-structure).
    char star(char c) const;
    std::string name(char c) const;

    // TRI helpers: code of T_ab / T*_ab with the zero-row convention.  Returns
    // -1 when the entry vanishes (a > b); a == b gives the diagonal T_a.
    int tri_plain(int a, int b) const;
    int tri_star(int a, int b) const;
    int tri_diag(int a, bool inverse = false) const;

    bool is_plain(char c) const;
    bool is_diag(char c) const;
    bool is_star(char c) const;

private:
    AlgebraKind alg_;
    int N_;
    std::vector<GenId> gens_;
    std::vector<int> index_;  // lookup table keyed by (kind,row,col)
    std::vector<char> star_;
    int key(GenKind k, int r, int c) const { return (static_cast<int>(k) * (N_ + 1) + r) * (N_ + 1) + c; }
};

struct WordHash {
    size_t operator()(const Word& w) const noexcept { return std::hash<std::string>()(w); }
};

using TermMap = std::unordered_map<Word, LaurentScalar, WordHash>;

// p = (sum_w c_w w) * (q - q^{-1})^{-denom}.  The explicit denominator keeps
// coefficients polynomial when a formula carries powers of (q - q^{-1})^{-1}.
class NCPoly {
public:
    NCPoly(AlgebraKind alg, int N) : alg_(alg), N_(N) {}
    static NCPoly constant(AlgebraKind alg, int N, const LaurentScalar& c);
    static NCPoly generator(const Alphabet& A, const GenId& g);
    static NCPoly monomial(AlgebraKind alg, int N, const Word& w, const LaurentScalar& c);

    AlgebraKind algebra() const { return alg_; }
    int N() const { return N_; }
    int denom() const { return denom_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int degree() const;

    void add_term(const Word& w, const LaurentScalar& c);
    // Multiplies by (q - q^{-1})^{-k}.
    NCPoly with_extra_denom(int k) const;
    // Re-expresses with a larger denominator power (terms multiplied through).
    NCPoly raised_to_denom(int d) const;

    NCPoly& operator+=(const NCPoly& b);
    NCPoly& operator-=(const NCPoly& b);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const LaurentScalar& c, const NCPoly& p);
    friend NCPoly operator-(const NCPoly& a) { return LaurentScalar(-1) * a; }

    // Adjoint: reverses words, stars letters, conjugates coefficients.
    NCPoly star(const Alphabet& A) const;

    // Deterministic text: terms sorted by (degree, word).
    std::string to_string(const Alphabet& A) const;

    // Structural equality (only meaningful for straightened polynomials).
    friend bool operator==(const NCPoly& a, const NCPoly& b);

private:
    AlgebraKind alg_;
    int N_;
    int denom_ = 0;
    TermMap terms_;
    void check_compatible(const NCPoly& b) const;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

}  // namespace rea
