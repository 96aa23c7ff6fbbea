// Rewriting systems and the straightening (normal form) engine.
//
// Every system orders generators by code and supplies, for each adjacent pair
// that is out of order, a replacement polynomial.  Normal words are exactly the
// words without such pairs.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rea/ncpoly.hpp"

namespace rea {

struct RuleTerm {
    LaurentScalar coeff;
    Word word;
};

class RewriteSystem {
public:
    // O_q(M_N): relations of the quantum matrix algebra, row-major order.
    static RewriteSystem frt(int N);
    // O_q^eps(T(N)): plain part, diagonal part, starred part.  eps has
    // entries in {-1,0,1}; it is zero-padded to length N.
    static RewriteSystem tri(int N, std::vector<int> eps);

    const Alphabet& alphabet() const { return alphabet_; }
    AlgebraKind algebra() const { return alphabet_.kind(); }
    int N() const { return alphabet_.N(); }
    const std::vector<int>& eps() const { return eps_; }

    // Replacement for the pair (x, y), or nullptr when x y is already normal.
    const std::vector<RuleTerm>* rule(char x, char y) const {
        const auto& r = rules_[static_cast<size_t>(static_cast<unsigned char>(x)) * G_ + static_cast<unsigned char>(y)];
        return r ? &*r : nullptr;
    }
    bool is_normal(const Word& w) const;
    size_t rule_count() const;

private:
    explicit RewriteSystem(Alphabet a);
    Alphabet alphabet_;
    size_t G_;
    std::vector<int> eps_;
    std::vector<std::optional<std::vector<RuleTerm>>> rules_;
    void set_rule(int x, int y, std::vector<RuleTerm> rhs);
};

// Straightening with a memo of "generator times normal word" products.  Not
// thread-safe: give each thread its own Straightener over a shared system.
class Straightener {
public:
    explicit Straightener(const RewriteSystem& sys, uint64_t step_bound = 10'000'000)
        : sys_(sys), step_bound_(step_bound) {}

    NCPoly straighten(const NCPoly& p);
    // Normal form of a single word, as a term map.
    TermMap normal_form(const Word& w);
    // Left multiplication of a normal-form term map by the word m.
    TermMap left_multiply(const Word& m, const TermMap& p);

    const RewriteSystem& system() const { return sys_; }
    uint64_t steps() const { return steps_; }
    size_t memo_size() const { return memo_.size(); }
    void reset_steps() { steps_ = 0; }

private:
    const RewriteSystem& sys_;
    uint64_t step_bound_;
    uint64_t steps_ = 0;
    std::unordered_map<Word, std::vector<std::pair<Word, LaurentScalar>>, WordHash> memo_;

    const std::vector<std::pair<Word, LaurentScalar>>& times_normal(char x, const Word& u);
};

// Serial reference: one Straightener, terms processed in order.
NCPoly straighten(const NCPoly& p, const RewriteSystem& sys);
// OpenMP kernel: terms split across threads, each with a private memo; the
// partial sums are added in a fixed order so the result is identical.
NCPoly straighten_parallel(const NCPoly& p, const RewriteSystem& sys);

}  // namespace rea
