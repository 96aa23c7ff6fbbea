#include "rea/rewrite.hpp"

#include <omp.h>

#include "rea/braid.hpp"

namespace rea {

namespace {

// Builds a word from codes; an empty optional means one factor vanishes.
std::optional<Word> make_word(std::initializer_list<int> codes) {
    Word w;
    for (int c : codes) {
        if (c < 0) return std::nullopt;
        w.push_back(static_cast<char>(c));
    }
    return w;
}

void push(std::vector<RuleTerm>& rhs, const LaurentScalar& c, std::optional<Word> w) {
    if (w && !c.is_zero()) rhs.push_back({c, *w});
}

}  // namespace

RewriteSystem::RewriteSystem(Alphabet a) : alphabet_(std::move(a)) {
    G_ = static_cast<size_t>(alphabet_.size());
    rules_.resize(G_ * G_);
}

void RewriteSystem::set_rule(int x, int y, std::vector<RuleTerm> rhs) {
    rules_[static_cast<size_t>(x) * G_ + static_cast<size_t>(y)] = std::move(rhs);
}

bool RewriteSystem::is_normal(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (rule(w[i], w[i + 1])) return false;
    return true;
}

size_t RewriteSystem::rule_count() const {
    size_t n = 0;
    for (const auto& r : rules_) n += r.has_value();
    return n;
}

RewriteSystem RewriteSystem::frt(int N) {
    RewriteSystem s{Alphabet(AlgebraKind::FRT, N)};
    const Alphabet& A = s.alphabet_;
    auto X = [&](int a, int b) { return static_cast<int>(static_cast<unsigned char>(A.code({AlgebraKind::FRT, GenKind::X, a, b}))); };
    const LaurentScalar qinv = qpow(-1);
    for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    if (X(k, l) <= X(i, j)) continue;
                    // Out-of-order pair X_kl X_ij with (k,l) > (i,j).
                    std::vector<RuleTerm> rhs;
                    if (k == i) {
                        push(rhs, qinv, make_word({X(i, j), X(i, l)}));
                    } else if (l == j) {
                        push(rhs, qinv, make_word({X(i, j), X(k, j)}));
                    } else if (l < j) {
                        push(rhs, LaurentScalar(1), make_word({X(i, j), X(k, l)}));
                    } else {
                        push(rhs, LaurentScalar(1), make_word({X(i, j), X(k, l)}));
                        push(rhs, -q_minus_qinv(), make_word({X(i, l), X(k, j)}));
                    }
                    s.set_rule(X(k, l), X(i, j), std::move(rhs));
                }
    return s;
}

RewriteSystem RewriteSystem::tri(int N, std::vector<int> eps) {
    if (static_cast<int>(eps.size()) > N) throw DomainError("eps longer than N");
    for (int e : eps)
        if (e < -1 || e > 1) throw DomainError("eps entries must be -1, 0 or 1");
    eps.resize(static_cast<size_t>(N), 0);
    RewriteSystem s{Alphabet(AlgebraKind::TRI, N)};
    s.eps_ = eps;
    const Alphabet& A = s.alphabet_;
    auto P = [&](int a, int b) { return A.tri_plain(a, b); };
    auto S = [&](int a, int b) { return A.tri_star(a, b); };
    auto D = [&](int a, bool inv = false) { return A.tri_diag(a, inv); };
    auto E = [&](int a, int b) { return LaurentScalar(eps_interval(eps, a, b)); };
    const LaurentScalar one(1), q = qpow(1), qinv = qpow(-1);
    const LaurentScalar one_m_q2 = LaurentScalar(1) - qpow(2);

    // Rules among plain generators T_kl T_ij, (k,l) > (i,j), both strictly upper.
    auto plain_rule = [&](int k, int l, int i, int j) {
        std::vector<RuleTerm> rhs;
        if (k == i) {
            push(rhs, qinv, make_word({P(i, j), P(i, l)}));
        } else if (l == j) {
            push(rhs, qinv, make_word({P(i, j), P(k, j)}));
        } else if (l < j) {
            push(rhs, one, make_word({P(i, j), P(k, l)}));
        } else {
            push(rhs, one, make_word({P(i, j), P(k, l)}));
            push(rhs, -q_minus_qinv(), make_word({P(i, l), P(k, j)}));
        }
        return rhs;
    };
    auto star_word = [&](const Word& w) {
        Word r(w.rbegin(), w.rend());
        for (auto& c : r) c = A.star(c);
        return r;
    };

    std::vector<std::pair<int, int>> upper;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) upper.emplace_back(i, j);

    for (auto [k, l] : upper)
        for (auto [i, j] : upper) {
            if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
            auto rhs = plain_rule(k, l, i, j);
            s.set_rule(P(k, l), P(i, j), rhs);
            // Adjoint rule: T*_ij T*_kl, reversed star order.
            std::vector<RuleTerm> srhs;
            for (auto& t : rhs) srhs.push_back({t.coeff.conj(), star_word(t.word)});
            s.set_rule(S(i, j), S(k, l), std::move(srhs));
        }

    for (int a = 1; a <= N; ++a)
        for (int inv = 0; inv <= 1; ++inv) {
            const int sgn = inv ? -1 : 1;
            // Diagonal past plain: T_a T_kl = q^{d_ak - d_al} T_kl T_a.
            for (auto [k, l] : upper) {
                int e = sgn * ((a == k) - (a == l));
                s.set_rule(D(a, inv), P(k, l), {{qpow(e), *make_word({P(k, l), D(a, inv)})}});
                // Star past diagonal: T*_kl T_a = q^{d_ak - d_al} T_a T*_kl.
                s.set_rule(S(k, l), D(a, inv), {{qpow(e), *make_word({D(a, inv), S(k, l)})}});
            }
            // Diagonal generators commute; T_a T_a^{-1} = 1.
            for (int b = 1; b <= N; ++b)
                for (int binv = 0; binv <= 1; ++binv) {
                    int x = D(a, inv), y = D(b, binv);
                    if (a == b && inv != binv) s.set_rule(x, y, {{one, Word()}});
                    else if (x > y) s.set_rule(x, y, {{one, *make_word({y, x})}});
                }
        }

    // Star past plain: T*_{l i} T_{k j}.
    for (auto [l, i] : upper)
        for (auto [k, j] : upper) {
            std::vector<RuleTerm> rhs;
            if (i != j && k != l) {
                push(rhs, one, make_word({P(k, j), S(l, i)}));
            } else if (i == j && k != l) {
                push(rhs, qinv, make_word({P(k, j), S(l, j)}));
                for (int m = 1; m < j; ++m) push(rhs, qinv * one_m_q2, make_word({P(k, m), S(l, m)}));
            } else if (i != j) {  // k == l
                push(rhs, q, make_word({P(k, j), S(k, i)}));
                for (int m = k + 1; m <= std::min(i, j); ++m)
                    push(rhs, -(one_m_q2 * E(k, m)), make_word({S(m, i), P(m, j)}));
            } else {  // k == l, i == j
                push(rhs, one, make_word({P(k, j), S(k, j)}));
                for (int m = k + 1; m <= j; ++m) push(rhs, -(one_m_q2 * E(k, m)), make_word({S(m, j), P(m, j)}));
                for (int m = k; m < j; ++m) push(rhs, one_m_q2, make_word({P(k, m), S(k, m)}));
            }
            s.set_rule(S(l, i), P(k, j), std::move(rhs));
        }
    return s;
}

// ---------------------------------------------------------------------------

const std::vector<std::pair<Word, LaurentScalar>>& Straightener::times_normal(char x, const Word& u) {
    Word key;
    key.reserve(u.size() + 1);
    key.push_back(x);
    key += u;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<std::pair<Word, LaurentScalar>> out;
    const std::vector<RuleTerm>* r = u.empty() ? nullptr : sys_.rule(x, u[0]);
    if (!r) {
        out.emplace_back(key, LaurentScalar(1));
    } else {
        if (++steps_ > step_bound_) throw NonterminationGuard("straightening exceeded its step bound");
        TermMap acc;
        const Word rest = u.substr(1);
        for (const auto& t : *r) {
            TermMap cur;
            cur.emplace(rest, t.coeff);
            for (auto c = t.word.rbegin(); c != t.word.rend(); ++c) {
                TermMap next;
                for (const auto& [w, cw] : cur)
                    for (const auto& [w2, c2] : times_normal(*c, w)) {
                        auto [pos, inserted] = next.try_emplace(w2, cw * c2);
                        if (!inserted) pos->second += cw * c2;
                    }
                cur.clear();
                for (auto& [w, cw] : next)
                    if (!cw.is_zero()) cur.emplace(w, std::move(cw));
            }
            for (auto& [w, cw] : cur) {
                auto [pos, inserted] = acc.try_emplace(w, cw);
                if (!inserted) pos->second += cw;
            }
        }
        for (auto& [w, cw] : acc)
            if (!cw.is_zero()) out.emplace_back(w, std::move(cw));
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

TermMap Straightener::left_multiply(const Word& m, const TermMap& p) {
    TermMap cur = p;
    for (auto c = m.rbegin(); c != m.rend(); ++c) {
        TermMap next;
        for (const auto& [w, cw] : cur)
            for (const auto& [w2, c2] : times_normal(*c, w)) {
                auto [pos, inserted] = next.try_emplace(w2, cw * c2);
                if (!inserted) pos->second += cw * c2;
            }
        cur.clear();
        for (auto& [w, cw] : next)
            if (!cw.is_zero()) cur.emplace(w, std::move(cw));
    }
    return cur;
}

TermMap Straightener::normal_form(const Word& w) {
    TermMap one;
    one.emplace(Word(), LaurentScalar(1));
    return left_multiply(w, one);
}

NCPoly Straightener::straighten(const NCPoly& p) {
    if (p.algebra() != sys_.algebra() || p.N() != sys_.N()) throw AlgebraMismatch("polynomial does not belong to this rewriting system");
    NCPoly out(p.algebra(), p.N());
    out = out.with_extra_denom(p.denom());
    for (const auto& [w, c] : p.terms()) {
        if (sys_.is_normal(w)) {
            out.add_term(w, c);
            continue;
        }
        for (const auto& [w2, c2] : normal_form(w)) out.add_term(w2, c * c2);
    }
    return out;
}

NCPoly straighten(const NCPoly& p, const RewriteSystem& sys) {
    Straightener st(sys);
    return st.straighten(p);
}

NCPoly straighten_parallel(const NCPoly& p, const RewriteSystem& sys) {
    if (p.algebra() != sys.algebra() || p.N() != sys.N()) throw AlgebraMismatch("polynomial does not belong to this rewriting system");
    std::vector<std::pair<Word, LaurentScalar>> items(p.terms().begin(), p.terms().end());
    const int nthreads = omp_get_max_threads();
    std::vector<NCPoly> partial(static_cast<size_t>(nthreads), NCPoly(p.algebra(), p.N()));
    std::exception_ptr failure;
#pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        Straightener st(sys);
        NCPoly& acc = partial[static_cast<size_t>(tid)];
#pragma omp for schedule(dynamic, 4)
        for (long n = 0; n < static_cast<long>(items.size()); ++n) {
            try {
                const auto& [w, c] = items[static_cast<size_t>(n)];
                for (const auto& [w2, c2] : st.normal_form(w)) acc.add_term(w2, c * c2);
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    NCPoly out(p.algebra(), p.N());
    for (const auto& part : partial) out += part;
    return out.with_extra_denom(p.denom());
}

}  // namespace rea
