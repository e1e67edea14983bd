#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gmr/presentation.hpp"

namespace gmr {

// Exact rational coefficients.
using Rat = mpq_class;

// An element of the monoid ring K[M]: a finite formal sum of monoid elements
// with nonzero rational coefficients, kept sorted with the largest term
// first. The zero polynomial has no terms and no head.
class Polynomial {
public:
    using Term = std::pair<MonoidElement, Rat>;

    Polynomial() = default;
    explicit Polynomial(Presentation p) : pres_(std::move(p)) {}

    Polynomial(Presentation p, std::vector<Term> terms) : pres_(std::move(p)) {
        for (auto& t : terms) add_term(std::move(t.first), std::move(t.second));
    }

    static Polynomial zero(Presentation p) { return Polynomial(std::move(p)); }

    static Polynomial monomial(const MonoidElement& m, Rat coeff) {
        Polynomial r(m.home());
        r.add_term(m, std::move(coeff));
        return r;
    }

    const Presentation& home() const { return pres_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const MonoidElement& head_term() const {
        require_nonzero("head term");
        return terms_.front().first;
    }
    const Rat& head_coeff() const {
        require_nonzero("head coefficient");
        return terms_.front().second;
    }

    // RED(p) = p - HM(p)
    Polynomial reduct() const {
        require_nonzero("reduct");
        Polynomial r(pres_);
        r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        const Rat c = head_coeff();
        for (auto& t : r.terms_) t.second /= c;
        return r;
    }

    Rat coeff_of(const MonoidElement& m) const {
        for (const auto& t : terms_)
            if (t.first == m) return t.second;
        return Rat(0);
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Rat& c = terms_[i].second;
            Rat a = c;
            if (i == 0) {
                if (c < 0) { out += "- "; a = -c; }
            } else {
                out += c < 0 ? " - " : " + ";
                if (c < 0) a = -c;
            }
            const bool unit = a == 1;
            if (!unit) out += a.get_str();
            if (terms_[i].first.is_identity()) {
                if (unit) out += "1";
            } else {
                if (!unit) out += "*";
                std::string w = terms_[i].first.word().str();
                for (char& ch : w)
                    if (ch == ' ') ch = '*';
                out += w;
            }
        }
        return out;
    }

    // Insert/merge a single monomial, dropping it if the coefficient
    // cancels. Linear in the number of terms.
    void add_term(MonoidElement m, Rat c) {
        if (c == 0) return;
        if (!pres_.valid()) pres_ = m.home();
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [this](const Term& t, const MonoidElement& key) {
                                       return pres_.compare(t.first, key) > 0;
                                   });
        if (it != terms_.end() && it->first == m) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.insert(it, Term(std::move(m), std::move(c)));
        }
    }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw error(std::string(what) + " of the zero polynomial");
    }

    Presentation pres_;
    std::vector<Term> terms_;
};

// a·p + b·q with zero coefficients dropped.
inline Polynomial linear(const Rat& a, const Polynomial& p, const Rat& b, const Polynomial& q) {
    if (!p.home().same(q.home()) && p.home().valid() && q.home().valid())
        throw error("linear: presentation mismatch");
    Polynomial r(p.home().valid() ? p.home() : q.home());
    for (const auto& t : p.terms()) r.add_term(t.first, a * t.second);
    for (const auto& t : q.terms()) r.add_term(t.first, b * t.second);
    return r;
}

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return linear(1, p, 1, q); }
inline Polynomial sub(const Polynomial& p, const Polynomial& q) { return linear(1, p, -1, q); }
inline Polynomial scale(const Rat& a, const Polynomial& p) {
    return linear(a, p, 0, Polynomial::zero(p.home()));
}

// p ∘ w: products of colliding terms are summed and may vanish.
inline Polynomial right_mul(const Polynomial& p, const MonoidElement& w) {
    const Presentation& P = p.home();
    Polynomial r(P);
    for (const auto& t : p.terms()) r.add_term(P.mul(t.first, w), t.second);
    return r;
}

inline Polynomial left_mul(const MonoidElement& w, const Polynomial& p) {
    const Presentation& P = p.home();
    Polynomial r(P);
    for (const auto& t : p.terms()) r.add_term(P.mul(w, t.first), t.second);
    return r;
}

enum class PolyCmp { Less, Equal, Greater, Incomparable };

// The recursive head ordering on K[M]: p > q when HT(p) > HT(q), or the head
// monomials agree and RED(p) > RED(q). Well-founded but not total.
inline PolyCmp compare_poly(const Polynomial& p, const Polynomial& q) {
    // Walk past the common prefix of equal monomials.
    std::size_t i = 0, j = 0;
    const auto& ta = p.terms();
    const auto& tb = q.terms();
    while (i < ta.size() && j < tb.size()) {
        if (ta[i].first == tb[j].first && ta[i].second == tb[j].second) { ++i; ++j; continue; }
        const int c = p.home().compare(ta[i].first, tb[j].first);
        if (c > 0) return PolyCmp::Greater;
        if (c < 0) return PolyCmp::Less;
        return PolyCmp::Incomparable; // same head term, different coefficient
    }
    if (i == ta.size() && j == tb.size()) return PolyCmp::Equal;
    return i < ta.size() ? PolyCmp::Greater : PolyCmp::Less;
}

} // namespace gmr
