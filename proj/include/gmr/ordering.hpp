#pragma once

#include <span>
#include <string>

#include "gmr/word.hpp"

namespace gmr {

// Word orderings used for completion and for ordering monoid elements.
//
//   Lex      pure lexicographic on the letter precedence (not well-founded
//            as a reduction ordering on its own, provided for completeness)
//   LenLex   length first, then lexicographic; admissible and well-founded
//   Syllable recursive comparison of occurrence counts of the largest
//            letter, then of the decomposition tuples; the tuple is read
//            right-to-left when the status is `right`
enum class OrderKind { Lex, LenLex, Syllable };

struct OrderingSpec {
    OrderKind kind = OrderKind::LenLex;
    bool syllable_right = true;

    static OrderingSpec lex() { return {OrderKind::Lex, true}; }
    static OrderingSpec lenlex() { return {OrderKind::LenLex, true}; }
    static OrderingSpec syllable(bool status_right = true) { return {OrderKind::Syllable, status_right}; }

    std::string str() const {
        switch (kind) {
            case OrderKind::Lex: return "lex";
            case OrderKind::LenLex: return "length-lex";
            case OrderKind::Syllable: return syllable_right ? "syllable-right" : "syllable-left";
        }
        return "?";
    }
};

namespace detail {

using Span = std::span<const Letter>;

// Letter precedence: smaller index = larger letter.
inline int cmp_letter(Letter a, Letter b) {
    if (a == b) return 0;
    return a < b ? 1 : -1;
}

inline int cmp_lex(Span u, Span v) {
    const std::size_t n = u.size() < v.size() ? u.size() : v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp_letter(u[i], v[i])) return c;
    }
    // The definition leaves words where one is a proper prefix of the other
    // incomparable; resolve by length so the comparison stays total.
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;
}

inline int cmp_lenlex(Span u, Span v) {
    if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
    return cmp_lex(u, v);
}

// Syllable comparison over the sub-alphabet whose largest letter is `pivot`.
inline int cmp_syllable(Span u, Span v, Letter pivot, Letter nletters, bool status_right) {
    while (true) {
        if (pivot >= nletters) return 0; // both words are empty here
        std::size_t cu = 0, cv = 0;
        for (Letter l : u) cu += (l == pivot);
        for (Letter l : v) cv += (l == pivot);
        if (cu != cv) return cu < cv ? -1 : 1;
        if (cu == 0) { ++pivot; continue; } // same decomposition, recurse directly
        // Split into cu+1 segments free of the pivot letter.
        auto segment = [pivot](Span w, std::size_t idx) -> Span {
            std::size_t seen = 0, start = 0;
            for (std::size_t i = 0; i <= w.size(); ++i) {
                if (i == w.size() || w[i] == pivot) {
                    if (seen == idx) return w.subspan(start, i - start);
                    ++seen;
                    start = i + 1;
                }
            }
            return w.subspan(0, 0);
        };
        const std::size_t parts = cu + 1;
        for (std::size_t k = 0; k < parts; ++k) {
            const std::size_t idx = status_right ? parts - 1 - k : k;
            if (int c = cmp_syllable(segment(u, idx), segment(v, idx), pivot + 1, nletters, status_right))
                return c;
        }
        return 0;
    }
}

} // namespace detail

// Three-way comparison: negative, zero, positive for u < v, u = v, u > v.
inline int compare_words(const Word& u, const Word& v, const OrderingSpec& spec) {
    if (!u.alphabet().same(v.alphabet()))
        throw error("compare_words: alphabet mismatch");
    detail::Span su(u.letters().data(), u.letters().size());
    detail::Span sv(v.letters().data(), v.letters().size());
    switch (spec.kind) {
        case OrderKind::Lex: return detail::cmp_lex(su, sv);
        case OrderKind::LenLex: return detail::cmp_lenlex(su, sv);
        case OrderKind::Syllable:
            return detail::cmp_syllable(su, sv, 0, static_cast<Letter>(u.alphabet().size()),
                                        spec.syllable_right);
    }
    return 0;
}

} // namespace gmr
