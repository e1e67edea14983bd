#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gmr/alphabet.hpp"

namespace gmr {

// A finite word over an alphabet; the empty word is the monoid identity.
class Word {
public:
    Word() = default;
    explicit Word(Alphabet a) : alpha_(std::move(a)) {}
    Word(Alphabet a, std::vector<Letter> ls) : alpha_(std::move(a)), letters_(std::move(ls)) {
        for (Letter l : letters_)
            if (l < 0 || static_cast<std::size_t>(l) >= alpha_.size())
                throw error("word: letter outside alphabet");
    }

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter at(std::size_t i) const { return letters_[i]; }

    // Last letter; only meaningful on nonempty words.
    Letter last() const {
        if (letters_.empty()) throw error("word: last letter of the empty word");
        return letters_.back();
    }

    bool operator==(const Word& o) const {
        return alpha_.same(o.alpha_) && letters_ == o.letters_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        bool spaced = false;
        for (Letter l : letters_)
            if (alpha_.name(l).size() > 1) spaced = true;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (spaced && i) out += ' ';
            out += alpha_.name(letters_[i]);
        }
        return out;
    }

private:
    Alphabet alpha_;
    std::vector<Letter> letters_;
};

inline Word concat(const Word& u, const Word& v) {
    if (!u.alphabet().same(v.alphabet()))
        throw error("concat: alphabet mismatch");
    std::vector<Letter> ls = u.letters();
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet(), std::move(ls));
}

inline bool is_prefix(const Word& u, const Word& v) {
    if (u.length() > v.length()) return false;
    return std::equal(u.letters().begin(), u.letters().end(), v.letters().begin());
}

inline bool is_suffix(const Word& u, const Word& v) {
    if (u.length() > v.length()) return false;
    return std::equal(u.letters().rbegin(), u.letters().rend(), v.letters().rbegin());
}

// v with the prefix u removed; caller guarantees is_prefix(u, v).
inline Word strip_prefix(const Word& u, const Word& v) {
    return Word(v.alphabet(), std::vector<Letter>(v.letters().begin() + static_cast<std::ptrdiff_t>(u.length()),
                                                  v.letters().end()));
}

inline Word prefix_of(const Word& w, std::size_t n) {
    return Word(w.alphabet(), std::vector<Letter>(w.letters().begin(),
                                                  w.letters().begin() + static_cast<std::ptrdiff_t>(n)));
}

inline Word suffix_of(const Word& w, std::size_t n) {
    return Word(w.alphabet(), std::vector<Letter>(w.letters().end() - static_cast<std::ptrdiff_t>(n),
                                                  w.letters().end()));
}

// inv(λ) = λ, inv(wa) = ι(a) inv(w).
inline Word formal_inverse(const Word& w) {
    if (!w.alphabet().has_involution())
        throw error("formal_inverse: alphabet has no involution");
    std::vector<Letter> ls;
    ls.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        ls.push_back(w.alphabet().inverse_letter(*it));
    return Word(w.alphabet(), std::move(ls));
}

// First position where `pat` occurs as a factor of `w`, or npos.
inline std::size_t find_factor(const std::vector<Letter>& w, const std::vector<Letter>& pat,
                               std::size_t from = 0) {
    if (pat.empty() || pat.size() > w.size()) return std::string::npos;
    for (std::size_t i = from; i + pat.size() <= w.size(); ++i) {
        if (std::equal(pat.begin(), pat.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
            return i;
    }
    return std::string::npos;
}

} // namespace gmr
