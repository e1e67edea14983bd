#pragma once

#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "gmr/ordering.hpp"
#include "gmr/word.hpp"

namespace gmr {

struct Rule {
    Word lhs;
    Word rhs;
    bool operator==(const Rule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// A string-rewriting system together with the ordering that orients it.
// Systems assembled from structural data (extension presentations) are
// convergent by construction and may skip the orientation check.
class SemiThueSystem {
public:
    SemiThueSystem(Alphabet alpha, std::vector<Rule> rules, OrderingSpec ord,
                   bool oriented_externally = false)
        : alpha_(std::move(alpha)), rules_(std::move(rules)), ord_(ord),
          oriented_externally_(oriented_externally) {
        for (const Rule& r : rules_) {
            if (!r.lhs.alphabet().same(alpha_) || !r.rhs.alphabet().same(alpha_))
                throw error("semi-thue system: rule over a different alphabet");
            if (r.lhs.empty())
                throw error("semi-thue system: empty left hand side");
            if (!oriented_externally_ && compare_words(r.lhs, r.rhs, ord_) <= 0)
                throw error("semi-thue system: rule '" + r.lhs.str() + " -> " + r.rhs.str() +
                            "' not oriented by " + ord_.str());
        }
        max_lhs_ = 0;
        for (const Rule& r : rules_)
            if (r.lhs.length() > max_lhs_) max_lhs_ = r.lhs.length();
    }

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const OrderingSpec& ordering() const { return ord_; }
    std::size_t max_lhs_length() const { return max_lhs_; }
    bool oriented_externally() const { return oriented_externally_; }

private:
    Alphabet alpha_;
    std::vector<Rule> rules_;
    OrderingSpec ord_;
    bool oriented_externally_;
    std::size_t max_lhs_ = 0;
};

namespace detail {

// Leftmost reduction on a raw letter sequence. After a rewrite at position i
// the prefix up to i is unchanged and was irreducible, so scanning resumes at
// i - (max lhs length - 1).
inline void sts_normalize_inplace(std::vector<Letter>& w, const SemiThueSystem& T) {
    const auto& rules = T.rules();
    if (rules.empty()) return;
    const std::size_t maxl = T.max_lhs_length();
    std::size_t pos = 0;
    while (pos < w.size()) {
        bool rewrote = false;
        for (const Rule& r : rules) {
            const auto& l = r.lhs.letters();
            if (l.size() > w.size() - pos) continue;
            bool match = true;
            for (std::size_t k = 0; k < l.size(); ++k)
                if (w[pos + k] != l[k]) { match = false; break; }
            if (!match) continue;
            const auto& rr = r.rhs.letters();
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos),
                    w.begin() + static_cast<std::ptrdiff_t>(pos + l.size()));
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), rr.begin(), rr.end());
            pos = (pos + 1 >= maxl) ? pos + 1 - maxl : 0;
            rewrote = true;
            break;
        }
        if (!rewrote) ++pos;
    }
}

} // namespace detail

// Irreducible descendant of w under leftmost reduction.
inline Word sts_normalform(const Word& w, const SemiThueSystem& T) {
    if (!w.alphabet().same(T.alphabet()))
        throw error("sts_normalform: alphabet mismatch");
    std::vector<Letter> ls = w.letters();
    detail::sts_normalize_inplace(ls, T);
    return Word(T.alphabet(), std::move(ls));
}

inline bool sts_irreducible(const Word& w, const SemiThueSystem& T) {
    for (const Rule& r : T.rules())
        if (find_factor(w.letters(), r.lhs.letters()) != std::string::npos) return false;
    return true;
}

// All critical pairs of T:
//   overlaps    x l1 = l2 y with 0 < |x| < |l2|   ->  (x r1, r2 y)
//   inclusions  l1 = x l2 y                       ->  (r1, x r2 y)
// Deduplicated, in rule-listing order.
inline std::vector<std::pair<Word, Word>> sts_critical_pairs(const SemiThueSystem& T) {
    std::vector<std::pair<Word, Word>> out;
    auto push = [&out](Word a, Word b) {
        std::pair<Word, Word> p(std::move(a), std::move(b));
        for (const auto& q : out)
            if (q == p) return;
        out.push_back(std::move(p));
    };
    const auto& rules = T.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& l1 = rules[i].lhs;
            const Word& r1 = rules[i].rhs;
            const Word& l2 = rules[j].lhs;
            const Word& r2 = rules[j].rhs;
            // Overlap: a proper nonempty suffix of l2 is a prefix of l1.
            for (std::size_t k = 1; k < l2.length(); ++k) {
                const Word tail = suffix_of(l2, l2.length() - k); // drop first k letters
                if (tail.length() > l1.length()) continue; // l1 inside l2: inclusion below
                if (!is_prefix(tail, l1)) continue;
                const Word x = prefix_of(l2, k);
                const Word y = strip_prefix(tail, l1);
                push(concat(x, r1), concat(r2, y));
            }
            // Inclusion: l2 occurs inside l1 (proper factor, i != j or proper).
            if (l2.length() < l1.length() || (l2.length() == l1.length() && i != j)) {
                for (std::size_t pos = 0;; ++pos) {
                    std::size_t at = find_factor(l1.letters(), l2.letters(), pos);
                    if (at == std::string::npos) break;
                    const Word x = prefix_of(l1, at);
                    const Word y = suffix_of(l1, l1.length() - at - l2.length());
                    push(r1, concat(concat(x, r2), y));
                    pos = at;
                    if (at + 1 + l2.length() > l1.length()) break;
                }
            }
        }
    }
    return out;
}

inline bool sts_locally_confluent(const SemiThueSystem& T) {
    for (const auto& [p, q] : sts_critical_pairs(T))
        if (sts_normalform(p, T) != sts_normalform(q, T)) return false;
    return true;
}

// Normalize right hand sides and drop rules whose left hand side the other
// rules reduce.
inline SemiThueSystem sts_interreduce(const SemiThueSystem& T) {
    std::vector<Rule> kept;
    const auto& rules = T.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        std::vector<Rule> others;
        for (std::size_t j = 0; j < rules.size(); ++j)
            if (j != i) others.push_back(rules[j]);
        SemiThueSystem rest(T.alphabet(), others, T.ordering(), T.oriented_externally());
        if (!sts_irreducible(rules[i].lhs, rest)) continue;
        kept.push_back(rules[i]);
    }
    SemiThueSystem keptsys(T.alphabet(), kept, T.ordering(), T.oriented_externally());
    std::vector<Rule> out;
    for (const Rule& r : kept) {
        Rule nr{r.lhs, sts_normalform(r.rhs, keptsys)};
        bool dup = false;
        for (const Rule& s : out)
            if (s == nr) { dup = true; break; }
        if (!dup) out.push_back(std::move(nr));
    }
    return SemiThueSystem(T.alphabet(), std::move(out), T.ordering(), T.oriented_externally());
}

enum class KBStatus { Convergent, FuelExhausted };

struct KBResult {
    SemiThueSystem system;
    KBStatus status;
    std::size_t normalform_calls = 0;
};

// Knuth-Bendix completion. Critical pairs are processed first-in first-out;
// the fuel bounds the number of normal form computations. Pairs whose
// normalized sides are distinct but incomparable raise an error.
inline KBResult knuth_bendix(const SemiThueSystem& T, std::size_t fuel = 100000) {
    if (T.oriented_externally())
        throw error("knuth_bendix: system has no completion ordering");
    SemiThueSystem current = T;
    std::size_t nf_calls = 0;
    while (true) {
        std::vector<Rule> fresh;
        std::deque<std::pair<Word, Word>> pending;
        for (auto& cp : sts_critical_pairs(current)) pending.push_back(std::move(cp));
        while (!pending.empty()) {
            auto [z1, z2] = std::move(pending.front());
            pending.pop_front();
            if (nf_calls + 2 > fuel)
                return {current, KBStatus::FuelExhausted, nf_calls};
            nf_calls += 2;
            Word n1 = sts_normalform(z1, current);
            Word n2 = sts_normalform(z2, current);
            if (n1 == n2) continue;
            int c = compare_words(n1, n2, current.ordering());
            if (c == 0)
                throw error("knuth_bendix: unorientable critical pair '" + n1.str() + "' / '" +
                            n2.str() + "'");
            Rule r = c > 0 ? Rule{n1, n2} : Rule{n2, n1};
            bool dup = false;
            for (const Rule& s : fresh)
                if (s == r) { dup = true; break; }
            if (!dup) fresh.push_back(std::move(r));
        }
        if (fresh.empty()) break;
        std::vector<Rule> all = current.rules();
        for (Rule& r : fresh) all.push_back(std::move(r));
        current = SemiThueSystem(current.alphabet(), std::move(all), current.ordering());
    }
    return {sts_interreduce(current), KBStatus::Convergent, nf_calls};
}

} // namespace gmr
