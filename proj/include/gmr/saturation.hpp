#pragma once

#include <algorithm>
#include <deque>
#include <limits>

#include "gmr/reduction.hpp"

namespace gmr {

enum class SatStatus { Complete, FuelExhausted };

struct SaturationResult {
    std::vector<Polynomial> polys;
    SatStatus status = SatStatus::Complete;
    std::size_t steps = 0; // multiples examined
};

// C(t): cofactors w such that t·w overlaps a rule, tw ≡ t1 t2 w ≡ t1 l with
// t2 ≠ λ. Finite and deduplicated; empty for the empty word.
inline std::vector<Word> prefix_overlaps(const MonoidElement& t, const Presentation& P) {
    if (P.is_commutative_based())
        throw error("prefix_overlaps: word presentation required");
    std::vector<Word> out;
    const Word& w = t.word();
    for (const Rule& r : P.sts().rules()) {
        const Word& l = r.lhs;
        for (std::size_t k = 1; k < l.length(); ++k) {
            // nonempty suffix t2 of t of length k equal to a proper prefix of l
            if (k > w.length()) break;
            if (!std::equal(l.letters().begin(), l.letters().begin() + static_cast<std::ptrdiff_t>(k),
                            w.letters().end() - static_cast<std::ptrdiff_t>(k)))
                continue;
            Word cof = suffix_of(l, l.length() - k);
            if (std::find(out.begin(), out.end(), cof) == out.end()) out.push_back(std::move(cof));
        }
    }
    std::sort(out.begin(), out.end(), [&P](const Word& a, const Word& b) {
        return P.compare_words_raw(a, b) < 0;
    });
    return out;
}

// Commutative analogue: cofactors lcm(t, l) - t for rules whose left side
// genuinely overlaps t.
inline std::vector<ExpVec> comm_overlaps(const MonoidElement& t, const Presentation& P) {
    std::vector<ExpVec> out;
    const ExpVec v = P.to_expvec(t.word());
    for (const CommRule& r : P.comm_system().rules()) {
        const ExpVec lcm = expvec_lcm(v, r.lhs);
        if (lcm == expvec_add(v, r.lhs)) continue; // disjoint supports
        ExpVec cof = expvec_sub(lcm, v);
        if (std::find(out.begin(), out.end(), cof) == out.end()) out.push_back(std::move(cof));
    }
    std::sort(out.begin(), out.end(),
              [](const ExpVec& a, const ExpVec& b) { return compare_expvec_deglex(a, b) < 0; });
    return out;
}

namespace detail {

inline bool one_step_to_zero_by(const Polynomial& p, const Polynomial& f, ReductionMode mode) {
    if (p.is_zero()) return true;
    auto st = reduce_step(p, f, mode);
    return st && st->at == p.head_term() && st->result.is_zero();
}

// Shared worklist for prefix and commutative saturation. With `simplify`,
// members that a newly found multiple covers in one step are dropped.
inline SaturationResult saturate_worklist(const Polynomial& p, ReductionMode mode,
                                          std::size_t fuel, bool simplify) {
    const Presentation& P = p.home();
    SaturationResult res;
    res.polys.push_back(p.monic());
    std::deque<Polynomial> queue{p.monic()};
    while (!queue.empty()) {
        const Polynomial q = std::move(queue.front());
        queue.pop_front();
        std::vector<MonoidElement> cofs;
        if (mode == ReductionMode::Prefix) {
            for (const Word& w : prefix_overlaps(q.head_term(), P)) cofs.push_back(P.element(w));
        } else {
            for (const ExpVec& v : comm_overlaps(q.head_term(), P))
                cofs.push_back(P.element_from_expvec(v));
        }
        for (const auto& w : cofs) {
            if (res.steps++ >= fuel) {
                res.status = SatStatus::FuelExhausted;
                return res;
            }
            Polynomial mult = right_mul(q, w).monic();
            if (mult.is_zero()) continue;
            if (one_step_to_zero(mult, res.polys, mode)) continue;
            if (simplify) {
                std::vector<Polynomial> kept;
                for (auto& s : res.polys)
                    if (!one_step_to_zero_by(s, mult, mode)) kept.push_back(std::move(s));
                res.polys = std::move(kept);
            }
            res.polys.push_back(mult);
            queue.push_back(std::move(mult));
        }
    }
    return res;
}

} // namespace detail

// Decidable saturation test: every critical multiple f∘w, w ∈ C(HT(f)),
// must vanish or reduce to zero in one step inside F.
inline bool saturated_check(std::span<const Polynomial> F, ReductionMode mode) {
    if (mode != ReductionMode::Prefix && mode != ReductionMode::Commutative)
        throw error("saturated_check: prefix or commutative mode required");
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        const Presentation& P = f.home();
        detail::check_mode(P, mode);
        std::vector<MonoidElement> cofs;
        if (mode == ReductionMode::Prefix) {
            for (const Word& w : prefix_overlaps(f.head_term(), P)) cofs.push_back(P.element(w));
        } else {
            for (const ExpVec& v : comm_overlaps(f.head_term(), P))
                cofs.push_back(P.element_from_expvec(v));
        }
        for (const auto& w : cofs) {
            const Polynomial mult = right_mul(f, w);
            if (mult.is_zero()) continue;
            if (!one_step_to_zero(mult, F, mode)) return false;
        }
    }
    return true;
}

// Prefix saturation by the C(t)-overlap worklist. Semidecision: finite
// prefix saturating sets need not exist, hence the fuel.
inline SaturationResult prefix_saturate(const Polynomial& p, std::size_t fuel = 10000) {
    if (p.is_zero()) throw error("prefix_saturate: zero polynomial");
    detail::check_mode(p.home(), ReductionMode::Prefix);
    if (p.term_count() == 1 && p.home().is_group()) {
        // α·t generates the unit ideal
        SaturationResult res;
        res.polys.push_back(Polynomial::monomial(p.home().identity(), 1));
        return res;
    }
    return detail::saturate_worklist(p, ReductionMode::Prefix, fuel, /*simplify=*/false);
}

// Commutative saturation with simplification. The fuel is a safety net:
// some convergent systems (e.g. {ab -> bc}) admit polynomials with no finite
// commutatively saturating set at all, and the worklist then runs forever.
inline SaturationResult comm_saturate(const Polynomial& p, std::size_t fuel = 100000) {
    if (p.is_zero()) throw error("comm_saturate: zero polynomial");
    detail::check_mode(p.home(), ReductionMode::Commutative);
    return detail::saturate_worklist(p, ReductionMode::Commutative, fuel, /*simplify=*/true);
}

struct CanAcan {
    MonoidElement sigma1;
    MonoidElement sigma2;
    Polynomial can;
    Polynomial acan;
};

// The two canonical inverse-suffix shifts of p in free, plain and
// context-free group rings: σ1 keeps the head in place as long as possible,
// σ2 is the smallest shift past the flip (σ2 = σ1 when no flip exists).
inline CanAcan can_acan(const Polynomial& p) {
    if (p.is_zero()) throw error("can_acan: zero polynomial");
    const Presentation& P = p.home();
    const auto cls = P.cls();
    if (cls != StructureClass::FreeGroup && cls != StructureClass::PlainGroup &&
        cls != StructureClass::ContextFreeGroup)
        throw error("can_acan: free, plain or context-free group required");

    const MonoidElement ht = p.head_term();
    Word free_part = ht.word();
    if (cls == StructureClass::ContextFreeGroup) free_part = P.split_extension(ht.word()).second;

    if (p.term_count() == 1 && cls != StructureClass::ContextFreeGroup) {
        const MonoidElement sigma = P.inverse(ht);
        const Polynomial lam = Polynomial::monomial(P.identity(), 1);
        return {sigma, sigma, lam, lam};
    }

    // u_k = inverse of the length-k suffix of the (free part of the) head
    std::vector<MonoidElement> shifts;
    for (std::size_t k = 0; k <= free_part.length(); ++k)
        shifts.push_back(P.inverse(P.element(suffix_of(free_part, k))));

    std::size_t k1 = 0; // largest stable shift
    std::optional<std::size_t> k2; // smallest flipping shift
    for (std::size_t k = 0; k <= free_part.length(); ++k) {
        const Polynomial q = right_mul(p, shifts[k]);
        const bool stable = !q.is_zero() && q.head_term() == P.mul(ht, shifts[k]);
        if (stable) k1 = k;
        else if (!k2) k2 = k;
    }
    const MonoidElement s1 = shifts[k1];
    const MonoidElement s2 = k2 ? shifts[*k2] : s1;
    return {s1, s2, right_mul(p, s1), right_mul(p, s2)};
}

// Sat_p over plain groups: the mates together with their length-preserving
// one-letter extensions from length-preserving rules.
inline SaturationResult plain_sat(const Polynomial& p) {
    if (p.is_zero()) throw error("plain_sat: zero polynomial");
    const Presentation& P = p.home();
    if (P.cls() != StructureClass::PlainGroup)
        throw error("plain_sat: plain group presentation required");
    SaturationResult res;
    if (p.term_count() == 1) {
        res.polys.push_back(Polynomial::monomial(P.identity(), 1));
        return res;
    }
    const CanAcan ca = can_acan(p);
    auto push = [&res](Polynomial q) {
        for (const auto& s : res.polys)
            if (s == q) return;
        res.polys.push_back(std::move(q));
    };
    auto extend = [&](const Polynomial& q) {
        push(q);
        const Letter a = q.head_term().word().last();
        for (const Rule& r : P.sts().rules()) {
            if (r.lhs.length() == 2 && r.lhs.at(0) == a && r.rhs.length() == 1) {
                const Letter b = r.lhs.at(1);
                push(right_mul(q, P.element(Word(P.alphabet(), {b}))));
            }
        }
        res.steps += 1;
    };
    extend(ca.can);
    extend(ca.acan);
    return res;
}

// Distinguishing-letter walk: a witness w with HT(p∘w) = t∘w, when the term
// t can be brought to head position at all.
inline std::optional<MonoidElement> qc_bring_to_head(const Polynomial& p, const MonoidElement& t) {
    if (p.is_zero()) throw error("qc_bring_to_head: zero polynomial");
    const Presentation& P = p.home();
    detail::check_mode(P, ReductionMode::QuasiCommutative);
    if (p.coeff_of(t) == 0) throw error("qc_bring_to_head: t is not a term of p");

    const bool ext = P.is_extension();
    auto inner = [&P, ext](const MonoidElement& m) {
        return ext ? P.inner_expvec(P.split_extension(m.word()).second) : P.to_expvec(m.word());
    };
    if (ext) {
        const auto [e1, u1] = P.split_extension(p.head_term().word());
        const auto [e2, u2] = P.split_extension(t.word());
        if (e1 != e2) return std::nullopt;
    }

    Polynomial q = p;
    MonoidElement target = t;
    MonoidElement acc = P.identity();
    const std::size_t n = P.cni_generator_count();
    for (std::size_t round = 0; round <= n; ++round) {
        if (q.head_term() == target) return acc;
        const ExpVec hv = inner(q.head_term());
        const ExpVec tv = inner(target);
        std::size_t d = 0;
        while (d < n && hv.at(d) == tv.at(d)) ++d;
        if (d == n) return std::nullopt; // same inner word, different finite part
        // shift the distinguishing letter's exponent to zero
        std::vector<long long> e(n, 0);
        e[d] = -hv.at(d);
        const ExpVec step(std::move(e), Signedness::Integer);
        const MonoidElement v = ext ? P.element(P.word_from_inner_expvec(step))
                                    : P.element_from_expvec(step);
        q = right_mul(q, v);
        target = P.mul(target, v);
        acc = P.mul(acc, v);
        if (q.is_zero()) return std::nullopt;
        if (inner(q.head_term()).at(d) != inner(target).at(d)) return std::nullopt;
    }
    return std::nullopt;
}

// Quasi-commutative saturation: one tuple-minimal representative for each
// term that reaches head position. The H_t candidate enumeration is capped.
inline SaturationResult qc_saturate(const Polynomial& p, std::size_t candidate_cap = 200000) {
    if (p.is_zero()) throw error("qc_saturate: zero polynomial");
    const Presentation& P = p.home();
    detail::check_mode(P, ReductionMode::QuasiCommutative);
    const bool ext = P.is_extension();
    const std::size_t n = P.cni_generator_count();
    SaturationResult res;

    auto inner = [&P, ext](const MonoidElement& m) {
        return ext ? P.inner_expvec(P.split_extension(m.word()).second) : P.to_expvec(m.word());
    };

    auto push = [&res](Polynomial q) {
        for (const auto& s : res.polys)
            if (s == q) return;
        res.polys.push_back(std::move(q));
    };

    for (const auto& [t, coeff] : p.terms()) {
        (void)coeff;
        auto w = qc_bring_to_head(p, t);
        if (!w) continue;
        Polynomial q = right_mul(p, *w);
        // enumerate H_t = {s : s ≤_tup HT(q)} by ascending total degree
        const ExpVec hv = inner(q.head_term());
        unsigned long long count = 1;
        bool capped = false;
        for (std::size_t i = 0; i < n; ++i) {
            count *= static_cast<unsigned long long>(std::llabs(hv.at(i)) + 1);
            if (count > candidate_cap) { capped = true; break; }
        }
        if (capped) {
            res.status = SatStatus::FuelExhausted;
            push(q.monic());
            continue;
        }
        std::vector<ExpVec> candidates;
        std::vector<long long> cur(n, 0);
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == n) {
                candidates.emplace_back(cur, Signedness::Integer);
                return;
            }
            const long long h = hv.at(idx);
            const long long sign = h >= 0 ? 1 : -1;
            for (long long k = 0; k <= std::llabs(h); ++k) {
                cur[idx] = sign * k;
                self(self, idx + 1);
            }
        };
        rec(rec, 0);
        std::sort(candidates.begin(), candidates.end(), [](const ExpVec& a, const ExpVec& b) {
            if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
            return compare_expvec_syllable(a, b) < 0;
        });
        for (const auto& s : candidates) {
            res.steps += 1;
            Word sw = ext ? P.word_from_inner_expvec(s) : P.expvec_to_word(s);
            MonoidElement target = P.element(sw);
            if (ext) {
                const auto [e, u] = P.split_extension(q.head_term().word());
                if (e >= 0)
                    target = P.mul(P.element(Word(P.alphabet(), {e})), target);
            }
            const MonoidElement ws = P.left_divide(t, target);
            const Polynomial cand = right_mul(p, ws);
            if (cand.is_zero()) continue;
            if (cand.head_term() == target && P.mul(t, ws) == target) {
                q = cand;
                break;
            }
        }
        push(q.monic());
    }
    return res;
}

} // namespace gmr
