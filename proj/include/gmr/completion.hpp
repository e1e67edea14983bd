#pragma once

#include <deque>

#include "gmr/saturation.hpp"

namespace gmr {

enum class GBStatus { Complete, FuelExhausted };

struct GBStats {
    std::size_t spolys_considered = 0;
    std::size_t reductions = 0;
    std::size_t saturations = 0;
};

struct GBResult {
    std::vector<Polynomial> basis;
    GBStatus status = GBStatus::Complete;
    GBStats stats;
};

// Monic, head-descending, duplicate-free presentation of a basis.
inline std::vector<Polynomial> canonical_basis(std::vector<Polynomial> G) {
    std::vector<Polynomial> out;
    for (auto& g : G) {
        if (g.is_zero()) continue;
        Polynomial m = g.monic();
        bool dup = false;
        for (const auto& h : out)
            if (h == m) dup = true;
        if (!dup) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.home().compare(a.head_term(), b.head_term()) > 0;
    });
    return out;
}

// The s-polynomial of the mode's head overlap, monic when nonzero; absent
// when the heads admit no overlap of the required shape.
//   prefix       HT(p1) ≡ HT(p2)·w
//   commutative  LCM of the head terms lies in the monoid
//   qc           signed lcm of the exponents (equal finite parts)
inline std::optional<Polynomial> spolynomial(const Polynomial& p1, const Polynomial& p2,
                                             ReductionMode mode) {
    if (p1.is_zero() || p2.is_zero()) throw error("spolynomial: zero input");
    const Presentation& P = p1.home();
    if (!P.same(p2.home())) throw error("spolynomial: presentation mismatch");
    detail::check_mode(P, mode);
    switch (mode) {
        case ReductionMode::Prefix: {
            if (!is_prefix(p2.head_term().word(), p1.head_term().word())) return std::nullopt;
            const MonoidElement w =
                P.element(strip_prefix(p2.head_term().word(), p1.head_term().word()));
            Polynomial s = linear(Rat(1) / p1.head_coeff(), p1, Rat(-1) / p2.head_coeff(),
                                  right_mul(p2, w));
            return s.monic();
        }
        case ReductionMode::Commutative: {
            const ExpVec h1 = P.to_expvec(p1.head_term().word());
            const ExpVec h2 = P.to_expvec(p2.head_term().word());
            const ExpVec lcm = expvec_lcm(h1, h2);
            if (!comm_irreducible(lcm, P.comm_system())) return std::nullopt;
            const MonoidElement w1 = P.element_from_expvec(expvec_sub(lcm, h1));
            const MonoidElement w2 = P.element_from_expvec(expvec_sub(lcm, h2));
            Polynomial s = linear(Rat(1) / p1.head_coeff(), right_mul(p1, w1),
                                  Rat(-1) / p2.head_coeff(), right_mul(p2, w2));
            return s.monic();
        }
        case ReductionMode::QuasiCommutative: {
            const bool ext = P.is_extension();
            ExpVec h1(std::vector<long long>{}, Signedness::Integer);
            ExpVec h2 = h1;
            MonoidElement target;
            if (ext) {
                const auto [e1, u1] = P.split_extension(p1.head_term().word());
                const auto [e2, u2] = P.split_extension(p2.head_term().word());
                if (e1 != e2) return std::nullopt;
                h1 = P.inner_expvec(u1);
                h2 = P.inner_expvec(u2);
                auto l = qclcm(h1, h2);
                if (!l) return std::nullopt;
                target = P.element(P.word_from_inner_expvec(*l));
                if (e1 >= 0)
                    target = P.mul(P.element(Word(P.alphabet(), {e1})), target);
            } else {
                h1 = P.to_expvec(p1.head_term().word());
                h2 = P.to_expvec(p2.head_term().word());
                auto l = qclcm(h1, h2);
                if (!l) return std::nullopt;
                target = P.element_from_expvec(*l);
            }
            const MonoidElement w1 = P.left_divide(p1.head_term(), target);
            const MonoidElement w2 = P.left_divide(p2.head_term(), target);
            Polynomial s = linear(Rat(1) / p1.head_coeff(), right_mul(p1, w1),
                                  Rat(-1) / p2.head_coeff(), right_mul(p2, w2));
            return s.monic();
        }
        default:
            throw error("spolynomial: prefix, commutative or quasi-commutative mode required");
    }
}

namespace detail {

struct Fuel {
    std::size_t left;
    bool spend(std::size_t n) {
        if (n >= left) { left = 0; return false; }
        left -= n;
        return true;
    }
};

inline bool known(const std::vector<Polynomial>& G, const Polynomial& q) {
    for (const auto& g : G)
        if (g == q) return true;
    return false;
}

// Normalize every member's reduct against the rest, to a fixed point.
inline std::vector<Polynomial> reduce_tails(std::vector<Polynomial> G, ReductionMode mode) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<Polynomial> rest;
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) rest.push_back(G[j]);
            Polynomial nf = normalform(G[i], rest, mode);
            if (nf != G[i]) {
                G[i] = std::move(nf);
                changed = true;
            }
        }
        std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
    }
    return G;
}

} // namespace detail

// Completion by prefix saturation and prefix s-polynomials; a semidecision
// procedure over general word presentations.
inline GBResult prefix_gb(const std::vector<Polynomial>& F, std::size_t fuel = 200000) {
    GBResult res;
    detail::Fuel budget{fuel};
    std::vector<Polynomial>& G = res.basis;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;

    auto add_saturated = [&](const Polynomial& f) -> bool {
        auto sat = prefix_saturate(f.monic(), budget.left);
        res.stats.saturations += sat.steps;
        if (!budget.spend(sat.steps) || sat.status == SatStatus::FuelExhausted) return false;
        for (auto& q : sat.polys) {
            if (q.is_zero() || detail::known(G, q)) continue;
            for (std::size_t i = 0; i < G.size(); ++i) {
                pairs.emplace_back(i, G.size());
                pairs.emplace_back(G.size(), i);
            }
            G.push_back(std::move(q));
        }
        return true;
    };

    for (const auto& f : F) {
        if (f.is_zero()) continue;
        if (!add_saturated(f)) {
            res.status = GBStatus::FuelExhausted;
            res.basis = canonical_basis(res.basis);
            return res;
        }
    }
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        auto s = spolynomial(G[i], G[j], ReductionMode::Prefix);
        if (!s) continue;
        res.stats.spolys_considered += 1;
        std::size_t steps = 0;
        Polynomial h = normalform(*s, G, ReductionMode::Prefix, {}, nullptr, &steps);
        res.stats.reductions += steps;
        if (!budget.spend(steps)) {
            res.status = GBStatus::FuelExhausted;
            break;
        }
        if (h.is_zero()) continue;
        if (!add_saturated(h)) {
            res.status = GBStatus::FuelExhausted;
            break;
        }
    }
    res.basis = canonical_basis(res.basis);
    return res;
}

// The interreducing variant: maintains a head-reduced basis, queueing
// displaced members and the saturating multiples of every new member.
inline GBResult reduced_prefix_gb(const std::vector<Polynomial>& F, std::size_t fuel = 200000) {
    GBResult res;
    detail::Fuel budget{fuel};
    std::vector<Polynomial> G;
    std::deque<Polynomial> S;
    for (const auto& f : F)
        if (!f.is_zero()) S.push_back(f);

    while (!S.empty()) {
        Polynomial q = std::move(S.front());
        S.pop_front();
        std::size_t steps = 0;
        Polynomial q2 = normalform(q, G, ReductionMode::Prefix, {}, nullptr, &steps);
        res.stats.reductions += steps;
        if (!budget.spend(steps)) {
            res.status = GBStatus::FuelExhausted;
            break;
        }
        if (q2.is_zero()) continue;
        q2 = q2.monic();
        // members whose head the new polynomial reduces move back to the queue
        std::vector<Polynomial> kept;
        for (auto& g : G) {
            const Polynomial mono = Polynomial::monomial(g.head_term(), g.head_coeff());
            if (is_reducible(mono, q2, ReductionMode::Prefix))
                S.push_back(std::move(g));
            else
                kept.push_back(std::move(g));
        }
        kept.push_back(q2);
        std::vector<Polynomial> before = kept;
        G = detail::reduce_tails(std::move(kept), ReductionMode::Prefix);
        // saturating multiples of everything new in G
        for (const auto& g : G) {
            bool is_new = !detail::known(before, g) || g == q2;
            if (!is_new) continue;
            auto sat = prefix_saturate(g, budget.left);
            res.stats.saturations += sat.steps;
            if (!budget.spend(sat.steps) || sat.status == SatStatus::FuelExhausted) {
                res.status = GBStatus::FuelExhausted;
                res.basis = canonical_basis(G);
                return res;
            }
            for (auto& m : sat.polys)
                if (m != g && !m.is_zero()) S.push_back(std::move(m));
        }
        if (res.status == GBStatus::FuelExhausted) break;
    }
    res.basis = canonical_basis(detail::reduce_tails(std::move(G), ReductionMode::Prefix));
    return res;
}

// Decidable test: all prefix s-polynomials and all critical C(t)-multiples
// normalize to zero.
inline bool prefix_gb_check(const std::vector<Polynomial>& F) {
    std::vector<Polynomial> G;
    for (const auto& f : F)
        if (!f.is_zero()) G.push_back(f);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            auto s = spolynomial(G[i], G[j], ReductionMode::Prefix);
            if (!s) continue;
            if (!normalform(*s, G, ReductionMode::Prefix).is_zero()) return false;
        }
    for (const auto& g : G) {
        const Presentation& P = g.home();
        for (const Word& w : prefix_overlaps(g.head_term(), P)) {
            const Polynomial mult = right_mul(g, P.element(w));
            if (!normalform(mult, G, ReductionMode::Prefix).is_zero()) return false;
        }
    }
    return true;
}

// Commutative Gröbner bases; terminating. The reduced variant additionally
// keeps the basis interreduced and queues displaced members and the
// commutative s-polynomials of new members.
inline GBResult comm_gb(const std::vector<Polynomial>& F, bool reduced = false) {
    GBResult res;
    if (!reduced) {
        std::vector<Polynomial>& G = res.basis;
        std::deque<std::pair<std::size_t, std::size_t>> pairs;
        auto add_saturated = [&](const Polynomial& f) -> bool {
            auto sat = comm_saturate(f.monic());
            res.stats.saturations += sat.steps;
            if (sat.status == SatStatus::FuelExhausted) return false;
            for (auto& q : sat.polys) {
                if (q.is_zero() || detail::known(G, q)) continue;
                for (std::size_t i = 0; i < G.size(); ++i) pairs.emplace_back(i, G.size());
                G.push_back(std::move(q));
            }
            return true;
        };
        for (const auto& f : F)
            if (!f.is_zero() && !add_saturated(f)) res.status = GBStatus::FuelExhausted;
        while (res.status == GBStatus::Complete && !pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            auto s = spolynomial(G[i], G[j], ReductionMode::Commutative);
            if (!s) continue;
            res.stats.spolys_considered += 1;
            std::size_t steps = 0;
            Polynomial h = normalform(*s, G, ReductionMode::Commutative, {}, nullptr, &steps);
            res.stats.reductions += steps;
            if (!h.is_zero() && !add_saturated(h)) res.status = GBStatus::FuelExhausted;
        }
        res.basis = canonical_basis(res.basis);
        return res;
    }

    std::vector<Polynomial> G;
    std::deque<Polynomial> S;
    for (const auto& f : F)
        if (!f.is_zero()) S.push_back(f);
    while (!S.empty()) {
        Polynomial q = std::move(S.front());
        S.pop_front();
        std::size_t steps = 0;
        Polynomial q2 = normalform(q, G, ReductionMode::Commutative, {}, nullptr, &steps);
        res.stats.reductions += steps;
        if (q2.is_zero()) continue;
        q2 = q2.monic();
        std::vector<Polynomial> kept;
        for (auto& g : G) {
            const Polynomial mono = Polynomial::monomial(g.head_term(), g.head_coeff());
            if (is_reducible(mono, q2, ReductionMode::Commutative))
                S.push_back(std::move(g));
            else
                kept.push_back(std::move(g));
        }
        kept.push_back(q2);
        std::vector<Polynomial> before = kept;
        G = detail::reduce_tails(std::move(kept), ReductionMode::Commutative);
        for (const auto& g : G) {
            const bool is_new = !detail::known(before, g) || g == q2;
            if (!is_new) continue;
            auto sat = comm_saturate(g);
            res.stats.saturations += sat.steps;
            if (sat.status == SatStatus::FuelExhausted) {
                res.status = GBStatus::FuelExhausted;
                res.basis = canonical_basis(G);
                return res;
            }
            for (auto& m : sat.polys)
                if (m != g && !m.is_zero()) S.push_back(std::move(m));
            for (const auto& f : G) {
                auto s = spolynomial(f, g, ReductionMode::Commutative);
                res.stats.spolys_considered += 1;
                if (s && !s->is_zero()) S.push_back(*s);
            }
        }
    }
    res.basis = canonical_basis(detail::reduce_tails(std::move(G), ReductionMode::Commutative));
    return res;
}

namespace detail {

inline std::pair<MonoidElement, MonoidElement> mate_pair(const Polynomial& q) {
    const CanAcan ca = can_acan(q);
    const Presentation& P = q.home();
    MonoidElement t1 = ca.can.head_term();
    MonoidElement t2 = ca.acan.head_term();
    if (P.compare(t1, t2) > 0) std::swap(t1, t2);
    return {t1, t2};
}

inline bool pair_leq(const Presentation& P, const std::pair<MonoidElement, MonoidElement>& a,
                     const std::pair<MonoidElement, MonoidElement>& b) {
    const int c = P.compare(a.first, b.first);
    if (c != 0) return c < 0;
    return P.compare(a.second, b.second) <= 0;
}

// Reduction restricted to the head monomial.
inline Polynomial head_normalform(Polynomial q, const std::vector<Polynomial>& G,
                                  std::size_t* steps) {
    bool hit = true;
    while (hit && !q.is_zero()) {
        hit = false;
        for (const auto& g : G) {
            if (!is_prefix(g.head_term().word(), q.head_term().word())) continue;
            const MonoidElement w =
                q.home().element(strip_prefix(g.head_term().word(), q.head_term().word()));
            q = linear(1, q, -q.head_coeff() / g.head_coeff(), right_mul(g, w));
            if (steps) ++*steps;
            hit = true;
            break;
        }
    }
    return q;
}

} // namespace detail

// Completion in free group rings: the basis is kept as can/acan mates; each
// round removes one mate pair, reduces its smaller representative at the
// head, and reinserts the mates of the result. The (t1, t2) pair multiset
// strictly decreases, which forces termination.
using MatePair = std::pair<MonoidElement, MonoidElement>;

inline GBResult free_group_gb(const std::vector<Polynomial>& F,
                              std::vector<std::vector<MatePair>>* multiset_log = nullptr) {
    GBResult res;
    std::vector<Polynomial> G;
    Presentation P;
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        P = f.home();
        if (P.cls() != StructureClass::FreeGroup)
            throw error("free_group_gb: free group presentation required");
        const CanAcan ca = can_acan(f);
        res.stats.saturations += 1;
        if (!detail::known(G, ca.can.monic())) G.push_back(ca.can.monic());
        if (!detail::known(G, ca.acan.monic())) G.push_back(ca.acan.monic());
    }

    while (true) {
        if (multiset_log) {
            std::vector<MatePair> snapshot;
            for (const auto& g : G) snapshot.push_back(detail::mate_pair(g));
            multiset_log->push_back(std::move(snapshot));
        }
        // pick the reducible member with the largest mate pair
        std::size_t pick = G.size();
        std::pair<MonoidElement, MonoidElement> pick_pair;
        for (std::size_t i = 0; i < G.size(); ++i) {
            const auto pi = detail::mate_pair(G[i]);
            bool reducible = false;
            for (std::size_t j = 0; j < G.size() && !reducible; ++j) {
                if (j == i || G[j] == G[i]) continue;
                if (!is_prefix(G[j].head_term().word(), G[i].head_term().word())) continue;
                if (detail::pair_leq(P, detail::mate_pair(G[j]), pi)) reducible = true;
            }
            if (!reducible) continue;
            if (pick == G.size() || detail::pair_leq(P, pick_pair, pi)) {
                pick = i;
                pick_pair = pi;
            }
        }
        if (pick == G.size()) break;
        Polynomial q = G[pick];
        const CanAcan ca = can_acan(q);
        std::erase_if(G, [&](const Polynomial& g) {
            return g == ca.can.monic() || g == ca.acan.monic();
        });
        std::vector<Polynomial> Gp;
        for (const auto& g : G)
            if (detail::pair_leq(P, detail::mate_pair(g), pick_pair)) Gp.push_back(g);
        std::size_t steps = 0;
        Polynomial q2 = detail::head_normalform(q, Gp, &steps);
        res.stats.reductions += steps;
        res.stats.spolys_considered += 1;
        if (q2.is_zero()) continue;
        if (q2.term_count() == 1) {
            G.clear();
            G.push_back(Polynomial::monomial(P.identity(), 1));
            break;
        }
        const CanAcan ca2 = can_acan(q2);
        res.stats.saturations += 1;
        if (!detail::known(G, ca2.can.monic())) G.push_back(ca2.can.monic());
        if (!detail::known(G, ca2.acan.monic())) G.push_back(ca2.acan.monic());
    }
    res.basis = canonical_basis(detail::reduce_tails(std::move(G), ReductionMode::Prefix));
    return res;
}

// Reduced Gröbner bases in context-free group rings: seeds are the mates of
// every finite-letter shift ψ_e(f) = f∘e; head lengths stay bounded, so the
// loop terminates.
inline GBResult context_free_gb(const std::vector<Polynomial>& F) {
    GBResult res;
    std::vector<Polynomial> G;
    std::deque<Polynomial> S;
    Presentation P;
    bool free_inner = false;
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        P = f.home();
        if (P.cls() == StructureClass::FreeGroup) {
            free_inner = true; // degenerate extension: treat as a free group
            break;
        }
        if (P.cls() != StructureClass::ContextFreeGroup)
            throw error("context_free_gb: context-free group presentation required");
        std::vector<MonoidElement> shifts{P.identity()};
        for (std::size_t e = 0; e < P.finite_letter_count(); ++e)
            shifts.push_back(P.element(Word(P.alphabet(), {static_cast<Letter>(e)})));
        for (const auto& eshift : shifts) {
            const Polynomial fe = right_mul(f, eshift);
            if (fe.is_zero()) continue;
            const CanAcan ca = can_acan(fe);
            res.stats.saturations += 1;
            S.push_back(ca.can.monic());
            S.push_back(ca.acan.monic());
        }
    }
    if (free_inner) return free_group_gb(F);

    while (!S.empty()) {
        Polynomial q = std::move(S.front());
        S.pop_front();
        std::size_t steps = 0;
        Polynomial q2 = normalform(q, G, ReductionMode::Prefix, {}, nullptr, &steps);
        res.stats.reductions += steps;
        if (q2.is_zero()) continue;
        q2 = q2.monic();
        if (q2.term_count() == 1) {
            // a monomial generates the unit ideal in a group ring
            G.assign(1, Polynomial::monomial(q2.home().identity(), 1));
            break;
        }
        std::vector<Polynomial> kept;
        for (auto& g : G) {
            const Polynomial mono = Polynomial::monomial(g.head_term(), g.head_coeff());
            if (is_reducible(mono, q2, ReductionMode::Prefix))
                S.push_back(std::move(g));
            else
                kept.push_back(std::move(g));
        }
        G = std::move(kept);
        G.push_back(q2);
        const CanAcan ca = can_acan(q2);
        res.stats.saturations += 1;
        if (ca.can.monic() != q2) S.push_back(ca.can.monic());
        if (ca.acan.monic() != q2) S.push_back(ca.acan.monic());
        res.stats.spolys_considered += 1;
    }
    res.basis = canonical_basis(detail::reduce_tails(std::move(G), ReductionMode::Prefix));
    return res;
}

// Right (and two-sided) Gröbner bases in nilpotent group rings. The basis is
// closed under finite-part shifts and qc-saturation; the two-sided variant
// additionally drains a worklist of one-letter left multiples.
inline GBResult nilpotent_gb(const std::vector<Polynomial>& F, bool two_sided = false,
                             std::size_t fuel = 2000000) {
    GBResult res;
    detail::Fuel budget{fuel};
    std::vector<Polynomial> G;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::deque<Polynomial> left_multiples;
    Presentation P;

    auto add_saturated = [&](const Polynomial& f) -> bool {
        auto sat = qc_saturate(f.monic());
        res.stats.saturations += sat.steps;
        if (sat.status == SatStatus::FuelExhausted) return false;
        if (!budget.spend(sat.steps + 1)) return false;
        for (auto& q : sat.polys) {
            if (q.is_zero() || detail::known(G, q)) continue;
            for (std::size_t i = 0; i < G.size(); ++i) pairs.emplace_back(i, G.size());
            if (two_sided)
                for (Letter a = 0; a < static_cast<Letter>(P.alphabet().size()); ++a)
                    left_multiples.push_back(
                        left_mul(P.element(Word(P.alphabet(), {a})), q));
            G.push_back(std::move(q));
        }
        return true;
    };

    for (const auto& f : F) {
        if (f.is_zero()) continue;
        P = f.home();
        if (P.cls() != StructureClass::NilpotentCNI &&
            P.cls() != StructureClass::NilpotentExtension)
            throw error("nilpotent_gb: nilpotent presentation required");
        std::vector<MonoidElement> shifts{P.identity()};
        for (std::size_t e = 0; e < P.finite_letter_count(); ++e)
            shifts.push_back(P.element(Word(P.alphabet(), {static_cast<Letter>(e)})));
        for (const auto& s : shifts) {
            if (!add_saturated(right_mul(f, s))) {
                res.status = GBStatus::FuelExhausted;
                res.basis = canonical_basis(G);
                return res;
            }
        }
    }

    while (!pairs.empty() || !left_multiples.empty()) {
        if (!left_multiples.empty()) {
            Polynomial h = std::move(left_multiples.front());
            left_multiples.pop_front();
            std::size_t steps = 0;
            Polynomial h2 = normalform(h, G, ReductionMode::QuasiCommutative, {}, nullptr, &steps);
            res.stats.reductions += steps;
            if (!budget.spend(steps)) { res.status = GBStatus::FuelExhausted; break; }
            if (!h2.is_zero() && !add_saturated(h2)) {
                res.status = GBStatus::FuelExhausted;
                break;
            }
        }
        if (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            auto s = spolynomial(G[i], G[j], ReductionMode::QuasiCommutative);
            if (!s) continue;
            res.stats.spolys_considered += 1;
            std::size_t steps = 0;
            Polynomial h = normalform(*s, G, ReductionMode::QuasiCommutative, {}, nullptr, &steps);
            res.stats.reductions += steps;
            if (!budget.spend(steps)) { res.status = GBStatus::FuelExhausted; break; }
            if (!h.is_zero() && !add_saturated(h)) {
                res.status = GBStatus::FuelExhausted;
                break;
            }
        }
    }
    res.basis = canonical_basis(G);
    return res;
}

} // namespace gmr
