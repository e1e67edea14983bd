#pragma once

#include <optional>
#include <span>

#include "gmr/polynomial.hpp"

namespace gmr {

// The five reduction relations. Strong and right reduction search for a
// multiplier; prefix, commutative and quasi-commutative reduction read the
// unique cofactor off the term's syntax.
enum class ReductionMode { Strong, Right, Prefix, Commutative, QuasiCommutative };

inline std::string reduction_mode_name(ReductionMode m) {
    switch (m) {
        case ReductionMode::Strong: return "strong";
        case ReductionMode::Right: return "right";
        case ReductionMode::Prefix: return "prefix";
        case ReductionMode::Commutative: return "commutative";
        case ReductionMode::QuasiCommutative: return "quasi-commutative";
    }
    return "?";
}

struct ReductionConfig {
    // Strong/right witness search bound for non-group monoids;
    // 0 selects |HT(p)| + max rule lhs length.
    std::size_t witness_length_bound = 0;
    std::size_t enumeration_cap = 200000;
};

struct ReduceStep {
    Polynomial result;
    MonoidElement at;       // the reduced monomial's term
    MonoidElement cofactor; // w
    Rat coeff;              // result = p - coeff · (f ∘ w)
};

// One normalform step: (coeff, index into the basis, cofactor).
struct TraceItem {
    Rat coeff;
    std::size_t basis_index;
    MonoidElement cofactor;
};

namespace detail {

inline void check_mode(const Presentation& P, ReductionMode mode) {
    switch (mode) {
        case ReductionMode::Commutative:
            if (P.cls() != StructureClass::CommutativeMonoid)
                throw error("commutative reduction requires a commutative monoid presentation");
            break;
        case ReductionMode::QuasiCommutative:
            if (P.cls() != StructureClass::NilpotentCNI &&
                P.cls() != StructureClass::NilpotentExtension)
                throw error("quasi-commutative reduction requires a nilpotent presentation");
            break;
        default:
            if (P.is_commutative_based())
                throw error(reduction_mode_name(mode) +
                            " reduction requires a word presentation");
            break;
    }
}

// Unique cofactor of the restricted modes, if the side condition holds.
inline std::optional<MonoidElement> restricted_cofactor(const Presentation& P,
                                                        const MonoidElement& t,
                                                        const MonoidElement& hf,
                                                        ReductionMode mode) {
    switch (mode) {
        case ReductionMode::Prefix: {
            if (!is_prefix(hf.word(), t.word())) return std::nullopt;
            return P.element(strip_prefix(hf.word(), t.word()));
        }
        case ReductionMode::Commutative: {
            const ExpVec a = P.to_expvec(hf.word());
            const ExpVec b = P.to_expvec(t.word());
            if (!tuple_leq(a, b)) return std::nullopt;
            return P.element_from_expvec(expvec_sub(b, a));
        }
        case ReductionMode::QuasiCommutative: {
            if (P.cls() == StructureClass::NilpotentCNI) {
                if (!tuple_leq(P.to_expvec(hf.word()), P.to_expvec(t.word())))
                    return std::nullopt;
            } else {
                const auto [ef, uf] = P.split_extension(hf.word());
                const auto [et, ut] = P.split_extension(t.word());
                if (ef != et) return std::nullopt;
                if (!tuple_leq(P.inner_expvec(uf), P.inner_expvec(ut))) return std::nullopt;
            }
            return P.left_divide(hf, t);
        }
        default:
            return std::nullopt;
    }
}

inline std::size_t witness_bound(const Polynomial& p, const ReductionConfig& cfg) {
    if (cfg.witness_length_bound) return cfg.witness_length_bound;
    const Presentation& P = p.home();
    return p.head_term().length() + P.sts().max_lhs_length();
}

} // namespace detail

// One reduction step of p by f in the given mode, at the largest reducible
// monomial, if any. Strong and right reduction over non-group monoids search
// witnesses only up to the configured length bound and may miss distant ones.
inline std::optional<ReduceStep> reduce_step(const Polynomial& p, const Polynomial& f,
                                             ReductionMode mode,
                                             const ReductionConfig& cfg = {}) {
    if (f.is_zero()) throw error("reduce_step: zero reducer");
    if (p.is_zero()) return std::nullopt;
    const Presentation& P = p.home();
    if (!P.same(f.home())) throw error("reduce_step: presentation mismatch");
    detail::check_mode(P, mode);

    const bool searching = mode == ReductionMode::Strong || mode == ReductionMode::Right;
    std::vector<MonoidElement> pool;
    if (searching && !P.is_group())
        pool = P.enumerate_elements(detail::witness_bound(p, cfg), cfg.enumeration_cap);

    for (const auto& [t, alpha] : p.terms()) {
        if (!searching) {
            auto w = detail::restricted_cofactor(P, t, f.head_term(), mode);
            if (!w) continue;
            const Polynomial fw = right_mul(f, *w);
            // the head survives: HT(f∘w) = HT(f)w by the syntactic condition
            const Rat c = alpha / f.head_coeff();
            return ReduceStep{linear(1, p, -c, fw), t, *w, c};
        }
        auto try_witness = [&](const MonoidElement& w) -> std::optional<ReduceStep> {
            if (mode == ReductionMode::Right && P.mul(f.head_term(), w) != t)
                return std::nullopt;
            const Polynomial fw = right_mul(f, w);
            if (fw.is_zero() || fw.head_term() != t) return std::nullopt;
            const Rat c = alpha / fw.head_coeff();
            return ReduceStep{linear(1, p, -c, fw), t, w, c};
        };
        if (P.is_group()) {
            if (mode == ReductionMode::Right) {
                if (auto st = try_witness(P.left_divide(f.head_term(), t))) return st;
            } else {
                // any term of f may carry the head of f∘w onto t; try the
                // smallest terms first
                const auto& fts = f.terms();
                for (auto it = fts.rbegin(); it != fts.rend(); ++it)
                    if (auto st = try_witness(P.left_divide(it->first, t))) return st;
            }
        } else {
            for (const auto& w : pool)
                if (auto st = try_witness(w)) return st;
        }
    }
    return std::nullopt;
}

inline bool is_reducible(const Polynomial& p, const Polynomial& f, ReductionMode mode,
                         const ReductionConfig& cfg = {}) {
    return reduce_step(p, f, mode, cfg).has_value();
}

// True when p reduces to zero by a single step with some f in F.
inline bool one_step_to_zero(const Polynomial& p, std::span<const Polynomial> F,
                             ReductionMode mode, const ReductionConfig& cfg = {}) {
    if (p.is_zero()) return true;
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        auto st = reduce_step(p, f, mode, cfg);
        if (st && st->result.is_zero() && st->at == p.head_term()) return true;
    }
    return false;
}

// Iterated reduction to an irreducible polynomial. At each step the largest
// reducible monomial is rewritten with the first applicable basis element;
// the subtracted multiples are reported through `trace` when requested.
inline Polynomial normalform(const Polynomial& p0, std::span<const Polynomial> F,
                             ReductionMode mode, const ReductionConfig& cfg = {},
                             std::vector<TraceItem>* trace = nullptr,
                             std::size_t* steps_out = nullptr) {
    Polynomial p = p0;
    if (p.is_zero()) return p;
    const Presentation& P = p.home();
    ReductionConfig cfg2 = cfg;
    if ((mode == ReductionMode::Strong || mode == ReductionMode::Right) &&
        cfg2.witness_length_bound == 0 && !P.is_commutative_based())
        cfg2.witness_length_bound = detail::witness_bound(p, cfg);
    std::optional<MonoidElement> barrier; // terms above this are irreducible
    std::size_t steps = 0;
    bool progress = true;
    while (progress && !p.is_zero()) {
        progress = false;
        for (const auto& [t, alpha] : p.terms()) {
            if (barrier && P.compare(t, *barrier) > 0) continue;
            const Polynomial mono = Polynomial::monomial(t, alpha); // reduce exactly at t
            for (std::size_t i = 0; i < F.size(); ++i) {
                const Polynomial& f = F[i];
                if (f.is_zero()) continue;
                auto st = reduce_step(mono, f, mode, cfg2);
                if (!st || st->at != t) continue;
                const MonoidElement site = t; // t dangles once p is replaced
                p = linear(1, p, -st->coeff, right_mul(f, st->cofactor));
                if (trace) trace->push_back({st->coeff, i, st->cofactor});
                barrier = site;
                ++steps;
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    if (steps_out) *steps_out = steps;
    return p;
}

// Interreduction; sound for the prefix and commutative modes only.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> F, ReductionMode mode,
                                           const ReductionConfig& cfg = {}) {
    if (mode != ReductionMode::Prefix && mode != ReductionMode::Commutative)
        throw error("interreduce: unsound for " + reduction_mode_name(mode) + " reduction");
    std::vector<Polynomial> G;
    for (auto& f : F)
        if (!f.is_zero()) G.push_back(std::move(f));

    auto head_reducible_by_rest = [&G, mode, &cfg](std::size_t i) {
        const Polynomial& g = G[i];
        const Polynomial mono = Polynomial::monomial(g.head_term(), g.head_coeff());
        for (std::size_t j = 0; j < G.size(); ++j)
            if (j != i && is_reducible(mono, G[j], mode, cfg)) return true;
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!head_reducible_by_rest(i)) continue;
            Polynomial g = std::move(G[i]);
            G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
            Polynomial nf = normalform(g, G, mode, cfg);
            if (!nf.is_zero()) G.push_back(std::move(nf));
            changed = true;
            break;
        }
    }
    // heads are now stable; clean the reducts and normalize
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < G.size(); ++i) {
        std::vector<Polynomial> rest;
        for (std::size_t j = 0; j < G.size(); ++j)
            if (j != i) rest.push_back(G[j]);
        Polynomial nf = normalform(G[i], rest, mode, cfg).monic();
        bool dup = false;
        for (const auto& h : out)
            if (h == nf) dup = true;
        if (!dup && !nf.is_zero()) out.push_back(std::move(nf));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.home().compare(a.head_term(), b.head_term()) > 0;
    });
    return out;
}

} // namespace gmr
