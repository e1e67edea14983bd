#pragma once

#include "gmr/completion.hpp"

namespace gmr {

enum class Verdict { Member, NonMember, Unknown };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Member: return "member";
        case Verdict::NonMember: return "non-member";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

// One summand of a certified representation: coeff · (left ∘) F[index] ∘ right.
struct WitnessItem {
    Rat coeff;
    std::size_t index;
    MonoidElement right;
    std::optional<MonoidElement> left; // two-sided representations only
};

struct MembershipAnswer {
    Verdict verdict = Verdict::Unknown;
    std::vector<WitnessItem> witness;
};

// Rebuild the combination a witness describes. Cofactors are rehomed through
// P, so witnesses survive across presentation instances over one alphabet.
inline Polynomial replay_witness(const std::vector<WitnessItem>& witness,
                                 std::span<const Polynomial> F, const Presentation& P) {
    Polynomial acc = Polynomial::zero(P);
    for (const auto& it : witness) {
        Polynomial part = right_mul(F[it.index], P.element(it.right.word()));
        if (it.left) part = left_mul(P.element(it.left->word()), part);
        acc = linear(1, acc, it.coeff, part);
    }
    return acc;
}

// Right-ideal membership through a completed basis: g is a member exactly
// when its normal form vanishes; the reduction trace becomes the witness.
inline MembershipAnswer member(const Polynomial& g, const GBResult& basis, ReductionMode mode) {
    MembershipAnswer ans;
    if (basis.status != GBStatus::Complete) return ans;
    std::vector<TraceItem> trace;
    const Polynomial nf = normalform(g, basis.basis, mode, {}, &trace);
    if (!nf.is_zero()) {
        ans.verdict = Verdict::NonMember;
        return ans;
    }
    ans.verdict = Verdict::Member;
    for (auto& t : trace)
        ans.witness.push_back({t.coeff, t.basis_index, t.cofactor, std::nullopt});
    return ans;
}

// Exhaustive right-ideal (or two-sided) membership over bounded cofactors:
// solve the exact linear system over the multiples' joint support. Member
// answers are certified; failure only means "not within this bound".
inline MembershipAnswer brute_force_member(const Polynomial& g,
                                           const std::vector<Polynomial>& F,
                                           std::size_t length_bound, bool two_sided = false,
                                           std::size_t cap = 60000) {
    MembershipAnswer ans;
    if (g.is_zero()) {
        ans.verdict = Verdict::Member;
        return ans;
    }
    const Presentation& P = g.home();
    const std::vector<MonoidElement> elems = P.enumerate_elements(length_bound, cap);

    struct Column {
        Polynomial value;
        std::size_t index;
        MonoidElement right;
        std::optional<MonoidElement> left;
    };
    std::vector<Column> cols;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i].is_zero()) continue;
        for (const auto& w : elems) {
            Polynomial fw = right_mul(F[i], w);
            if (!two_sided) {
                if (!fw.is_zero()) cols.push_back({std::move(fw), i, w, std::nullopt});
                continue;
            }
            for (const auto& u : elems) {
                Polynomial ufw = left_mul(u, fw);
                if (!ufw.is_zero()) cols.push_back({std::move(ufw), i, w, u});
            }
        }
        if (cols.size() > cap) throw error("brute_force_member: column cap exceeded");
    }

    // term index over the joint support
    std::vector<MonoidElement> support;
    auto index_of = [&support, &P](const MonoidElement& m) {
        for (std::size_t i = 0; i < support.size(); ++i)
            if (support[i] == m) return i;
        support.push_back(m);
        return support.size() - 1;
    };
    for (const auto& c : cols)
        for (const auto& t : c.value.terms()) index_of(t.first);
    for (const auto& t : g.terms()) index_of(t.first);

    const std::size_t rows = support.size();
    const std::size_t n = cols.size();
    // dense augmented matrix [A | g] with Gaussian elimination over Q
    std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : cols[j].value.terms()) M[index_of(t.first)][j] = t.second;
    for (const auto& t : g.terms()) M[index_of(t.first)][n] = t.second;

    std::vector<std::size_t> pivot_col(rows, n + 1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < n && rank < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (M[i][j] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        const Rat d = M[rank][j];
        for (std::size_t k = j; k <= n; ++k) M[rank][k] /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][j] == 0) continue;
            const Rat f = M[i][j];
            for (std::size_t k = j; k <= n; ++k) M[i][k] -= f * M[rank][k];
        }
        pivot_col[rank] = j;
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (M[i][n] != 0) return ans; // inconsistent within the bound: unknown

    ans.verdict = Verdict::Member;
    for (std::size_t i = 0; i < rank; ++i) {
        if (M[i][n] == 0) continue;
        const Column& c = cols[pivot_col[i]];
        ans.witness.push_back({M[i][n], c.index, c.right, c.left});
    }
    return ans;
}

// w ∈ <S> iff w - 1 lies in the right ideal of {s - 1 | s ∈ S}. The
// completion procedure is chosen by the presentation class; classes without
// a terminating procedure answer through a fueled run and may stay unknown.
inline MembershipAnswer subgroup_member(const MonoidElement& w,
                                        const std::vector<MonoidElement>& S,
                                        std::size_t fuel = 200000) {
    const Presentation P = w.home();
    if (!P.is_group()) throw error("subgroup_member: group presentation required");
    std::vector<Polynomial> gens;
    for (const auto& s : S) {
        Polynomial p = Polynomial::monomial(s, 1);
        p.add_term(P.identity(), Rat(-1));
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    Polynomial query = Polynomial::monomial(w, 1);
    query.add_term(P.identity(), Rat(-1));
    if (query.is_zero()) {
        MembershipAnswer ans;
        ans.verdict = Verdict::Member;
        return ans;
    }

    GBResult basis;
    ReductionMode mode = ReductionMode::Prefix;
    switch (P.cls()) {
        case StructureClass::FreeGroup: basis = free_group_gb(gens); break;
        case StructureClass::ContextFreeGroup: basis = context_free_gb(gens); break;
        case StructureClass::NilpotentCNI:
        case StructureClass::NilpotentExtension:
            basis = nilpotent_gb(gens, false, fuel);
            mode = ReductionMode::QuasiCommutative;
            break;
        default:
            basis = reduced_prefix_gb(gens, fuel);
            break;
    }
    if (basis.status != GBStatus::Complete) return MembershipAnswer{};
    return member(query, basis, mode);
}

// The word problem for a semi-Thue system, answered along two routes:
// normal-form equality when the system is convergent, and bounded two-sided
// membership of u - v in the free monoid ring otherwise.
inline MembershipAnswer encode_word_problem(const SemiThueSystem& T, const Word& u, const Word& v,
                                            std::size_t bound = 2) {
    MembershipAnswer ans;
    const bool convergent = sts_locally_confluent(T);
    std::optional<bool> nf_equal;
    if (convergent) nf_equal = sts_normalform(u, T) == sts_normalform(v, T);

    Presentation free = Presentation::word_based(
        StructureClass::FreeMonoid, SemiThueSystem(T.alphabet(), {}, T.ordering()));
    std::vector<Polynomial> PT;
    for (const Rule& r : T.rules()) {
        Polynomial p = Polynomial::monomial(free.element(r.lhs), 1);
        p.add_term(free.element(r.rhs), Rat(-1));
        if (!p.is_zero()) PT.push_back(std::move(p));
    }
    Polynomial diff = Polynomial::monomial(free.element(u), 1);
    diff.add_term(free.element(v), Rat(-1));
    if (diff.is_zero()) {
        ans.verdict = Verdict::Member;
        return ans;
    }
    // grow the cofactor bound until the certificate appears
    MembershipAnswer bounded;
    for (std::size_t b = 0; b <= bound; ++b) {
        bounded = brute_force_member(diff, PT, b, /*two_sided=*/true);
        if (bounded.verdict == Verdict::Member) break;
    }
    if (nf_equal.has_value() && bounded.verdict == Verdict::Member && !*nf_equal)
        throw error("word problem: routes disagree; system is not convergent");
    if (nf_equal.has_value()) {
        ans.verdict = *nf_equal ? Verdict::Member : Verdict::NonMember;
        if (*nf_equal) ans.witness = std::move(bounded.witness);
        return ans;
    }
    return bounded; // member or unknown
}

} // namespace gmr
