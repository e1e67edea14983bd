#pragma once

// Construction, validation and enumeration for Presentation. Included at the
// end of presentation.hpp.

#include <algorithm>
#include <deque>

namespace gmr {

namespace detail {

inline bool is_trivial_rule_set(const SemiThueSystem& T) {
    // exactly the rules a ι(a) -> λ for every letter
    const Alphabet& A = T.alphabet();
    if (!A.has_involution()) return false;
    std::vector<std::pair<Letter, Letter>> want;
    for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a)
        want.emplace_back(a, A.inverse_letter(a));
    std::vector<std::pair<Letter, Letter>> have;
    for (const Rule& r : T.rules()) {
        if (r.lhs.length() != 2 || !r.rhs.empty()) return false;
        have.emplace_back(r.lhs.at(0), r.lhs.at(1));
    }
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    return want == have;
}

// Group system in the rule-shape sense: some involution ι (fixpoints
// allowed) has a ι(a) -> λ and ι(a) a -> λ among the rules for every letter.
inline bool is_group_system(const SemiThueSystem& T) {
    const Alphabet& A = T.alphabet();
    auto cancels = [&T](Letter x, Letter y) {
        for (const Rule& r : T.rules())
            if (r.rhs.empty() && r.lhs.length() == 2 && r.lhs.at(0) == x && r.lhs.at(1) == y)
                return true;
        return false;
    };
    std::vector<Letter> iota(A.size(), -1);
    for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a) {
        for (Letter b = 0; b < static_cast<Letter>(A.size()); ++b) {
            if (cancels(a, b) && cancels(b, a)) { iota[static_cast<std::size_t>(a)] = b; break; }
        }
        if (iota[static_cast<std::size_t>(a)] < 0) return false;
    }
    for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a)
        if (iota[static_cast<std::size_t>(iota[static_cast<std::size_t>(a)])] != a) return false;
    return true;
}

// Letter inverses found by search over short normal forms; succeeds exactly
// when every letter has a two-sided inverse representable within the bound.
inline bool find_letter_inverses(const SemiThueSystem& T, std::size_t maxlen,
                                 std::vector<std::vector<Letter>>& out) {
    const Alphabet& A = T.alphabet();
    out.assign(A.size(), {});
    std::vector<std::vector<Letter>> candidates{{}};
    std::vector<std::vector<Letter>> level{{}};
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : level)
            for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a) {
                std::vector<Letter> wa = w;
                wa.push_back(a);
                bool irr = true;
                for (const Rule& r : T.rules()) {
                    const auto& l = r.lhs.letters();
                    if (l.size() <= wa.size() && std::equal(l.rbegin(), l.rend(), wa.rbegin())) {
                        irr = false;
                        break;
                    }
                }
                if (!irr) continue;
                candidates.push_back(wa);
                next.push_back(std::move(wa));
            }
        level = std::move(next);
    }
    for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a) {
        bool found = false;
        for (const auto& m : candidates) {
            std::vector<Letter> am{a};
            am.insert(am.end(), m.begin(), m.end());
            sts_normalize_inplace(am, T);
            if (!am.empty()) continue;
            std::vector<Letter> ma = m;
            ma.push_back(a);
            sts_normalize_inplace(ma, T);
            if (!ma.empty()) continue;
            out[static_cast<std::size_t>(a)] = m;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

} // namespace detail

inline Presentation Presentation::word_based(StructureClass cls, SemiThueSystem sts) {
    auto d = std::make_shared<detail::PresData>();
    d->cls = cls;
    d->alpha = sts.alphabet();
    const Alphabet& A = d->alpha;

    switch (cls) {
        case StructureClass::FreeMonoid:
            if (!sts.rules().empty())
                throw error("free monoid presentation must have no rules");
            break;
        case StructureClass::FreeGroup:
            if (!detail::is_trivial_rule_set(sts))
                throw error("free group presentation must consist of the trivial rules");
            d->is_group = true;
            break;
        case StructureClass::PlainGroup:
            if (!detail::is_group_system(sts))
                throw error("plain group presentation must be a group system");
            for (const Rule& r : sts.rules())
                if (r.lhs.length() > 2 || r.rhs.length() > 1 || r.rhs.length() >= r.lhs.length())
                    throw error("plain group presentation must be 2-monadic length-reducing");
            break;
        case StructureClass::NilpotentCNI: {
            if (A.size() % 2 != 0 || !A.has_involution())
                throw error("CNI presentation needs paired letters a_i^-1, a_i");
            for (Letter a = 0; a < static_cast<Letter>(A.size()); a += 2)
                if (A.inverse_letter(a) != a + 1)
                    throw error("CNI presentation: letters must pair as a_i^-1, a_i");
            d->cni_generators = A.size() / 2;
            d->is_group = true;
            break;
        }
        case StructureClass::FiniteMonoid: {
            for (const Rule& r : sts.rules())
                if (r.lhs.length() != 2 || r.rhs.length() > 1)
                    throw error("finite monoid presentation must be a 2-monadic table system");
            break;
        }
        case StructureClass::Monoid:
            break;
        default:
            throw error("word_based: class requires a dedicated constructor");
    }

    d->convergent = sts_locally_confluent(sts);
    if (d->is_group) {
        // free group or CNI: inverse letters come from the involution
        d->letter_inverse.resize(A.size());
        for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a)
            d->letter_inverse[static_cast<std::size_t>(a)] = {A.inverse_letter(a)};
    } else if (cls != StructureClass::FreeMonoid) {
        // search short normal forms for two-sided letter inverses
        const std::size_t bound = cls == StructureClass::FiniteMonoid ? 1 : 2;
        std::vector<std::vector<Letter>> inv;
        if (detail::find_letter_inverses(sts, bound, inv)) {
            d->is_group = true;
            d->letter_inverse = std::move(inv);
        }
    }
    if (cls == StructureClass::PlainGroup && !d->is_group)
        throw error("plain group presentation: some generator has no inverse");
    d->sts = std::move(sts);
    return Presentation(std::move(d));
}

inline Presentation Presentation::commutative(CommRewriteSystem sys) {
    auto d = std::make_shared<detail::PresData>();
    d->cls = StructureClass::CommutativeMonoid;
    d->alpha = Alphabet(sys.generators());
    d->convergent = comm_locally_confluent(sys);
    d->comm = std::move(sys);
    return Presentation(std::move(d));
}

inline Presentation Presentation::from_mult_table(
    const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = elements.size();
    if (n == 0 || table.size() != n)
        throw error("mult table: shape mismatch");
    for (const auto& row : table) {
        if (row.size() != n) throw error("mult table: shape mismatch");
        for (std::size_t v : row)
            if (v >= n) throw error("mult table: entry out of range");
    }
    std::size_t ident = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (table[e][i] != i || table[i][e] != i) { ok = false; break; }
        if (ok) { ident = e; break; }
    }
    if (ident == n) throw error("mult table: no identity element");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw error("mult table: not associative");

    std::vector<std::string> names;
    std::vector<std::size_t> elem_of_letter;
    std::vector<Letter> letter_of_elem(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == ident) continue;
        letter_of_elem[i] = static_cast<Letter>(names.size());
        names.push_back(elements[i]);
        elem_of_letter.push_back(i);
    }
    Alphabet A(names);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == ident) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == ident) continue;
            std::vector<Letter> lhs{letter_of_elem[i], letter_of_elem[j]};
            std::vector<Letter> rhs;
            if (table[i][j] != ident) rhs.push_back(letter_of_elem[table[i][j]]);
            rules.push_back({Word(A, std::move(lhs)), Word(A, std::move(rhs))});
        }
    }
    return word_based(StructureClass::FiniteMonoid,
                      SemiThueSystem(A, std::move(rules), OrderingSpec::lenlex()));
}

inline Presentation Presentation::assemble_extension(
    const Presentation& finite_part, const Presentation& inner_part,
    const std::map<std::pair<std::string, std::string>, std::vector<std::string>>& phi,
    const std::map<std::pair<std::string, std::string>, std::vector<std::string>>& cocycle) {
    if (finite_part.cls() != StructureClass::FiniteMonoid || !finite_part.is_group())
        throw error("assemble_extension: finite part must be a finite group");
    const bool inner_free = inner_part.cls() == StructureClass::FreeGroup;
    if (!inner_free && inner_part.cls() != StructureClass::NilpotentCNI)
        throw error("assemble_extension: inner part must be a free group or a CNI group");
    if (finite_part.alphabet().size() == 0)
        return inner_part; // trivial extension

    const Alphabet& E = finite_part.alphabet();
    const Alphabet& X = inner_part.alphabet();
    const std::size_t ecount = E.size();

    std::vector<std::string> names;
    for (std::size_t i = 0; i < ecount; ++i) names.push_back(E.name(static_cast<Letter>(i)));
    for (std::size_t i = 0; i < X.size(); ++i) {
        const std::string& nm = X.name(static_cast<Letter>(i));
        if (E.find(nm)) throw error("assemble_extension: letter '" + nm + "' in both parts");
        names.push_back(nm);
    }
    Alphabet A(names);
    const Letter off = static_cast<Letter>(ecount);

    auto shift_word = [&A, off](const Word& w) {
        std::vector<Letter> ls;
        ls.reserve(w.length());
        for (Letter l : w.letters()) ls.push_back(l + off);
        return Word(A, std::move(ls));
    };
    auto inner_word_from_names = [&](const std::vector<std::string>& ws, const char* what) {
        std::vector<Letter> ls;
        for (const auto& nm : ws) {
            auto l = X.find(nm);
            if (!l) throw error(std::string("assemble_extension: ") + what +
                                " uses unknown inner letter '" + nm + "'");
            ls.push_back(*l);
        }
        return inner_part.element(Word(X, std::move(ls))).word();
    };

    std::vector<Rule> rules;
    for (const Rule& r : inner_part.sts().rules())
        rules.push_back({shift_word(r.lhs), shift_word(r.rhs)});

    // e1 e2 -> e3 z_{e1,e2}
    std::vector<Word> e_cocycle_inv(ecount, Word(A)); // inv(z_{e, e^-1}), shifted
    for (Letter e1 = 0; e1 < static_cast<Letter>(ecount); ++e1) {
        for (Letter e2 = 0; e2 < static_cast<Letter>(ecount); ++e2) {
            const MonoidElement p = finite_part.mul(
                finite_part.element(Word(E, {e1})), finite_part.element(Word(E, {e2})));
            Word z(X);
            auto it = cocycle.find({E.name(e1), E.name(e2)});
            if (it != cocycle.end()) z = inner_word_from_names(it->second, "cocycle");
            std::vector<Letter> rhs;
            if (!p.is_identity()) rhs.push_back(p.word().at(0));
            const Word zs = shift_word(z);
            rhs.insert(rhs.end(), zs.letters().begin(), zs.letters().end());
            rules.push_back({Word(A, {e1, e2}), Word(A, std::move(rhs))});
            if (p.is_identity())
                e_cocycle_inv[static_cast<std::size_t>(e1)] =
                    shift_word(inner_part.inverse(inner_part.element(z)).word());
        }
    }

    // a e -> e φ_e(a)
    for (Letter a = 0; a < static_cast<Letter>(X.size()); ++a) {
        for (Letter e = 0; e < static_cast<Letter>(ecount); ++e) {
            auto it = phi.find({E.name(e), X.name(a)});
            if (it == phi.end())
                throw error("assemble_extension: missing conjugation image for (" +
                            E.name(e) + ", " + X.name(a) + ")");
            const Word img = inner_word_from_names(it->second, "conjugation map");
            std::vector<Letter> rhs{e};
            const Word is = shift_word(img);
            rhs.insert(rhs.end(), is.letters().begin(), is.letters().end());
            rules.push_back({Word(A, {a + off, e}), Word(A, std::move(rhs))});
        }
    }

    SemiThueSystem sts(A, std::move(rules), OrderingSpec::lenlex(), /*oriented_externally=*/true);
    if (!sts_locally_confluent(sts))
        throw error("assemble_extension: non-joinable critical pair; conjugation map or "
                    "cocycle data is inconsistent");

    auto d = std::make_shared<detail::PresData>();
    d->cls = inner_free ? StructureClass::ContextFreeGroup : StructureClass::NilpotentExtension;
    d->alpha = A;
    d->convergent = true;
    d->is_group = true;
    d->finite_letters = ecount;
    d->cni_generators = inner_free ? X.size() / 2 : inner_part.cni_generator_count();
    d->letter_inverse.resize(A.size());
    for (Letter e = 0; e < static_cast<Letter>(ecount); ++e) {
        // [e]^-1 = [e'] ∘ [z_{e,e'}]^-1 where e ∘_E e' = λ
        const Word einv = finite_part.letter_inverse_word(e);
        std::vector<Letter> w;
        Letter ep = -1;
        if (!einv.empty()) {
            ep = einv.at(0);
            w.push_back(ep);
            const Word& zc = e_cocycle_inv[static_cast<std::size_t>(e)];
            w.insert(w.end(), zc.letters().begin(), zc.letters().end());
        }
        detail::sts_normalize_inplace(w, sts);
        d->letter_inverse[static_cast<std::size_t>(e)] = std::move(w);
    }
    for (Letter a = 0; a < static_cast<Letter>(X.size()); ++a)
        d->letter_inverse[static_cast<std::size_t>(a + off)] = {X.inverse_letter(a) + off};
    d->sts = std::move(sts);
    return Presentation(std::move(d));
}

inline std::vector<MonoidElement> Presentation::enumerate_elements(std::size_t maxlen,
                                                                   std::size_t cap) const {
    std::vector<MonoidElement> out;
    if (d_->comm) {
        const std::size_t n = d_->comm->generator_count();
        // all natural vectors of total degree <= maxlen, degree by degree
        for (std::size_t deg = 0; deg <= maxlen; ++deg) {
            std::vector<long long> v(n, 0);
            auto rec = [&](auto&& self, std::size_t idx, long long left) -> void {
                if (idx + 1 == n) {
                    v[idx] = left;
                    ExpVec ev(v, Signedness::Natural);
                    if (comm_irreducible(ev, *d_->comm)) {
                        if (out.size() >= cap) throw error("enumerate_elements: cap exceeded");
                        out.push_back(MonoidElement(d_, expvec_to_word(ev)));
                    }
                    return;
                }
                for (long long k = left; k >= 0; --k) {
                    v[idx] = k;
                    self(self, idx + 1, left - k);
                }
            };
            if (n == 0) {
                if (deg == 0) out.push_back(identity());
                continue;
            }
            rec(rec, 0, static_cast<long long>(deg));
        }
        return out;
    }
    const Alphabet& A = d_->alpha;
    std::vector<std::vector<Letter>> level{{}};
    out.push_back(identity());
    for (std::size_t len = 1; len <= maxlen && !level.empty(); ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : level) {
            for (Letter a = 0; a < static_cast<Letter>(A.size()); ++a) {
                std::vector<Letter> wa = w;
                wa.push_back(a);
                bool irr = true;
                for (const Rule& r : d_->sts->rules()) {
                    const auto& l = r.lhs.letters();
                    if (l.size() > wa.size()) continue;
                    if (std::equal(l.rbegin(), l.rend(), wa.rbegin())) { irr = false; break; }
                }
                if (!irr) continue;
                if (out.size() >= cap) throw error("enumerate_elements: cap exceeded");
                out.push_back(MonoidElement(d_, Word(A, wa)));
                next.push_back(std::move(wa));
            }
        }
        level = std::move(next);
    }
    return out;
}

inline ClassReport Presentation::validate_class() const {
    ClassReport rep;
    rep.convergent = d_->convergent;
    if (d_->comm) {
        rep.class_consistent = d_->cls == StructureClass::CommutativeMonoid;
        return rep;
    }
    const SemiThueSystem& T = *d_->sts;
    const Alphabet& A = d_->alpha;
    rep.monadic = true;
    rep.two_monadic = true;
    rep.length_reducing = true;
    for (const Rule& r : T.rules()) {
        if (r.rhs.length() > 1 || r.rhs.length() > r.lhs.length()) rep.monadic = false;
        if (r.rhs.length() > 1 || r.lhs.length() > 2 || r.rhs.length() >= r.lhs.length())
            rep.two_monadic = false;
        if (r.rhs.length() >= r.lhs.length()) rep.length_reducing = false;
    }
    rep.group_system = detail::is_group_system(T);

    // commutation / power shapes on paired alphabets
    if (A.size() % 2 == 0 && A.has_involution()) {
        bool paired = A.size() > 0;
        for (Letter a = 0; a + 1 < static_cast<Letter>(A.size()); a += 2)
            if (A.inverse_letter(a) != a + 1) paired = false;
        if (paired) {
            const std::size_t n = A.size() / 2;
            auto gen = [](Letter l) { return static_cast<std::size_t>(l) / 2; };
            std::size_t cab = 0, cni = 0, cp = 0, comm_rules = 0;
            for (const Rule& r : T.rules()) {
                if (r.lhs.length() != 2) continue;
                const Letter x = r.lhs.at(0), y = r.lhs.at(1);
                const std::size_t j = gen(x), i = gen(y);
                if (j <= i) continue; // not of shape a_j^δ a_i^δ'
                ++comm_rules;
                const auto& rhs = r.rhs.letters();
                // CAB / CNI: rhs = a_i^δ' a_j^δ z, z over generators > j
                if (rhs.size() >= 2 && rhs[0] == y && rhs[1] == x) {
                    bool tail_ok = true;
                    for (std::size_t k = 2; k < rhs.size(); ++k)
                        if (gen(rhs[k]) <= j) tail_ok = false;
                    if (tail_ok) {
                        ++cni;
                        if (rhs.size() == 2) ++cab;
                        continue;
                    }
                }
                // CP: rhs = a_i^δ' z with z over generators > i
                if (!rhs.empty() && rhs[0] == y) {
                    bool tail_ok = true;
                    for (std::size_t k = 1; k < rhs.size(); ++k)
                        if (gen(rhs[k]) <= i) tail_ok = false;
                    if (tail_ok) ++cp;
                }
            }
            const std::size_t expect = n * (n - 1) / 2 * 4;
            rep.commutation_cab = comm_rules == expect && cab == expect;
            rep.commutation_cni = comm_rules == expect && cni == expect;
            rep.commutation_cp = comm_rules == expect && (cp + cni) == expect;
            for (const Rule& r : T.rules()) {
                const auto& l = r.lhs.letters();
                if (l.empty()) continue;
                bool same_letter = true;
                for (Letter x : l) same_letter &= (x == l[0]);
                if (!same_letter) continue;
                const bool positive = l[0] % 2 == 1;
                if (positive && l.size() >= 2) rep.has_power_rules = true;
                if (!positive && l.size() == 1) rep.has_power_rules = true;
            }
        }
    }

    switch (d_->cls) {
        case StructureClass::FreeMonoid: rep.class_consistent = T.rules().empty(); break;
        case StructureClass::FreeGroup: rep.class_consistent = detail::is_trivial_rule_set(T); break;
        case StructureClass::FiniteMonoid: rep.class_consistent = rep.two_monadic && rep.convergent; break;
        case StructureClass::PlainGroup:
            rep.class_consistent = rep.two_monadic && rep.group_system && rep.convergent;
            break;
        case StructureClass::NilpotentCNI:
            rep.class_consistent = rep.commutation_cni && !rep.has_power_rules && rep.convergent;
            break;
        case StructureClass::ContextFreeGroup:
        case StructureClass::NilpotentExtension:
            rep.class_consistent = d_->finite_letters > 0 && rep.convergent;
            break;
        case StructureClass::Monoid: rep.class_consistent = rep.convergent; break;
        default: rep.class_consistent = false; break;
    }
    if (!rep.class_consistent)
        rep.notes.push_back("declared class '" + structure_class_name(d_->cls) +
                            "' not confirmed by rule shapes");
    return rep;
}

} // namespace gmr
