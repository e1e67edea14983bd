#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmr/comm_rewriting.hpp"
#include "gmr/expvec.hpp"
#include "gmr/rewriting.hpp"

namespace gmr {

// Structural class of a presentation. `Monoid` is the generic tag for
// convergent word presentations outside the special classes.
enum class StructureClass {
    Monoid,
    FreeMonoid,
    FreeGroup,
    FiniteMonoid,
    PlainGroup,
    ContextFreeGroup,
    CommutativeMonoid,
    NilpotentCNI,
    NilpotentExtension,
};

inline std::string structure_class_name(StructureClass c) {
    switch (c) {
        case StructureClass::Monoid: return "monoid";
        case StructureClass::FreeMonoid: return "free-monoid";
        case StructureClass::FreeGroup: return "free-group";
        case StructureClass::FiniteMonoid: return "finite-monoid";
        case StructureClass::PlainGroup: return "plain-group";
        case StructureClass::ContextFreeGroup: return "context-free-group";
        case StructureClass::CommutativeMonoid: return "commutative-monoid";
        case StructureClass::NilpotentCNI: return "nilpotent-cni";
        case StructureClass::NilpotentExtension: return "nilpotent-extension";
    }
    return "?";
}

namespace detail {

struct PresData {
    StructureClass cls = StructureClass::Monoid;
    Alphabet alpha;
    std::optional<SemiThueSystem> sts;
    std::optional<CommRewriteSystem> comm;
    bool convergent = false;
    bool is_group = false;
    std::size_t finite_letters = 0; // extension classes: count of E\{λ} letters
    std::size_t cni_generators = 0; // CNI presentations and extension inner parts
    // group classes: per-letter inverse as a normal-form word
    std::vector<std::vector<Letter>> letter_inverse;
};

} // namespace detail

class Presentation;

// A monoid element: a word in normal form tied to its presentation.
class MonoidElement {
public:
    MonoidElement() = default;

    const Word& word() const { return w_; }
    std::size_t length() const { return w_.length(); }
    bool is_identity() const { return w_.empty(); }
    Presentation home() const;

    bool operator==(const MonoidElement& o) const { return w_ == o.w_; }
    bool operator!=(const MonoidElement& o) const { return !(*this == o); }
    std::string str() const { return w_.empty() ? "1" : w_.str(); }

private:
    friend class Presentation;
    MonoidElement(std::shared_ptr<const detail::PresData> home, Word w)
        : home_(std::move(home)), w_(std::move(w)) {}

    std::shared_ptr<const detail::PresData> home_;
    Word w_;
};

struct ClassReport {
    bool monadic = false;
    bool two_monadic = false;
    bool length_reducing = false;
    bool group_system = false;
    bool commutation_cab = false;
    bool commutation_cni = false;
    bool commutation_cp = false;
    bool has_power_rules = false;
    bool convergent = false;
    bool class_consistent = false;
    std::vector<std::string> notes;
};

class Presentation {
public:
    Presentation() = default;

    static Presentation word_based(StructureClass cls, SemiThueSystem sts);
    static Presentation commutative(CommRewriteSystem sys);
    static Presentation from_mult_table(const std::vector<std::string>& elements,
                                        const std::vector<std::vector<std::size_t>>& table);
    // φ maps (finite letter name, inner letter name) to a word over the inner
    // alphabet; z maps pairs of finite letter names to inner words, with
    // missing entries defaulting to λ.
    static Presentation assemble_extension(
        const Presentation& finite_part, const Presentation& inner_part,
        const std::map<std::pair<std::string, std::string>, std::vector<std::string>>& phi,
        const std::map<std::pair<std::string, std::string>, std::vector<std::string>>& cocycle);

    StructureClass cls() const { return d_->cls; }
    bool is_commutative_based() const { return d_->comm.has_value(); }
    const Alphabet& alphabet() const { return d_->alpha; }
    const SemiThueSystem& sts() const {
        if (!d_->sts) throw error("presentation: not word-based");
        return *d_->sts;
    }
    const CommRewriteSystem& comm_system() const {
        if (!d_->comm) throw error("presentation: not commutative");
        return *d_->comm;
    }
    bool convergent() const { return d_->convergent; }
    bool is_group() const { return d_->is_group; }
    bool valid() const { return d_ != nullptr; }
    bool same(const Presentation& o) const { return d_ == o.d_; }

    std::size_t finite_letter_count() const { return d_->finite_letters; }
    std::size_t cni_generator_count() const { return d_->cni_generators; }
    bool is_extension() const {
        return d_->cls == StructureClass::ContextFreeGroup ||
               d_->cls == StructureClass::NilpotentExtension;
    }

    // ---- elements ----------------------------------------------------------

    MonoidElement identity() const { return MonoidElement(d_, Word(d_->alpha)); }

    MonoidElement element(const Word& raw) const {
        if (!raw.alphabet().same(d_->alpha))
            throw error("element: word over a different alphabet");
        return MonoidElement(d_, normalize(raw));
    }

    MonoidElement element_from_letters(const std::vector<std::string>& names) const {
        std::vector<Letter> ls;
        ls.reserve(names.size());
        for (const auto& n : names) {
            auto l = d_->alpha.find(n);
            if (!l) throw error("element: unknown symbol '" + n + "'");
            ls.push_back(*l);
        }
        return element(Word(d_->alpha, std::move(ls)));
    }

    MonoidElement element_from_expvec(const ExpVec& v) const {
        return element(expvec_to_word(v));
    }

    MonoidElement mul(const MonoidElement& a, const MonoidElement& b) const {
        check_home(a);
        check_home(b);
        if (d_->comm) {
            ExpVec s = expvec_add(to_expvec(a.word()), to_expvec(b.word()));
            return MonoidElement(d_, expvec_to_word(comm_normalform(s, *d_->comm)));
        }
        std::vector<Letter> ls = a.word().letters();
        ls.insert(ls.end(), b.word().letters().begin(), b.word().letters().end());
        detail::sts_normalize_inplace(ls, *d_->sts);
        return MonoidElement(d_, Word(d_->alpha, std::move(ls)));
    }

    Word letter_inverse_word(Letter a) const {
        if (!d_->is_group)
            throw error("letter_inverse_word: presentation does not present a group");
        return Word(d_->alpha, d_->letter_inverse.at(static_cast<std::size_t>(a)));
    }

    MonoidElement inverse(const MonoidElement& m) const {
        check_home(m);
        if (!d_->is_group)
            throw error("inverse: presentation does not present a group");
        MonoidElement acc = identity();
        const auto& ls = m.word().letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
            const auto& iw = d_->letter_inverse.at(static_cast<std::size_t>(*it));
            acc = mul(acc, MonoidElement(d_, Word(d_->alpha, iw)));
        }
        return acc;
    }

    // Left division: the unique x with a ∘ x = b (group classes).
    MonoidElement left_divide(const MonoidElement& a, const MonoidElement& b) const {
        return mul(inverse(a), b);
    }

    // Restriction of the completion ordering to normal forms; three-way.
    int compare(const MonoidElement& a, const MonoidElement& b) const {
        check_home(a);
        check_home(b);
        return compare_words_raw(a.word(), b.word());
    }

    int compare_words_raw(const Word& u, const Word& v) const {
        switch (d_->cls) {
            case StructureClass::CommutativeMonoid:
                return compare_expvec_deglex(to_expvec(u), to_expvec(v));
            case StructureClass::NilpotentCNI:
                return compare_expvec_syllable(to_expvec(u), to_expvec(v));
            case StructureClass::ContextFreeGroup: {
                if (u.length() != v.length()) return u.length() < v.length() ? -1 : 1;
                auto [eu, iu] = split_extension(u);
                auto [ev, iv] = split_extension(v);
                if (eu != ev) {
                    if (eu < 0) return -1; // λ is the smallest finite part
                    if (ev < 0) return 1;
                    return eu < ev ? 1 : -1;
                }
                return detail::cmp_lenlex({iu.letters().data(), iu.letters().size()},
                                          {iv.letters().data(), iv.letters().size()});
            }
            case StructureClass::NilpotentExtension: {
                auto [eu, iu] = split_extension(u);
                auto [ev, iv] = split_extension(v);
                if (eu != ev) {
                    if (eu < 0) return -1;
                    if (ev < 0) return 1;
                    return eu < ev ? 1 : -1;
                }
                return compare_expvec_syllable(inner_expvec(iu), inner_expvec(iv));
            }
            default:
                return gmr::compare_words(u, v, d_->sts->ordering());
        }
    }

    // ---- exponent-vector and extension views --------------------------------

    ExpVec to_expvec(const Word& w) const {
        if (d_->cls == StructureClass::CommutativeMonoid) {
            std::vector<long long> e(d_->comm->generator_count(), 0);
            for (Letter l : w.letters()) e[static_cast<std::size_t>(l)] += 1;
            return ExpVec(std::move(e), Signedness::Natural);
        }
        if (d_->cls == StructureClass::NilpotentCNI)
            return cni_expvec(w, 0, d_->cni_generators);
        throw error("to_expvec: presentation has no exponent-vector view");
    }

    Word expvec_to_word(const ExpVec& v) const {
        if (d_->cls == StructureClass::CommutativeMonoid) {
            if (v.size() != d_->comm->generator_count() || v.mode() != Signedness::Natural)
                throw error("expvec_to_word: arity or mode mismatch");
            std::vector<Letter> ls;
            for (std::size_t i = 0; i < v.size(); ++i)
                for (long long k = 0; k < v.at(i); ++k) ls.push_back(static_cast<Letter>(i));
            return Word(d_->alpha, std::move(ls));
        }
        if (d_->cls == StructureClass::NilpotentCNI) {
            if (v.size() != d_->cni_generators || v.mode() != Signedness::Integer)
                throw error("expvec_to_word: bad ordered group word");
            return ordered_word(v, 0);
        }
        throw error("expvec_to_word: presentation has no exponent-vector view");
    }

    // Split a normal form e·u of an extension presentation; -1 encodes e = λ.
    std::pair<Letter, Word> split_extension(const Word& w) const {
        if (!is_extension())
            throw error("split_extension: not an extension presentation");
        if (!w.empty() && static_cast<std::size_t>(w.at(0)) < d_->finite_letters)
            return {w.at(0), suffix_of(w, w.length() - 1)};
        return {-1, w};
    }

    ExpVec inner_expvec(const Word& w) const {
        return cni_expvec(w, d_->finite_letters, d_->cni_generators);
    }

    Word word_from_inner_expvec(const ExpVec& v) const {
        if (v.size() != d_->cni_generators || v.mode() != Signedness::Integer)
            throw error("word_from_inner_expvec: bad ordered group word");
        return ordered_word(v, d_->finite_letters);
    }

    std::vector<MonoidElement> enumerate_elements(std::size_t maxlen,
                                                  std::size_t cap = 2000000) const;

    ClassReport validate_class() const;

private:
    explicit Presentation(std::shared_ptr<const detail::PresData> d) : d_(std::move(d)) {}
    friend class MonoidElement;

    void check_home(const MonoidElement& m) const {
        if (m.home_ != d_) throw error("presentation mismatch");
    }

    Word normalize(const Word& w) const {
        if (d_->comm)
            return expvec_to_word(comm_normalform(to_expvec(w), *d_->comm));
        return sts_normalform(w, *d_->sts);
    }

    Word ordered_word(const ExpVec& v, std::size_t offset) const {
        std::vector<Letter> ls;
        const Letter off = static_cast<Letter>(offset);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Letter pos = off + static_cast<Letter>(2 * i + 1);
            const Letter neg = off + static_cast<Letter>(2 * i);
            for (long long k = 0; k < v.at(i); ++k) ls.push_back(pos);
            for (long long k = 0; k > v.at(i); --k) ls.push_back(neg);
        }
        return Word(d_->alpha, std::move(ls));
    }

    ExpVec cni_expvec(const Word& w, std::size_t offset, std::size_t gens) const {
        std::vector<long long> e(gens, 0);
        std::size_t prev = 0;
        bool started = false;
        for (Letter l : w.letters()) {
            if (static_cast<std::size_t>(l) < offset)
                throw error("ordered word: finite-part letter inside inner word");
            const std::size_t raw = static_cast<std::size_t>(l) - offset;
            const std::size_t gen = raw / 2;
            if (gen >= gens) throw error("ordered word: letter outside inner alphabet");
            if (started && gen < prev)
                throw error("not an ordered group word: '" + w.str() + "'");
            prev = gen;
            started = true;
            e[gen] += (raw % 2 == 1) ? 1 : -1;
        }
        return ExpVec(std::move(e), Signedness::Integer);
    }

    std::shared_ptr<const detail::PresData> d_;
};

inline Presentation MonoidElement::home() const { return Presentation(home_); }

} // namespace gmr

#include "gmr/presentation_build.hpp"
