#pragma once

// Shared presentation fixtures mirroring the data/ corpus.

#include <string>
#include <vector>

#include "gmr/presentation.hpp"

namespace fixtures {

using namespace gmr;

inline Word mkword(const Alphabet& A, const std::string& s) {
    std::vector<Letter> ls;
    for (char c : s) {
        auto l = A.find(std::string(1, c));
        if (!l) throw error(std::string("fixture: unknown letter ") + c);
        ls.push_back(*l);
    }
    return Word(A, ls);
}

inline SemiThueSystem mksts(const Alphabet& A,
                            const std::vector<std::pair<std::string, std::string>>& rs,
                            OrderingSpec ord = OrderingSpec::lenlex(), bool ext = false) {
    std::vector<Rule> rules;
    for (const auto& [l, r] : rs) rules.push_back({mkword(A, l), mkword(A, r)});
    return SemiThueSystem(A, rules, ord, ext);
}

// The infinite dihedral group: {a² -> λ, b² -> λ, ab -> c, ac -> b, cb -> a},
// length-lex with a ≻ b ≻ c. A plain group.
inline Presentation dihedral() {
    Alphabet B({"a", "b", "c"});
    auto sts = mksts(B, {{"aa", ""}, {"bb", ""}, {"ab", "c"}, {"ac", "b"}, {"cb", "a"}});
    return Presentation::word_based(StructureClass::Monoid, sts);
}

// Free group on x (letters X = x^-1 first).
inline Presentation free_group_x() {
    Alphabet A({"X", "x"}, {{"x", "X"}});
    auto sts = mksts(A, {{"xX", ""}, {"Xx", ""}});
    return Presentation::word_based(StructureClass::FreeGroup, sts);
}

// Free group on x, y.
inline Presentation free_group_xy() {
    Alphabet A({"X", "x", "Y", "y"}, {{"x", "X"}, {"y", "Y"}});
    auto sts = mksts(A, {{"xX", ""}, {"Xx", ""}, {"yY", ""}, {"Yy", ""}});
    return Presentation::word_based(StructureClass::FreeGroup, sts);
}

// Word version of {ac -> d, bc -> e}, length-lex a ≻ b ≻ c ≻ d ≻ e.
inline Presentation acd_monoid() {
    Alphabet A({"a", "b", "c", "d", "e"});
    return Presentation::word_based(StructureClass::Monoid,
                                    mksts(A, {{"ac", "d"}, {"bc", "e"}}));
}

// Commutative version of the same system.
inline Presentation acd_commutative() {
    auto nat = [](std::vector<long long> e) { return ExpVec(std::move(e), Signedness::Natural); };
    CommRewriteSystem Tc({"a", "b", "c", "d", "e"},
                         {{nat({1, 0, 1, 0, 0}), nat({0, 0, 0, 1, 0})},
                          {nat({0, 1, 1, 0, 0}), nat({0, 0, 0, 0, 1})}});
    return Presentation::commutative(Tc);
}

// Free commutative monoid on the given generators.
inline Presentation free_commutative(std::vector<std::string> gens) {
    return Presentation::commutative(CommRewriteSystem(std::move(gens), {}));
}

// Free nilpotent group of class 2 on two generators: letters
// A=a1^-1, a=a1, B=a2^-1, b=a2, C=a3^-1, c=a3 with a3 central, [a2,a1] = a3.
inline Presentation nilpotent_class2() {
    Alphabet A({"A", "a", "B", "b", "C", "c"}, {{"a", "A"}, {"b", "B"}, {"c", "C"}});
    auto sts = mksts(A,
                     {
                         {"ba", "abc"},
                         {"BA", "ABc"},
                         {"Ba", "aBC"},
                         {"bA", "AbC"},
                         {"cb", "bc"},
                         {"cB", "Bc"},
                         {"Cb", "bC"},
                         {"CB", "BC"},
                         {"ca", "ac"},
                         {"cA", "Ac"},
                         {"Ca", "aC"},
                         {"CA", "AC"},
                         {"aA", ""},
                         {"Aa", ""},
                         {"bB", ""},
                         {"Bb", ""},
                         {"cC", ""},
                         {"Cc", ""},
                     },
                     OrderingSpec::syllable(false));
    return Presentation::word_based(StructureClass::NilpotentCNI, sts);
}

// An 18-rule 2-monadic convergent group presentation of a plain group;
// every generator has a length-1 inverse.
inline Presentation plain18() {
    // P = b^-1, Q = c^-1; a and d are their own inverses
    Alphabet B({"a", "P", "b", "Q", "c", "d"});
    auto sts = mksts(B, {
                            {"aa", ""},
                            {"dd", ""},
                            {"bP", ""},
                            {"Pb", ""},
                            {"cQ", ""},
                            {"Qc", ""},
                            {"ab", "c"},
                            {"ac", "b"},
                            {"Qb", "d"},
                            {"Qa", "P"},
                            {"cP", "a"},
                            {"cd", "b"},
                            {"dP", "Q"},
                            {"dQ", "P"},
                            {"bQ", "a"},
                            {"bd", "c"},
                            {"Pa", "Q"},
                            {"Pc", "d"},
                        });
    return Presentation::word_based(StructureClass::PlainGroup, sts);
}

// The infinite cyclic group presented as a Z2-extension of its index-2
// subgroup <x>, with the nontrivial cocycle e∘e = x.
inline Presentation cfg_z_cocycle() {
    Presentation E = Presentation::from_mult_table({"1", "e"}, {{0, 1}, {1, 0}});
    Presentation F = free_group_x();
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> phi, z;
    phi[{"e", "x"}] = {"x"};
    phi[{"e", "X"}] = {"X"};
    z[{"e", "e"}] = {"x"};
    return Presentation::assemble_extension(E, F, phi, z);
}

// The infinite dihedral group as a virtually free presentation: conjugation
// by the order-2 letter inverts the free generator.
inline Presentation cfg_dihedral() {
    Presentation E = Presentation::from_mult_table({"1", "a"}, {{0, 1}, {1, 0}});
    Presentation F = free_group_x();
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> phi;
    phi[{"a", "x"}] = {"X"};
    phi[{"a", "X"}] = {"x"};
    return Presentation::assemble_extension(E, F, phi, {});
}

// Direct product of Z2 with the free nilpotent class-2 group.
inline Presentation nilpotent_extension() {
    Presentation E = Presentation::from_mult_table({"1", "e"}, {{0, 1}, {1, 0}});
    Presentation N = nilpotent_class2();
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> phi;
    for (const char* l : {"a", "A", "b", "B", "c", "C"})
        phi[{"e", l}] = {l};
    return Presentation::assemble_extension(E, N, phi, {});
}

// Context-free group: E = <a | a² = λ>, F = <x>, φ_a the identity.
inline Presentation cfg_zx() {
    Presentation E = Presentation::from_mult_table({"1", "a"}, {{0, 1}, {1, 0}});
    Presentation F = free_group_x();
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> phi;
    phi[{"a", "x"}] = {"x"};
    phi[{"a", "X"}] = {"X"};
    return Presentation::assemble_extension(E, F, phi, {});
}

} // namespace fixtures
