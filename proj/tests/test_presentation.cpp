#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace gmr;
using fixtures::mkword;

TEST_CASE("element construction normalizes") {
    auto D = fixtures::dihedral();
    CHECK(D.element(mkword(D.alphabet(), "ab")) == D.element_from_letters({"c"}));
    CHECK(D.element(Word(D.alphabet())) == D.identity());

    Alphabet A({"a"});
    auto Z3 = Presentation::word_based(StructureClass::Monoid,
                                       fixtures::mksts(A, {{"aaa", ""}}));
    CHECK(Z3.element(mkword(A, "aaaa")) == Z3.element(mkword(A, "a")));
    CHECK_THROWS_AS(D.element_from_letters({"z"}), error);
}

TEST_CASE("multiplication") {
    auto D = fixtures::dihedral();
    auto el = [&D](const std::string& s) { return D.element(mkword(D.alphabet(), s)); };
    CHECK(D.mul(el("a"), el("b")) == el("c"));
    CHECK(D.mul(el("ba"), D.identity()) == el("ba"));
    CHECK(D.mul(D.identity(), el("ba")) == el("ba"));

    SECTION("associativity on random triples") {
        std::mt19937 rng(5);
        auto rnd = [&] {
            std::vector<Letter> ls;
            for (int k = 0; k < static_cast<int>(rng() % 6); ++k)
                ls.push_back(static_cast<Letter>(rng() % 3));
            return D.element(Word(D.alphabet(), ls));
        };
        for (int i = 0; i < 200; ++i) {
            auto x = rnd(), y = rnd(), z = rnd();
            CHECK(D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z)));
        }
    }
}

TEST_CASE("nilpotent class-2 multiplication") {
    auto N = fixtures::nilpotent_class2();
    auto iv = [](long long x, long long y, long long z) {
        return ExpVec({x, y, z}, Signedness::Integer);
    };
    // (ba, ab): a2 a1 ∘ a1 a2 = a1^2 a2^2 a3. In exponents:
    // (0,1,0) ∘ (1,1,0) -> i3 + j3 + i2*j1 = 0 + 0 + 1.
    auto m1 = N.element_from_expvec(iv(0, 1, 0));
    auto m2 = N.element_from_expvec(iv(1, 0, 0));
    CHECK(N.mul(m1, m2) == N.element_from_expvec(iv(1, 1, 1)));

    SECTION("collection formula on a grid") {
        for (long long i1 = -2; i1 <= 2; ++i1)
            for (long long i2 = -2; i2 <= 2; ++i2)
                for (long long j1 = -2; j1 <= 2; ++j1)
                    for (long long j2 = -2; j2 <= 2; ++j2) {
                        auto x = N.element_from_expvec(iv(i1, i2, 1));
                        auto y = N.element_from_expvec(iv(j1, j2, -1));
                        auto expect = iv(i1 + j1, i2 + j2, 1 - 1 + i2 * j1);
                        CHECK(N.mul(x, y) == N.element_from_expvec(expect));
                        // products of normal forms stay ordered group words
                        CHECK_NOTHROW(N.to_expvec(N.mul(x, y).word()));
                    }
    }
}

TEST_CASE("inverse") {
    auto F = fixtures::free_group_x();
    auto x = F.element_from_letters({"x"});
    CHECK(F.inverse(x) == F.element_from_letters({"X"}));
    CHECK(F.inverse(F.identity()) == F.identity());
    CHECK(F.mul(x, F.inverse(x)) == F.identity());

    Alphabet A({"a"});
    auto Z3 = Presentation::word_based(StructureClass::Monoid,
                                       fixtures::mksts(A, {{"aaa", ""}}));
    REQUIRE(Z3.is_group());
    CHECK(Z3.inverse(Z3.element(mkword(A, "a"))) == Z3.element(mkword(A, "aa")));

    auto D = fixtures::dihedral();
    std::mt19937 rng(9);
    for (int i = 0; i < 100; ++i) {
        std::vector<Letter> ls;
        for (int k = 0; k < static_cast<int>(rng() % 6); ++k)
            ls.push_back(static_cast<Letter>(rng() % 3));
        auto m = D.element(Word(D.alphabet(), ls));
        CHECK(D.mul(m, D.inverse(m)) == D.identity());
        CHECK(D.mul(D.inverse(m), m) == D.identity());
    }

    auto M = fixtures::acd_monoid();
    CHECK_FALSE(M.is_group());
    CHECK_THROWS_AS(M.inverse(M.identity()), error);
}

TEST_CASE("element comparison") {
    auto D = fixtures::dihedral();
    auto el = [&D](const std::string& s) { return D.element(mkword(D.alphabet(), s)); };
    CHECK(D.compare(el("a"), el("b")) > 0);
    CHECK(D.compare(el("ab"), el("c")) == 0); // ab normalizes to c
    CHECK(D.compare(D.identity(), el("c")) < 0);

    auto N = fixtures::nilpotent_class2();
    auto iv = [](long long x, long long y, long long z) {
        return ExpVec({x, y, z}, Signedness::Integer);
    };
    CHECK(N.compare(N.element_from_expvec(iv(-1, 1, 0)), N.element_from_expvec(iv(1, 0, 0))) > 0);

    SECTION("uv is least when multiplied out") {
        // normal form of a concatenation never exceeds the raw concatenation
        std::mt19937 rng(23);
        for (int i = 0; i < 300; ++i) {
            std::vector<Letter> u, v;
            for (int k = 0; k < static_cast<int>(rng() % 5); ++k)
                u.push_back(static_cast<Letter>(rng() % 3));
            for (int k = 0; k < static_cast<int>(rng() % 5); ++k)
                v.push_back(static_cast<Letter>(rng() % 3));
            auto mu = D.element(Word(D.alphabet(), u));
            auto mv = D.element(Word(D.alphabet(), v));
            const Word raw = concat(mu.word(), mv.word());
            CHECK(D.compare_words_raw(D.mul(mu, mv).word(), raw) <= 0);
        }
    }
}

TEST_CASE("multiplication tables") {
    SECTION("Z2") {
        auto P = Presentation::from_mult_table({"e", "a"}, {{0, 1}, {1, 0}});
        REQUIRE(P.alphabet().size() == 1);
        REQUIRE(P.sts().rules().size() == 1);
        CHECK(P.sts().rules()[0].lhs == mkword(P.alphabet(), "aa"));
        CHECK(P.sts().rules()[0].rhs.empty());
        CHECK(P.is_group());
    }
    SECTION("Z3") {
        auto P = Presentation::from_mult_table({"e", "a", "b"},
                                               {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
        auto has = [&P](const std::string& l, const std::string& r) {
            for (const auto& rule : P.sts().rules())
                if (rule.lhs == mkword(P.alphabet(), l) && rule.rhs == mkword(P.alphabet(), r))
                    return true;
            return false;
        };
        CHECK(has("ab", ""));
        CHECK(has("aa", "b"));
        CHECK(has("bb", "a"));
        CHECK(P.is_group());
        // exactly |elements| irreducible words
        CHECK(P.enumerate_elements(5).size() == 3);
    }
    SECTION("non-associative table is rejected") {
        // (a∘a)∘a = b∘a = e but a∘(a∘a) = a∘b = a
        CHECK_THROWS_AS(Presentation::from_mult_table(
                            {"e", "a", "b"}, {{0, 1, 2}, {1, 2, 1}, {2, 0, 2}}),
                        error);
    }
    SECTION("missing identity is rejected") {
        CHECK_THROWS_AS(Presentation::from_mult_table({"a", "b"}, {{1, 1}, {1, 1}}), error);
    }
}

TEST_CASE("extension assembly") {
    SECTION("Z2 extension of the free group on x") {
        auto G = fixtures::cfg_zx();
        CHECK(G.cls() == StructureClass::ContextFreeGroup);
        CHECK(G.is_group());
        CHECK(G.finite_letter_count() == 1);
        auto has = [&G](const std::string& l, const std::string& r) {
            for (const auto& rule : G.sts().rules())
                if (rule.lhs == mkword(G.alphabet(), l) && rule.rhs == mkword(G.alphabet(), r))
                    return true;
            return false;
        };
        CHECK(has("xX", ""));
        CHECK(has("Xx", ""));
        CHECK(has("aa", ""));
        CHECK(has("xa", "ax"));
        CHECK(has("Xa", "aX"));
        CHECK(G.sts().rules().size() == 5);
        // ax ∘ a = a x a = a a x = x
        auto el = [&G](const std::string& s) { return G.element(mkword(G.alphabet(), s)); };
        CHECK(G.mul(el("ax"), el("a")) == el("x"));
        CHECK(G.mul(el("a"), G.inverse(el("a"))) == G.identity());
    }
    SECTION("trivial finite part returns the inner presentation") {
        auto E = Presentation::from_mult_table({"e"}, {{0}});
        auto F = fixtures::free_group_x();
        auto G = Presentation::assemble_extension(E, F, {}, {});
        CHECK(G.same(F));
    }
    SECTION("inconsistent conjugation data is rejected") {
        auto E = Presentation::from_mult_table({"1", "a"}, {{0, 1}, {1, 0}});
        auto F = fixtures::free_group_x();
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> phi;
        phi[{"a", "x"}] = {"x", "x"};
        phi[{"a", "X"}] = {"X", "X"};
        CHECK_THROWS_AS(Presentation::assemble_extension(E, F, phi, {}), error);
    }
}

TEST_CASE("class validation") {
    SECTION("dihedral five-rule system") {
        auto rep = fixtures::dihedral().validate_class();
        CHECK(rep.two_monadic);
        CHECK(rep.monadic);
        CHECK(rep.convergent);
        // letter c has no cancellation rule, so this is not a group system
        CHECK_FALSE(rep.group_system);
        CHECK(fixtures::dihedral().is_group());
    }
    SECTION("plain 18-rule system") {
        auto rep = fixtures::plain18().validate_class();
        CHECK(rep.two_monadic);
        CHECK(rep.group_system);
        CHECK(rep.convergent);
        CHECK(rep.class_consistent);
    }
    SECTION("nilpotent CNI system") {
        auto rep = fixtures::nilpotent_class2().validate_class();
        CHECK(rep.commutation_cni);
        CHECK_FALSE(rep.monadic);
        CHECK_FALSE(rep.has_power_rules);
        CHECK(rep.class_consistent);
    }
    SECTION("ab -> a is not a group system") {
        Alphabet A({"a", "b"});
        auto P = Presentation::word_based(StructureClass::Monoid,
                                          fixtures::mksts(A, {{"ab", "a"}}));
        CHECK_FALSE(P.validate_class().group_system);
        CHECK_FALSE(P.is_group());
    }
}

TEST_CASE("element enumeration") {
    auto F = fixtures::free_group_x();
    // λ, x, X, xx, XX, ...
    CHECK(F.enumerate_elements(3).size() == 7);
    auto C = fixtures::acd_commutative();
    auto els = C.enumerate_elements(2);
    for (const auto& m : els) CHECK(comm_irreducible(C.to_expvec(m.word()), C.comm_system()));
    // degree <= 2 irreducible: 1; a b c d e; aa ab bb cc dd ee ad ae bd be cd ce de - minus reducibles ac, bc
    CHECK(els.size() == 19);
}
