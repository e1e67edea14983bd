// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Time limits are enforced with the checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "gmr/gmr.hpp"
#include "oracles.hpp"

using namespace gmr;
using Clock = std::chrono::steady_clock;

namespace {

const std::filesystem::path data = GMR_DATA_DIR;

struct Outcome {
    bool pass = true;
    std::string note;
    double seconds = 0;
};

int failures = 0;

void run(int id, const std::string& name, double time_limit,
         const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.note = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (time_limit > 0 && out.seconds > time_limit) {
        out.pass = false;
        if (!out.note.empty()) out.note += "; ";
        out.note += "time limit exceeded";
    }
    std::printf("criterion %2d: %s  (%.2fs)  %s%s%s\n", id, out.pass ? "PASS" : "FAIL",
                out.seconds, name.c_str(), out.note.empty() ? "" : " -- ",
                out.note.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
}

void require(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.pass) {
        out.pass = false;
        out.note = what;
    }
}

Polynomial parse(const Presentation& P, const std::string& s) {
    return io::parse_polynomial(P, s);
}

// shared fixtures for criteria 6-8
struct CompletedInstance {
    Presentation pres;
    std::vector<Polynomial> input;
    GBResult result;
    ReductionMode mode;
};

std::vector<CompletedInstance> completed;

Polynomial random_poly(const Presentation& P, std::mt19937& rng, int max_terms,
                       std::size_t max_len) {
    const auto elems = P.enumerate_elements(max_len);
    Polynomial p(P);
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int i = 0; i < n; ++i) {
        int c = static_cast<int>(rng() % 5) - 2;
        if (c == 0) c = 1;
        p.add_term(elems[rng() % elems.size()], Rat(c));
    }
    return p;
}

// Convergent monadic-style commutative systems: left sides of degree 2 or 3,
// right sides a single generator or empty. Rejection-sampled until locally
// confluent.
Presentation random_comm_presentation(std::mt19937& rng) {
    while (true) {
        const std::size_t ngens = 2 + rng() % 2;
        std::vector<std::string> gens;
        for (std::size_t i = 0; i < ngens; ++i) gens.push_back(std::string(1, char('a' + i)));
        std::vector<CommRule> rules;
        const std::size_t nrules = rng() % 3;
        for (std::size_t r = 0; r < nrules; ++r) {
            std::vector<long long> lhs(ngens, 0), rhs(ngens, 0);
            const int deg = 2 + static_cast<int>(rng() % 2);
            for (int d = 0; d < deg; ++d) lhs[rng() % ngens] += 1;
            if (rng() % 3) rhs[rng() % ngens] = 1;
            ExpVec l(lhs, Signedness::Natural);
            ExpVec rv(rhs, Signedness::Natural);
            if (l.is_zero() || compare_expvec_deglex(l, rv) <= 0) continue;
            rules.push_back({l, rv});
        }
        try {
            CommRewriteSystem sys(gens, rules);
            if (!comm_locally_confluent(sys)) continue;
            return Presentation::commutative(std::move(sys));
        } catch (const error&) {
            continue;
        }
    }
}

} // namespace

int main() {
    // 1. five-rule corpus identities
    run(1, "five-rule corpus: product, strong self-reduction, right normal form", 1.0,
        [&](Outcome& out) {
            auto D = io::load_presentation(data / "dihedral.pres");
            const auto p = parse(D, "a + b + c");
            require(out, right_mul(p, D.element_from_letters({"b"})) == parse(D, "c + 1 + a"),
                    "(a+b+c)∘b != c+1+a");
            auto st = reduce_step(p, p, ReductionMode::Strong);
            require(out, st.has_value() && st->result == parse(D, "b - 1"),
                    "strong self-reduction != b-1");
            std::vector<Polynomial> F{parse(D, "a + c + 1"), parse(D, "b - 1")};
            require(out,
                    normalform(parse(D, "ba + ca + 1"), F, ReductionMode::Right) ==
                        parse(D, "ca - c"),
                    "right normal form != ca-c");
        });

    // 2. free-group saturation
    run(2, "free-group mates: exact values and idempotence on 500 random polynomials", 10.0,
        [&](Outcome& out) {
            auto F1 = io::load_presentation(data / "free_x.pres");
            const auto p = parse(F1, "x^4 + x^2 + 1");
            const auto ca = can_acan(p);
            require(out, ca.can == parse(F1, "x^3 + x + x^-1"), "can(x^4+x^2+1) wrong");
            require(out, ca.acan == parse(F1, "x^2 + 1 + x^-2"), "acan(x^4+x^2+1) wrong");
            auto F2 = io::load_presentation(data / "free_xy.pres");
            std::mt19937 rng(2024);
            int done = 0;
            while (done < 500) {
                const auto q = random_poly(F2, rng, 4, 6);
                if (q.is_zero()) continue;
                ++done;
                const auto m = can_acan(q);
                if (!(can_acan(m.can).can == m.can && can_acan(m.can).acan == m.acan &&
                      can_acan(m.acan).can == m.acan && can_acan(m.acan).acan == m.can)) {
                    require(out, false, "mate idempotence failed for " + q.str());
                    return;
                }
            }
        });

    // 3. plain-group saturation
    run(3, "plain group: Sat_p(ad+a+1) and its s-polynomial", 1.0, [&](Outcome& out) {
        auto P = io::load_presentation(data / "plain18.pres");
        const auto p = parse(P, "a*d + a + 1");
        const auto res = plain_sat(p);
        require(out, res.status == SatStatus::Complete, "saturation not complete");
        const std::vector<Polynomial> expect{
            parse(P, "a*d + a + 1"), parse(P, "a*d + a + d"), parse(P, "a*B + a*C + B"),
            parse(P, "a*B + a*C + C")};
        require(out, res.polys.size() == 4, "saturating set size != 4");
        for (const auto& e : expect) {
            bool found = false;
            for (const auto& q : res.polys) found |= q == e;
            require(out, found, "missing " + e.str());
        }
        auto s = spolynomial(parse(P, "a*d + a + 1"), parse(P, "a*d + a + d"),
                             ReductionMode::Prefix);
        require(out, s.has_value() && *s == parse(P, "d - 1"), "spol != d-1");
    });

    // 4. prefix Gröbner basis check
    run(4, "prefix basis check true, prefix saturation check false", 1.0, [&](Outcome& out) {
        auto P = io::load_presentation(data / "acd.pres");
        auto F = io::load_polynomials(P, data / "acd_basis.poly");
        require(out, prefix_gb_check(F), "prefix_gb_check != true");
        require(out, !saturated_check(F, ReductionMode::Prefix), "saturated_check != false");
    });

    // 5. nilpotent multiplication grid
    run(5, "nilpotent collection formula on the [-3,3]^6 grid", 5.0, [&](Outcome& out) {
        auto N = io::load_presentation(data / "nilp2.pres");
        auto iv = [](long long x, long long y, long long z) {
            return ExpVec({x, y, z}, Signedness::Integer);
        };
        for (long long i1 = -3; i1 <= 3; ++i1)
            for (long long i2 = -3; i2 <= 3; ++i2)
                for (long long i3 = -3; i3 <= 3; ++i3)
                    for (long long j1 = -3; j1 <= 3; ++j1)
                        for (long long j2 = -3; j2 <= 3; ++j2)
                            for (long long j3 = -3; j3 <= 3; ++j3) {
                                const auto prod =
                                    N.mul(N.element_from_expvec(iv(i1, i2, i3)),
                                          N.element_from_expvec(iv(j1, j2, j3)));
                                const auto e = N.to_expvec(prod.word());
                                if (e.at(0) != i1 + j1 || e.at(1) != i2 + j2 ||
                                    e.at(2) != i3 + j3 + i2 * j1) {
                                    require(out, false, "formula mismatch");
                                    return;
                                }
                            }
    });

    // 6. termination of the class procedures
    run(6, "terminating completions on random inputs (50/50/50/20)", 0, [&](Outcome& out) {
        std::mt19937 rng(77);
        auto record = [&](Presentation P, std::vector<Polynomial> F, GBResult res,
                          ReductionMode mode, double dt) {
            require(out, res.status == GBStatus::Complete, "a run did not complete");
            require(out, dt <= 60.0, "a run exceeded 60s");
            completed.push_back({std::move(P), std::move(F), std::move(res), mode});
        };
        for (int i = 0; i < 50; ++i) {
            auto P = random_comm_presentation(rng);
            std::vector<Polynomial> F;
            const int nf = 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < nf; ++k) {
                auto p = random_poly(P, rng, 3, 4);
                if (!p.is_zero()) F.push_back(p);
            }
            if (F.empty()) F.push_back(parse(P, "a + 1"));
            const auto t0 = Clock::now();
            auto res = comm_gb(F);
            record(P, F, std::move(res), ReductionMode::Commutative,
                   std::chrono::duration<double>(Clock::now() - t0).count());
        }
        auto FG = io::load_presentation(data / "free_xy.pres");
        for (int i = 0; i < 50; ++i) {
            std::vector<Polynomial> F;
            const int nf = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < nf; ++k) {
                auto p = random_poly(FG, rng, 3, 4);
                if (!p.is_zero()) F.push_back(p);
            }
            if (F.empty()) continue;
            const auto t0 = Clock::now();
            auto res = free_group_gb(F);
            record(FG, F, std::move(res), ReductionMode::Prefix,
                   std::chrono::duration<double>(Clock::now() - t0).count());
        }
        auto CF = io::load_presentation(data / "cfg_zx.pres");
        for (int i = 0; i < 50; ++i) {
            std::vector<Polynomial> F;
            const int nf = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < nf; ++k) {
                auto p = random_poly(CF, rng, 3, 3);
                if (!p.is_zero()) F.push_back(p);
            }
            if (F.empty()) continue;
            const auto t0 = Clock::now();
            auto res = context_free_gb(F);
            record(CF, F, std::move(res), ReductionMode::Prefix,
                   std::chrono::duration<double>(Clock::now() - t0).count());
        }
        auto N = io::load_presentation(data / "nilp2.pres");
        auto iv = [](long long x, long long y, long long z) {
            return ExpVec({x, y, z}, Signedness::Integer);
        };
        for (int i = 0; i < 20; ++i) {
            std::vector<Polynomial> F;
            for (int k = 0; k < 2; ++k) {
                Polynomial p(N);
                const int nt = 1 + static_cast<int>(rng() % 2);
                for (int t = 0; t < nt; ++t) {
                    int c = static_cast<int>(rng() % 5) - 2;
                    if (c == 0) c = 1;
                    p.add_term(N.element_from_expvec(iv(static_cast<long long>(rng() % 5) - 2,
                                                        static_cast<long long>(rng() % 5) - 2,
                                                        static_cast<long long>(rng() % 5) - 2)),
                               Rat(c));
                }
                if (!p.is_zero()) F.push_back(p);
            }
            if (F.empty()) continue;
            const auto t0 = Clock::now();
            auto res = nilpotent_gb(F);
            record(N, F, std::move(res), ReductionMode::QuasiCommutative,
                   std::chrono::duration<double>(Clock::now() - t0).count());
        }
    });

    // 7. oracle equivalence on every completed basis
    run(7, "oracle equivalence and witness replay on every completed basis", 0,
        [&](Outcome& out) {
            std::mt19937 rng(99);
            require(out, !completed.empty(), "no completed bases recorded");
            for (const auto& inst : completed) {
                if (!out.pass) break;
                if (inst.input.empty() || inst.result.basis.empty()) continue;
                const auto elems = inst.pres.enumerate_elements(2);
                for (int q = 0; q < 100 && out.pass; ++q) {
                    Polynomial h = Polynomial::zero(inst.pres);
                    const int parts = 1 + static_cast<int>(rng() % 3);
                    for (int k = 0; k < parts; ++k) {
                        int c = static_cast<int>(rng() % 5) - 2;
                        if (c == 0) c = 2;
                        h = linear(1, h, Rat(c),
                                   right_mul(inst.input[rng() % inst.input.size()],
                                             elems[rng() % elems.size()]));
                    }
                    require(out, normalform(h, inst.result.basis, inst.mode).is_zero(),
                            "ideal element does not normalize to zero");
                }
                for (int q = 0; q < 100 && out.pass; ++q) {
                    Polynomial g = Polynomial::zero(inst.pres);
                    const int parts = 1 + static_cast<int>(rng() % 2);
                    for (int k = 0; k < parts; ++k) {
                        int c = 1 + static_cast<int>(rng() % 3);
                        g = linear(1, g, Rat(c),
                                   right_mul(inst.input[rng() % inst.input.size()],
                                             elems[rng() % elems.size()]));
                    }
                    auto bf = brute_force_member(g, inst.input, 2);
                    require(out, bf.verdict == Verdict::Member,
                            "constructed combination not certified by the oracle");
                    if (!out.pass) break;
                    require(out,
                            replay_witness(bf.witness, inst.input, inst.pres) == g,
                            "witness replay mismatch");
                    require(out,
                            member(g, inst.result, inst.mode).verdict == Verdict::Member,
                            "oracle member but basis disagrees");
                }
            }
        });

    // 8. uniqueness under input permutation
    run(8, "reduced bases are permutation invariant (10 instances x 10 shuffles)", 0,
        [&](Outcome& out) {
            std::mt19937 rng(555);
            struct Instance {
                Presentation P;
                std::vector<Polynomial> F;
                bool commutative;
            };
            std::vector<Instance> instances;
            auto D = io::load_presentation(data / "dihedral.pres");
            auto Z3 = io::load_presentation(data / "z3.pres");
            Alphabet AB({"a", "b"});
            auto FM = Presentation::word_based(StructureClass::FreeMonoid,
                                               fixtures::mksts(AB, {}));
            instances.push_back({D, {parse(D, "a + b + c"), parse(D, "c*c + 1")}, false});
            instances.push_back({D, {parse(D, "ba - c"), parse(D, "b - 1"), parse(D, "a + c")},
                                 false});
            instances.push_back({Z3, {parse(Z3, "a + b + 1"), parse(Z3, "b - 1")}, false});
            instances.push_back({FM, {parse(FM, "ab + b"), parse(FM, "ba + a"), parse(FM, "aa + ab")},
                                 false});
            instances.push_back({FM, {parse(FM, "a + b"), parse(FM, "bb + a")}, false});
            for (int i = 0; i < 5; ++i) {
                auto P = random_comm_presentation(rng);
                std::vector<Polynomial> F;
                for (int k = 0; k < 3; ++k) {
                    auto p = random_poly(P, rng, 3, 3);
                    if (!p.is_zero()) F.push_back(p);
                }
                if (F.empty()) F.push_back(parse(P, "a + 1"));
                instances.push_back({P, F, true});
            }
            for (auto& inst : instances) {
                const auto reference = inst.commutative ? comm_gb(inst.F, true).basis
                                                        : reduced_prefix_gb(inst.F).basis;
                for (int s = 0; s < 10 && out.pass; ++s) {
                    auto shuffled = inst.F;
                    std::shuffle(shuffled.begin(), shuffled.end(), rng);
                    const auto again = inst.commutative ? comm_gb(shuffled, true).basis
                                                        : reduced_prefix_gb(shuffled).basis;
                    bool equal = again.size() == reference.size();
                    for (std::size_t i = 0; equal && i < again.size(); ++i)
                        equal = again[i] == reference[i];
                    require(out, equal, "shuffled input produced a different reduced basis");
                }
                if (!out.pass) break;
            }
        });

    // 9. subgroup problem against the folded-graph enumeration
    run(9, "subgroup membership agrees with the subgroup graph on 50 words", 60.0,
        [&](Outcome& out) {
            auto F = io::load_presentation(data / "free_xy.pres");
            std::mt19937 rng(313);
            std::vector<std::vector<std::string>> sets{
                {"x x", "y", "x y x^-1"},
                {"x y", "y x"},
                {"x^2", "y^2"},
                {"x y x y y", "y"},
            };
            int tested = 0;
            for (const auto& words : sets) {
                std::vector<MonoidElement> S;
                for (const auto& w : words)
                    S.push_back(F.element(io::parse_word(F.alphabet(), w)));
                oracles::SubgroupGraph graph(F, S);
                const int quota = tested < 30 ? 13 : 12;
                for (int i = 0; i < quota; ++i) {
                    std::vector<Letter> ls;
                    const int len = static_cast<int>(rng() % 9);
                    for (int k = 0; k < len; ++k) ls.push_back(static_cast<Letter>(rng() % 4));
                    const auto w = F.element(Word(F.alphabet(), ls));
                    const auto ans = subgroup_member(w, S);
                    require(out, ans.verdict != Verdict::Unknown, "subgroup answer unknown");
                    require(out, (ans.verdict == Verdict::Member) == graph.accepts(w),
                            "disagreement with the subgroup graph on '" + w.str() + "'");
                    if (!out.pass) return;
                    ++tested;
                    if (tested >= 50) return;
                }
            }
        });

    // 10. Knuth-Bendix completion of the dihedral axioms
    run(10, "Knuth-Bendix completes {ab->c, a2, b2} to the five-rule system", 0,
        [&](Outcome& out) {
            Alphabet A({"a", "b", "c"});
            auto T = fixtures::mksts(A, {{"ab", "c"}, {"aa", ""}, {"bb", ""}});
            const auto res = knuth_bendix(T);
            require(out, res.status == KBStatus::Convergent, "completion not convergent");
            const auto five = fixtures::mksts(
                A, {{"aa", ""}, {"bb", ""}, {"ab", "c"}, {"ac", "b"}, {"cb", "a"}});
            // agreement of normal forms on every word of length <= 6
            std::vector<std::vector<Letter>> level{{}};
            for (int len = 0; len <= 6; ++len) {
                std::vector<std::vector<Letter>> next;
                for (const auto& w : level) {
                    const Word word(A, w);
                    if (sts_normalform(word, res.system) != sts_normalform(word, five)) {
                        require(out, false, "normal forms differ on '" + word.str() + "'");
                        return;
                    }
                    for (Letter a = 0; a < 3; ++a) {
                        auto wa = w;
                        wa.push_back(a);
                        next.push_back(std::move(wa));
                    }
                }
                level = std::move(next);
            }
        });

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
