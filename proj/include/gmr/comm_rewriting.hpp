#pragma once

#include <string>
#include <vector>

#include "gmr/expvec.hpp"

namespace gmr {

struct CommRule {
    ExpVec lhs;
    ExpVec rhs;
};

// A semi-Thue system modulo commutativity: rewrite rules on ordered words,
// applied whenever the left hand side divides a term.
class CommRewriteSystem {
public:
    CommRewriteSystem(std::vector<std::string> generators, std::vector<CommRule> rules)
        : gens_(std::move(generators)), rules_(std::move(rules)) {
        for (const CommRule& r : rules_) {
            if (r.lhs.size() != gens_.size() || r.rhs.size() != gens_.size())
                throw error("comm system: rule arity mismatch");
            if (r.lhs.mode() != Signedness::Natural || r.rhs.mode() != Signedness::Natural)
                throw error("comm system: rules must be in natural mode");
            if (r.lhs.is_zero())
                throw error("comm system: empty left hand side");
            if (compare_expvec_deglex(r.lhs, r.rhs) <= 0)
                throw error("comm system: rule not oriented by the term ordering");
        }
    }

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<CommRule>& rules() const { return rules_; }
    std::size_t generator_count() const { return gens_.size(); }

private:
    std::vector<std::string> gens_;
    std::vector<CommRule> rules_;
};

// Irreducible descendant: the first applicable rule in listing order fires
// until no left hand side divides the term.
inline ExpVec comm_normalform(const ExpVec& v, const CommRewriteSystem& T) {
    if (v.mode() != Signedness::Natural)
        throw error("comm_normalform: natural mode required");
    ExpVec cur = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const CommRule& r : T.rules()) {
            if (tuple_leq(r.lhs, cur)) {
                cur = expvec_add(expvec_sub(cur, r.lhs), r.rhs);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

inline bool comm_irreducible(const ExpVec& v, const CommRewriteSystem& T) {
    for (const CommRule& r : T.rules())
        if (tuple_leq(r.lhs, v)) return false;
    return true;
}

// Local confluence via LCM overlaps of left hand sides.
inline bool comm_locally_confluent(const CommRewriteSystem& T) {
    const auto& rules = T.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = i; j < rules.size(); ++j) {
            const ExpVec lcm = expvec_lcm(rules[i].lhs, rules[j].lhs);
            const ExpVec p1 = expvec_add(rules[i].rhs, expvec_sub(lcm, rules[i].lhs));
            const ExpVec p2 = expvec_add(rules[j].rhs, expvec_sub(lcm, rules[j].lhs));
            if (comm_normalform(p1, T) != comm_normalform(p2, T)) return false;
        }
    }
    return true;
}

} // namespace gmr
