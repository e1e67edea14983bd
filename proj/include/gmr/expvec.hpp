#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "gmr/errors.hpp"

namespace gmr {

enum class Signedness { Natural, Integer };

// Exponent vector indexed by generators: an ordered word a1^i1 ... an^in.
// Natural mode models free commutative monoids, integer mode ordered group
// words of CNI presentations.
class ExpVec {
public:
    ExpVec() = default;
    ExpVec(std::vector<long long> exps, Signedness mode)
        : e_(std::move(exps)), mode_(mode) {
        if (mode_ == Signedness::Natural)
            for (long long x : e_)
                if (x < 0) throw error("expvec: negative entry in natural mode");
    }

    static ExpVec zero(std::size_t n, Signedness mode) {
        return ExpVec(std::vector<long long>(n, 0), mode);
    }

    const std::vector<long long>& exps() const { return e_; }
    long long at(std::size_t i) const { return e_[i]; }
    std::size_t size() const { return e_.size(); }
    Signedness mode() const { return mode_; }

    bool is_zero() const {
        for (long long x : e_) if (x != 0) return false;
        return true;
    }

    long long total_degree() const {
        long long d = 0;
        for (long long x : e_) d += std::llabs(x);
        return d;
    }

    bool operator==(const ExpVec& o) const { return mode_ == o.mode_ && e_ == o.e_; }
    bool operator!=(const ExpVec& o) const { return !(*this == o); }

private:
    std::vector<long long> e_;
    Signedness mode_ = Signedness::Natural;
};

namespace detail {
inline void check_pair(const ExpVec& u, const ExpVec& v) {
    if (u.size() != v.size() || u.mode() != v.mode())
        throw error("expvec: length or mode mismatch");
}
} // namespace detail

// Componentwise sum (the free commutative product u ∘ v).
inline ExpVec expvec_add(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    std::vector<long long> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = u.at(i) + v.at(i);
    return ExpVec(std::move(e), u.mode());
}

inline ExpVec expvec_sub(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    std::vector<long long> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = u.at(i) - v.at(i);
    return ExpVec(std::move(e), u.mode());
}

// Divisibility order. Natural mode: componentwise <=. Integer mode: each
// slot of u is 0 or sign-matches v with |u_l| <= |v_l|.
inline bool tuple_leq(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const long long a = u.at(i), b = v.at(i);
        if (u.mode() == Signedness::Natural) {
            if (a > b) return false;
        } else {
            if (a == 0) continue;
            if ((a > 0) != (b > 0)) return false;
            if (std::llabs(a) > std::llabs(b)) return false;
        }
    }
    return true;
}

// Componentwise max; natural mode only (integer mode uses qclcm).
inline ExpVec expvec_lcm(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    if (u.mode() != Signedness::Natural)
        throw error("expvec_lcm: integer mode, use qclcm");
    std::vector<long long> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = u.at(i) > v.at(i) ? u.at(i) : v.at(i);
    return ExpVec(std::move(e), Signedness::Natural);
}

// Signed least common multiple: defined when no slot has a sign clash;
// each slot takes the shared (or only) sign and the larger magnitude.
inline std::optional<ExpVec> qclcm(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    if (u.mode() != Signedness::Integer)
        throw error("qclcm: natural mode, use expvec_lcm");
    std::vector<long long> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const long long a = u.at(i), b = v.at(i);
        if (a != 0 && b != 0 && (a > 0) != (b > 0)) return std::nullopt;
        const long long sign = (a != 0) ? (a > 0 ? 1 : -1) : (b > 0 ? 1 : (b < 0 ? -1 : 0));
        const long long mag = std::llabs(a) > std::llabs(b) ? std::llabs(a) : std::llabs(b);
        e[i] = sign * mag;
    }
    return ExpVec(std::move(e), Signedness::Integer);
}

// The exponent comparison used inside syllable orderings:
// 0 < 1 < 2 < ... < -1 < -2 < ...
inline int cmp_signed_exponent(long long a, long long b) {
    if (a == b) return 0;
    auto key = [](long long x) { return x >= 0 ? std::pair<int, long long>(0, x)
                                               : std::pair<int, long long>(1, -x); };
    return key(a) < key(b) ? -1 : 1;
}

// Total degree first, then the exponent of the earliest generator decides.
// Restricted to ordered words this is the length-lexicographic ordering.
inline int compare_expvec_deglex(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    const long long du = u.total_degree(), dv = v.total_degree();
    if (du != dv) return du < dv ? -1 : 1;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.at(i) != v.at(i)) return u.at(i) < v.at(i) ? -1 : 1;
    return 0;
}

// Syllable comparison of ordered group words: the distinguishing letter is
// the first slot where the exponents differ.
inline int compare_expvec_syllable(const ExpVec& u, const ExpVec& v) {
    detail::check_pair(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (int c = cmp_signed_exponent(u.at(i), v.at(i))) return c;
    return 0;
}

} // namespace gmr
