#pragma once

// Exact-integer counting: Fibonacci and Stirling numbers, Fubini numbers,
// the rank-k Boolean interval count f(n,k), its total via the two-term
// recurrence, and per-permutation fiber products.
//
// All arithmetic is checked 128-bit; anything larger raises OverflowError
// instead of wrapping. That keeps f_closed exact through n = 33.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ufr/permutation.hpp"

namespace ufr {

/// Exact nonnegative count on a checked 128-bit fast path.
class ExactCount {
public:
    ExactCount() : v_(0) {}
    explicit ExactCount(std::uint64_t v) : v_(v) {}

    static ExactCount from_decimal(std::string_view text);

    ExactCount& operator+=(const ExactCount& o);
    ExactCount& operator-=(const ExactCount& o); // throws if result would go negative
    ExactCount& operator*=(const ExactCount& o);

    friend ExactCount operator+(ExactCount a, const ExactCount& b) { return a += b; }
    friend ExactCount operator-(ExactCount a, const ExactCount& b) { return a -= b; }
    friend ExactCount operator*(ExactCount a, const ExactCount& b) { return a *= b; }

    friend bool operator==(const ExactCount& a, const ExactCount& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const ExactCount& a, const ExactCount& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const;

    /// Narrows to 64 bits; throws OverflowError if the value does not fit.
    std::uint64_t to_uint64() const;

private:
    unsigned __int128 v_;
};

/// F_ell with F_1 = F_2 = 1.
ExactCount fibonacci(int ell);

/// Stirling numbers of the second kind, S(n,k) = k*S(n-1,k) + S(n-1,k-1).
ExactCount stirling2(int n, int k);

/// Fub_n = sum_{k=1..n} k! * S(n,k); requires n >= 1.
ExactCount fubini_number(int n);

ExactCount factorial(int n);
ExactCount binomial(int n, int k);

/// Rank-k Boolean interval count f(n,k) = (n!/2^k) * C(n-k,k), evaluated via
/// the always-integral product C(n-k,k) * (n-2k)! * prod_{i<k} C(n-2i,2).
/// Zero when 2k > n.
ExactCount f_closed(int n, int k);

/// Total Boolean interval count via f(m+1) = (m+1) f(m) + C(m+1,2) f(m-1),
/// f(0) = f(1) = 1. Equals sum_k f_closed(n,k).
ExactCount f_total(int n);

/// prod F_{|b|+2} over the ascent blocks b of p (empty product = 1): the
/// number of Boolean intervals with minimal element p.
ExactCount fiber_count(const Permutation& p);

/// fiber_count(p) - 1: intervals with maximal element strictly above p.
ExactCount fiber_count_nontrivial(const Permutation& p);

/// F_{i+1} * F_{n-i+1}: the count for the minimal element s_i.
ExactCount generator_fiber_count(int n, int i);

/// |weakly increasing unit Fubini rankings of length n| = F_{n+1}.
ExactCount weakly_increasing_ufr_count(int n);

} // namespace ufr
