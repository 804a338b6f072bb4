#include "ufr/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ufr/errors.hpp"

namespace ufr {

ExactCount& ExactCount::operator+=(const ExactCount& o) {
    unsigned __int128 r = 0;
    if (__builtin_add_overflow(v_, o.v_, &r)) {
        throw OverflowError("exact count overflow in addition");
    }
    v_ = r;
    return *this;
}

ExactCount& ExactCount::operator-=(const ExactCount& o) {
    if (o.v_ > v_) {
        throw OverflowError("exact count underflow in subtraction");
    }
    v_ -= o.v_;
    return *this;
}

ExactCount& ExactCount::operator*=(const ExactCount& o) {
    unsigned __int128 r = 0;
    if (__builtin_mul_overflow(v_, o.v_, &r)) {
        throw OverflowError("exact count overflow in multiplication");
    }
    v_ = r;
    return *this;
}

ExactCount ExactCount::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty decimal string");
    }
    ExactCount out;
    const ExactCount ten(10);
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad decimal digit '" + std::string(1, c) + "'");
        }
        out *= ten;
        out += ExactCount(static_cast<std::uint64_t>(c - '0'));
    }
    return out;
}

std::string ExactCount::to_string() const {
    if (v_ == 0) return "0";
    std::string digits;
    unsigned __int128 v = v_;
    while (v > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return std::string(digits.rbegin(), digits.rend());
}

std::uint64_t ExactCount::to_uint64() const {
    if (v_ > static_cast<unsigned __int128>(UINT64_MAX)) {
        throw OverflowError("exact count does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(v_);
}

ExactCount fibonacci(int ell) {
    if (ell < 1) {
        throw std::invalid_argument("Fibonacci index must be >= 1");
    }
    ExactCount a(1), b(1); // F_1, F_2
    for (int i = 3; i <= ell; ++i) {
        ExactCount c = a + b;
        a = b;
        b = c;
    }
    return ell == 1 ? a : b;
}

ExactCount stirling2(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("stirling2 arguments must be nonnegative");
    }
    if (k > n) return ExactCount(0);
    if (n == 0) return ExactCount(1); // S(0,0)
    if (k == 0) return ExactCount(0);
    // row DP over S(m, .) for m = 0..n
    std::vector<ExactCount> row(static_cast<std::size_t>(k) + 1, ExactCount(0));
    row[0] = ExactCount(1); // S(0,0)
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                ExactCount(static_cast<std::uint64_t>(j)) * row[static_cast<std::size_t>(j)] +
                row[static_cast<std::size_t>(j) - 1];
        }
        row[0] = ExactCount(0); // S(m,0) = 0 for m >= 1
    }
    return row[static_cast<std::size_t>(k)];
}

ExactCount fubini_number(int n) {
    if (n < 1) {
        throw std::invalid_argument("Fubini numbers defined for n >= 1");
    }
    ExactCount total(0);
    for (int k = 1; k <= n; ++k) {
        total += factorial(k) * stirling2(n, k);
    }
    return total;
}

ExactCount factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of negative argument");
    }
    ExactCount r(1);
    for (int i = 2; i <= n; ++i) {
        r *= ExactCount(static_cast<std::uint64_t>(i));
    }
    return r;
}

ExactCount binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return ExactCount(0);
    k = std::min(k, n - k);
    // r * (n-k+i) is divisible by i at every step, so division stays exact
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 next = 0;
        if (__builtin_mul_overflow(r, static_cast<unsigned __int128>(n - k + i), &next)) {
            throw OverflowError("exact count overflow in binomial");
        }
        r = next / static_cast<unsigned __int128>(i);
    }
    const ExactCount two_pow_64 = ExactCount(UINT64_MAX) + ExactCount(1);
    return ExactCount(static_cast<std::uint64_t>(r >> 64)) * two_pow_64 +
           ExactCount(static_cast<std::uint64_t>(r));
}

ExactCount f_closed(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("f_closed arguments must be nonnegative");
    }
    if (2 * k > n) return ExactCount(0);
    ExactCount r = binomial(n - k, k) * factorial(n - 2 * k);
    for (int i = 0; i < k; ++i) {
        r *= binomial(n - 2 * i, 2);
    }
    return r;
}

ExactCount f_total(int n) {
    if (n < 0) {
        throw std::invalid_argument("f_total argument must be nonnegative");
    }
    ExactCount prev(1), cur(1); // f(0), f(1)
    if (n == 0) return prev;
    for (int m = 1; m < n; ++m) {
        // f(m+1) = (m+1) f(m) + C(m+1,2) f(m-1)
        ExactCount next = ExactCount(static_cast<std::uint64_t>(m + 1)) * cur +
                          binomial(m + 1, 2) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ExactCount fiber_count(const Permutation& p) {
    ExactCount r(1);
    for (const IndexRun& block : p.ascent_blocks()) {
        r *= fibonacci(block.length() + 2);
    }
    return r;
}

ExactCount fiber_count_nontrivial(const Permutation& p) {
    return fiber_count(p) - ExactCount(1);
}

ExactCount generator_fiber_count(int n, int i) {
    if (i < 1 || i > n - 1) {
        throw std::out_of_range("generator index " + std::to_string(i) + " not in [1.." +
                                std::to_string(n - 1) + "]");
    }
    return fibonacci(i + 1) * fibonacci(n - i + 1);
}

ExactCount weakly_increasing_ufr_count(int n) {
    if (n < 1) {
        throw std::invalid_argument("length must be >= 1");
    }
    return fibonacci(n + 1);
}

} // namespace ufr
