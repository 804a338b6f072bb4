#pragma once

// Permutations of {1..n} in one-line notation, with the ascent/descent
// machinery needed by the right weak order. Positions and values are
// 1-indexed everywhere, including text I/O.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ufr {

/// A maximal run [first..last] of consecutive integers inside an ascent set.
struct IndexRun {
    int first = 0;
    int last = 0;

    int length() const { return last - first + 1; }
    friend bool operator==(const IndexRun&, const IndexRun&) = default;
};

using AscentBlocks = std::vector<IndexRun>;

class Permutation {
public:
    /// Validates that `values` is a permutation of {1..n}; throws
    /// std::invalid_argument on duplicates, out-of-range entries, or empty input.
    static Permutation from_one_line(std::vector<int> values);

    static Permutation identity(int n);

    /// s_i in S_n: the identity with positions i, i+1 swapped (1 <= i <= n-1).
    static Permutation simple_transposition(int n, int i);

    /// Parses the text form: comma-free digits for n <= 9 ("2314"),
    /// comma-separated otherwise ("10,2,3,...").
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }

    /// Image of position i (1-indexed): pi_i.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& one_line() const { return word_; }

    Permutation inverse() const;

    /// Asc(pi) = { j in [n-1] : pi_j < pi_{j+1} }, sorted.
    std::vector<int> ascent_set() const;

    /// Des(pi) = [n-1] \ Asc(pi), sorted.
    std::vector<int> descent_set() const;

    /// Partition of the ascent set into maximal runs of consecutive integers.
    AscentBlocks ascent_blocks() const;

    /// Number of pairs i < j with pi_i > pi_j.
    int inversion_count() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}

    std::vector<int> word_;
};

/// Composition with (s o t)(i) = s(t(i)). Right-multiplying p by
/// simple_transposition(n, i) swaps the entries at positions i, i+1 of p.
Permutation compose(const Permutation& s, const Permutation& t);

/// Streams all n! permutations of {1..n} in lexicographic one-line order.
/// Enumeration is capped at n <= 20; construction of single permutations is not.
class PermutationStream {
public:
    explicit PermutationStream(int n);

    std::optional<Permutation> next();

    int n() const { return n_; }

private:
    int n_;
    bool exhausted_ = false;
    bool first_ = true;
    std::vector<int> word_;
};

PermutationStream all_permutations(int n);

} // namespace ufr
