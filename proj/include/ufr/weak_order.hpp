#pragma once

// The right weak order on S_n: cover relations, order comparison by
// cover-reachability, interval extraction, and Boolean-interval
// recognition/enumeration via the commuting-generator test on v^-1 w.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ufr/permutation.hpp"

namespace ufr {

/// Default cap for full-lattice enumeration entry points (8! = 40320 nodes).
inline constexpr int kEnumerationCap = 8;

/// Cap for DOT rendering; larger diagrams are unreadable anyway.
inline constexpr int kHasseDotCap = 6;

/// A Boolean interval [min, min * prod_{i in I} s_i] given by its minimal
/// element and a set I of pairwise nonconsecutive ascent positions of min.
class BooleanInterval {
public:
    /// Validates I subset of Asc(min), sorted, pairwise nonconsecutive.
    BooleanInterval(Permutation min, std::vector<int> index_set);

    const Permutation& min() const { return min_; }
    const std::vector<int>& index_set() const { return index_set_; }

    Permutation max() const;
    int rank() const { return static_cast<int>(index_set_.size()); }
    std::uint64_t element_count() const { return std::uint64_t{1} << index_set_.size(); }

    /// All 2^|I| elements {min * prod_{i in S} s_i : S subset of I}, sorted.
    std::vector<Permutation> elements() const;

    friend bool operator==(const BooleanInterval&, const BooleanInterval&) = default;

private:
    Permutation min_;
    std::vector<int> index_set_;
};

/// All subsets of a sorted candidate list whose elements are pairwise
/// nonconsecutive integers, including {}; ordered by (size, lexicographic).
/// There are prod F_{|b|+2} of them over the runs b of the candidate list.
std::vector<std::vector<int>> nonconsecutive_subsets(const std::vector<int>& candidates);

/// Elements covering p: { p * s_i : i in Asc(p) }, sorted lexicographically.
std::vector<Permutation> covers(const Permutation& p);

/// v <= w in the right weak order, decided by breadth-first cover
/// reachability from v (bounded by inversion count of w).
bool less_equal(const Permutation& v, const Permutation& w);

/// Fast path: containment of inversion sets (pairs of values out of order).
/// Property-tested against less_equal; not used by it.
bool less_equal_by_inversions(const Permutation& v, const Permutation& w);

/// All p with v <= p <= w, sorted lexicographically.
/// Throws std::domain_error when v and w are not comparable.
std::vector<Permutation> interval_elements(const Permutation& v, const Permutation& w);

/// Recognizes [v,w] as Boolean: u = v^-1 w must be exactly a product of
/// pairwise-commuting simple transpositions with indices in Asc(v).
/// Returns empty when the interval is not Boolean or v is not below w.
std::optional<BooleanInterval> as_boolean_interval(const Permutation& v, const Permutation& w);

/// One interval per nonconsecutive subset I of Asc(p), including I = {};
/// sorted by (|I|, I lexicographic).
std::vector<BooleanInterval> boolean_intervals_with_min(const Permutation& p);

/// Streams Boolean intervals over all of S_n (minimal elements in
/// lexicographic order, then (|I|, I) per minimal element), optionally
/// filtered by rank. Throws CapExceeded for n > cap.
class BooleanIntervalStream {
public:
    BooleanIntervalStream(int n, std::optional<int> rank_filter = std::nullopt,
                          int cap = kEnumerationCap);

    std::optional<BooleanInterval> next();

private:
    PermutationStream perms_;
    std::optional<int> rank_filter_;
    std::vector<BooleanInterval> buffer_;
    std::size_t pos_ = 0;
};

BooleanIntervalStream enumerate_boolean_intervals(int n,
                                                  std::optional<int> rank_filter = std::nullopt,
                                                  int cap = kEnumerationCap);

/// DOT digraph of the Hasse diagram of W(S_n), edges bottom-to-top. A
/// highlighted interval's nodes and internal edges carry fixed
/// color/penwidth attributes so output is byte-stable.
std::string hasse_dot(int n, const std::optional<BooleanInterval>& highlight = std::nullopt);

} // namespace ufr
