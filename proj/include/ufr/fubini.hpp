#pragma once

// Fubini rankings and unit Fubini rankings: predicates, the rank-merging
// delta operators, outcome-map fibers, and the bijection phi between unit
// Fubini rankings and Boolean intervals in the right weak order.

#include <vector>

#include "ufr/parking.hpp"
#include "ufr/permutation.hpp"
#include "ufr/weak_order.hpp"

namespace ufr {

/// Valid ranking of n competitors with ties: a t-way tie at rank v blocks
/// ranks v+1..v+t-1. Equivalently, every distinct value v of multiplicity t
/// occupies sorted positions v..v+t-1.
bool is_fubini_ranking(const PreferenceTuple& a);

/// Unit Fubini ranking test via the sorted inequality characterization
/// c_i <= a'_i <= i (c_1 = 1; c_i = i when a'_{i-1} = i-2, else i-1).
/// Equivalent to: Fubini ranking and unit interval parking function.
bool is_unit_fubini(const PreferenceTuple& a);

/// Number of distinct values. Requires is_unit_fubini(a).
int distinct_ranks(const PreferenceTuple& a);

/// delta_i: merges the singleton ranks i, i+1 into a tie at i by lowering the
/// unique occurrence of i+1, unless any of i-1, i, i+1 already occurs twice
/// (then a is returned unchanged). Requires is_unit_fubini(a), 1 <= i <= n-1.
PreferenceTuple delta(const PreferenceTuple& a, int i);

/// delta_I applied to a permutation, indices taken in descending order
/// (the order does not matter for nonconsecutive I). delta_{} = identity.
PreferenceTuple delta_set(const Permutation& p, const std::vector<int>& index_set);

/// The fiber of the outcome map over p: all unit Fubini rankings that park
/// with outcome p, namely { delta_I(p^-1) : I nonconsecutive subset of
/// Asc(p) }, ordered by (|I|, I lexicographic).
std::vector<PreferenceTuple> fiber(const Permutation& p);

/// The bijection: parks a, reads I off the repeated values, and returns the
/// Boolean interval [outcome, outcome * prod_{i in I} s_i].
/// Requires is_unit_fubini(a).
BooleanInterval phi(const PreferenceTuple& a);

/// Inverse of phi: delta over the interval's index set applied to min^-1.
PreferenceTuple phi_inverse(const BooleanInterval& b);

} // namespace ufr
