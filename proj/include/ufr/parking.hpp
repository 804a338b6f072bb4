#pragma once

// Parking-process simulation on a one-way street of n spots, plus the
// parking-function / unit-interval predicates and block-structure extraction
// for the weakly increasing rearrangement.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufr/permutation.hpp"

namespace ufr {

/// A tuple in [n]^n: entry i is car i's preferred spot.
class PreferenceTuple {
public:
    /// Validates 1 <= a_i <= n; throws std::invalid_argument otherwise.
    static PreferenceTuple from_values(std::vector<int> prefs);

    /// Parses "1,6,4,4,3,3,2", with optional surrounding parentheses.
    static PreferenceTuple parse(std::string_view text);

    int size() const { return static_cast<int>(prefs_.size()); }

    /// Preference of car i (1-indexed).
    int operator[](int i) const { return prefs_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& values() const { return prefs_; }

    /// Canonical text form: comma-separated, no parentheses.
    std::string to_string() const;

    /// Compact digit-word form ("233155"); requires all entries <= 9.
    std::string to_word() const;

    friend bool operator==(const PreferenceTuple&, const PreferenceTuple&) = default;
    friend std::strong_ordering operator<=>(const PreferenceTuple& a, const PreferenceTuple& b) {
        return a.prefs_ <=> b.prefs_;
    }

private:
    explicit PreferenceTuple(std::vector<int> prefs) : prefs_(std::move(prefs)) {}

    std::vector<int> prefs_;
};

PreferenceTuple to_preference_tuple(const Permutation& p);

/// Result of running the parking process. Failure is data, not an error:
/// `failed_car` is the first car unable to park and `occupancy` the street at
/// that moment (spot -> car, 0 for empty).
struct ParkingResult {
    std::optional<Permutation> outcome; // spot j -> car pi_j
    int failed_car = 0;
    std::vector<int> occupancy;

    bool success() const { return outcome.has_value(); }

    /// Spot where car i ended up; only valid on success.
    int spot_of_car(int i) const;
};

/// Cars 1..n park in order; car i takes the first free spot >= a_i.
ParkingResult park(const PreferenceTuple& a);

/// Sorted rearrangement satisfies a'_i <= i for all i. Agrees with park(a)
/// succeeding.
bool is_parking_function(const PreferenceTuple& a);

/// park(a) succeeds and every car parks at its preference or one spot past it.
bool is_unit_interval_pf(const PreferenceTuple& a);

PreferenceTuple weakly_increasing_rearrangement(const PreferenceTuple& a);

/// Blocks of the weakly increasing rearrangement, split at each index i with
/// a'_i = i. Defined for unit interval parking functions.
struct BlockStructure {
    std::vector<std::vector<int>> blocks;

    std::string to_string() const; // "(1,1)|(3,3)|(5,5)"
};

/// Throws std::domain_error when a is not a unit interval parking function.
BlockStructure block_structure(const PreferenceTuple& a);

} // namespace ufr
