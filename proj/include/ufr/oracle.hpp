#pragma once

// Brute-force reference implementations for small n. Everything here is
// deliberately naive: tuple predicates are checked by exhausting [n]^n, and
// Boolean intervals are recognized by explicit atom-set labeling of the
// interval poset, never by the algebraic test on v^-1 w. A bug in the
// production shortcut cannot self-confirm through this module.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ufr/counting.hpp"
#include "ufr/parking.hpp"
#include "ufr/permutation.hpp"

namespace ufr {

inline constexpr int kTupleScanCap = 7;     // 7^7 ~ 8.2e5 tuples
inline constexpr int kIntervalScanCap = 5;  // all-pairs interval extraction

enum class TuplePredicate { Parking, UnitInterval, Fubini, UnitFubini };

/// Accepts "parking", "unit-interval", "fubini", "unit-fubini".
TuplePredicate parse_predicate(std::string_view name);

bool evaluate_predicate(TuplePredicate pred, const PreferenceTuple& a);

/// Streams the tuples of [n]^n satisfying `pred`, lexicographically.
class TupleStream {
public:
    TupleStream(int n, TuplePredicate pred, int cap = kTupleScanCap);

    std::optional<PreferenceTuple> next();

private:
    int n_;
    TuplePredicate pred_;
    std::vector<int> odometer_;
    bool exhausted_ = false;
    bool first_ = true;

    bool advance();
};

std::vector<PreferenceTuple> brute_tuples(int n, TuplePredicate pred, int cap = kTupleScanCap);

/// Exhaustive counts over [n]^n, partitioned by first coordinate across
/// `workers` threads; slab results are combined in slab order, so the counts
/// are independent of the worker count.
struct TupleScan {
    std::uint64_t parking = 0;
    std::uint64_t unit_interval = 0;
    std::uint64_t fubini = 0;
    std::uint64_t unit_fubini = 0;
    std::uint64_t weakly_increasing_unit_fubini = 0;
    std::vector<PreferenceTuple> unit_fubini_tuples; // lexicographic, when collected
};

TupleScan scan_tuples(int n, int workers = 1, bool collect_unit_fubini = false,
                      int cap = kTupleScanCap);

/// Weakly increasing unit Fubini rankings of length n, lexicographically.
/// Searches weakly increasing sequences with a_i <= i directly (a Catalan-
/// sized space), so it reaches well past the full-scan cap.
std::vector<PreferenceTuple> brute_weakly_increasing_ufr(int n, int cap = 14);

struct BruteInterval {
    Permutation min;
    Permutation max;
    int rank;

    friend bool operator==(const BruteInterval&, const BruteInterval&) = default;
};

/// Every interval [v,w] of W(S_n) that is poset-isomorphic to some B_k,
/// found by checking |interval| = 2^k (k the maximal-chain length), binomial
/// rank-level sizes, and an explicit atom-labeling isomorphism onto the
/// subset lattice. Ordered by (v, w) lexicographically.
std::vector<BruteInterval> brute_boolean_intervals(int n, int cap = kIntervalScanCap);

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_table() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int tuple_cap = kTupleScanCap;
    int interval_cap = kIntervalScanCap;
    int workers = 1;
};

/// Runs the cross-check battery at size n. Tuple-level checks run for
/// n <= tuple_cap; interval-level checks additionally need n <= interval_cap
/// and are skipped (not failed) between the two caps.
VerificationReport verify_suite(int n, const VerifyOptions& opts = {});

} // namespace ufr
