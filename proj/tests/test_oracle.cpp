#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ufr/counting.hpp"
#include "ufr/errors.hpp"
#include "ufr/fubini.hpp"
#include "ufr/oracle.hpp"
#include "ufr/weak_order.hpp"

using namespace ufr;

TEST_SUITE("oracle") {

TEST_CASE("predicate names") {
    CHECK(parse_predicate("parking") == TuplePredicate::Parking);
    CHECK(parse_predicate("unit-interval") == TuplePredicate::UnitInterval);
    CHECK(parse_predicate("fubini") == TuplePredicate::Fubini);
    CHECK(parse_predicate("unit-fubini") == TuplePredicate::UnitFubini);
    CHECK_THROWS_AS(parse_predicate("bogus"), std::invalid_argument);
}

TEST_CASE("brute tuples: small exact sets") {
    const std::vector<PreferenceTuple> two = brute_tuples(2, TuplePredicate::UnitFubini);
    REQUIRE(two.size() == 3);
    CHECK(two[0].to_string() == "1,1");
    CHECK(two[1].to_string() == "1,2");
    CHECK(two[2].to_string() == "2,1");

    CHECK(brute_tuples(3, TuplePredicate::UnitFubini).size() == 12);

    const std::vector<PreferenceTuple> one = brute_tuples(1, TuplePredicate::Parking);
    REQUIRE(one.size() == 1);
    CHECK(one[0].to_string() == "1");
}

TEST_CASE("brute tuple streams are sorted and duplicate-free") {
    TupleStream stream(4, TuplePredicate::UnitFubini);
    std::vector<std::vector<int>> items;
    while (auto a = stream.next()) items.push_back(a->values());
    CHECK(items.size() == 66);
    CHECK(std::is_sorted(items.begin(), items.end()));
    CHECK(std::adjacent_find(items.begin(), items.end()) == items.end());
    CHECK_THROWS_AS(TupleStream(8, TuplePredicate::Parking), CapExceeded);
}

TEST_CASE("tuple scan counts match the known series") {
    const TupleScan scan = scan_tuples(4);
    CHECK(scan.parking == 125); // 5^3
    CHECK(ExactCount(scan.unit_interval) == fubini_number(4));
    CHECK(ExactCount(scan.fubini) == fubini_number(4));
    CHECK(ExactCount(scan.unit_fubini) == f_total(4));
    CHECK(ExactCount(scan.weakly_increasing_unit_fubini) == fibonacci(5));
}

TEST_CASE("tuple scans are deterministic across worker counts") {
    const TupleScan serial = scan_tuples(4, 1, true);
    const TupleScan parallel = scan_tuples(4, 3, true);
    CHECK(serial.unit_fubini == parallel.unit_fubini);
    CHECK(serial.parking == parallel.parking);
    CHECK(serial.unit_fubini_tuples == parallel.unit_fubini_tuples);
    CHECK(std::is_sorted(serial.unit_fubini_tuples.begin(), serial.unit_fubini_tuples.end()));
}

TEST_CASE("weakly increasing enumeration matches the filtered full scan") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<PreferenceTuple> filtered;
        for (const PreferenceTuple& a : brute_tuples(n, TuplePredicate::UnitFubini)) {
            if (std::is_sorted(a.values().begin(), a.values().end())) filtered.push_back(a);
        }
        CHECK(brute_weakly_increasing_ufr(n) == filtered);
    }
    CHECK(brute_weakly_increasing_ufr(10).size() == fibonacci(11).to_uint64());
    CHECK_THROWS_AS(brute_weakly_increasing_ufr(15), CapExceeded);
}

TEST_CASE("brute boolean intervals: counts at small n") {
    CHECK(brute_boolean_intervals(3).size() == 12);

    const std::vector<BruteInterval> four = brute_boolean_intervals(4);
    std::size_t rank0 = 0, rank2 = 0;
    for (const BruteInterval& b : four) {
        if (b.rank == 0) {
            ++rank0;
            CHECK(b.min == b.max);
        }
        if (b.rank == 2) ++rank2;
    }
    CHECK(rank0 == 24);
    CHECK(rank2 == 6);
    CHECK_THROWS_AS(brute_boolean_intervals(6), CapExceeded);
}

TEST_CASE("oracle interval set equals the production enumeration") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> oracle;
        for (const BruteInterval& b : brute_boolean_intervals(n)) {
            oracle.insert(b.min.to_string() + "|" + b.max.to_string() + "|" +
                          std::to_string(b.rank));
        }
        std::set<std::string> production;
        BooleanIntervalStream stream(n);
        while (auto b = stream.next()) {
            production.insert(b->min().to_string() + "|" + b->max().to_string() + "|" +
                              std::to_string(b->rank()));
        }
        CHECK(oracle == production);
    }
}

TEST_CASE("atom-labeling and the commuting-generator criterion classify pairs identically") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::pair<std::string, std::string>> oracle;
        for (const BruteInterval& b : brute_boolean_intervals(n)) {
            oracle.emplace(b.min.to_string(), b.max.to_string());
        }
        std::vector<Permutation> perms;
        PermutationStream stream(n);
        while (auto p = stream.next()) perms.push_back(std::move(*p));
        for (const Permutation& v : perms) {
            for (const Permutation& w : perms) {
                const bool algebraic = as_boolean_interval(v, w).has_value();
                const bool by_oracle = oracle.count({v.to_string(), w.to_string()}) > 0;
                CHECK(algebraic == by_oracle);
            }
        }
    }
}

TEST_CASE("verify suite passes at small n") {
    for (int n : {1, 2, 3, 4}) {
        const VerificationReport report = verify_suite(n);
        CHECK(report.all_pass());
        CHECK(report.n == n);
        CHECK(report.checks.size() == 8);
    }
}

TEST_CASE("verify suite skips interval checks between the caps") {
    VerifyOptions opts;
    opts.workers = 2;
    const VerificationReport report = verify_suite(6, opts);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 5); // tuple-level checks only
    CHECK_THROWS_AS(verify_suite(8), CapExceeded);
}

TEST_CASE("verification report serializes") {
    const VerificationReport report = verify_suite(3);
    const std::string table = report.to_table();
    CHECK(table.find("ufr_count_vs_f_total") != std::string::npos);
    CHECK(table.find("all checks passed") != std::string::npos);
    const nlohmann::json j = report.to_json();
    CHECK(j["n"] == 3);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() == report.checks.size());
}

} // TEST_SUITE
