// Acceptance suite: every check is an exact integer equality. One line is
// printed per criterion; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ufr/counting.hpp"
#include "ufr/fubini.hpp"
#include "ufr/oracle.hpp"
#include "ufr/parking.hpp"
#include "ufr/permutation.hpp"
#include "ufr/weak_order.hpp"

using namespace ufr;

namespace {

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// --- criterion 1: Table-1 reproduction ------------------------------------

void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t table[] = {1, 3, 12, 66, 450, 3690, 35280};
    for (int n = 1; n <= 7; ++n) {
        const TupleScan scan = scan_tuples(n, default_workers());
        expect(scan.unit_fubini == table[n - 1],
               "n=" + str(n) + ": brute count " + str(scan.unit_fubini) + " != " +
                   str(table[n - 1]));
        expect(ExactCount(scan.unit_fubini) == f_total(n),
               "n=" + str(n) + ": brute count disagrees with f_total");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs <= 60.0, "runtime " + str(secs) + "s exceeds 60s");
}

// --- criterion 2: rank-refined interval counts ----------------------------

void criterion2() {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 5; ++n) {
        std::map<int, std::uint64_t> histogram;
        for (const BruteInterval& b : brute_boolean_intervals(n)) ++histogram[b.rank];
        for (int k = 0; 2 * k <= n; ++k) {
            expect(ExactCount(histogram[k]) == f_closed(n, k),
                   "n=" + str(n) + " k=" + str(k) + ": oracle " + str(histogram[k]) +
                       " != f_closed " + f_closed(n, k).to_string());
        }
        for (const auto& [rank, count] : histogram) {
            expect(2 * rank <= n, "n=" + str(n) + ": unexpected rank " + str(rank));
        }
    }
    expect(f_closed(4, 2) == ExactCount(6), "f_closed(4,2) != 6");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs <= 60.0, "runtime " + str(secs) + "s exceeds 60s");
}

// --- criterion 3: the bijection phi ----------------------------------------

void criterion3() {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> oracle_set;
        for (const BruteInterval& b : brute_boolean_intervals(n)) {
            oracle_set.insert(b.min.to_string() + "|" + b.max.to_string() + "|" + str(b.rank));
        }
        std::set<std::string> images;
        for (const PreferenceTuple& a : brute_tuples(n, TuplePredicate::UnitFubini)) {
            const BooleanInterval b = phi(a);
            expect(distinct_ranks(a) == n - b.rank(),
                   "statistic mismatch at (" + a.to_string() + ")");
            expect(phi_inverse(b) == a, "phi_inverse(phi) != id at (" + a.to_string() + ")");
            const std::string key =
                b.min().to_string() + "|" + b.max().to_string() + "|" + str(b.rank());
            expect(images.insert(key).second, "phi not injective at (" + a.to_string() + ")");
        }
        expect(images == oracle_set, "n=" + str(n) + ": phi image != oracle interval set");
    }
}

// --- criterion 4: the fiber law --------------------------------------------

void criterion4() {
    for (int n = 1; n <= 7; ++n) {
        std::vector<std::string> fiber_union;
        ExactCount total(0);
        PermutationStream perms(n);
        while (auto p = perms.next()) {
            ExactCount product(1);
            for (const IndexRun& b : p->ascent_blocks()) {
                product *= fibonacci(b.length() + 2);
            }
            const std::vector<PreferenceTuple> f = fiber(*p);
            expect(ExactCount(f.size()) == product,
                   "fiber size != Fibonacci product at " + p->to_string());
            expect(product == fiber_count(*p), "fiber_count mismatch at " + p->to_string());
            for (const PreferenceTuple& a : f) {
                const ParkingResult r = park(a);
                expect(r.success() && *r.outcome == *p,
                       "fiber element (" + a.to_string() + ") does not park to " +
                           p->to_string());
                fiber_union.push_back(a.to_string());
            }
            total += ExactCount(f.size());
        }
        expect(total == f_total(n), "n=" + str(n) + ": fiber sizes do not sum to f_total");

        const TupleScan scan = scan_tuples(n, default_workers(), /*collect_unit_fubini=*/true);
        std::vector<std::string> brute;
        brute.reserve(scan.unit_fubini_tuples.size());
        for (const PreferenceTuple& a : scan.unit_fubini_tuples) brute.push_back(a.to_string());
        std::sort(fiber_union.begin(), fiber_union.end());
        std::sort(brute.begin(), brute.end());
        expect(fiber_union == brute, "n=" + str(n) + ": fibers do not partition the UFR set");
    }
}

// --- criterion 5: worked examples, byte for byte ---------------------------

void criterion5() {
    expect(Permutation::parse("412356").inverse() == Permutation::parse("234156"),
           "inverse(412356) != 234156");

    const std::vector<std::string> fiber_words = {"234156", "224156", "233156", "234146",
                                                  "234155", "224146", "224155", "233155"};
    const std::vector<PreferenceTuple> f = fiber(Permutation::parse("412356"));
    expect(f.size() == fiber_words.size(), "fiber(412356) size != 8");
    for (std::size_t i = 0; i < fiber_words.size(); ++i) {
        expect(f[i].to_word() == fiber_words[i],
               "fiber(412356)[" + str(i) + "] = " + f[i].to_word() + " != " + fiber_words[i]);
    }

    const ParkingResult parked = park(PreferenceTuple::parse("1,6,4,4,3,3,2"));
    expect(parked.success() && parked.outcome->to_string() == "1753426",
           "park(1,6,4,4,3,3,2) != 1753426");

    const BooleanInterval cube = phi(PreferenceTuple::parse("3,5,5,1,1,3"));
    expect(cube.min().to_string() == "451623" && cube.max().to_string() == "546132" &&
               cube.index_set() == std::vector<int>{1, 3, 5},
           "phi(3,5,5,1,1,3) != [451623, 546132] with I={1,3,5}");

    const PreferenceTuple a = PreferenceTuple::parse("1,3,5,3,6,1,7");
    for (int i = 1; i <= 4; ++i) {
        expect(delta(a, i) == a, "delta_" + str(i) + " should fix (1,3,5,3,6,1,7)");
    }
    expect(delta(a, 5) == PreferenceTuple::parse("1,3,5,3,5,1,7"), "delta_5 mismatch");
    expect(delta(a, 6) == PreferenceTuple::parse("1,3,5,3,6,1,6"), "delta_6 mismatch");
}

// --- criterion 6: formula identities ----------------------------------------

void criterion6() {
    for (int n = 0; n <= 25; ++n) {
        ExactCount sum(0);
        for (int k = 0; 2 * k <= n; ++k) sum += f_closed(n, k);
        expect(sum == f_total(n), "row sum != f_total at n=" + str(n));
    }
    for (int n = 2; n <= 25; ++n) {
        expect(f_closed(n, 1) + f_closed(n, 1) ==
                   factorial(n) * ExactCount(static_cast<std::uint64_t>(n - 1)),
               "f(n,1) specialization fails at n=" + str(n));
    }
    for (int n = 4; n <= 25; ++n) {
        ExactCount eight_fold(0);
        for (int i = 0; i < 8; ++i) eight_fold += f_closed(n, 2);
        expect(eight_fold == factorial(n) * ExactCount(static_cast<std::uint64_t>(n - 2)) *
                                 ExactCount(static_cast<std::uint64_t>(n - 3)),
               "f(n,2) specialization fails at n=" + str(n));
    }
    // factored product form vs the n!/2^k closed form, multiplied out
    for (int n = 0; n <= 25; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            ExactCount product = binomial(n - k, k) * factorial(n - 2 * k);
            for (int i = 0; i < k; ++i) product *= binomial(n - 2 * i, 2);
            expect(product == f_closed(n, k), "factored form mismatch at n=" + str(n));
            ExactCount two_pow(1);
            for (int i = 0; i < k; ++i) two_pow *= ExactCount(2);
            expect(f_closed(n, k) * two_pow == factorial(n) * binomial(n - k, k),
                   "n!/2^k form mismatch at n=" + str(n) + " k=" + str(k));
        }
    }
    for (int n = 2; n <= 10; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            expect(generator_fiber_count(n, i) ==
                       fiber_count(Permutation::simple_transposition(n, i)),
                   "generator fiber count mismatch at n=" + str(n) + " i=" + str(i));
        }
    }
}

// --- criterion 7: weakly increasing counts ----------------------------------

void criterion7() {
    for (int n = 1; n <= 12; ++n) {
        const std::size_t count = brute_weakly_increasing_ufr(n).size();
        expect(ExactCount(count) == fibonacci(n + 1),
               "n=" + str(n) + ": " + str(count) + " weakly increasing UFRs != F_" +
                   str(n + 1));
    }
}

// --- criterion 8: delta commutation -----------------------------------------

void criterion8() {
    bool consecutive_disagreement = false;
    PermutationStream perms(4);
    while (auto p = perms.next()) {
        const PreferenceTuple a = to_preference_tuple(*p);
        expect(delta(delta(a, 3), 1) == delta(delta(a, 1), 3),
               "delta_1, delta_3 do not commute at " + p->to_string());
        for (int i = 1; i <= 2; ++i) {
            if (delta(delta(a, i + 1), i) != delta(delta(a, i), i + 1)) {
                consecutive_disagreement = true;
            }
        }
    }
    expect(consecutive_disagreement, "no consecutive-index counterexample found in S_4");
}

// --- criterion 9: OEIS prefixes ----------------------------------------------

void criterion9() {
    const std::vector<std::string> a080599 = {"1", "1", "3", "12", "66", "450", "3690", "35280"};
    for (int n = 0; n < 8; ++n) {
        expect(f_total(n).to_string() == a080599[static_cast<std::size_t>(n)],
               "A080599 mismatch at n=" + str(n));
    }
    const std::vector<std::string> a001286 = {"1",     "6",      "36",     "240",
                                              "1800",  "15120",  "141120", "1451520"};
    for (int n = 2; n < 10; ++n) {
        expect(f_closed(n, 1).to_string() == a001286[static_cast<std::size_t>(n) - 2],
               "A001286 mismatch at n=" + str(n));
    }
    const std::vector<std::string> a317487 = {"6",      "90",      "1080",     "12600",
                                              "151200", "1905120", "25401600", "359251200"};
    for (int n = 4; n < 12; ++n) {
        expect(f_closed(n, 2).to_string() == a317487[static_cast<std::size_t>(n) - 4],
               "A317487 mismatch at n=" + str(n));
    }
    const std::vector<std::string> a000670 = {"1",   "3",    "13",    "75",
                                              "541", "4683", "47293", "545835"};
    for (int n = 1; n < 9; ++n) {
        expect(fubini_number(n).to_string() == a000670[static_cast<std::size_t>(n) - 1],
               "A000670 mismatch at n=" + str(n));
    }
    const std::vector<std::string> a000045 = {"1", "1", "2", "3", "5", "8", "13", "21"};
    for (int ell = 1; ell < 9; ++ell) {
        expect(fibonacci(ell).to_string() == a000045[static_cast<std::size_t>(ell) - 1],
               "A000045 mismatch at ell=" + str(ell));
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* description;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Table-1 reproduction: brute UFR counts equal 1,3,12,66,450,3690,35280 and f_total",
         criterion1},
        {2, "rank-refined oracle interval counts equal f_closed(n,k) for n <= 5", criterion2},
        {3, "phi is a statistic-preserving bijection onto the oracle interval set (n <= 5)",
         criterion3},
        {4, "fiber law: Fibonacci products, outcomes, and partition of UFR_n (n <= 7)",
         criterion4},
        {5, "worked examples reproduce byte for byte", criterion5},
        {6, "formula identities hold exactly for n <= 25", criterion6},
        {7, "weakly increasing UFR counts equal F_{n+1} for n <= 12", criterion7},
        {8, "delta commutation on S_4, with a consecutive-index counterexample", criterion8},
        {9, "OEIS prefix agreement: A080599, A001286, A317487, A000670, A000045", criterion9},
    };

    const auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected error: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
                  << c.description << " (" << str(secs) << "s)";
        if (!ok) std::cout << " -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failures == 0 ? "all criteria passed" : "CRITERIA FAILED") << " in "
              << str(total) << "s\n";
    return failures == 0 ? 0 : 1;
}
