#include "ufr/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ufr/errors.hpp"
#include "ufr/fubini.hpp"
#include "ufr/weak_order.hpp"

namespace ufr {

namespace {

void check_tuple_cap(int n, int cap) {
    if (n < 1) {
        throw std::invalid_argument("tuple scan needs n >= 1");
    }
    if (n > cap) {
        throw CapExceeded("tuple scan capped at n <= " + std::to_string(cap));
    }
}

// Lexicographic successor in [n]^n; false once the odometer wraps.
bool bump(std::vector<int>& digits, int n) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (digits[t] < n) {
            ++digits[t];
            std::fill(digits.begin() + static_cast<std::ptrdiff_t>(t) + 1, digits.end(), 1);
            return true;
        }
    }
    return false;
}

} // namespace

TuplePredicate parse_predicate(std::string_view name) {
    if (name == "parking") return TuplePredicate::Parking;
    if (name == "unit-interval") return TuplePredicate::UnitInterval;
    if (name == "fubini") return TuplePredicate::Fubini;
    if (name == "unit-fubini") return TuplePredicate::UnitFubini;
    throw std::invalid_argument("unknown predicate '" + std::string(name) +
                                "' (expected parking, unit-interval, fubini, unit-fubini)");
}

bool evaluate_predicate(TuplePredicate pred, const PreferenceTuple& a) {
    switch (pred) {
        case TuplePredicate::Parking: return is_parking_function(a);
        case TuplePredicate::UnitInterval: return is_unit_interval_pf(a);
        case TuplePredicate::Fubini: return is_fubini_ranking(a);
        case TuplePredicate::UnitFubini: return is_unit_fubini(a);
    }
    throw std::logic_error("unhandled predicate");
}

TupleStream::TupleStream(int n, TuplePredicate pred, int cap) : n_(n), pred_(pred) {
    check_tuple_cap(n, cap);
    odometer_.assign(static_cast<std::size_t>(n), 1);
}

bool TupleStream::advance() {
    if (first_) {
        first_ = false;
        return true;
    }
    return bump(odometer_, n_);
}

std::optional<PreferenceTuple> TupleStream::next() {
    if (exhausted_) return std::nullopt;
    while (advance()) {
        PreferenceTuple candidate = PreferenceTuple::from_values(odometer_);
        if (evaluate_predicate(pred_, candidate)) return candidate;
    }
    exhausted_ = true;
    return std::nullopt;
}

std::vector<PreferenceTuple> brute_tuples(int n, TuplePredicate pred, int cap) {
    TupleStream stream(n, pred, cap);
    std::vector<PreferenceTuple> out;
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

namespace {

// Lexicographic successor with the first coordinate held fixed.
bool bump_tail(std::vector<int>& digits, int n) {
    for (std::size_t t = digits.size(); t-- > 1;) {
        if (digits[t] < n) {
            ++digits[t];
            std::fill(digits.begin() + static_cast<std::ptrdiff_t>(t) + 1, digits.end(), 1);
            return true;
        }
    }
    return false;
}

// One slab = all tuples with a fixed first coordinate, scanned in lex order.
TupleScan scan_slab(int n, int first_value, bool collect) {
    TupleScan acc;
    std::vector<int> digits(static_cast<std::size_t>(n), 1);
    digits[0] = first_value;
    for (bool more = true; more; more = bump_tail(digits, n)) {
        PreferenceTuple a = PreferenceTuple::from_values(digits);
        if (is_parking_function(a)) {
            ++acc.parking;
            if (is_unit_interval_pf(a)) ++acc.unit_interval;
        }
        if (is_fubini_ranking(a)) ++acc.fubini;
        if (is_unit_fubini(a)) {
            ++acc.unit_fubini;
            if (std::is_sorted(digits.begin(), digits.end())) {
                ++acc.weakly_increasing_unit_fubini;
            }
            if (collect) acc.unit_fubini_tuples.push_back(std::move(a));
        }
    }
    return acc;
}

} // namespace

TupleScan scan_tuples(int n, int workers, bool collect_unit_fubini, int cap) {
    check_tuple_cap(n, cap);
    workers = std::clamp(workers, 1, n);
    std::vector<TupleScan> slabs(static_cast<std::size_t>(n));
    if (workers == 1) {
        for (int v = 1; v <= n; ++v) {
            slabs[static_cast<std::size_t>(v) - 1] = scan_slab(n, v, collect_unit_fubini);
        }
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (int v = w + 1; v <= n; v += workers) {
                    slabs[static_cast<std::size_t>(v) - 1] =
                        scan_slab(n, v, collect_unit_fubini);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }
    TupleScan total;
    for (TupleScan& s : slabs) {
        total.parking += s.parking;
        total.unit_interval += s.unit_interval;
        total.fubini += s.fubini;
        total.unit_fubini += s.unit_fubini;
        total.weakly_increasing_unit_fubini += s.weakly_increasing_unit_fubini;
        total.unit_fubini_tuples.insert(total.unit_fubini_tuples.end(),
                                        std::make_move_iterator(s.unit_fubini_tuples.begin()),
                                        std::make_move_iterator(s.unit_fubini_tuples.end()));
    }
    return total;
}

std::vector<PreferenceTuple> brute_weakly_increasing_ufr(int n, int cap) {
    if (n < 1) {
        throw std::invalid_argument("enumeration needs n >= 1");
    }
    if (n > cap) {
        throw CapExceeded("weakly increasing scan capped at n <= " + std::to_string(cap));
    }
    std::vector<PreferenceTuple> out;
    std::vector<int> prefix;
    auto extend = [&](auto&& self, int low) -> void {
        const int pos = static_cast<int>(prefix.size()) + 1;
        if (pos > n) {
            PreferenceTuple a = PreferenceTuple::from_values(prefix);
            if (is_unit_fubini(a)) out.push_back(std::move(a));
            return;
        }
        for (int v = low; v <= pos; ++v) { // a_i <= i or it cannot park
            prefix.push_back(v);
            self(self, v);
            prefix.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

namespace {

// The whole lattice W(S_n), indexed by lexicographic rank of the one-line
// word, with up-edges (covers) and the reflexive-transitive reachability
// closure as row bitsets.
struct Lattice {
    std::vector<Permutation> perms;
    std::vector<std::vector<int>> up;        // covers, as indices
    std::vector<std::vector<std::uint64_t>> reach; // reach[i] bit j: i <= j
    std::vector<int> inv;                    // inversion counts
    std::size_t words = 0;

    bool reachable(int i, int j) const {
        return (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] >>
                (static_cast<std::size_t>(j) % 64)) &
               1;
    }
};

Lattice build_lattice(int n) {
    Lattice lat;
    std::map<std::vector<int>, int> index;
    PermutationStream stream(n);
    while (auto p = stream.next()) {
        index.emplace(p->one_line(), static_cast<int>(lat.perms.size()));
        lat.perms.push_back(std::move(*p));
    }
    const std::size_t count = lat.perms.size();
    lat.words = (count + 63) / 64;
    lat.up.resize(count);
    lat.inv.resize(count);
    lat.reach.assign(count, std::vector<std::uint64_t>(lat.words, 0));
    for (std::size_t i = 0; i < count; ++i) {
        lat.inv[i] = lat.perms[i].inversion_count();
        for (const Permutation& q : covers(lat.perms[i])) {
            lat.up[i].push_back(index.at(q.one_line()));
        }
    }
    // process by decreasing inversion count so successors are finished first
    std::vector<int> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lat.inv[static_cast<std::size_t>(a)] >
                                         lat.inv[static_cast<std::size_t>(b)]; });
    for (int i : order) {
        auto& row = lat.reach[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1}
                                                 << (static_cast<std::size_t>(i) % 64);
        for (int j : lat.up[static_cast<std::size_t>(i)]) {
            const auto& above = lat.reach[static_cast<std::size_t>(j)];
            for (std::size_t w = 0; w < lat.words; ++w) row[w] |= above[w];
        }
    }
    return lat;
}

// Boolean test by atom labeling: no use of v^-1 w anywhere.
bool is_boolean_by_atoms(const Lattice& lat, int v, int w, int* rank_out) {
    std::vector<int> interval;
    for (std::size_t x = 0; x < lat.perms.size(); ++x) {
        if (lat.reachable(v, static_cast<int>(x)) && lat.reachable(static_cast<int>(x), w)) {
            interval.push_back(static_cast<int>(x));
        }
    }
    const int k = lat.inv[static_cast<std::size_t>(w)] - lat.inv[static_cast<std::size_t>(v)];
    if (k >= 63 || interval.size() != (std::size_t{1} << k)) return false;
    // rank levels must be binomial
    std::vector<std::size_t> level(static_cast<std::size_t>(k) + 1, 0);
    for (int x : interval) {
        ++level[static_cast<std::size_t>(lat.inv[static_cast<std::size_t>(x)] -
                                         lat.inv[static_cast<std::size_t>(v)])];
    }
    for (int j = 0; j <= k; ++j) {
        if (ExactCount(level[static_cast<std::size_t>(j)]) != binomial(k, j)) return false;
    }
    // atoms: elements covering v inside the interval
    std::vector<int> atoms;
    for (int j : lat.up[static_cast<std::size_t>(v)]) {
        if (lat.reachable(j, w)) atoms.push_back(j);
    }
    if (static_cast<int>(atoms.size()) != k) return false;
    // label each element by the set of atoms below it
    std::map<int, std::uint64_t> label;
    std::vector<bool> seen(std::size_t{1} << k, false);
    for (int x : interval) {
        std::uint64_t bits = 0;
        for (std::size_t t = 0; t < atoms.size(); ++t) {
            if (lat.reachable(atoms[t], x)) bits |= std::uint64_t{1} << t;
        }
        if (seen[bits]) return false; // labels must realize all 2^k subsets once
        seen[bits] = true;
        label[x] = bits;
    }
    // order isomorphism with the subset lattice
    for (int x : interval) {
        for (int y : interval) {
            const bool below = lat.reachable(x, y);
            const bool subset = (label[x] & ~label[y]) == 0;
            if (below != subset) return false;
        }
    }
    if (rank_out) *rank_out = k;
    return true;
}

} // namespace

std::vector<BruteInterval> brute_boolean_intervals(int n, int cap) {
    if (n < 1) {
        throw std::invalid_argument("interval scan needs n >= 1");
    }
    if (n > cap) {
        throw CapExceeded("interval scan capped at n <= " + std::to_string(cap));
    }
    const Lattice lat = build_lattice(n);
    std::vector<BruteInterval> out;
    for (std::size_t v = 0; v < lat.perms.size(); ++v) {
        for (std::size_t w = 0; w < lat.perms.size(); ++w) {
            if (!lat.reachable(static_cast<int>(v), static_cast<int>(w))) continue;
            int rank = 0;
            if (is_boolean_by_atoms(lat, static_cast<int>(v), static_cast<int>(w), &rank)) {
                out.push_back({lat.perms[v], lat.perms[w], rank});
            }
        }
    }
    return out;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_table() const {
    std::size_t name_width = 4;
    std::size_t value_width = 8;
    for (const CheckResult& c : checks) {
        name_width = std::max(name_width, c.name.size());
        value_width = std::max({value_width, c.expected.size(), c.actual.size()});
    }
    std::ostringstream os;
    os << "verification n=" << n << "\n";
    os << std::left << std::setw(static_cast<int>(name_width)) << "name" << "  "
       << std::setw(static_cast<int>(value_width)) << "expected" << "  "
       << std::setw(static_cast<int>(value_width)) << "actual" << "  "
       << std::setw(6) << "status" << "  " << "ms" << "\n";
    for (const CheckResult& c : checks) {
        os << std::left << std::setw(static_cast<int>(name_width)) << c.name << "  "
           << std::setw(static_cast<int>(value_width)) << c.expected << "  "
           << std::setw(static_cast<int>(value_width)) << c.actual << "  "
           << std::setw(6) << (c.pass ? "pass" : "FAIL") << "  " << std::fixed
           << std::setprecision(1) << c.elapsed_ms << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        checks_json.push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"pass", c.pass},
                               {"elapsed_ms", c.elapsed_ms}});
    }
    return nlohmann::json{{"n", n}, {"checks", checks_json}, {"all_pass", all_pass()}};
}

namespace {

// FNV-1a digest of a canonical serialization; used to compare large sets in
// check output without dumping them.
std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string set_digest(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    std::string blob;
    for (const std::string& s : items) {
        blob += s;
        blob += '\n';
    }
    std::ostringstream os;
    os << items.size() << " items, fnv64=0x" << std::hex << fnv1a(blob);
    return os.str();
}

class SuiteTimer {
public:
    SuiteTimer() : start_(std::chrono::steady_clock::now()) {}

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void add_check(VerificationReport& report, std::string name, std::string expected,
               std::string actual, double ms) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.pass = c.expected == c.actual;
    c.elapsed_ms = ms;
    report.checks.push_back(std::move(c));
}

ExactCount power(std::uint64_t base, int exp) {
    ExactCount r(1);
    for (int i = 0; i < exp; ++i) r *= ExactCount(base);
    return r;
}

} // namespace

VerificationReport verify_suite(int n, const VerifyOptions& opts) {
    if (n < 1) {
        throw std::invalid_argument("verify needs n >= 1");
    }
    if (n > opts.tuple_cap) {
        throw CapExceeded("verify capped at n <= " + std::to_string(opts.tuple_cap) +
                          " (tuple scans)");
    }
    VerificationReport report;
    report.n = n;

    SuiteTimer scan_timer;
    TupleScan scan = scan_tuples(n, opts.workers, /*collect_unit_fubini=*/true, opts.tuple_cap);
    const double scan_ms = scan_timer.ms();

    // (a) brute unit Fubini count against the recurrence total
    add_check(report, "ufr_count_vs_f_total", f_total(n).to_string(),
              ExactCount(scan.unit_fubini).to_string(), scan_ms);

    // (f) parking-function count against (n+1)^(n-1)
    add_check(report, "parking_count_vs_cayley", power(static_cast<std::uint64_t>(n) + 1, n - 1).to_string(),
              ExactCount(scan.parking).to_string(), 0.0);

    // (g) unit interval parking functions against the Fubini number
    add_check(report, "upf_count_vs_fubini_number", fubini_number(n).to_string(),
              ExactCount(scan.unit_interval).to_string(), 0.0);

    // (e) weakly increasing unit Fubini rankings against F_{n+1}
    add_check(report, "weakly_increasing_ufr_vs_fibonacci", fibonacci(n + 1).to_string(),
              ExactCount(scan.weakly_increasing_unit_fubini).to_string(), 0.0);

    // (d) fibers: product counts, outcomes, and partition of the brute set
    {
        SuiteTimer timer;
        bool products_ok = true;
        bool outcomes_ok = true;
        std::vector<std::string> fiber_items;
        PermutationStream perms(n);
        while (auto p = perms.next()) {
            const std::vector<PreferenceTuple> f = fiber(*p);
            if (ExactCount(f.size()) != fiber_count(*p)) products_ok = false;
            for (const PreferenceTuple& a : f) {
                const ParkingResult r = park(a);
                if (!r.success() || *r.outcome != *p) outcomes_ok = false;
                fiber_items.push_back(a.to_string());
            }
        }
        std::vector<std::string> brute_items;
        brute_items.reserve(scan.unit_fubini_tuples.size());
        for (const PreferenceTuple& a : scan.unit_fubini_tuples) {
            brute_items.push_back(a.to_string());
        }
        const std::string expected = "products ok, outcomes ok, " + set_digest(brute_items);
        const std::string actual = std::string(products_ok ? "products ok" : "PRODUCT MISMATCH") +
                                   ", " + (outcomes_ok ? "outcomes ok" : "OUTCOME MISMATCH") +
                                   ", " + set_digest(fiber_items);
        add_check(report, "fibers_partition_ufr", expected, actual, timer.ms());
    }

    if (n > opts.interval_cap) return report;

    // (b) oracle intervals vs production enumeration, and per-rank counts
    SuiteTimer oracle_timer;
    const std::vector<BruteInterval> oracle_intervals = brute_boolean_intervals(n, opts.interval_cap);
    const double oracle_ms = oracle_timer.ms();
    {
        SuiteTimer timer;
        std::vector<std::string> oracle_items;
        for (const BruteInterval& b : oracle_intervals) {
            oracle_items.push_back(b.min.to_string() + "|" + b.max.to_string() + "|" +
                                   std::to_string(b.rank));
        }
        std::vector<std::string> production_items;
        BooleanIntervalStream stream(n);
        while (auto b = stream.next()) {
            production_items.push_back(b->min().to_string() + "|" + b->max().to_string() + "|" +
                                       std::to_string(b->rank()));
        }
        add_check(report, "intervals_oracle_vs_production", set_digest(oracle_items),
                  set_digest(production_items), oracle_ms + timer.ms());
    }
    {
        SuiteTimer timer;
        std::map<int, std::uint64_t> by_rank;
        for (const BruteInterval& b : oracle_intervals) ++by_rank[b.rank];
        std::ostringstream expected, actual;
        for (int k = 0; 2 * k <= n; ++k) {
            if (k) {
                expected << ',';
                actual << ',';
            }
            expected << 'k' << k << '=' << f_closed(n, k).to_string();
            actual << 'k' << k << '=' << by_rank[k];
        }
        add_check(report, "interval_rank_counts_vs_f_closed", expected.str(), actual.str(),
                  timer.ms());
    }

    // (c) phi: bijective onto the oracle's interval set, statistic preserved
    {
        SuiteTimer timer;
        std::vector<std::string> oracle_items;
        for (const BruteInterval& b : oracle_intervals) {
            oracle_items.push_back(b.min.to_string() + "|" + b.max.to_string());
        }
        std::vector<std::string> image_items;
        bool statistic_ok = true;
        bool roundtrip_ok = true;
        for (const PreferenceTuple& a : scan.unit_fubini_tuples) {
            const BooleanInterval b = phi(a);
            image_items.push_back(b.min().to_string() + "|" + b.max().to_string());
            if (distinct_ranks(a) != n - b.rank()) statistic_ok = false;
            if (phi_inverse(b) != a) roundtrip_ok = false;
        }
        const std::size_t distinct_images =
            std::set<std::string>(image_items.begin(), image_items.end()).size();
        const bool injective = distinct_images == image_items.size();
        const std::string expected = "injective, statistic ok, roundtrip ok, onto " +
                                     set_digest(oracle_items);
        const std::string actual = std::string(injective ? "injective" : "NOT INJECTIVE") + ", " +
                                   (statistic_ok ? "statistic ok" : "STATISTIC MISMATCH") + ", " +
                                   (roundtrip_ok ? "roundtrip ok" : "ROUNDTRIP MISMATCH") +
                                   ", onto " + set_digest(image_items);
        add_check(report, "phi_bijection_onto_intervals", expected, actual, timer.ms());
    }

    return report;
}

} // namespace ufr
