#include "ufr/fubini.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufr {

namespace {

void require_unit_fubini(const PreferenceTuple& a, const char* who) {
    if (!is_unit_fubini(a)) {
        throw std::domain_error(std::string(who) + " requires a unit Fubini ranking, got (" +
                                a.to_string() + ")");
    }
}

// Multiplicity of value v in a (v may be outside [1..n]).
int multiplicity(const PreferenceTuple& a, int v) {
    int m = 0;
    for (int i = 1; i <= a.size(); ++i) {
        if (a[i] == v) ++m;
    }
    return m;
}

} // namespace

bool is_fubini_ranking(const PreferenceTuple& a) {
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    const int n = a.size();
    int pos = 1;
    while (pos <= n) {
        const int v = sorted[static_cast<std::size_t>(pos) - 1];
        if (v != pos) return false;
        while (pos <= n && sorted[static_cast<std::size_t>(pos) - 1] == v) ++pos;
    }
    return true;
}

bool is_unit_fubini(const PreferenceTuple& a) {
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    const int n = a.size();
    for (int i = 1; i <= n; ++i) {
        const int ai = sorted[static_cast<std::size_t>(i) - 1];
        int lower = 1;
        if (i >= 2) {
            lower = (sorted[static_cast<std::size_t>(i) - 2] == i - 2) ? i : i - 1;
        }
        if (ai < lower || ai > i) return false;
    }
    return true;
}

int distinct_ranks(const PreferenceTuple& a) {
    require_unit_fubini(a, "distinct_ranks");
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

PreferenceTuple delta(const PreferenceTuple& a, int i) {
    require_unit_fubini(a, "delta");
    if (i < 1 || i > a.size() - 1) {
        throw std::out_of_range("delta index " + std::to_string(i) + " not in [1.." +
                                std::to_string(a.size() - 1) + "]");
    }
    if (multiplicity(a, i - 1) == 2 || multiplicity(a, i) == 2 || multiplicity(a, i + 1) == 2) {
        return a;
    }
    // here i+1 occurs exactly once: were it absent, i would occur twice
    std::vector<int> values = a.values();
    for (int& v : values) {
        if (v == i + 1) {
            v = i;
            break;
        }
    }
    return PreferenceTuple::from_values(std::move(values));
}

PreferenceTuple delta_set(const Permutation& p, const std::vector<int>& index_set) {
    std::vector<int> sorted = index_set;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 1; t < sorted.size(); ++t) {
        if (sorted[t] - sorted[t - 1] < 2) {
            throw std::invalid_argument("delta_set needs pairwise nonconsecutive indices");
        }
    }
    PreferenceTuple result = to_preference_tuple(p);
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        result = delta(result, *it);
    }
    return result;
}

std::vector<PreferenceTuple> fiber(const Permutation& p) {
    const Permutation alpha = p.inverse();
    std::vector<PreferenceTuple> out;
    for (const std::vector<int>& I : nonconsecutive_subsets(p.ascent_set())) {
        out.push_back(delta_set(alpha, I));
    }
    return out;
}

BooleanInterval phi(const PreferenceTuple& a) {
    require_unit_fubini(a, "phi");
    const ParkingResult parked = park(a);
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> index_set;
    for (std::size_t t = 1; t < sorted.size(); ++t) {
        if (sorted[t] == sorted[t - 1]) index_set.push_back(sorted[t]);
    }
    for (std::size_t t = 1; t < index_set.size(); ++t) {
        if (index_set[t] - index_set[t - 1] < 2) {
            throw std::logic_error("repeated ranks of a unit Fubini ranking must be "
                                   "nonconsecutive");
        }
    }
    return BooleanInterval(*parked.outcome, std::move(index_set));
}

PreferenceTuple phi_inverse(const BooleanInterval& b) {
    return delta_set(b.min().inverse(), b.index_set());
}

} // namespace ufr
