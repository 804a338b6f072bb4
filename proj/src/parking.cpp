#include "ufr/parking.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ufr {

PreferenceTuple PreferenceTuple::from_values(std::vector<int> prefs) {
    const int n = static_cast<int>(prefs.size());
    if (n == 0) {
        throw std::invalid_argument("preference tuple must be nonempty");
    }
    for (int a : prefs) {
        if (a < 1 || a > n) {
            throw std::invalid_argument("preference " + std::to_string(a) +
                                        " out of range [1.." + std::to_string(n) + "]");
        }
    }
    return PreferenceTuple(std::move(prefs));
}

PreferenceTuple PreferenceTuple::parse(std::string_view text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        text = text.substr(1, text.size() - 2);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty preference tuple");
    }
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("bad tuple entry '" + std::string(tok) + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_values(std::move(values));
}

std::string PreferenceTuple::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) os << ',';
        os << (*this)[i];
    }
    return os.str();
}

std::string PreferenceTuple::to_word() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        const int v = (*this)[i];
        if (v > 9) {
            throw std::domain_error("compact word form needs all entries <= 9");
        }
        out.push_back(static_cast<char>('0' + v));
    }
    return out;
}

PreferenceTuple to_preference_tuple(const Permutation& p) {
    return PreferenceTuple::from_values(p.one_line());
}

int ParkingResult::spot_of_car(int i) const {
    return outcome->inverse()(i);
}

ParkingResult park(const PreferenceTuple& a) {
    const int n = a.size();
    ParkingResult result;
    result.occupancy.assign(static_cast<std::size_t>(n), 0);
    for (int car = 1; car <= n; ++car) {
        int spot = a[car];
        while (spot <= n && result.occupancy[static_cast<std::size_t>(spot) - 1] != 0) {
            ++spot;
        }
        if (spot > n) {
            result.failed_car = car;
            return result;
        }
        result.occupancy[static_cast<std::size_t>(spot) - 1] = car;
    }
    result.outcome = Permutation::from_one_line(result.occupancy);
    return result;
}

bool is_parking_function(const PreferenceTuple& a) {
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < a.size(); ++i) {
        if (sorted[static_cast<std::size_t>(i)] > i + 1) return false;
    }
    return true;
}

bool is_unit_interval_pf(const PreferenceTuple& a) {
    ParkingResult r = park(a);
    if (!r.success()) return false;
    for (int spot = 1; spot <= a.size(); ++spot) {
        const int car = (*r.outcome)(spot);
        const int displacement = spot - a[car];
        if (displacement != 0 && displacement != 1) return false;
    }
    return true;
}

PreferenceTuple weakly_increasing_rearrangement(const PreferenceTuple& a) {
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    return PreferenceTuple::from_values(std::move(sorted));
}

std::string BlockStructure::to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j > 0) os << '|';
        os << '(';
        for (std::size_t t = 0; t < blocks[j].size(); ++t) {
            if (t > 0) os << ',';
            os << blocks[j][t];
        }
        os << ')';
    }
    return os.str();
}

BlockStructure block_structure(const PreferenceTuple& a) {
    if (!is_unit_interval_pf(a)) {
        throw std::domain_error("block structure requires a unit interval parking function");
    }
    std::vector<int> sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    BlockStructure bs;
    for (int i = 1; i <= a.size(); ++i) {
        if (sorted[static_cast<std::size_t>(i) - 1] == i) {
            bs.blocks.emplace_back();
        }
        bs.blocks.back().push_back(sorted[static_cast<std::size_t>(i) - 1]);
    }
    return bs;
}

} // namespace ufr
