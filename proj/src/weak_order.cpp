#include "ufr/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ufr/errors.hpp"

namespace ufr {

namespace {

bool is_nonconsecutive(const std::vector<int>& sorted_set) {
    for (std::size_t t = 1; t < sorted_set.size(); ++t) {
        if (sorted_set[t] - sorted_set[t - 1] < 2) return false;
    }
    return true;
}

void require_same_size(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) {
        throw std::invalid_argument("permutations have different lengths");
    }
}

} // namespace

std::vector<std::vector<int>> nonconsecutive_subsets(const std::vector<int>& candidates) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    // include/skip recursion; skipping any candidate adjacent to the last pick
    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (idx == candidates.size()) {
            out.push_back(current);
            return;
        }
        self(self, idx + 1);
        if (current.empty() || candidates[idx] - current.back() >= 2) {
            current.push_back(candidates[idx]);
            self(self, idx + 1);
            current.pop_back();
        }
    };
    walk(walk, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

BooleanInterval::BooleanInterval(Permutation min, std::vector<int> index_set)
    : min_(std::move(min)), index_set_(std::move(index_set)) {
    std::sort(index_set_.begin(), index_set_.end());
    if (!is_nonconsecutive(index_set_)) {
        throw std::invalid_argument("index set has consecutive entries");
    }
    const std::vector<int> asc = min_.ascent_set();
    for (int i : index_set_) {
        if (!std::binary_search(asc.begin(), asc.end(), i)) {
            throw std::invalid_argument("index " + std::to_string(i) +
                                        " is not an ascent of the minimal element");
        }
    }
}

Permutation BooleanInterval::max() const {
    Permutation m = min_;
    for (int i : index_set_) {
        m = compose(m, Permutation::simple_transposition(m.size(), i));
    }
    return m;
}

std::vector<Permutation> BooleanInterval::elements() const {
    std::vector<Permutation> out;
    const std::size_t k = index_set_.size();
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Permutation p = min_;
        for (std::size_t t = 0; t < k; ++t) {
            if (mask & (std::uint64_t{1} << t)) {
                p = compose(p, Permutation::simple_transposition(p.size(), index_set_[t]));
            }
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> covers(const Permutation& p) {
    std::vector<Permutation> out;
    for (int i : p.ascent_set()) {
        out.push_back(compose(p, Permutation::simple_transposition(p.size(), i)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool less_equal(const Permutation& v, const Permutation& w) {
    require_same_size(v, w);
    if (v == w) return true;
    const int bound = w.inversion_count();
    if (v.inversion_count() >= bound) return false;
    std::set<std::vector<int>> visited;
    std::deque<Permutation> frontier;
    visited.insert(v.one_line());
    frontier.push_back(v);
    while (!frontier.empty()) {
        Permutation p = std::move(frontier.front());
        frontier.pop_front();
        for (Permutation& q : covers(p)) {
            if (q == w) return true;
            if (q.inversion_count() >= bound) continue;
            if (visited.insert(q.one_line()).second) {
                frontier.push_back(std::move(q));
            }
        }
    }
    return false;
}

namespace {

// Inversion set by values: bit (a,b), a<b, set when b appears before a.
std::vector<std::uint64_t> inversion_bits(const Permutation& p) {
    const int n = p.size();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(p(i))] = i;
    const int pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(pairs + 63) / 64, 0);
    int idx = 0;
    for (int b = 2; b <= n; ++b) {
        for (int a = 1; a < b; ++a, ++idx) {
            if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]) {
                bits[static_cast<std::size_t>(idx) / 64] |= std::uint64_t{1} << (idx % 64);
            }
        }
    }
    return bits;
}

} // namespace

bool less_equal_by_inversions(const Permutation& v, const Permutation& w) {
    require_same_size(v, w);
    const auto a = inversion_bits(v);
    const auto b = inversion_bits(w);
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] & ~b[t]) return false;
    }
    return true;
}

std::vector<Permutation> interval_elements(const Permutation& v, const Permutation& w) {
    require_same_size(v, w);
    if (!less_equal(v, w)) {
        throw std::domain_error("interval endpoints are not comparable: " + v.to_string() +
                                " is not below " + w.to_string());
    }
    // Upward search from v; a successor of x can only lie below w if x does,
    // so expanding only elements <= w collects exactly [v, w].
    std::vector<Permutation> out;
    std::set<std::vector<int>> visited;
    std::deque<Permutation> frontier;
    visited.insert(v.one_line());
    frontier.push_back(v);
    while (!frontier.empty()) {
        Permutation p = std::move(frontier.front());
        frontier.pop_front();
        for (Permutation& q : covers(p)) {
            if (!visited.insert(q.one_line()).second) continue;
            if (less_equal(q, w)) frontier.push_back(std::move(q));
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<BooleanInterval> as_boolean_interval(const Permutation& v, const Permutation& w) {
    require_same_size(v, w);
    const Permutation u = compose(v.inverse(), w);
    const int n = u.size();
    std::vector<int> index_set;
    std::vector<bool> moved(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i < n; ++i) {
        if (u(i) == i + 1) {
            if (u(i + 1) != i) return std::nullopt;
            index_set.push_back(i);
            moved[static_cast<std::size_t>(i)] = true;
            moved[static_cast<std::size_t>(i) + 1] = true;
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (!moved[static_cast<std::size_t>(i)] && u(i) != i) return std::nullopt;
    }
    if (!is_nonconsecutive(index_set)) return std::nullopt;
    const std::vector<int> asc = v.ascent_set();
    for (int i : index_set) {
        // a descent in I means v is not below w at all
        if (!std::binary_search(asc.begin(), asc.end(), i)) return std::nullopt;
    }
    return BooleanInterval(v, std::move(index_set));
}

std::vector<BooleanInterval> boolean_intervals_with_min(const Permutation& p) {
    std::vector<BooleanInterval> out;
    for (std::vector<int>& I : nonconsecutive_subsets(p.ascent_set())) {
        out.emplace_back(p, std::move(I));
    }
    return out;
}

namespace {

int checked_enumeration_size(int n, int cap) {
    if (n < 1) {
        throw std::invalid_argument("enumeration needs n >= 1");
    }
    if (n > cap) {
        throw CapExceeded("interval enumeration capped at n <= " + std::to_string(cap));
    }
    return n;
}

} // namespace

BooleanIntervalStream::BooleanIntervalStream(int n, std::optional<int> rank_filter, int cap)
    : perms_(checked_enumeration_size(n, cap)), rank_filter_(rank_filter) {}

std::optional<BooleanInterval> BooleanIntervalStream::next() {
    for (;;) {
        while (pos_ < buffer_.size()) {
            const BooleanInterval& candidate = buffer_[pos_++];
            if (!rank_filter_ || candidate.rank() == *rank_filter_) return candidate;
        }
        std::optional<Permutation> p = perms_.next();
        if (!p) return std::nullopt;
        buffer_ = boolean_intervals_with_min(*p);
        pos_ = 0;
    }
}

BooleanIntervalStream enumerate_boolean_intervals(int n, std::optional<int> rank_filter, int cap) {
    return BooleanIntervalStream(n, rank_filter, cap);
}

std::string hasse_dot(int n, const std::optional<BooleanInterval>& highlight) {
    if (n < 1 || n > kHasseDotCap) {
        throw CapExceeded("hasse diagrams capped at n <= " + std::to_string(kHasseDotCap));
    }
    std::set<std::vector<int>> marked;
    if (highlight) {
        if (highlight->min().size() != n) {
            throw std::invalid_argument("highlight interval lives in a different S_n");
        }
        for (const Permutation& p : highlight->elements()) {
            marked.insert(p.one_line());
        }
    }
    constexpr const char* kAttr = " [color=red, penwidth=2.0]";
    std::ostringstream os;
    os << "digraph weak_order_s" << n << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    PermutationStream nodes(n);
    while (auto p = nodes.next()) {
        os << "  \"" << p->to_string() << "\"";
        if (marked.count(p->one_line())) os << kAttr;
        os << ";\n";
    }
    PermutationStream sources(n);
    while (auto p = sources.next()) {
        const bool p_marked = marked.count(p->one_line()) != 0;
        for (const Permutation& q : covers(*p)) {
            os << "  \"" << p->to_string() << "\" -> \"" << q.to_string() << "\"";
            if (p_marked && marked.count(q.one_line())) os << kAttr;
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace ufr
