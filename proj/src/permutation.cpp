#include "ufr/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "ufr/errors.hpp"

namespace ufr {

namespace {

constexpr int kEnumerationLengthCap = 20;

} // namespace

Permutation Permutation::from_one_line(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) {
        throw std::invalid_argument("permutation must be nonempty");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range [1.." + std::to_string(n) + "]");
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("duplicate value " + std::to_string(v) +
                                        " in one-line notation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("permutation length must be >= 1");
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(word));
}

Permutation Permutation::simple_transposition(int n, int i) {
    if (i < 1 || i > n - 1) {
        throw std::out_of_range("transposition index " + std::to_string(i) +
                                " not in [1.." + std::to_string(n - 1) + "]");
    }
    Permutation p = identity(n);
    std::swap(p.word_[static_cast<std::size_t>(i) - 1], p.word_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty permutation text");
    }
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok =
                text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw std::invalid_argument("bad permutation entry '" + std::string(tok) + "'");
            }
            values.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument(
                    "bad character in permutation text (use commas for n >= 10)");
            }
            values.push_back(c - '0');
        }
    }
    return from_one_line(std::move(values));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) {
        inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    }
    return Permutation(std::move(inv));
}

std::vector<int> Permutation::ascent_set() const {
    std::vector<int> out;
    for (int j = 1; j < size(); ++j) {
        if ((*this)(j) < (*this)(j + 1)) out.push_back(j);
    }
    return out;
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> out;
    for (int j = 1; j < size(); ++j) {
        if ((*this)(j) > (*this)(j + 1)) out.push_back(j);
    }
    return out;
}

AscentBlocks Permutation::ascent_blocks() const {
    AscentBlocks blocks;
    for (int j : ascent_set()) {
        if (!blocks.empty() && blocks.back().last + 1 == j) {
            blocks.back().last = j;
        } else {
            blocks.push_back({j, j});
        }
    }
    return blocks;
}

int Permutation::inversion_count() const {
    int count = 0;
    for (int i = 1; i <= size(); ++i) {
        for (int j = i + 1; j <= size(); ++j) {
            if ((*this)(i) > (*this)(j)) ++count;
        }
    }
    return count;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    const bool compact = size() <= 9;
    for (int i = 1; i <= size(); ++i) {
        if (!compact && i > 1) os << ',';
        os << (*this)(i);
    }
    return os.str();
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) {
        throw std::invalid_argument("cannot compose permutations of different lengths");
    }
    std::vector<int> word(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i) {
        word[static_cast<std::size_t>(i) - 1] = s(t(i));
    }
    return Permutation::from_one_line(std::move(word));
}

PermutationStream::PermutationStream(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("permutation length must be >= 1");
    }
    if (n > kEnumerationLengthCap) {
        throw CapExceeded("permutation enumeration capped at n <= " +
                          std::to_string(kEnumerationLengthCap));
    }
    word_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word_[static_cast<std::size_t>(i)] = i + 1;
}

std::optional<Permutation> PermutationStream::next() {
    if (exhausted_) return std::nullopt;
    if (first_) {
        first_ = false;
        return Permutation::from_one_line(word_);
    }
    if (!std::next_permutation(word_.begin(), word_.end())) {
        exhausted_ = true;
        return std::nullopt;
    }
    return Permutation::from_one_line(word_);
}

PermutationStream all_permutations(int n) { return PermutationStream(n); }

} // namespace ufr
