#include "cinv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace cinv {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const auto m = values_.size();
    std::vector<bool> seen(m + 1, false);
    for (int v : values_) {
        if (v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(m));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::trusted(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return trusted(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> values;
    bool has_separator = false;
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '\t') has_separator = true;
        else if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad character in permutation text: '" + std::string(1, c) + "'");
    }
    if (!has_separator) {
        for (char c : text) values.push_back(c - '0');
        return Permutation(std::move(values));
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
        if (i == text.size()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{}) throw std::invalid_argument("bad permutation text");
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return trusted(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> out(values_.size());
    for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return trusted(std::move(out));
}

Permutation Permutation::reverse() const {
    std::vector<int> out(values_.rbegin(), values_.rend());
    return trusted(std::move(out));
}

Permutation Permutation::complement() const {
    std::vector<int> out(values_);
    for (int& v : out) v = size() + 1 - v;
    return trusted(std::move(out));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ' ';
        os << values_[i];
    }
    return os.str();
}

bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

bool is_centrosymmetric(const Permutation& p) {
    const int m = p.size();
    for (int i = 1; i <= m; ++i)
        if (p(i) + p(m + 1 - i) != m + 1) return false;
    return true;
}

namespace {

bool order_isomorphic(std::span<const int> a, std::span<const int> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}

bool search(std::span<const int> text, std::span<const int> pattern, std::vector<int>& picked,
            std::size_t start) {
    if (picked.size() == pattern.size()) return order_isomorphic(picked, pattern);
    const std::size_t remaining = pattern.size() - picked.size();
    for (std::size_t i = start; i + remaining <= text.size(); ++i) {
        picked.push_back(text[i]);
        if (search(text, pattern, picked, i + 1)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern_naive(const Permutation& p, const Permutation& pattern) {
    if (pattern.size() > p.size()) return false;
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(pattern.size()));
    return search(p.values(), pattern.values(), picked, 0);
}

bool contains_321(std::span<const int> values) {
    const std::size_t m = values.size();
    if (m < 3) return false;
    std::vector<int> suffix_min(m);
    suffix_min[m - 1] = values[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) suffix_min[i] = std::min(values[i], suffix_min[i + 1]);
    int prefix_max = values[0];
    for (std::size_t j = 1; j + 1 < m; ++j) {
        if (prefix_max > values[j] && suffix_min[j + 1] < values[j]) return true;
        prefix_max = std::max(prefix_max, values[j]);
    }
    return false;
}

bool contains_123(std::span<const int> values) {
    const std::size_t m = values.size();
    if (m < 3) return false;
    std::vector<int> suffix_max(m);
    suffix_max[m - 1] = values[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) suffix_max[i] = std::max(values[i], suffix_max[i + 1]);
    int prefix_min = values[0];
    for (std::size_t j = 1; j + 1 < m; ++j) {
        if (prefix_min < values[j] && suffix_max[j + 1] > values[j]) return true;
        prefix_min = std::min(prefix_min, values[j]);
    }
    return false;
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
    static const Permutation p321({3, 2, 1});
    static const Permutation p123({1, 2, 3});
    if (pattern == p321) return contains_321(p.values());
    if (pattern == p123) return contains_123(p.values());
    return contains_pattern_naive(p, pattern);
}

std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) out.push_back(i);
    return out;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

long long maj(const Permutation& p) {
    long long s = 0;
    for (int i : descent_set(p)) s += i;
    return s;
}

std::vector<int> des_plus_set(const Permutation& p) {
    const int half = p.size() / 2;
    std::vector<int> out;
    for (int i = 1; i <= half && i < p.size(); ++i)
        if (p(i) > p(i + 1)) out.push_back(i);
    return out;
}

int des_plus(const Permutation& p) { return static_cast<int>(des_plus_set(p).size()); }

long long maj_plus(const Permutation& p) {
    long long s = 0;
    for (int i : des_plus_set(p)) s += i;
    return s;
}

std::vector<int> excedance_set(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > i) out.push_back(i);
    return out;
}

int fixed_point_count(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) ++c;
    return c;
}

int longest_increasing_length(const Permutation& p) {
    std::vector<int> tails;
    for (int v : p.values()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) tails.push_back(v);
        else *it = v;
    }
    return static_cast<int>(tails.size());
}

std::string format_set(std::span<const int> s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os.str();
}

}  // namespace cinv
