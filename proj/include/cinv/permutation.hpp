#pragma once

// Permutations of [m] in one-line notation, with the descent and excedance
// statistics used across the library. Positions and values are 1-based.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cinv {

class Permutation {
public:
    Permutation() = default;

    // Throws std::invalid_argument unless values is a rearrangement of 1..m.
    explicit Permutation(std::vector<int> values);

    // Skips validation. For generators that build permutations by construction.
    static Permutation trusted(std::vector<int> values);

    static Permutation identity(int m);

    // Space-separated one-line notation, e.g. "5 3 2 8 1 7 6 4". A string of
    // digits without separators ("2143") is accepted when every value is < 10.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    // 1-based access: (*this)(i) = pi(i).
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> values() const { return values_; }

    Permutation inverse() const;
    // (a * b)(i) = a(b(i))
    Permutation compose(const Permutation& other) const;
    Permutation reverse() const;
    Permutation complement() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

bool is_involution(const Permutation& p);
bool is_centrosymmetric(const Permutation& p);

// Naive exhaustive subsequence check; works for any pattern.
bool contains_pattern_naive(const Permutation& p, const Permutation& pattern);

// Dispatches to the linear scans below for 321 and 123, otherwise naive.
bool contains_pattern(const Permutation& p, const Permutation& pattern);
inline bool avoids(const Permutation& p, const Permutation& pattern) {
    return !contains_pattern(p, pattern);
}

// O(m): some entry has a larger entry before it and a smaller one after it.
bool contains_321(std::span<const int> values);
bool contains_123(std::span<const int> values);
inline bool avoids_321(const Permutation& p) { return !contains_321(p.values()); }

std::vector<int> descent_set(const Permutation& p);
int des(const Permutation& p);
long long maj(const Permutation& p);

// Descents in the first floor(m/2) positions.
std::vector<int> des_plus_set(const Permutation& p);
int des_plus(const Permutation& p);
long long maj_plus(const Permutation& p);

std::vector<int> excedance_set(const Permutation& p);
int fixed_point_count(const Permutation& p);

// Longest increasing subsequence length, patience sorting.
int longest_increasing_length(const Permutation& p);

// Sorted set of positions rendered as "1,3,4"; empty set is "".
std::string format_set(std::span<const int> s);

}  // namespace cinv
