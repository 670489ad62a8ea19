#pragma once

// 321-avoiding centrosymmetric involutions of [2n] as symmetric non-nesting
// matchings, and their encoding by the excedance set in the first half.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cinv/permutation.hpp"

namespace cinv {

// A subset of [n]. Members are kept sorted ascending.
struct ExcedanceSubset {
    int n = 0;
    std::vector<int> members;

    ExcedanceSubset() = default;
    ExcedanceSubset(int n, std::vector<int> members);  // validates members in [n]

    // Bit i-1 of mask set <=> i is a member.
    static ExcedanceSubset from_mask(int n, std::uint64_t mask);
    std::uint64_t mask() const;
    bool contains(int i) const;

    // Comma-separated, "" for the empty set.
    static ExcedanceSubset parse(int n, std::string_view text);
    std::string to_string() const;

    friend bool operator==(const ExcedanceSubset&, const ExcedanceSubset&) = default;
};

// Arcs (i, j) with i < j on points 1..points; singletons are the unmatched points.
class Matching {
public:
    Matching() = default;
    // Throws if an arc is malformed or two arcs share an endpoint.
    Matching(int points, std::vector<std::pair<int, int>> arcs);

    // "1-2,4-6" on a given number of points.
    static Matching parse(int points, std::string_view text);

    int points() const { return points_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::vector<int> singletons() const;
    // Partner of i, or i itself for a singleton.
    int partner(int i) const;

    bool is_symmetric() const;
    // No arc strictly inside another and no singleton strictly inside an arc.
    bool is_non_nesting() const;

    std::string to_string() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    int points_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted by left endpoint
};

Matching permutation_to_matching(const Permutation& p);
Matching subset_to_matching(const ExcedanceSubset& e);
Permutation matching_to_permutation(const Matching& m);

// Points in the first half matched with a larger point.
ExcedanceSubset excedance_subset_of(const Matching& m);
// Exc(p) restricted to the first n positions; p must have even size 2n.
ExcedanceSubset excedance_subset_of(const Permutation& p);

// The composed bijection from subsets of [n] to I^C_{2n}(321).
Permutation subset_to_permutation(const ExcedanceSubset& e);

// Descents of a subset: i in E with i+1 not in E.
std::vector<int> subset_descent_set(const ExcedanceSubset& e);
int subset_des(const ExcedanceSubset& e);
long long subset_maj(const ExcedanceSubset& e);

// des of the involution encoded by e, read off the subset alone.
int full_des_from_subset(const ExcedanceSubset& e);

// Odd size: pi = alpha, n+1, alpha' with alpha in I_n(321).
Permutation odd_split(const Permutation& p);
Permutation odd_join(const Permutation& alpha, int n);

bool is_cinv321(const Permutation& p);

}  // namespace cinv
