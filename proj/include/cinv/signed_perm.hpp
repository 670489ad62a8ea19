#pragma once

// Signed permutations of B_n in window notation and their identification with
// centrosymmetric permutations of [2n].

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cinv/permutation.hpp"

namespace cinv {

class SignedPermutation {
public:
    SignedPermutation() = default;
    // Throws unless {|w(i)|} = [n] and no entry is zero.
    explicit SignedPermutation(std::vector<int> window);
    static SignedPermutation trusted(std::vector<int> window);
    // "-2 -4 1 3"
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(window_.size()); }
    // Defined on +-1..+-n via w(-i) = -w(i).
    int operator()(int i) const {
        return i > 0 ? window_[static_cast<std::size_t>(i - 1)] : -window_[static_cast<std::size_t>(-i - 1)];
    }
    std::span<const int> window() const { return window_; }

    bool is_involution() const;
    std::string to_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

// w(i) = p(n+i) - n if p(n+i) > n, else p(n+i) - n - 1.
SignedPermutation theta(const Permutation& p);
Permutation theta_inverse(const SignedPermutation& s);

bool signed_contains(const SignedPermutation& s, const SignedPermutation& pattern);

// 321, -321, 32-1, -32-1, 1-2, -1-2 (bars written as minus signs).
const std::array<SignedPermutation, 6>& forbidden_signed_patterns();
bool avoids_six_patterns(const SignedPermutation& s);

// Des+ of theta_inverse(s). This is the type-B descent set used throughout.
std::vector<int> des_plus_signed(const SignedPermutation& s);
long long maj_plus_signed(const SignedPermutation& s);

}  // namespace cinv
