#include "cinv/signed_perm.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cinv {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const auto n = window_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
        const auto a = static_cast<std::size_t>(std::abs(v));
        if (v == 0 || a > n || seen[a])
            throw std::invalid_argument("not a signed permutation of size " + std::to_string(n));
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::trusted(std::vector<int> window) {
    SignedPermutation s;
    s.window_ = std::move(window);
    return s;
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::vector<int> w;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i == text.size()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{}) throw std::invalid_argument("bad signed permutation text");
        w.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return SignedPermutation(std::move(w));
}

bool SignedPermutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (i) os << ' ';
        os << window_[i];
    }
    return os.str();
}

SignedPermutation theta(const Permutation& p) {
    if (p.size() % 2 != 0) throw std::invalid_argument("theta: expected even size");
    if (!is_centrosymmetric(p)) throw std::invalid_argument("theta: not centrosymmetric: " + p.to_string());
    const int n = p.size() / 2;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = p(n + i);
        w[static_cast<std::size_t>(i - 1)] = v > n ? v - n : v - n - 1;
    }
    return SignedPermutation::trusted(std::move(w));
}

Permutation theta_inverse(const SignedPermutation& s) {
    const int n = s.size();
    std::vector<int> v(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        const int w = s(i);
        const int value = w > 0 ? w + n : w + n + 1;
        v[static_cast<std::size_t>(n + i - 1)] = value;
        v[static_cast<std::size_t>(n - i)] = 2 * n + 1 - value;  // position n+1-i
    }
    return Permutation::trusted(std::move(v));
}

namespace {

bool matches(std::span<const int> chosen, std::span<const int> pattern) {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if ((chosen[i] > 0) != (pattern[i] > 0)) return false;
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            if ((std::abs(chosen[i]) < std::abs(chosen[j])) != (std::abs(pattern[i]) < std::abs(pattern[j])))
                return false;
    }
    return true;
}

bool search(std::span<const int> text, std::span<const int> pattern, std::vector<int>& picked,
            std::size_t start) {
    if (picked.size() == pattern.size()) return matches(picked, pattern);
    const std::size_t remaining = pattern.size() - picked.size();
    for (std::size_t i = start; i + remaining <= text.size(); ++i) {
        picked.push_back(text[i]);
        if (search(text, pattern, picked, i + 1)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

bool signed_contains(const SignedPermutation& s, const SignedPermutation& pattern) {
    if (pattern.size() > s.size()) return false;
    std::vector<int> picked;
    return search(s.window(), pattern.window(), picked, 0);
}

const std::array<SignedPermutation, 6>& forbidden_signed_patterns() {
    static const std::array<SignedPermutation, 6> patterns{
        SignedPermutation({3, 2, 1}),  SignedPermutation({-3, 2, 1}), SignedPermutation({3, 2, -1}),
        SignedPermutation({-3, 2, -1}), SignedPermutation({1, -2}),   SignedPermutation({-1, -2}),
    };
    return patterns;
}

bool avoids_six_patterns(const SignedPermutation& s) {
    for (const auto& t : forbidden_signed_patterns())
        if (signed_contains(s, t)) return false;
    return true;
}

std::vector<int> des_plus_signed(const SignedPermutation& s) { return des_plus_set(theta_inverse(s)); }

long long maj_plus_signed(const SignedPermutation& s) { return maj_plus(theta_inverse(s)); }

}  // namespace cinv
