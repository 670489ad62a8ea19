#include "cinv/centro.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cinv {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i == text.size()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{}) throw std::invalid_argument("bad integer list: " + std::string(text));
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

}  // namespace

ExcedanceSubset::ExcedanceSubset(int n_, std::vector<int> members_)
    : n(n_), members(std::move(members_)) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("subset has repeated members");
    for (int v : members)
        if (v < 1 || v > n) throw std::invalid_argument("subset member outside [n]");
}

ExcedanceSubset ExcedanceSubset::from_mask(int n, std::uint64_t mask) {
    ExcedanceSubset e;
    e.n = n;
    for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1u) e.members.push_back(i);
    return e;
}

std::uint64_t ExcedanceSubset::mask() const {
    std::uint64_t m = 0;
    for (int v : members) m |= std::uint64_t{1} << (v - 1);
    return m;
}

bool ExcedanceSubset::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

ExcedanceSubset ExcedanceSubset::parse(int n, std::string_view text) {
    return ExcedanceSubset(n, parse_int_list(text));
}

std::string ExcedanceSubset::to_string() const { return format_set(members); }

Matching::Matching(int points, std::vector<std::pair<int, int>> arcs)
    : points_(points), arcs_(std::move(arcs)) {
    if (points < 0) throw std::invalid_argument("negative point count");
    std::vector<bool> used(static_cast<std::size_t>(points) + 1, false);
    for (auto [i, j] : arcs_) {
        if (i < 1 || j > points || i >= j)
            throw std::invalid_argument("malformed arc " + std::to_string(i) + "-" + std::to_string(j));
        if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)])
            throw std::invalid_argument("arcs share an endpoint");
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
    }
    std::sort(arcs_.begin(), arcs_.end());
}

Matching Matching::parse(int points, std::string_view text) {
    std::vector<std::pair<int, int>> arcs;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(start, end - start);
        if (!token.empty()) {
            auto dash = token.find('-');
            if (dash == std::string_view::npos) throw std::invalid_argument("arc needs i-j form");
            auto a = parse_int_list(token.substr(0, dash));
            auto b = parse_int_list(token.substr(dash + 1));
            if (a.size() != 1 || b.size() != 1) throw std::invalid_argument("arc needs i-j form");
            arcs.emplace_back(a[0], b[0]);
        }
        start = end + 1;
    }
    return Matching(points, std::move(arcs));
}

std::vector<int> Matching::singletons() const {
    std::vector<bool> used(static_cast<std::size_t>(points_) + 1, false);
    for (auto [i, j] : arcs_) used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
    std::vector<int> out;
    for (int i = 1; i <= points_; ++i)
        if (!used[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

int Matching::partner(int i) const {
    for (auto [a, b] : arcs_) {
        if (a == i) return b;
        if (b == i) return a;
    }
    return i;
}

bool Matching::is_symmetric() const {
    const int r = points_ + 1;
    for (auto [i, j] : arcs_) {
        std::pair<int, int> mirror{r - j, r - i};
        if (!std::binary_search(arcs_.begin(), arcs_.end(), mirror)) return false;
    }
    return true;
}

bool Matching::is_non_nesting() const {
    const auto singles = singletons();
    for (auto [i, k] : arcs_) {
        for (auto [j, l] : arcs_)
            if (i < j && l < k) return false;
        for (int s : singles)
            if (i < s && s < k) return false;
    }
    return true;
}

std::string Matching::to_string() const {
    std::ostringstream os;
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        if (a) os << ',';
        os << arcs_[a].first << '-' << arcs_[a].second;
    }
    return os.str();
}

Matching permutation_to_matching(const Permutation& p) {
    if (p.size() % 2 != 0) throw std::invalid_argument("expected a permutation of even size");
    if (!is_involution(p)) throw std::invalid_argument("not an involution: " + p.to_string());
    if (!is_centrosymmetric(p)) throw std::invalid_argument("not centrosymmetric: " + p.to_string());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= p.size(); ++i)
        if (i < p(i)) arcs.emplace_back(i, p(i));
    return Matching(p.size(), std::move(arcs));
}

Matching subset_to_matching(const ExcedanceSubset& e) {
    const int n = e.n;
    const int points = 2 * n;
    std::vector<bool> in_e(static_cast<std::size_t>(points) + 2, false);
    for (int v : e.members) in_e[static_cast<std::size_t>(v)] = true;
    std::vector<bool> matched(static_cast<std::size_t>(points) + 2, false);
    std::vector<std::pair<int, int>> arcs;

    for (int i : e.members) {
        if (matched[static_cast<std::size_t>(i)]) continue;
        int j = i + 1;
        while (j <= points && (in_e[static_cast<std::size_t>(j)] || matched[static_cast<std::size_t>(j)])) ++j;
        // The mirror point 2n+1-i is always free and outside E, so j <= 2n.
        if (j > points) throw std::logic_error("subset_to_matching: no partner available");
        arcs.emplace_back(i, j);
        matched[static_cast<std::size_t>(i)] = matched[static_cast<std::size_t>(j)] = true;
        const int mi = points + 1 - j;
        const int mj = points + 1 - i;
        if (mi != i) {
            arcs.emplace_back(mi, mj);
            matched[static_cast<std::size_t>(mi)] = matched[static_cast<std::size_t>(mj)] = true;
        }
    }
    return Matching(points, std::move(arcs));
}

Permutation matching_to_permutation(const Matching& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("matching is not symmetric: " + m.to_string());
    if (!m.is_non_nesting()) throw std::invalid_argument("matching has a nesting: " + m.to_string());
    std::vector<int> values(static_cast<std::size_t>(m.points()));
    for (int i = 1; i <= m.points(); ++i) values[static_cast<std::size_t>(i - 1)] = i;
    for (auto [i, j] : m.arcs()) {
        values[static_cast<std::size_t>(i - 1)] = j;
        values[static_cast<std::size_t>(j - 1)] = i;
    }
    return Permutation::trusted(std::move(values));
}

ExcedanceSubset excedance_subset_of(const Matching& m) {
    ExcedanceSubset e;
    e.n = m.points() / 2;
    for (auto [i, j] : m.arcs())
        if (i <= e.n) e.members.push_back(i);
    return e;
}

ExcedanceSubset excedance_subset_of(const Permutation& p) {
    if (p.size() % 2 != 0) throw std::invalid_argument("expected a permutation of even size");
    ExcedanceSubset e;
    e.n = p.size() / 2;
    for (int i = 1; i <= e.n; ++i)
        if (p(i) > i) e.members.push_back(i);
    return e;
}

Permutation subset_to_permutation(const ExcedanceSubset& e) {
    return matching_to_permutation(subset_to_matching(e));
}

std::vector<int> subset_descent_set(const ExcedanceSubset& e) {
    std::vector<int> out;
    for (std::size_t k = 0; k < e.members.size(); ++k) {
        const int i = e.members[k];
        const bool next_in = k + 1 < e.members.size() && e.members[k + 1] == i + 1;
        if (!next_in) out.push_back(i);
    }
    return out;
}

int subset_des(const ExcedanceSubset& e) { return static_cast<int>(subset_descent_set(e).size()); }

long long subset_maj(const ExcedanceSubset& e) {
    long long s = 0;
    for (int i : subset_descent_set(e)) s += i;
    return s;
}

int full_des_from_subset(const ExcedanceSubset& e) {
    const int d = subset_des(e);
    return e.contains(e.n) ? 2 * d - 1 : 2 * d;
}

bool is_cinv321(const Permutation& p) {
    return is_involution(p) && is_centrosymmetric(p) && avoids_321(p);
}

Permutation odd_split(const Permutation& p) {
    if (p.size() % 2 == 0) throw std::invalid_argument("odd_split: expected odd size");
    const int n = p.size() / 2;
    if (p(n + 1) != n + 1) throw std::invalid_argument("odd_split: middle entry is not n+1");
    if (!is_cinv321(p)) throw std::invalid_argument("odd_split: not a 321-avoiding centrosymmetric involution");
    auto v = p.values();
    return Permutation::trusted(std::vector<int>(v.begin(), v.begin() + n));
}

Permutation odd_join(const Permutation& alpha, int n) {
    if (alpha.size() != n) throw std::invalid_argument("odd_join: alpha must have size n");
    if (!is_involution(alpha) || !avoids_321(alpha))
        throw std::invalid_argument("odd_join: alpha must be a 321-avoiding involution");
    std::vector<int> v(alpha.values().begin(), alpha.values().end());
    v.push_back(n + 1);
    for (int i = 1; i <= n; ++i) v.push_back(2 * n + 2 - alpha(n + 1 - i));
    return Permutation::trusted(std::move(v));
}

}  // namespace cinv
