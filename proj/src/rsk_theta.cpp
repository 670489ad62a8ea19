#include "cinv/rsk_theta.hpp"

#include <algorithm>

namespace cinv {

const char* to_string(ThetaErrorKind kind) {
    switch (kind) {
        case ThetaErrorKind::not_involution: return "not an involution";
        case ThetaErrorKind::contains_321: return "contains 321";
        case ThetaErrorKind::fixed_points_too_few: return "fixed points below b-a";
        case ThetaErrorKind::shape_mismatch: return "shape mismatch";
        case ThetaErrorKind::below_diagonal: return "path goes below the diagonal";
    }
    return "unknown";
}

bool TwoRowTableau::is_standard() const {
    if (top.size() < bottom.size()) return false;
    for (std::size_t i = 1; i < top.size(); ++i)
        if (top[i - 1] >= top[i]) return false;
    for (std::size_t i = 1; i < bottom.size(); ++i)
        if (bottom[i - 1] >= bottom[i]) return false;
    for (std::size_t j = 0; j < bottom.size(); ++j)
        if (bottom[j] <= top[j]) return false;
    std::vector<int> all(top);
    all.insert(all.end(), bottom.begin(), bottom.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
}

TwoRowTableau rsk_two_row(const Permutation& p) {
    TwoRowTableau t;
    for (int x : p.values()) {
        auto it = std::upper_bound(t.top.begin(), t.top.end(), x);
        if (it == t.top.end()) {
            t.top.push_back(x);
            continue;
        }
        const int bumped = std::exchange(*it, x);
        auto jt = std::upper_bound(t.bottom.begin(), t.bottom.end(), bumped);
        if (jt != t.bottom.end())
            throw ThetaError(ThetaErrorKind::contains_321, p.to_string());
        t.bottom.push_back(bumped);
    }
    return t;
}

Permutation involution_from_tableau(const TwoRowTableau& t) {
    if (!t.is_standard()) throw ThetaError(ThetaErrorKind::shape_mismatch, "not a standard two-row tableau");
    const int m = t.size();
    std::vector<bool> in_bottom(static_cast<std::size_t>(m) + 1, false);
    for (int v : t.bottom) in_bottom[static_cast<std::size_t>(v)] = true;

    std::vector<int> top = t.top, bottom = t.bottom;
    std::vector<int> values(static_cast<std::size_t>(m));
    for (int k = m; k >= 1; --k) {
        int out;
        if (in_bottom[static_cast<std::size_t>(k)]) {
            const int y = bottom.back();
            bottom.pop_back();
            // Largest top entry smaller than y is bumped back out.
            auto it = std::lower_bound(top.begin(), top.end(), y);
            --it;
            out = std::exchange(*it, y);
        } else {
            out = top.back();
            top.pop_back();
        }
        values[static_cast<std::size_t>(k - 1)] = out;
    }
    return Permutation(std::move(values));
}

LatticePath tableau_to_path(const TwoRowTableau& t) {
    std::string s(static_cast<std::size_t>(t.size()), 'E');
    for (int v : t.top) s[static_cast<std::size_t>(v - 1)] = 'N';
    return LatticePath(std::move(s));
}

TwoRowTableau path_to_tableau(const LatticePath& p) {
    TwoRowTableau t;
    for (int i = 1; i <= p.size(); ++i) (p.step(i) == 'N' ? t.top : t.bottom).push_back(i);
    return t;
}

LatticePath involution_to_path(const Permutation& p) {
    if (!is_involution(p)) throw ThetaError(ThetaErrorKind::not_involution, p.to_string());
    return tableau_to_path(rsk_two_row(p));
}

FacingMatch facing_pairs(const LatticePath& p) {
    FacingMatch fm;
    std::vector<int> open;
    std::vector<int> unmatched_e;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.step(i) == 'N') {
            open.push_back(i);
        } else if (!open.empty()) {
            fm.pairs.emplace_back(open.back(), i);
            open.pop_back();
        } else {
            unmatched_e.push_back(i);
        }
    }
    std::sort(fm.pairs.begin(), fm.pairs.end());
    fm.unmatched = std::move(unmatched_e);
    fm.unmatched.insert(fm.unmatched.end(), open.begin(), open.end());
    return fm;
}

FacingMatch facing_match(const LatticePath& p) {
    auto fm = facing_pairs(p);
    for (int i : fm.unmatched)
        if (p.step(i) == 'E') throw ThetaError(ThetaErrorKind::below_diagonal, p.str());
    return fm;
}

LatticePath theta_fp(const Permutation& p, int a, int b) {
    if (a < 0 || b < a) throw ThetaError(ThetaErrorKind::shape_mismatch, "requires b >= a >= 0");
    if (p.size() != a + b)
        throw ThetaError(ThetaErrorKind::shape_mismatch,
                         "size " + std::to_string(p.size()) + " != a+b = " + std::to_string(a + b));
    if (!is_involution(p)) throw ThetaError(ThetaErrorKind::not_involution, p.to_string());
    if (contains_321(p.values())) throw ThetaError(ThetaErrorKind::contains_321, p.to_string());
    const int fp = fixed_point_count(p);
    if (fp < b - a) throw ThetaError(ThetaErrorKind::fixed_points_too_few, p.to_string());

    const LatticePath dyck = involution_to_path(p);
    const auto fm = facing_match(dyck);
    std::string steps = dyck.str();
    const int flips = (fp + b - a) / 2;
    for (int j = 0; j < flips; ++j) steps[static_cast<std::size_t>(fm.unmatched[static_cast<std::size_t>(j)] - 1)] = 'E';
    return g_bijection(LatticePath(std::move(steps)), a, b);
}

Permutation theta_fp_inverse(const LatticePath& lambda, int a, int b) {
    if (a < 0 || b < a) throw ThetaError(ThetaErrorKind::shape_mismatch, "requires b >= a >= 0");
    if (lambda.north_count() != a || lambda.east_count() != b)
        throw ThetaError(ThetaErrorKind::shape_mismatch, lambda.str() + " is not in the rectangle");
    const LatticePath p = g_inverse(lambda, a, b);
    const auto fm = facing_pairs(p);
    std::string steps = p.str();
    for (int i : fm.unmatched) steps[static_cast<std::size_t>(i - 1)] = 'N';
    return involution_from_tableau(path_to_tableau(LatticePath(std::move(steps))));
}

}  // namespace cinv
