#include "cinv/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cinv {

namespace {

struct InvolutionWalker {
    std::vector<int> vals;  // 0 = unassigned, 1-based values
    const PermVisitor& fn;

    void run(int from) {
        const int m = static_cast<int>(vals.size());
        int i = from;
        while (i <= m && vals[static_cast<std::size_t>(i - 1)] != 0) ++i;
        if (i > m) {
            fn(Permutation::trusted(vals));
            return;
        }
        vals[static_cast<std::size_t>(i - 1)] = i;
        run(i + 1);
        for (int j = i + 1; j <= m; ++j) {
            if (vals[static_cast<std::size_t>(j - 1)] != 0) continue;
            vals[static_cast<std::size_t>(i - 1)] = j;
            vals[static_cast<std::size_t>(j - 1)] = i;
            run(i + 1);
            vals[static_cast<std::size_t>(j - 1)] = 0;
        }
        vals[static_cast<std::size_t>(i - 1)] = 0;
    }
};

}  // namespace

void for_each_involution(int m, const PermVisitor& fn, Shard shard) {
    if (m < 0) throw std::invalid_argument("negative size");
    if (m == 0) {
        if (shard.owns(0)) fn(Permutation{});
        return;
    }
    InvolutionWalker w{std::vector<int>(static_cast<std::size_t>(m), 0), fn};
    // Branch 0: 1 fixed. Branch j-1: 1 paired with j.
    for (int j = 1; j <= m; ++j) {
        if (!shard.owns(j - 1)) continue;
        w.vals[0] = j;
        w.vals[static_cast<std::size_t>(j - 1)] = 1;
        w.run(2);
        w.vals[static_cast<std::size_t>(j - 1)] = 0;
        w.vals[0] = 0;
    }
}

void for_each_inv321(int m, const PermVisitor& fn, Shard shard) {
    for_each_involution(m, [&](const Permutation& p) {
        if (!contains_321(p.values())) fn(p);
    }, shard);
}

void for_each_cinv321_filtered(int m, const PermVisitor& fn, Shard shard) {
    for_each_involution(m, [&](const Permutation& p) {
        if (is_centrosymmetric(p) && !contains_321(p.values())) fn(p);
    }, shard);
}

void for_each_cinv321_from_subsets(int n, const PermVisitor& fn, Shard shard) {
    for_each_subset(n, [&](const ExcedanceSubset& e) { fn(subset_to_permutation(e)); }, shard);
}

namespace {

void centro_rec(std::vector<int>& vals, std::vector<bool>& used, int pos, int half,
                const PermVisitor& fn) {
    const int m = static_cast<int>(vals.size());
    if (pos > half) {
        fn(Permutation::trusted(vals));
        return;
    }
    for (int v = 1; v <= m; ++v) {
        const int w = m + 1 - v;
        if (v == w || used[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = true;
        vals[static_cast<std::size_t>(pos - 1)] = v;
        vals[static_cast<std::size_t>(m - pos)] = w;
        centro_rec(vals, used, pos + 1, half, fn);
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = false;
    }
}

}  // namespace

void for_each_centrosymmetric(int m, const PermVisitor& fn, Shard shard) {
    if (m < 0) throw std::invalid_argument("negative size");
    const int half = m / 2;
    std::vector<int> vals(static_cast<std::size_t>(m), 0);
    std::vector<bool> used(static_cast<std::size_t>(m) + 2, false);
    if (m % 2 == 1) {
        vals[static_cast<std::size_t>(half)] = half + 1;
        used[static_cast<std::size_t>(half + 1)] = true;
    }
    if (half == 0) {
        if (shard.owns(0)) fn(Permutation::trusted(vals));
        return;
    }
    for (int v = 1; v <= m; ++v) {
        const int w = m + 1 - v;
        if (v == w || !shard.owns(v - 1)) continue;
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = true;
        vals[0] = v;
        vals[static_cast<std::size_t>(m - 1)] = w;
        centro_rec(vals, used, 2, half, fn);
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = false;
    }
}

void for_each_subset(int n, const std::function<void(const ExcedanceSubset&)>& fn, Shard shard) {
    if (n < 0 || n > 40) throw std::invalid_argument("subset size out of range");
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = static_cast<std::uint64_t>(shard.index); mask < total;
         mask += static_cast<std::uint64_t>(shard.count))
        fn(ExcedanceSubset::from_mask(n, mask));
}

void for_each_signed(int n, const std::function<void(const SignedPermutation&)>& fn, Shard shard) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    const std::uint64_t signs = std::uint64_t{1} << n;
    long long counter = 0;
    do {
        for (std::uint64_t mask = 0; mask < signs; ++mask, ++counter) {
            if (!shard.owns(counter)) continue;
            std::vector<int> w(base);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            fn(SignedPermutation::trusted(std::move(w)));
        }
    } while (std::next_permutation(base.begin(), base.end()));
}

void for_each_path_of_length(int n, const std::function<void(const LatticePath&)>& fn, Shard shard) {
    long long counter = 0;
    for (int a = 0; a <= n; ++a)
        for_each_path(a, n - a, [&](const LatticePath& p) {
            if (shard.owns(counter++)) fn(p);
        });
}

std::optional<ClassLabel> parse_class_label(std::string_view s) {
    if (s == "cinv321-even") return ClassLabel::cinv321_even;
    if (s == "cinv321-odd") return ClassLabel::cinv321_odd;
    if (s == "inv321") return ClassLabel::inv321;
    if (s == "signed-all") return ClassLabel::signed_all;
    if (s == "signed-sixavoiders") return ClassLabel::signed_sixavoiders;
    if (s == "subsets") return ClassLabel::subsets;
    if (s == "paths-rect") return ClassLabel::paths_rect;
    return std::nullopt;
}

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::cinv321_even: return "cinv321-even";
        case ClassLabel::cinv321_odd: return "cinv321-odd";
        case ClassLabel::inv321: return "inv321";
        case ClassLabel::signed_all: return "signed-all";
        case ClassLabel::signed_sixavoiders: return "signed-sixavoiders";
        case ClassLabel::subsets: return "subsets";
        case ClassLabel::paths_rect: return "paths-rect";
    }
    return "?";
}

std::string object_text(const CombObject& obj) {
    struct {
        std::string operator()(const Permutation& p) const { return p.to_string(); }
        std::string operator()(const SignedPermutation& s) const { return s.to_string(); }
        std::string operator()(const ExcedanceSubset& e) const { return e.to_string(); }
        std::string operator()(const LatticePath& p) const { return p.str(); }
    } visitor;
    return std::visit(visitor, obj);
}

void generate_class(const ClassRequest& req, const std::function<void(const CombObject&)>& fn, Shard shard) {
    if (req.size < 0) throw std::invalid_argument("size must be non-negative");
    auto emit_perm = [&](const Permutation& p) { fn(CombObject{p}); };
    switch (req.label) {
        case ClassLabel::cinv321_even:
            if (req.size % 2 != 0) throw std::invalid_argument("cinv321-even needs an even size 2n");
            if (req.route == EvenRoute::subsets) for_each_cinv321_from_subsets(req.size / 2, emit_perm, shard);
            else for_each_cinv321_filtered(req.size, emit_perm, shard);
            return;
        case ClassLabel::cinv321_odd:
            if (req.size % 2 != 1) throw std::invalid_argument("cinv321-odd needs an odd size 2n+1");
            for_each_cinv321_filtered(req.size, emit_perm, shard);
            return;
        case ClassLabel::inv321:
            for_each_inv321(req.size, emit_perm, shard);
            return;
        case ClassLabel::signed_all:
            for_each_signed(req.size, [&](const SignedPermutation& s) { fn(CombObject{s}); }, shard);
            return;
        case ClassLabel::signed_sixavoiders:
            for_each_signed(req.size, [&](const SignedPermutation& s) {
                if (avoids_six_patterns(s)) fn(CombObject{s});
            }, shard);
            return;
        case ClassLabel::subsets:
            for_each_subset(req.size, [&](const ExcedanceSubset& e) { fn(CombObject{e}); }, shard);
            return;
        case ClassLabel::paths_rect:
            if (req.rect) {
                long long counter = 0;
                for_each_path(req.rect->first, req.rect->second, [&](const LatticePath& p) {
                    if (shard.owns(counter++)) fn(CombObject{p});
                });
            } else {
                for_each_path_of_length(req.size, [&](const LatticePath& p) { fn(CombObject{p}); }, shard);
            }
            return;
    }
}

}  // namespace cinv
