#include <doctest.h>

#include <set>

#include "cinv/centro.hpp"
#include "cinv/enumerate.hpp"

using namespace cinv;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }
ExcedanceSubset S(int n, std::vector<int> m) { return ExcedanceSubset(n, std::move(m)); }
using Arcs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("permutation_to_matching") {
    CHECK(permutation_to_matching(P("1234")).arcs().empty());
    CHECK(permutation_to_matching(P("1234")).singletons().size() == 4);
    CHECK(permutation_to_matching(P("2143")).arcs() == Arcs{{1, 2}, {3, 4}});
    CHECK(permutation_to_matching(P("3412")).arcs() == Arcs{{1, 3}, {2, 4}});
    CHECK_THROWS_AS(permutation_to_matching(P("2314")), std::invalid_argument);
    CHECK_THROWS_AS(permutation_to_matching(P("2134")), std::invalid_argument);  // not centrosymmetric
    // 4321 is a centrosymmetric involution containing 321: its matching nests.
    auto nested = permutation_to_matching(P("4321"));
    CHECK(nested.is_symmetric());
    CHECK_FALSE(nested.is_non_nesting());
}

TEST_CASE("subset_to_matching on the worked n=11 example") {
    auto m = subset_to_matching(S(11, {1, 4, 5, 7, 8, 10}));
    CHECK(m.arcs() == Arcs{{1, 2}, {4, 6}, {5, 9}, {7, 11}, {8, 13}, {10, 15}, {12, 16}, {14, 18}, {17, 19}, {21, 22}});
    CHECK(m.to_string() == "1-2,4-6,5-9,7-11,8-13,10-15,12-16,14-18,17-19,21-22");
    CHECK(excedance_subset_of(m) == S(11, {1, 4, 5, 7, 8, 10}));
}

TEST_CASE("subset_to_matching small cases") {
    CHECK(subset_to_matching(S(2, {})).arcs().empty());
    CHECK(subset_to_matching(S(2, {1, 2})).arcs() == Arcs{{1, 3}, {2, 4}});
    CHECK(subset_to_permutation(S(2, {1, 2})) == P("3412"));
}

TEST_CASE("matching_to_permutation and excedance subsets") {
    auto p = matching_to_permutation(Matching(4, {{1, 2}, {3, 4}}));
    CHECK(p == P("2143"));
    CHECK(excedance_subset_of(p) == S(2, {1}));
    p = matching_to_permutation(Matching(4, {{2, 3}}));
    CHECK(p == P("1324"));
    CHECK(excedance_subset_of(p) == S(2, {2}));
    p = matching_to_permutation(Matching(4, {}));
    CHECK(p == P("1234"));
    CHECK(excedance_subset_of(p).members.empty());

    CHECK_THROWS_AS(matching_to_permutation(Matching(4, {{1, 2}})), std::invalid_argument);          // asymmetric
    CHECK_THROWS_AS(matching_to_permutation(Matching(4, {{1, 4}, {2, 3}})), std::invalid_argument);  // nesting
    CHECK_THROWS_AS(matching_to_permutation(Matching(4, {{1, 4}})), std::invalid_argument);          // singleton inside
    CHECK_THROWS_AS(Matching(4, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK(Matching::parse(4, "1-2,3-4") == Matching(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("subset descent statistics") {
    CHECK(subset_descent_set(S(3, {1, 3})) == std::vector<int>{1, 3});
    CHECK(subset_des(S(3, {1, 3})) == 2);
    CHECK(subset_maj(S(3, {1, 3})) == 4);
    CHECK(subset_descent_set(S(3, {})).empty());
    CHECK(subset_maj(S(3, {})) == 0);
    CHECK(subset_descent_set(S(2, {1, 2})) == std::vector<int>{2});
    CHECK(subset_des(S(2, {1, 2})) == 1);
    CHECK(subset_maj(S(2, {1, 2})) == 2);
}

TEST_CASE("full_des_from_subset") {
    CHECK(full_des_from_subset(S(2, {1})) == 2);
    CHECK(des(P("2143")) == 2);
    CHECK(full_des_from_subset(S(2, {2})) == 1);
    CHECK(des(P("1324")) == 1);
    CHECK(full_des_from_subset(S(5, {})) == 0);
}

TEST_CASE("odd split and join") {
    CHECK(odd_join(P("21"), 2) == P("21354"));
    CHECK(odd_join(P("12"), 2) == P("12345"));
    CHECK(odd_split(P("21354")) == P("21"));
    CHECK_THROWS_AS(odd_split(P("2143")), std::invalid_argument);
    CHECK_THROWS_AS(odd_split(P("32145")), std::invalid_argument);
    CHECK_THROWS_AS(odd_join(P("321"), 3), std::invalid_argument);
}

TEST_CASE("round trip over all subsets, n <= 12") {
    for (int n = 0; n <= 12; ++n)
        for_each_subset(n, [&](const ExcedanceSubset& e) {
            const Permutation p = subset_to_permutation(e);
            REQUIRE(excedance_subset_of(p) == e);
            REQUIRE(excedance_subset_of(subset_to_matching(e)) == e);
        });
}

TEST_CASE("completeness: subset images are exactly I^C_2n(321), n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        std::set<Permutation> images, filtered;
        for_each_cinv321_from_subsets(n, [&](const Permutation& p) { images.insert(p); });
        for_each_involution(2 * n, [&](const Permutation& p) {
            if (is_centrosymmetric(p) && avoids_321(p)) filtered.insert(p);
        });
        CHECK(images == filtered);
        CHECK(images.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("Des+ is read off the excedance subset, n <= 8") {
    for (int n = 0; n <= 8; ++n)
        for_each_cinv321_filtered(2 * n, [&](const Permutation& p) {
            const auto e = excedance_subset_of(p);
            REQUIRE(des_plus_set(p) == subset_descent_set(e));
            REQUIRE(des(p) == full_des_from_subset(e));
            REQUIRE(permutation_to_matching(p).is_non_nesting());
        });
}

TEST_CASE("odd case bijection and count, n <= 8") {
    const long long central[] = {1, 1, 2, 3, 6, 10, 20, 35, 70};
    for (int n = 0; n <= 8; ++n) {
        std::set<Permutation> joined;
        for_each_inv321(n, [&](const Permutation& a) {
            const auto p = odd_join(a, n);
            REQUIRE(is_cinv321(p));
            REQUIRE(odd_split(p) == a);
            REQUIRE(des_plus(p) == des(a));
            REQUIRE(maj_plus(p) == maj(a));
            REQUIRE(des(p) == 2 * des(a));
            joined.insert(p);
        });
        CHECK(static_cast<long long>(joined.size()) == central[n]);
    }
}
