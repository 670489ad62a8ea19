#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cinv/enumerate.hpp"
#include "cinv/permutation.hpp"

using namespace cinv;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

template <class F>
void for_each_perm(int m, F f) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    do f(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("construction and parsing") {
    CHECK(P("5 3 2 8 1 7 6 4") == P("53281764"));
    CHECK(P("").size() == 0);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P("12a"), std::invalid_argument);
    CHECK(P("10 1 2 3 4 5 6 7 8 9").size() == 10);
    CHECK(P("2 3 1").to_string() == "2 3 1");
}

TEST_CASE("is_involution") {
    CHECK(is_involution(P("1234")));
    CHECK(is_involution(P("2143")));
    CHECK_FALSE(is_involution(P("2314")));
    CHECK(is_involution(Permutation{}));
}

TEST_CASE("is_centrosymmetric") {
    CHECK(is_centrosymmetric(P("1234")));
    CHECK(is_centrosymmetric(P("53281764")));
    CHECK_FALSE(is_centrosymmetric(P("1243")));
    CHECK(is_centrosymmetric(Permutation{}));
}

TEST_CASE("pattern containment") {
    const auto p321 = P("321");
    CHECK(contains_pattern(P("4231"), p321));
    CHECK_FALSE(contains_pattern(P("1234"), p321));
    CHECK_FALSE(contains_pattern(P("21354"), p321));
    CHECK(avoids(Permutation{}, p321));
    CHECK(contains_pattern(P("53281764"), p321));
    CHECK(contains_pattern(P("2413"), P("231")));
    CHECK_FALSE(contains_pattern(P("12"), P("123")));
}

TEST_CASE("linear 321/123 scans agree with the exhaustive subsequence check") {
    const auto p321 = P("321"), p123 = P("123");
    for (int m = 0; m <= 7; ++m)
        for_each_perm(m, [&](const Permutation& p) {
            REQUIRE(contains_321(p.values()) == contains_pattern_naive(p, p321));
            REQUIRE(contains_123(p.values()) == contains_pattern_naive(p, p123));
        });
}

TEST_CASE("descent statistics") {
    CHECK(descent_set(P("1234")).empty());
    CHECK(descent_set(P("2143")) == std::vector<int>{1, 3});
    CHECK(descent_set(P("53281764")) == std::vector<int>{1, 2, 4, 6, 7});

    CHECK(des_plus_set(P("2143")) == std::vector<int>{1});
    CHECK(maj_plus(P("2143")) == 1);
    CHECK(des(P("2143")) == 2);

    CHECK(des_plus_set(P("3412")) == std::vector<int>{2});
    CHECK(maj_plus(P("3412")) == 2);
    CHECK(des(P("3412")) == 1);

    for (int m = 0; m <= 6; ++m) {
        auto id = Permutation::identity(m);
        CHECK(des(id) == 0);
        CHECK(maj(id) == 0);
        CHECK(des_plus(id) == 0);
        CHECK(maj_plus(id) == 0);
    }
}

TEST_CASE("excedances and fixed points") {
    CHECK(excedance_set(P("1234")).empty());
    CHECK(excedance_set(P("2143")) == std::vector<int>{1, 3});
    CHECK(excedance_set(P("3412")) == std::vector<int>{1, 2});
    CHECK(fixed_point_count(Permutation::identity(4)) == 4);
    CHECK(fixed_point_count(P("2143")) == 0);
    CHECK(fixed_point_count(P("132")) == 1);
}

TEST_CASE("centrosymmetric descent symmetry") {
    for (int m = 0; m <= 8; ++m)
        for_each_centrosymmetric(m, [&](const Permutation& p) {
            const auto d = descent_set(p);
            for (int i : d) REQUIRE(std::binary_search(d.begin(), d.end(), m - i));
            if (m % 2 == 0) REQUIRE(2 * maj(p) == static_cast<long long>(m) * des(p));
            // Des = Des+ union its mirror
            std::vector<int> rebuilt = des_plus_set(p);
            for (int i : des_plus_set(p)) rebuilt.push_back(m - i);
            std::sort(rebuilt.begin(), rebuilt.end());
            rebuilt.erase(std::unique(rebuilt.begin(), rebuilt.end()), rebuilt.end());
            REQUIRE(rebuilt == d);
        });
}

TEST_CASE("involution parity and complement") {
    for (int m = 0; m <= 9; ++m)
        for_each_involution(m, [&](const Permutation& p) {
            REQUIRE((fixed_point_count(p) - m) % 2 == 0);
            const auto c = p.complement();
            REQUIRE(contains_321(p.values()) == contains_123(c.values()));
            REQUIRE(is_centrosymmetric(p) == is_centrosymmetric(c));
            // Complement conjugates by the reversal, so involutions stay involutions
            // exactly when centrosymmetric; check the centrosymmetric case.
            if (is_centrosymmetric(p)) REQUIRE(is_involution(c));
        });
}

TEST_CASE("inverse, compose, reverse") {
    const auto p = P("2 3 1");
    CHECK(p.compose(p.inverse()) == Permutation::identity(3));
    CHECK(p.reverse() == P("1 3 2"));
    CHECK(p.complement() == P("2 1 3"));
    CHECK(longest_increasing_length(P("2143")) == 2);
    CHECK(longest_increasing_length(Permutation{}) == 0);
}
