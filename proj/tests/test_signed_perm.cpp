#include <doctest.h>

#include <random>
#include <set>

#include "cinv/enumerate.hpp"
#include "cinv/signed_perm.hpp"

using namespace cinv;

namespace {

SignedPermutation SP(std::vector<int> w) { return SignedPermutation(std::move(w)); }

}  // namespace

TEST_CASE("construction") {
    CHECK(SignedPermutation::parse("-2 -4 1 3") == SP({-2, -4, 1, 3}));
    CHECK_THROWS_AS(SP({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(SP({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SP({3, 1}), std::invalid_argument);
    CHECK(SP({-2, -4, 1, 3}).to_string() == "-2 -4 1 3");
    const auto s = SP({-4, 3, 2, -1});
    CHECK(s(-1) == 4);
    CHECK(s.is_involution());
}

TEST_CASE("theta examples") {
    CHECK(theta(Permutation::parse("24863157")) == SP({-2, -4, 1, 3}));
    CHECK(theta(Permutation::parse("53281764")) == SP({-4, 3, 2, -1}));
    CHECK(theta(Permutation::identity(6)) == SP({1, 2, 3}));
    CHECK(theta_inverse(SP({-2, -4, 1, 3})) == Permutation::parse("24863157"));
    CHECK_THROWS_AS(theta(Permutation::parse("1243")), std::invalid_argument);
    CHECK_THROWS_AS(theta(Permutation::parse("132")), std::invalid_argument);
}

TEST_CASE("signed containment") {
    const auto s = SP({6, -1, 5, -3, -2, 4});
    CHECK(signed_contains(s, SP({2, -1})));
    CHECK_FALSE(signed_contains(s, SP({-2, 1})));
    CHECK(signed_contains(s, SignedPermutation{}));
    CHECK_FALSE(signed_contains(SP({1}), SP({1, 2})));
}

TEST_CASE("six-pattern avoiders in B_2") {
    std::set<SignedPermutation> pass;
    for_each_signed(2, [&](const SignedPermutation& s) {
        if (avoids_six_patterns(s)) pass.insert(s);
    });
    const std::set<SignedPermutation> expected{SP({1, 2}), SP({-1, 2}), SP({2, 1}),
                                               SP({2, -1}), SP({-2, 1}), SP({-2, -1})};
    CHECK(pass == expected);
    CHECK_FALSE(avoids_six_patterns(SP({1, -2})));
}

TEST_CASE("the figure's involution contains 321, so its image fails the six-pattern test") {
    const auto p = Permutation::parse("53281764");
    CHECK(contains_321(p.values()));
    CHECK_FALSE(avoids_six_patterns(SP({-4, 3, 2, -1})));
    CHECK(signed_contains(SP({-4, 3, 2, -1}), SP({3, 2, -1})));
}

TEST_CASE("type-B descent set by pullback") {
    CHECK(des_plus_signed(SP({1, 2, 3})).empty());
    CHECK(des_plus_signed(theta(Permutation::parse("2143"))) == std::vector<int>{1});
    CHECK(des_plus_signed(theta(Permutation::parse("3412"))) == std::vector<int>{2});
    CHECK(maj_plus_signed(theta(Permutation::parse("3412"))) == 2);
}

TEST_CASE("theta round trips and involutions, n <= 7 on involutions") {
    for (int n = 0; n <= 7; ++n)
        for_each_involution(2 * n, [&](const Permutation& p) {
            if (!is_centrosymmetric(p)) return;
            const auto s = theta(p);
            REQUIRE(theta_inverse(s) == p);
            REQUIRE(s.is_involution());
        });
    for (int n = 0; n <= 5; ++n)
        for_each_signed(n, [&](const SignedPermutation& s) {
            const auto p = theta_inverse(s);
            REQUIRE(is_centrosymmetric(p));
            REQUIRE(theta(p) == s);
            REQUIRE(is_involution(p) == s.is_involution());
        });
}

TEST_CASE("theta round trips on random signed permutations") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + trial % 10;
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(w.begin(), w.end(), rng);
        for (auto& v : w)
            if (rng() & 1u) v = -v;
        const SignedPermutation s(w);
        REQUIRE(theta(theta_inverse(s)) == s);
    }
}

TEST_CASE("Theta(S^C_2n(321)) equals the six-pattern avoiders, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        std::set<SignedPermutation> image, avoiders;
        long long centro = 0;
        for_each_centrosymmetric(2 * n, [&](const Permutation& p) {
            ++centro;
            if (avoids_321(p)) image.insert(theta(p));
        });
        for_each_signed(n, [&](const SignedPermutation& s) {
            if (avoids_six_patterns(s)) avoiders.insert(s);
        });
        long long bn = 1;
        for (int i = 1; i <= n; ++i) bn *= 2 * i;
        CHECK(centro == bn);
        CHECK(image == avoiders);
    }
}
