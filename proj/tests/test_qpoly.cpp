#include <doctest.h>

#include <functional>

#include "cinv/enumerate.hpp"
#include "cinv/qpoly.hpp"

using namespace cinv;

namespace {

// Partitions of r with at most `parts` parts, each at most `largest`.
long long count_partitions(int r, int parts, int largest) {
    if (r == 0) return 1;
    if (parts == 0 || largest == 0) return 0;
    long long total = 0;
    for (int first = 1; first <= std::min(r, largest); ++first) total += count_partitions(r - first, parts - 1, first);
    return total;
}

QPolynomial partition_oracle(int n, int h) {
    std::vector<mpz_class> v;
    for (int r = 0; r <= h * (n - h); ++r) v.emplace_back(static_cast<long>(count_partitions(r, h, n - h)));
    return QPolynomial(std::move(v));
}

// Sum over bitmasks of [n] of q^stat(mask), computed bit by bit.
QPolynomial subset_oracle(int n, const std::function<long(unsigned, int)>& stat) {
    std::vector<long> counts;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const long s = stat(mask, n);
        if (static_cast<long>(counts.size()) <= s) counts.resize(static_cast<std::size_t>(s) + 1, 0);
        ++counts[static_cast<std::size_t>(s)];
    }
    std::vector<mpz_class> v;
    for (long c : counts) v.emplace_back(c);
    return QPolynomial(std::move(v));
}

bool in(unsigned mask, int i) { return i >= 1 && (mask >> (i - 1) & 1u); }

long des_of_mask(unsigned mask, int n) {
    long d = 0;
    for (int i = 1; i <= n; ++i)
        if (in(mask, i) && !in(mask, i + 1)) ++d;
    return d;
}

long maj_of_mask(unsigned mask, int n) {
    long s = 0;
    for (int i = 1; i <= n; ++i)
        if (in(mask, i) && !in(mask, i + 1)) s += i;
    return s;
}

long full_des_of_mask(unsigned mask, int n) {
    return in(mask, n) ? 2 * des_of_mask(mask, n) - 1 : 2 * des_of_mask(mask, n);
}

}  // namespace

TEST_CASE("ring operations") {
    const QPolynomial one_q{1, 1};
    CHECK(one_q * one_q == QPolynomial{1, 2, 1});
    CHECK(shift(one_q, 2) == QPolynomial{0, 0, 1, 1});
    CHECK(add(one_q, scale(QPolynomial{1}, -1)) == QPolynomial{0, 1});
    CHECK((one_q - one_q).is_zero());
    CHECK(QPolynomial{}.degree() == -1);
    CHECK(QPolynomial{1, 0, 0} == QPolynomial{1});
    CHECK(multiply(QPolynomial{}, one_q).is_zero());
    CHECK(QPolynomial{1, 1, 2}.evaluate(1) == 4);
}

TEST_CASE("text formats") {
    CHECK(QPolynomial{1, 1, 2}.to_list() == "1,1,2");
    CHECK(QPolynomial{1, 1, 2}.to_pretty() == "1 + q + 2q^2");
    CHECK(QPolynomial{0, -1, 0, 3}.to_pretty() == "-q + 3q^3");
    CHECK(QPolynomial{}.to_list() == "0");
    CHECK(QPolynomial::parse("1,1,2") == QPolynomial{1, 1, 2});
    CHECK(QPolynomial::parse("").is_zero());
    CHECK_THROWS_AS(QPolynomial::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(QPolynomial::parse("1,,2"), std::invalid_argument);
}

TEST_CASE("q_binomial examples") {
    CHECK(q_binomial(2, 1) == QPolynomial{1, 1});
    CHECK(q_binomial(4, 2) == QPolynomial{1, 1, 2, 1, 1});
    for (int n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == QPolynomial{1});
    CHECK(q_binomial(3, 5).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
}

TEST_CASE("q_binomial matches partition counts, is palindromic and symmetric, n <= 14") {
    for (int n = 0; n <= 14; ++n)
        for (int h = 0; h <= n; ++h) {
            const auto qb = q_binomial(n, h);
            REQUIRE(qb == partition_oracle(n, h));
            REQUIRE(qb.is_palindromic());
            REQUIRE(qb == q_binomial(n, n - h));
            REQUIRE(qb.degree() == h * (n - h));
            REQUIRE(qb.evaluate(1) == binomial(n, h));
        }
}

TEST_CASE("d polynomials") {
    CHECK(d_closed(0) == QPolynomial{1});
    CHECK(d_closed(2) == QPolynomial{1, 3});
    CHECK(d_closed(3) == QPolynomial{1, 6, 1});
    CHECK(d_recurrence(1) == QPolynomial{1, 1});
    CHECK(d_recurrence(2) == QPolynomial{1, 3});
    CHECK(d_recurrence(0) == QPolynomial{1});
    for (int n = 0; n <= 14; ++n) {
        const auto brute = subset_oracle(n, des_of_mask);
        REQUIRE(d_closed(n) == brute);
        REQUIRE(d_recurrence(n) == brute);
        REQUIRE(d_closed(n).evaluate(1) == mpz_class(1) << n);
    }
}

TEST_CASE("d_closed is the even part of (1+t)^{n+1} with t^2 = q") {
    for (int n = 0; n <= 20; ++n) {
        const auto full = power(QPolynomial{1, 1}, n + 1);
        std::vector<mpz_class> even;
        for (int k = 0; 2 * k <= full.degree(); ++k) even.push_back(full.coeff(2 * k));
        REQUIRE(d_closed(n) == QPolynomial(even));
    }
}

TEST_CASE("p polynomials: five-way agreement, n <= 12") {
    CHECK(p_closed_a(0) == QPolynomial{1});
    CHECK(p_closed_b(2) == QPolynomial{1, 1, 2});
    CHECK(p_closed_a(3) == QPolynomial{1, 1, 2, 3, 1});
    CHECK(p_recurrence(1) == QPolynomial{1, 1});
    CHECK(p_recurrence(2) == QPolynomial{1, 1, 2});
    CHECK(r_definition(0) == QPolynomial{1});
    CHECK(r_definition(2) == QPolynomial{1, 1, 2});
    CHECK(r_definition(3) == QPolynomial{1, 1, 2, 3, 1});
    for (int n = 0; n <= 12; ++n) {
        const auto brute = subset_oracle(n, maj_of_mask);
        REQUIRE(p_closed_a(n) == brute);
        REQUIRE(p_closed_b(n) == brute);
        REQUIRE(p_recurrence(n) == brute);
        REQUIRE(r_definition(n) == brute);
    }
}

TEST_CASE("des polynomial") {
    CHECK(des_closed(0) == QPolynomial{1});
    CHECK(des_closed(2) == QPolynomial{1, 2, 1});
    CHECK(des_closed(3) == QPolynomial{1, 3, 3, 1});
    for (int n = 0; n <= 14; ++n) REQUIRE(des_closed(n) == subset_oracle(n, full_des_of_mask));
}

TEST_CASE("odd polynomials") {
    auto z = odd_polys(0);
    CHECK(z.des_plus == QPolynomial{1});
    CHECK(z.maj_plus == QPolynomial{1});
    CHECK(z.des == QPolynomial{1});
    CHECK(odd_polys(2).maj_plus == QPolynomial{1, 1});
    CHECK(odd_polys(3).des_plus == QPolynomial{1, 2});
    CHECK(odd_polys(3).des == QPolynomial{1, 0, 2});
    for (int n = 0; n <= 10; ++n) {
        const auto o = odd_polys(n);
        CHECK(o.des_plus.evaluate(1) == binomial(n, n / 2));
        CHECK(o.maj_plus.evaluate(1) == binomial(n, n / 2));
        CHECK(o.des.evaluate(1) == binomial(n, n / 2));
    }
}

TEST_CASE("fixed-point refined closed forms") {
    CHECK(fp_refined_maj_poly(4, 0) == QPolynomial{0, 0, 1, 0, 1});
    CHECK(fp_refined_maj_poly(3, 3) == QPolynomial{1});
    CHECK(fp_refined_maj_poly(3, 1) + fp_refined_maj_poly(3, 3) == q_binomial(3, 1));
    CHECK(q_binomial(3, 1) == QPolynomial{1, 1, 1});
    CHECK_THROWS_AS(fp_refined_maj_poly(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(fp_des_refined_poly(4, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(fp_at_least_maj_poly(3, 1), std::invalid_argument);
    // Summing over l recovers the central q-binomial.
    for (int n = 0; n <= 12; ++n) {
        QPolynomial sum;
        for (int l = n % 2; l <= n; l += 2) sum += fp_refined_maj_poly(n, l);
        REQUIRE(sum == q_binomial(n, n / 2));
    }
}

TEST_CASE("polynomials evaluate to 2^n at q = 1") {
    for (int n = 0; n <= 14; ++n) {
        const mpz_class two_n = mpz_class(1) << n;
        CHECK(d_closed(n).evaluate(1) == two_n);
        CHECK(p_closed_b(n).evaluate(1) == two_n);
        CHECK(des_closed(n).evaluate(1) == two_n);
    }
}
