#pragma once

// Exact polynomials in q with arbitrary-precision integer coefficients, the
// Gaussian binomials, and the closed forms and recurrences for the
// distribution polynomials over 321-avoiding centrosymmetric involutions.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace cinv {

class QPolynomial {
public:
    QPolynomial() = default;  // zero
    // Ascending by exponent. Trailing zeros are trimmed.
    explicit QPolynomial(std::vector<mpz_class> coeffs);
    QPolynomial(std::initializer_list<long> coeffs);

    static QPolynomial constant(const mpz_class& c);
    static QPolynomial monomial(int exponent, const mpz_class& c = 1);
    // Parses "1,1,2"; "" or "0" is the zero polynomial.
    static QPolynomial parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Zero outside the stored range.
    mpz_class coeff(int exponent) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class evaluate(const mpz_class& q) const;
    bool is_palindromic() const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    // "1,1,2"
    std::string to_list() const;
    // "1 + q + 2q^2"
    std::string to_pretty() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial multiply(const QPolynomial& a, const QPolynomial& b);
QPolynomial scale(const QPolynomial& p, const mpz_class& c);
// Multiplies by q^k, k >= 0.
QPolynomial shift(const QPolynomial& p, int k);
QPolynomial power(const QPolynomial& p, int e);

mpz_class binomial(int n, int k);

// Gaussian binomial via {n,h} = {n-1,h} + q^{n-h}{n-1,h-1}, memoized.
// Zero outside 0 <= h <= n.
QPolynomial q_binomial(int n, int h);

// Sum_k C(n+1, 2k) q^k: des+ over I^C_{2n}(321).
QPolynomial d_closed(int n);
// d_n = 2 d_{n-1} + (q-1) d_{n-2}, d_0 = 1, d_1 = 1+q.
QPolynomial d_recurrence(int n);

// maj+ over I^C_{2n}(321), two closed forms:
// (a) Sum_h {n,h}_q + (q^n - 1) Sum_h {n-1,h}_q
// (b) Sum_h q^{n-h} {n,h}_q
QPolynomial p_closed_a(int n);
QPolynomial p_closed_b(int n);
// p_n = (1+q) p_{n-1} + (q^n - q) p_{n-2}, p_0 = 1, p_1 = 1+q.
QPolynomial p_recurrence(int n);

// Sum of q^area over paths of n+1 steps starting with E, by enumeration.
QPolynomial r_definition(int n);

// (1+q)^n: des over I^C_{2n}(321).
QPolynomial des_closed(int n);

struct OddPolynomials {
    QPolynomial des_plus;
    QPolynomial maj_plus;
    QPolynomial des;
};
// Distributions of des+, maj+, des over I^C_{2n+1}(321).
OddPolynomials odd_polys(int n);

// Sum of q^maj over pi in I_{a+b}(321) with fp(pi) >= b-a: {a+b, a}_q.
QPolynomial fp_at_least_maj_poly(int a, int b);
// Same with des(pi) = k added: q^{k^2} {a,k}_q {b,k}_q.
QPolynomial fp_at_least_des_maj_poly(int a, int b, int k);
// Sum of q^maj over pi in I_n(321) with fp(pi) = l. Throws on l, n parity mismatch.
QPolynomial fp_refined_maj_poly(int n, int l);
// Same with des(pi) = k.
QPolynomial fp_des_refined_poly(int n, int l, int k);

}  // namespace cinv
