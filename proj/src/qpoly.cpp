#include "cinv/qpoly.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cinv/lattice_path.hpp"

namespace cinv {

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPolynomial QPolynomial::constant(const mpz_class& c) { return QPolynomial(std::vector<mpz_class>{c}); }

QPolynomial QPolynomial::monomial(int exponent, const mpz_class& c) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    std::vector<mpz_class> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::parse(std::string_view text) {
    std::vector<mpz_class> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string token(text.substr(start, end - start));
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (!token.empty()) {
            mpz_class c;
            if (c.set_str(token, 10) != 0) throw std::invalid_argument("bad coefficient: " + token);
            v.push_back(c);
        } else if (end != text.size() || start != 0) {
            throw std::invalid_argument("empty coefficient in polynomial list");
        }
        start = end + 1;
    }
    return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPolynomial::coeff(int exponent) const {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

mpz_class QPolynomial::evaluate(const mpz_class& q) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

bool QPolynomial::is_palindromic() const {
    // Palindromic about the centre of [lowest nonzero, degree].
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) return true;
    for (std::size_t i = lo, j = coeffs_.size() - 1; i < j; ++i, --j)
        if (coeffs_[i] != coeffs_[j]) return false;
    return true;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string QPolynomial::to_list() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

std::string QPolynomial::to_pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str();
        os << 'q';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

QPolynomial add(const QPolynomial& a, const QPolynomial& b) { return a + b; }
QPolynomial multiply(const QPolynomial& a, const QPolynomial& b) { return a * b; }

QPolynomial scale(const QPolynomial& p, const mpz_class& c) {
    std::vector<mpz_class> v(p.coeffs());
    for (auto& x : v) x *= c;
    return QPolynomial(std::move(v));
}

QPolynomial shift(const QPolynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("shift: negative exponent");
    if (p.is_zero()) return p;
    std::vector<mpz_class> v(static_cast<std::size_t>(k));
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return QPolynomial(std::move(v));
}

QPolynomial power(const QPolynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    QPolynomial result{1};
    for (int i = 0; i < e; ++i) result *= p;
    return result;
}

mpz_class binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

QPolynomial q_binomial(int n, int h) {
    if (n < 0 || h < 0 || h > n) return {};
    if (h == 0 || h == n) return {1};

    static std::mutex mu;
    static std::map<std::pair<int, int>, QPolynomial> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({n, h}); it != memo.end()) return it->second;
    }
    QPolynomial result = q_binomial(n - 1, h) + shift(q_binomial(n - 1, h - 1), n - h);
    std::lock_guard lock(mu);
    memo.emplace(std::pair{n, h}, result);
    return result;
}

QPolynomial d_closed(int n) {
    if (n < 0) throw std::invalid_argument("d_closed: n < 0");
    std::vector<mpz_class> v;
    for (int k = 0; 2 * k <= n + 1; ++k) v.push_back(binomial(n + 1, 2 * k));
    return QPolynomial(std::move(v));
}

QPolynomial d_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("d_recurrence: n < 0");
    QPolynomial prev{1};
    if (n == 0) return prev;
    QPolynomial cur{1, 1};
    const QPolynomial q_minus_1{-1, 1};
    for (int i = 2; i <= n; ++i) {
        QPolynomial next = scale(cur, 2) + q_minus_1 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

QPolynomial p_closed_a(int n) {
    if (n < 0) throw std::invalid_argument("p_closed_a: n < 0");
    QPolynomial first, second;
    for (int h = 0; h <= n; ++h) first += q_binomial(n, h);
    for (int h = 0; h <= n - 1; ++h) second += q_binomial(n - 1, h);
    return first + (QPolynomial::monomial(n) - QPolynomial{1}) * second;
}

QPolynomial p_closed_b(int n) {
    if (n < 0) throw std::invalid_argument("p_closed_b: n < 0");
    QPolynomial sum;
    for (int h = 0; h <= n; ++h) sum += shift(q_binomial(n, h), n - h);
    return sum;
}

QPolynomial p_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("p_recurrence: n < 0");
    QPolynomial prev{1};
    if (n == 0) return prev;
    QPolynomial cur{1, 1};
    const QPolynomial one_plus_q{1, 1};
    for (int i = 2; i <= n; ++i) {
        QPolynomial next = one_plus_q * cur + (QPolynomial::monomial(i) - QPolynomial::monomial(1)) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

QPolynomial r_definition(int n) {
    if (n < 0) throw std::invalid_argument("r_definition: n < 0");
    std::vector<long long> counts;
    for (int a = 0; a <= n; ++a) {
        for_each_path(a, n - a, [&](const LatticePath& rest) {
            const int ar = area(LatticePath("E" + rest.str()));
            if (static_cast<int>(counts.size()) <= ar) counts.resize(static_cast<std::size_t>(ar) + 1, 0);
            ++counts[static_cast<std::size_t>(ar)];
        });
    }
    std::vector<mpz_class> v;
    for (long long c : counts) v.emplace_back(static_cast<long>(c));
    return QPolynomial(std::move(v));
}

QPolynomial des_closed(int n) {
    if (n < 0) throw std::invalid_argument("des_closed: n < 0");
    return power(QPolynomial{1, 1}, n);
}

OddPolynomials odd_polys(int n) {
    if (n < 0) throw std::invalid_argument("odd_polys: n < 0");
    const int lo = n / 2;
    const int hi = n - lo;
    std::vector<mpz_class> dp, dd;
    for (int k = 0; k <= lo; ++k) {
        mpz_class c = binomial(hi, k) * binomial(lo, k);
        dp.push_back(c);
        dd.push_back(c);
        if (k < lo) dd.push_back(0);
    }
    return {QPolynomial(std::move(dp)), q_binomial(n, lo), QPolynomial(std::move(dd))};
}

QPolynomial fp_at_least_maj_poly(int a, int b) {
    if (a < 0 || b < a) throw std::invalid_argument("requires b >= a >= 0");
    return q_binomial(a + b, a);
}

QPolynomial fp_at_least_des_maj_poly(int a, int b, int k) {
    if (a < 0 || b < a) throw std::invalid_argument("requires b >= a >= 0");
    if (k < 0) return {};
    return shift(q_binomial(a, k) * q_binomial(b, k), k * k);
}

namespace {

void check_fp_args(int n, int l) {
    if (n < 0 || l < 0 || l > n) throw std::invalid_argument("requires 0 <= l <= n");
    if ((n - l) % 2 != 0) throw std::invalid_argument("fixed point count must have the parity of n");
}

}  // namespace

QPolynomial fp_refined_maj_poly(int n, int l) {
    check_fp_args(n, l);
    const int a = (n - l) / 2;
    return q_binomial(n, a) - q_binomial(n, a - 1);
}

QPolynomial fp_des_refined_poly(int n, int l, int k) {
    check_fp_args(n, l);
    if (k < 0) return {};
    const int a = (n - l) / 2;
    const int b = (n + l) / 2;
    QPolynomial diff = q_binomial(a, k) * q_binomial(b, k) - q_binomial(a - 1, k) * q_binomial(b + 1, k);
    return shift(diff, k * k);
}

}  // namespace cinv
