#include "cinv/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cinv/rsk_theta.hpp"

namespace cinv {

std::optional<Stat> parse_stat(std::string_view s) {
    if (s == "des+") return Stat::des_plus;
    if (s == "maj+") return Stat::maj_plus;
    if (s == "des") return Stat::des;
    if (s == "maj") return Stat::maj;
    if (s == "fp") return Stat::fp;
    if (s == "area") return Stat::area;
    if (s == "peaks") return Stat::peaks;
    return std::nullopt;
}

std::string to_string(Stat s) {
    switch (s) {
        case Stat::des_plus: return "des+";
        case Stat::maj_plus: return "maj+";
        case Stat::des: return "des";
        case Stat::maj: return "maj";
        case Stat::fp: return "fp";
        case Stat::area: return "area";
        case Stat::peaks: return "peaks";
    }
    return "?";
}

namespace {

long long perm_stat(const Permutation& p, Stat stat) {
    switch (stat) {
        case Stat::des_plus: return des_plus(p);
        case Stat::maj_plus: return maj_plus(p);
        case Stat::des: return des(p);
        case Stat::maj: return maj(p);
        case Stat::fp: return fixed_point_count(p);
        default: break;
    }
    throw std::invalid_argument("statistic " + to_string(stat) + " is not defined on permutations");
}

}  // namespace

long long compute_stat(const CombObject& obj, Stat stat) {
    if (auto p = std::get_if<Permutation>(&obj)) return perm_stat(*p, stat);
    if (auto s = std::get_if<SignedPermutation>(&obj)) return perm_stat(theta_inverse(*s), stat);
    if (auto e = std::get_if<ExcedanceSubset>(&obj)) {
        switch (stat) {
            case Stat::des_plus: return subset_des(*e);
            case Stat::maj_plus: return subset_maj(*e);
            case Stat::des: return full_des_from_subset(*e);
            // maj = m des / 2 for centrosymmetric permutations of [2n]
            case Stat::maj: return static_cast<long long>(e->n) * full_des_from_subset(*e);
            default: break;
        }
        throw std::invalid_argument("statistic " + to_string(stat) + " is not defined on subsets");
    }
    const auto& path = std::get<LatticePath>(obj);
    switch (stat) {
        case Stat::area: return area(path);
        case Stat::peaks: return static_cast<long long>(peak_set(path).size());
        default: break;
    }
    throw std::invalid_argument("statistic " + to_string(stat) + " is not defined on paths");
}

void Histogram::add(long long exponent, std::uint64_t count) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in histogram");
    const auto e = static_cast<std::size_t>(exponent);
    if (counts_.size() <= e) counts_.resize(e + 1, 0);
    counts_[e] += count;
}

Histogram& Histogram::operator+=(const Histogram& other) {
    if (counts_.size() < other.counts_.size()) counts_.resize(other.counts_.size(), 0);
    for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
    return *this;
}

std::uint64_t Histogram::total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
}

QPolynomial Histogram::to_poly() const {
    std::vector<mpz_class> v;
    v.reserve(counts_.size());
    for (auto c : counts_) {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
        v.push_back(z);
    }
    return QPolynomial(std::move(v));
}

Histogram parallel_histogram(int jobs, const std::function<void(Shard, Histogram&)>& work) {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (jobs == 1) {
        Histogram h;
        work(Shard{0, 1}, h);
        return h;
    }
    std::vector<Histogram> parts(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    {
        std::vector<std::jthread> threads;
        for (int i = 0; i < jobs; ++i)
            threads.emplace_back([&, i] {
                try {
                    work(Shard{i, jobs}, parts[static_cast<std::size_t>(i)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Histogram total;
    for (const auto& h : parts) total += h;
    return total;
}

DistributionTable distribution(const ClassRequest& req, Stat stat, int jobs) {
    Histogram h = parallel_histogram(jobs, [&](Shard shard, Histogram& acc) {
        generate_class(req, [&](const CombObject& obj) { acc.add(compute_stat(obj, stat)); }, shard);
    });
    DistributionTable t;
    t.class_label = to_string(req.label);
    t.size = req.size;
    t.stat = to_string(stat);
    t.poly = h.to_poly();
    t.count = t.poly.evaluate(1);
    return t;
}

namespace {

nlohmann::ordered_json mpz_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace

std::string to_json(const DistributionTable& t) {
    nlohmann::ordered_json poly = nlohmann::ordered_json::array();
    for (const auto& c : t.poly.coeffs()) poly.push_back(mpz_json(c));
    nlohmann::ordered_json j;
    j["class"] = t.class_label;
    j["size"] = t.size;
    j["stat"] = t.stat;
    j["poly"] = poly;
    j["count"] = mpz_json(t.count);
    return j.dump();
}

std::string to_tsv(const DistributionTable& t) {
    std::ostringstream os;
    os << "exponent\tcoefficient\n";
    for (std::size_t i = 0; i < t.poly.coeffs().size(); ++i) os << i << '\t' << t.poly.coeffs()[i].get_str() << '\n';
    return os.str();
}

bool VerificationReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const SizeResult& r) { return r.pass; });
}

std::string to_json(const VerificationReport& r) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& s : r.results) {
        nlohmann::ordered_json e;
        e["n"] = s.n;
        e["status"] = s.pass ? "pass" : "fail";
        e["counterexample"] = s.pass ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(s.counterexample);
        results.push_back(e);
    }
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["results"] = results;
    return j.dump();
}

std::string to_tsv(const VerificationReport& r) {
    std::ostringstream os;
    os << "theorem\tn\tstatus\tcounterexample\n";
    for (const auto& s : r.results)
        os << r.theorem << '\t' << s.n << '\t' << (s.pass ? "pass" : "fail") << '\t' << s.counterexample << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Verification drivers

namespace {

class Check {
public:
    explicit Check(int n) { result_.n = n; }

    void fail(const std::string& counterexample) {
        if (result_.pass) {
            result_.pass = false;
            result_.counterexample = counterexample;
        }
    }
    void expect(bool ok, const std::string& counterexample) {
        if (!ok) fail(counterexample);
    }
    void expect_poly(const std::string& what, const QPolynomial& got, const QPolynomial& want) {
        if (got != want) fail(what + ": got [" + got.to_list() + "] expected [" + want.to_list() + "]");
    }
    bool ok() const { return result_.pass; }
    SizeResult result() const { return result_; }

private:
    SizeResult result_;
};

using PermStat = long long (*)(const Permutation&);

long long des_plus_ll(const Permutation& p) { return des_plus(p); }
long long des_ll(const Permutation& p) { return des(p); }
long long maj_plus_ll(const Permutation& p) { return maj_plus(p); }

QPolynomial raw_even_poly(int n, PermStat stat, int jobs) {
    return parallel_histogram(jobs, [&](Shard s, Histogram& h) {
        for_each_cinv321_filtered(2 * n, [&](const Permutation& p) { h.add(stat(p)); }, s);
    }).to_poly();
}

QPolynomial subset_perm_poly(int n, PermStat stat, int jobs) {
    return parallel_histogram(jobs, [&](Shard s, Histogram& h) {
        for_each_cinv321_from_subsets(n, [&](const Permutation& p) { h.add(stat(p)); }, s);
    }).to_poly();
}

QPolynomial subset_poly(int n, long long (*stat)(const ExcedanceSubset&), int jobs) {
    return parallel_histogram(jobs, [&](Shard s, Histogram& h) {
        for_each_subset(n, [&](const ExcedanceSubset& e) { h.add(stat(e)); }, s);
    }).to_poly();
}

long long subset_des_ll(const ExcedanceSubset& e) { return subset_des(e); }
long long subset_maj_ll(const ExcedanceSubset& e) { return subset_maj(e); }
long long subset_full_des_ll(const ExcedanceSubset& e) { return full_des_from_subset(e); }

long long sum_of(const std::vector<int>& v) {
    long long s = 0;
    for (int x : v) s += x;
    return s;
}

SizeResult check_count(int n, const VerifyOptions& o) {
    Check c(n);
    Histogram even = parallel_histogram(o.jobs, [&](Shard s, Histogram& h) {
        for_each_cinv321_filtered(2 * n, [&](const Permutation&) { h.add(0); }, s);
    });
    Histogram odd = parallel_histogram(o.jobs, [&](Shard s, Histogram& h) {
        for_each_cinv321_filtered(2 * n + 1, [&](const Permutation&) { h.add(0); }, s);
    });
    const mpz_class even_count = even.to_poly().evaluate(1);
    const mpz_class odd_count = odd.to_poly().evaluate(1);
    const mpz_class two_n = mpz_class(1) << n;
    c.expect(even_count == two_n,
             "|I^C_" + std::to_string(2 * n) + "(321)| = " + even_count.get_str() + " != " + two_n.get_str());
    c.expect(odd_count == binomial(n, n / 2), "|I^C_" + std::to_string(2 * n + 1) + "(321)| = " +
                                                  odd_count.get_str() + " != " + binomial(n, n / 2).get_str());
    return c.result();
}

SizeResult check_despoly(int n, const VerifyOptions& o) {
    Check c(n);
    const QPolynomial closed = d_closed(n);
    c.expect_poly("d_recurrence", d_recurrence(n), closed);
    c.expect_poly("subset des(E)", subset_poly(n, subset_des_ll, o.jobs), closed);
    c.expect_poly("des+ over subset images", subset_perm_poly(n, des_plus_ll, o.jobs), closed);
    if (n <= o.raw_max_n) c.expect_poly("des+ over filtered involutions", raw_even_poly(n, des_plus_ll, o.jobs), closed);
    return c.result();
}

SizeResult check_majpoly(int n, const VerifyOptions& o) {
    Check c(n);
    const QPolynomial b = p_closed_b(n);
    c.expect_poly("p_closed_a", p_closed_a(n), b);
    c.expect_poly("p_recurrence", p_recurrence(n), b);
    c.expect_poly("r_definition", r_definition(n), b);
    c.expect_poly("subset maj(E)", subset_poly(n, subset_maj_ll, o.jobs), b);
    c.expect_poly("maj+ over subset images", subset_perm_poly(n, maj_plus_ll, o.jobs), b);
    if (n <= o.raw_max_n) c.expect_poly("maj+ over filtered involutions", raw_even_poly(n, maj_plus_ll, o.jobs), b);

    // Bijective route: Des+ = Peak*(f) = hd*(g(f)), and sum hd* = area(P') + n - h.
    for_each_subset(n, [&](const ExcedanceSubset& e) {
        if (!c.ok()) return;
        const Permutation p = subset_to_permutation(e);
        const LatticePath fp = subset_to_path(e);
        const LatticePath gp = g_bijection(fp);
        const auto dp = des_plus_set(p);
        c.expect(dp == peak_star(fp), "Des+ != Peak*(f(pi)) at " + p.to_string());
        c.expect(dp == hd_star(gp), "Des+ != hd*(g(f(pi))) at " + p.to_string());
        if (n > 0) {
            const int h = gp.east_count();
            c.expect(sum_of(hd_star(gp)) == area(rotate_first_to_last(gp)) + n - h,
                     "rotation area identity fails at " + gp.str());
        }
    });
    return c.result();
}

SizeResult check_desfull(int n, const VerifyOptions& o) {
    Check c(n);
    const QPolynomial closed = des_closed(n);
    c.expect_poly("subset transport", subset_poly(n, subset_full_des_ll, o.jobs), closed);
    c.expect_poly("des over subset images", subset_perm_poly(n, des_ll, o.jobs), closed);
    if (n <= o.raw_max_n) c.expect_poly("des over filtered involutions", raw_even_poly(n, des_ll, o.jobs), closed);
    for_each_subset(n, [&](const ExcedanceSubset& e) {
        if (!c.ok()) return;
        c.expect(full_des_from_subset(e) == des(subset_to_permutation(e)), "des transport fails at E={" + e.to_string() + "}");
    });
    return c.result();
}

SizeResult check_cara(int n, const VerifyOptions& o) {
    Check c(n);
    std::set<Permutation> images;
    for_each_subset(n, [&](const ExcedanceSubset& e) {
        if (!c.ok()) return;
        const std::string tag = "E={" + e.to_string() + "}";
        const Matching m = subset_to_matching(e);
        c.expect(m.is_symmetric() && m.is_non_nesting(), "matching invariants fail at " + tag);
        if (!c.ok()) return;
        const Permutation p = matching_to_permutation(m);
        c.expect(is_cinv321(p), "image not in I^C(321) at " + tag + ": " + p.to_string());
        c.expect(excedance_subset_of(p) == e, "round trip fails at " + tag);
        c.expect(permutation_to_matching(p) == m, "matching round trip fails at " + tag);
        images.insert(p);
    });
    c.expect(images.size() == (std::size_t{1} << n), "image has " + std::to_string(images.size()) + " elements");
    if (n <= o.raw_max_n && c.ok()) {
        std::set<Permutation> filtered;
        for_each_cinv321_filtered(2 * n, [&](const Permutation& p) { filtered.insert(p); });
        if (filtered != images) {
            std::vector<Permutation> diff;
            std::set_symmetric_difference(filtered.begin(), filtered.end(), images.begin(), images.end(),
                                          std::back_inserter(diff));
            c.fail("image differs from filtered class at " + diff.front().to_string());
        }
    }
    return c.result();
}

SizeResult check_odd(int n, const VerifyOptions& o) {
    Check c(n);
    Histogram hd, hm, hdes;
    std::set<Permutation> filtered;
    for_each_cinv321_filtered(2 * n + 1, [&](const Permutation& p) {
        hd.add(des_plus(p));
        hm.add(maj_plus(p));
        hdes.add(des(p));
        filtered.insert(p);
        const Permutation a = odd_split(p);
        c.expect(odd_join(a, n) == p, "odd split/join fails at " + p.to_string());
        c.expect(des_plus(p) == des(a) && maj_plus(p) == maj(a) && des(p) == 2 * des(a),
                 "odd statistic transport fails at " + p.to_string());
    });
    const OddPolynomials want = odd_polys(n);
    c.expect_poly("des+", hd.to_poly(), want.des_plus);
    c.expect_poly("maj+", hm.to_poly(), want.maj_plus);
    c.expect_poly("des", hdes.to_poly(), want.des);
    std::set<Permutation> joined;
    for_each_inv321(n, [&](const Permutation& a) { joined.insert(odd_join(a, n)); });
    c.expect(joined == filtered, "odd_join image differs from the filtered class");
    c.expect(filtered.size() == binomial(n, n / 2).get_ui(), "odd class count mismatch");
    (void)o;
    return c.result();
}

SizeResult check_hdpeak(int n, const VerifyOptions&) {
    Check c(n);
    for (int a = 0; a <= n && c.ok(); ++a) {
        const int b = n - a;
        std::set<LatticePath> image;
        for_each_path(a, b, [&](const LatticePath& p) {
            if (!c.ok()) return;
            const LatticePath q = g_bijection(p, a, b);
            image.insert(q);
            c.expect(q.north_count() == a && q.east_count() == b, "g leaves the rectangle at " + p.str());
            c.expect(g_inverse(q, a, b) == p, "g_inverse(g(P)) != P at " + p.str());
            c.expect(g_bijection(g_inverse(p, a, b), a, b) == p, "g(g_inverse(Q)) != Q at " + p.str());
            c.expect(peak_set(p) == hook_decomposition(q), "Peak != hd o g at " + p.str());
            c.expect(peak_star(p) == hd_star(q), "Peak* != hd* o g at " + p.str());
            const auto hd = hook_decomposition(p);
            const auto shape = path_to_partition(p, a, b);
            c.expect(static_cast<int>(hd.size()) == shape.durfee_side() && sum_of(hd) == area(p) &&
                         (hd.empty() || hd.back() <= a + b - 1),
                     "hook decomposition invariants fail at " + p.str());
        });
        c.expect(mpz_class(static_cast<unsigned long>(image.size())) == binomial(a + b, a),
                 "g is not onto Y_{" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    // Peak-count form: #{P in A_n : |Peak*(P)| = k} = C(n+1, 2k).
    Histogram peaks;
    for_each_path_of_length(n, [&](const LatticePath& p) { peaks.add(static_cast<long long>(peak_star(p).size())); });
    c.expect_poly("|Peak*| over A_n", peaks.to_poly(), d_closed(n));
    return c.result();
}

SizeResult check_recr(int n, const VerifyOptions&) {
    Check c(n);
    const QPolynomial r = r_definition(n);
    QPolynomial sum;
    for (int a = 0; a <= n; ++a) sum += shift(q_binomial(n, a), n - a);
    c.expect_poly("r_n vs sum q^{n-a}{n,a}", r, sum);
    if (n >= 2) {
        const QPolynomial rec = QPolynomial{1, 1} * r_definition(n - 1) +
                                (QPolynomial::monomial(n) - QPolynomial::monomial(1)) * r_definition(n - 2);
        c.expect_poly("r recurrence", r, rec);
    }
    c.expect_poly("r_n vs p_n", r, p_recurrence(n));
    return c.result();
}

SizeResult check_sixpat(int n, const VerifyOptions&) {
    Check c(n);
    std::set<SignedPermutation> image;
    for_each_centrosymmetric(2 * n, [&](const Permutation& p) {
        const SignedPermutation s = theta(p);
        c.expect(theta_inverse(s) == p, "theta_inverse(theta(p)) != p at " + p.to_string());
        c.expect(is_involution(p) == s.is_involution(), "involution not preserved at " + p.to_string());
        if (avoids_321(p)) image.insert(s);
    });
    std::set<SignedPermutation> avoiders;
    for_each_signed(n, [&](const SignedPermutation& s) {
        c.expect(theta(theta_inverse(s)) == s, "theta(theta_inverse(s)) != s at " + s.to_string());
        if (avoids_six_patterns(s)) avoiders.insert(s);
    });
    if (image != avoiders) {
        std::vector<SignedPermutation> diff;
        std::set_symmetric_difference(image.begin(), image.end(), avoiders.begin(), avoiders.end(),
                                      std::back_inserter(diff));
        c.fail("sets differ at " + diff.front().to_string());
    }
    return c.result();
}

SizeResult check_fp(int n, const VerifyOptions&) {
    Check c(n);
    std::vector<Permutation> inv;
    for_each_inv321(n, [&](const Permutation& p) { inv.push_back(p); });
    for (const auto& p : inv) {
        const TwoRowTableau t = rsk_two_row(p);
        const LatticePath path = tableau_to_path(t);
        c.expect(static_cast<int>(t.top.size()) == longest_increasing_length(p), "Schensted row length fails at " + p.to_string());
        c.expect(path.north_count() - path.east_count() == fixed_point_count(p), "#N-#E != fp at " + p.to_string());
        c.expect(descent_set(p) == peak_set(path), "Des != Peak of RSK path at " + p.to_string());
        c.expect(involution_from_tableau(t) == p, "inverse RSK fails at " + p.to_string());
    }
    for (int a = 0; 2 * a <= n && c.ok(); ++a) {
        const int b = n - a;
        std::set<LatticePath> image;
        for (const auto& p : inv) {
            if (fixed_point_count(p) < b - a) continue;
            const LatticePath lambda = theta_fp(p, a, b);
            image.insert(lambda);
            c.expect(theta_fp_inverse(lambda, a, b) == p, "theta round trip fails at " + p.to_string());
            c.expect(descent_set(p) == hook_decomposition(lambda), "Des != hd(theta) at " + p.to_string());
        }
        for_each_path(a, b, [&](const LatticePath& lambda) {
            c.expect(theta_fp(theta_fp_inverse(lambda, a, b), a, b) == lambda, "inverse round trip fails at " + lambda.str());
        });
        c.expect(mpz_class(static_cast<unsigned long>(image.size())) == binomial(a + b, a),
                 "theta is not onto Y_{" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    return c.result();
}

struct InvRecord {
    int fp;
    int des;
    long long maj;
};

std::vector<InvRecord> inv321_records(int n) {
    std::vector<InvRecord> out;
    for_each_inv321(n, [&](const Permutation& p) { out.push_back({fixed_point_count(p), des(p), maj(p)}); });
    return out;
}

template <class Pred>
QPolynomial maj_poly_where(const std::vector<InvRecord>& recs, Pred pred) {
    Histogram h;
    for (const auto& r : recs)
        if (pred(r)) h.add(r.maj);
    return h.to_poly();
}

SizeResult check_cor1(int n, const VerifyOptions&) {
    Check c(n);
    const auto recs = inv321_records(n);
    for (int a = 0; 2 * a <= n; ++a) {
        const int b = n - a;
        c.expect_poly("fp >= " + std::to_string(b - a), maj_poly_where(recs, [&](const InvRecord& r) { return r.fp >= b - a; }),
                      fp_at_least_maj_poly(a, b));
    }
    for (int l = n % 2; l <= n; l += 2)
        c.expect_poly("fp = " + std::to_string(l), maj_poly_where(recs, [&](const InvRecord& r) { return r.fp == l; }),
                      fp_refined_maj_poly(n, l));
    c.expect_poly("maj over I_n(321)", maj_poly_where(recs, [](const InvRecord&) { return true; }), q_binomial(n, n / 2));
    return c.result();
}

SizeResult check_cor2(int n, const VerifyOptions&) {
    Check c(n);
    const auto recs = inv321_records(n);
    for (int a = 0; 2 * a <= n; ++a) {
        const int b = n - a;
        std::map<int, Histogram> by_durfee;
        for_each_path(a, b, [&](const LatticePath& p) {
            by_durfee[path_to_partition(p, a, b).durfee_side()].add(area(p));
        });
        for (int k = 0; k <= n; ++k) {
            const std::string tag = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " k=" + std::to_string(k);
            c.expect_poly("fp >= b-a, des = k, " + tag,
                          maj_poly_where(recs, [&](const InvRecord& r) { return r.fp >= b - a && r.des == k; }),
                          fp_at_least_des_maj_poly(a, b, k));
            c.expect_poly("Durfee side k diagrams, " + tag, by_durfee[k].to_poly(), fp_at_least_des_maj_poly(a, b, k));
        }
    }
    for (int l = n % 2; l <= n; l += 2)
        for (int k = 0; k <= n; ++k)
            c.expect_poly("fp = " + std::to_string(l) + ", des = " + std::to_string(k),
                          maj_poly_where(recs, [&](const InvRecord& r) { return r.fp == l && r.des == k; }),
                          fp_des_refined_poly(n, l, k));
    return c.result();
}

using Driver = SizeResult (*)(int, const VerifyOptions&);

struct TheoremEntry {
    const char* id;
    Driver driver;
    bool raw_capped;  // sizes limited by raw_max_n
};

const std::vector<TheoremEntry>& registry() {
    static const std::vector<TheoremEntry> entries{
        {"T-count", check_count, true},   {"T-despoly", check_despoly, false}, {"T-majpoly", check_majpoly, false},
        {"T-desfull", check_desfull, false}, {"T-cara", check_cara, false},   {"T-odd", check_odd, true},
        {"T-hdpeak", check_hdpeak, false}, {"T-recr", check_recr, false},    {"T-sixpat", check_sixpat, false},
        {"T-fp", check_fp, false},         {"T-cor1", check_cor1, false},    {"T-cor2", check_cor2, false},
    };
    return entries;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.emplace_back(e.id);
        return v;
    }();
    return ids;
}

VerificationReport verify(std::string_view theorem_id, const VerifyOptions& opts) {
    auto it = std::find_if(registry().begin(), registry().end(),
                           [&](const TheoremEntry& e) { return theorem_id == e.id; });
    if (it == registry().end()) throw std::invalid_argument("unknown theorem id: " + std::string(theorem_id));
    if (opts.max_n < 0) throw std::invalid_argument("max-n must be non-negative");

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = it->id;
    report.max_n = opts.max_n;
    const int last = it->raw_capped ? std::min(opts.max_n, opts.raw_max_n) : opts.max_n;
    for (int n = 0; n <= last; ++n) report.results.push_back(it->driver(n, opts));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace cinv
