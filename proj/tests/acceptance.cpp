// One line per acceptance criterion; exit status is non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cinv/harness.hpp"

using namespace cinv;

namespace {

int jobs() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome run_verify(std::initializer_list<std::pair<const char*, int>> runs, double budget_seconds = 0) {
    Outcome out;
    double total = 0;
    for (auto [id, max_n] : runs) {
        const auto r = verify(id, {.max_n = max_n, .jobs = jobs()});
        total += r.seconds;
        if (!out.detail.empty()) out.detail += ", ";
        out.detail += std::string(id) + " n<=" + std::to_string(r.results.empty() ? -1 : r.results.back().n);
        if (!r.passed()) {
            out.pass = false;
            for (const auto& s : r.results)
                if (!s.pass) {
                    out.detail += " [n=" + std::to_string(s.n) + ": " + s.counterexample + "]";
                    break;
                }
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs)", total);
    out.detail += buf;
    if (budget_seconds > 0 && total > budget_seconds) {
        out.pass = false;
        out.detail += " over time budget";
    }
    return out;
}

Outcome property_suite() {
    Outcome out;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok && out.pass) {
            out.pass = false;
            out.detail = what;
        }
    };
    for (int m = 0; m <= 12; ++m)
        for_each_involution(m, [&](const Permutation& p) {
            expect((fixed_point_count(p) - m) % 2 == 0, "parity fails at " + p.to_string());
        });
    for (int m = 0; m <= 10; m += 2)
        for_each_centrosymmetric(m, [&](const Permutation& p) {
            expect(2 * maj(p) == static_cast<long long>(m) * des(p), "maj != m*des/2 at " + p.to_string());
        });
    for (int n = 0; n <= 14; ++n)
        for (int h = 0; h <= n; ++h) {
            const auto qb = q_binomial(n, h);
            expect(qb.is_palindromic(), "q-binomial not palindromic");
            // Coefficient of q^r counts partitions of r in an h x (n-h) box.
            std::function<long(int, int, int)> count = [&](int r, int k, int w) -> long {
                if (r == 0) return 1;
                if (k == 0 || w == 0) return 0;
                long total = 0;
                for (int first = 1; first <= std::min(r, w); ++first) total += count(r - first, k - 1, first);
                return total;
            };
            for (int r = 0; r <= h * (n - h); ++r)
                expect(qb.coeff(r) == count(r, h, n - h),
                       "partition oracle fails at n=" + std::to_string(n) + " h=" + std::to_string(h));
        }
    for (const char* id : {"T-despoly", "T-majpoly", "T-desfull"}) {
        const auto serial = to_json(verify(id, {.max_n = 10, .jobs = 1}));
        const auto parallel = to_json(verify(id, {.max_n = 10, .jobs = 4}));
        expect(serial == parallel, std::string("jobs=4 output differs for ") + id);
    }
    for (auto [label, size, stat] : {std::tuple{ClassLabel::cinv321_even, 12, Stat::des_plus},
                                     std::tuple{ClassLabel::cinv321_even, 12, Stat::maj_plus},
                                     std::tuple{ClassLabel::cinv321_even, 12, Stat::des}}) {
        const ClassRequest req{label, size};
        expect(to_json(distribution(req, stat, 1)) == to_json(distribution(req, stat, 4)),
               "jobs=4 distribution differs for " + to_string(stat));
    }
    if (out.pass) out.detail = "parity, maj=m*des/2, q-binomial oracle n<=14, jobs 1 vs 4";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 counting of even and odd classes", [] { return run_verify({{"T-count", 7}}, 120); }},
        {"2 des+ distribution", [] { return run_verify({{"T-despoly", 12}}); }},
        {"3 maj+ distribution, five-way", [] { return run_verify({{"T-majpoly", 12}, {"T-recr", 12}}); }},
        {"4 full des distribution", [] { return run_verify({{"T-desfull", 12}}); }},
        {"5 excedance bijection round trips", [] { return run_verify({{"T-cara", 12}}); }},
        {"6 g bijection, Peak = hd o g", [] { return run_verify({{"T-hdpeak", 12}}); }},
        {"7 odd-case polynomials", [] { return run_verify({{"T-odd", 7}}); }},
        {"8 six-pattern characterization", [] { return run_verify({{"T-sixpat", 5}}, 60); }},
        {"9 theta bijection, Des = hd", [] { return run_verify({{"T-fp", 10}}); }},
        {"10 fixed-point corollaries", [] { return run_verify({{"T-cor1", 10}, {"T-cor2", 10}}); }},
        {"11 property suite", property_suite},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
