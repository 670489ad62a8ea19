#pragma once

// Brute-force distributions over the generated classes and the drivers that
// check each identity against its closed form, size by size.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cinv/enumerate.hpp"
#include "cinv/qpoly.hpp"

namespace cinv {

enum class Stat { des_plus, maj_plus, des, maj, fp, area, peaks };

std::optional<Stat> parse_stat(std::string_view s);
std::string to_string(Stat s);

// Throws std::invalid_argument when the statistic is not defined on the object's class.
long long compute_stat(const CombObject& obj, Stat stat);

// Coefficient counts indexed by exponent. Object counts stay far below 2^64.
class Histogram {
public:
    void add(long long exponent, std::uint64_t count = 1);
    Histogram& operator+=(const Histogram& other);
    std::uint64_t total() const;
    QPolynomial to_poly() const;

private:
    std::vector<std::uint64_t> counts_;
};

// Runs work(shard, hist) on `jobs` threads, one shard each, and sums the
// histograms. The result does not depend on jobs.
Histogram parallel_histogram(int jobs, const std::function<void(Shard, Histogram&)>& work);

struct DistributionTable {
    std::string class_label;
    int size = 0;
    std::string stat;
    QPolynomial poly;
    mpz_class count;
};

DistributionTable distribution(const ClassRequest& req, Stat stat, int jobs = 1);

std::string to_json(const DistributionTable& t);
std::string to_tsv(const DistributionTable& t);

struct SizeResult {
    int n = 0;
    bool pass = true;
    std::string counterexample;  // empty on pass
};

struct VerificationReport {
    std::string theorem;
    int max_n = 0;
    std::vector<SizeResult> results;
    double seconds = 0.0;

    bool passed() const;
};

struct VerifyOptions {
    int max_n = 0;
    // Cap for checks that filter all involutions of [2n] or [2n+1].
    int raw_max_n = 7;
    int jobs = 1;
};

// T-count, T-despoly, T-majpoly, T-desfull, T-cara, T-odd, T-hdpeak, T-recr,
// T-sixpat, T-fp, T-cor1, T-cor2.
const std::vector<std::string>& theorem_ids();

// Throws std::invalid_argument for an unknown id.
VerificationReport verify(std::string_view theorem_id, const VerifyOptions& opts);

// Wall-clock time is left out so output is reproducible.
std::string to_json(const VerificationReport& r);
std::string to_tsv(const VerificationReport& r);

}  // namespace cinv
