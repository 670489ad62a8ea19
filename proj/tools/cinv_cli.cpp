// cinv: enumerate classes, tabulate statistics, apply bijections, and check
// identities by exhaustive enumeration.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "cinv/centro.hpp"
#include "cinv/enumerate.hpp"
#include "cinv/harness.hpp"
#include "cinv/lattice_path.hpp"
#include "cinv/rsk_theta.hpp"
#include "cinv/signed_perm.hpp"

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "6" or "2,3" (a rectangle).
struct SizeArg {
    int value = 0;
    std::optional<std::pair<int, int>> rect;
};

SizeArg parse_size(const std::string& s) {
    SizeArg out;
    try {
        if (auto comma = s.find(','); comma != std::string::npos) {
            const int a = std::stoi(s.substr(0, comma));
            const int b = std::stoi(s.substr(comma + 1));
            out.rect = std::pair{a, b};
            out.value = a + b;
        } else {
            out.value = std::stoi(s);
        }
    } catch (const std::exception&) {
        throw UsageError("bad --size: " + s);
    }
    return out;
}

cinv::ClassRequest class_request(const std::string& label, const std::string& size, const std::string& route) {
    auto parsed = cinv::parse_class_label(label);
    if (!parsed) throw UsageError("unknown class: " + label);
    const SizeArg sz = parse_size(size);
    cinv::ClassRequest req{*parsed, sz.value, sz.rect, cinv::EvenRoute::filter};
    if (route == "subsets") req.route = cinv::EvenRoute::subsets;
    else if (route != "filter") throw UsageError("unknown route: " + route);
    return req;
}

int run_enumerate(const std::string& label, const std::string& size, const std::string& route,
                  const std::string& format) {
    const auto req = class_request(label, size, route);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        cinv::generate_class(req, [&](const cinv::CombObject& o) { arr.push_back(cinv::object_text(o)); });
        std::cout << arr.dump() << '\n';
    } else {
        std::cout << "object\n";
        cinv::generate_class(req, [&](const cinv::CombObject& o) { std::cout << cinv::object_text(o) << '\n'; });
    }
    return 0;
}

int run_stats(const std::string& label, const std::string& size, const std::string& route, const std::string& stat,
              const std::string& format, int jobs) {
    const auto req = class_request(label, size, route);
    auto st = cinv::parse_stat(stat);
    if (!st) throw UsageError("unknown statistic: " + stat);
    cinv::DistributionTable t;
    try {
        t = cinv::distribution(req, *st, jobs);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << (format == "json" ? cinv::to_json(t) + "\n" : cinv::to_tsv(t));
    return 0;
}

std::string join(const std::vector<int>& v) { return cinv::format_set(v); }

std::string apply_bijection(const std::string& name, const std::string& text, const SizeArg& size) {
    using namespace cinv;
    auto need_rect = [&] {
        if (!size.rect) throw UsageError(name + " needs --size a,b");
        return *size.rect;
    };
    if (name == "cara") return subset_to_permutation(ExcedanceSubset::parse(size.value, text)).to_string();
    if (name == "cara-inverse") return excedance_subset_of(Permutation::parse(text)).to_string();
    if (name == "matching") return permutation_to_matching(Permutation::parse(text)).to_string();
    if (name == "subset-matching") return subset_to_matching(ExcedanceSubset::parse(size.value, text)).to_string();
    if (name == "matching-permutation")
        return matching_to_permutation(Matching::parse(2 * size.value, text)).to_string();
    if (name == "f") return subset_to_path(ExcedanceSubset::parse(size.value, text)).str();
    if (name == "g") return g_bijection(LatticePath(text)).str();
    if (name == "g-inverse") return g_inverse(LatticePath(text)).str();
    if (name == "rotate") return rotate_first_to_last(LatticePath(text)).str();
    if (name == "hd") return join(hook_decomposition(LatticePath(text)));
    if (name == "peaks") return join(peak_set(LatticePath(text)));
    if (name == "theta") return theta(Permutation::parse(text)).to_string();
    if (name == "theta-inverse") return theta_inverse(SignedPermutation::parse(text)).to_string();
    if (name == "odd-split") return odd_split(Permutation::parse(text)).to_string();
    if (name == "odd-join") {
        const auto a = Permutation::parse(text);
        return odd_join(a, a.size()).to_string();
    }
    if (name == "rsk") return involution_to_path(Permutation::parse(text)).str();
    if (name == "theta-fp") {
        auto [a, b] = need_rect();
        return theta_fp(Permutation::parse(text), a, b).str();
    }
    if (name == "theta-fp-inverse") {
        auto [a, b] = need_rect();
        return theta_fp_inverse(LatticePath(text), a, b).to_string();
    }
    throw UsageError("unknown bijection: " + name);
}

int run_verify(const std::string& name, int max_n, const std::string& format, int jobs) {
    std::vector<std::string> ids;
    if (name == "all") ids = cinv::theorem_ids();
    else ids.push_back(name);
    bool all_pass = true;
    for (const auto& id : ids) {
        cinv::VerificationReport r;
        try {
            r = cinv::verify(id, {max_n, 7, jobs});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::cout << (format == "json" ? cinv::to_json(r) + "\n" : cinv::to_tsv(r));
        std::cerr << id << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.seconds << " s)\n";
        all_pass = all_pass && r.passed();
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Descent statistics over 321-avoiding centrosymmetric involutions"};
    app.require_subcommand(1);

    std::string cls, size = "0", stat, name, apply, format = "tsv", route = "filter";
    int max_n = 0, jobs = 1;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    };

    auto* en = app.add_subcommand("enumerate", "List every object of a class");
    en->add_option("--class", cls, "Class label")->required();
    en->add_option("--size", size, "Size parameter (n, m, or a,b for paths-rect)")->required();
    en->add_option("--route", route, "cinv321-even generation route: filter or subsets");
    add_format(en);

    auto* st = app.add_subcommand("stats", "Distribution polynomial of a statistic over a class");
    st->add_option("--class", cls, "Class label")->required();
    st->add_option("--size", size, "Size parameter")->required();
    st->add_option("--stat", stat, "des+, maj+, des, maj, fp, area, peaks")->required();
    st->add_option("--route", route, "cinv321-even generation route: filter or subsets");
    st->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(st);

    auto* bj = app.add_subcommand("bijection", "Apply a named map to one object");
    bj->add_option("--name", name, "Map name")->required();
    bj->add_option("--apply", apply, "Object text")->required();
    bj->add_option("--size", size, "n for subsets and matchings, a,b for theta-fp");

    auto* vf = app.add_subcommand("verify", "Check an identity for every size up to --max-n");
    vf->add_option("--name", name, "Theorem id or 'all'")->required();
    vf->add_option("--max-n", max_n, "Largest size")->required()->check(CLI::NonNegativeNumber);
    vf->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(vf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*en) return run_enumerate(cls, size, route, format);
        if (*st) return run_stats(cls, size, route, stat, format, jobs);
        if (*bj) {
            try {
                std::cout << apply_bijection(name, apply, parse_size(size)) << '\n';
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kUsage;
            }
            return 0;
        }
        if (*vf) return run_verify(name, max_n, format, jobs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
