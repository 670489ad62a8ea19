#include "cinv/lattice_path.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cinv {

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
    for (char c : steps_)
        if (c != 'N' && c != 'E')
            throw std::invalid_argument("path steps must be N or E, got '" + std::string(1, c) + "'");
}

int LatticePath::north_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'N'));
}

int LatticePath::east_count() const { return size() - north_count(); }

PartitionShape::PartitionShape(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("negative partition part");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

PartitionShape PartitionShape::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i == text.size()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{}) throw std::invalid_argument("bad partition text");
        parts.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return PartitionShape(std::move(parts));
}

int PartitionShape::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

int PartitionShape::durfee_side() const {
    int k = 0;
    while (k < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(k)] >= k + 1) ++k;
    return k;
}

bool PartitionShape::fits(int a, int b) const {
    return static_cast<int>(parts.size()) <= a && (parts.empty() || parts.front() <= b);
}

std::string PartitionShape::to_string() const { return format_set(parts); }

LatticePath subset_to_path(const ExcedanceSubset& e) {
    std::string s(static_cast<std::size_t>(e.n), 'E');
    for (int v : e.members) s[static_cast<std::size_t>(v - 1)] = 'N';
    return LatticePath(std::move(s));
}

ExcedanceSubset path_to_subset(const LatticePath& p) {
    ExcedanceSubset e;
    e.n = p.size();
    for (int i = 1; i <= p.size(); ++i)
        if (p.step(i) == 'N') e.members.push_back(i);
    return e;
}

std::vector<int> peak_set(const LatticePath& p) {
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p.step(i) == 'N' && p.step(i + 1) == 'E') out.push_back(i);
    return out;
}

std::vector<int> peak_star(const LatticePath& p) {
    auto out = peak_set(p);
    if (!p.empty() && p.step(p.size()) == 'N') out.push_back(p.size());
    return out;
}

int area(const LatticePath& p) {
    const int a = p.north_count();
    int height = 0;
    int total = 0;
    for (char c : p.str()) {
        if (c == 'N') ++height;
        else total += a - height;
    }
    return total;
}

namespace {

void check_rectangle(const LatticePath& p, int a, int b) {
    if (p.north_count() != a || p.east_count() != b)
        throw std::invalid_argument("path " + p.str() + " is not in Y_{" + std::to_string(a) + "," +
                                    std::to_string(b) + "}");
}

}  // namespace

PartitionShape path_to_partition(const LatticePath& p, int a, int b) {
    check_rectangle(p, a, b);
    // Row r from the top ends at the (a-r+1)-th N step.
    std::vector<int> rows;
    int x = 0;
    for (char c : p.str()) {
        if (c == 'E') ++x;
        else rows.push_back(x);
    }
    std::reverse(rows.begin(), rows.end());
    return PartitionShape(std::move(rows));
}

LatticePath partition_to_path(const PartitionShape& shape, int a, int b) {
    if (!shape.fits(a, b)) throw std::invalid_argument("partition does not fit the rectangle");
    std::vector<int> rows(shape.parts);
    rows.resize(static_cast<std::size_t>(a), 0);
    std::string s;
    int x = 0;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        s.append(static_cast<std::size_t>(*it - x), 'E');
        x = *it;
        s.push_back('N');
    }
    s.append(static_cast<std::size_t>(b - x), 'E');
    return LatticePath(std::move(s));
}

std::vector<int> hook_decomposition(const PartitionShape& shape) {
    std::vector<int> rows = shape.parts;
    std::vector<int> hooks;
    while (!rows.empty() && rows.front() >= 1) {
        hooks.push_back(rows.front() + static_cast<int>(rows.size()) - 1);
        std::vector<int> rest;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i] > 1) rest.push_back(rows[i] - 1);
        rows = std::move(rest);
    }
    std::reverse(hooks.begin(), hooks.end());
    return hooks;
}

std::vector<int> hook_decomposition(const LatticePath& p) {
    return hook_decomposition(path_to_partition(p, p.north_count(), p.east_count()));
}

std::vector<int> hd_star(const LatticePath& p) {
    auto out = hook_decomposition(p);
    if (!p.empty() && p.step(1) == 'N') out.push_back(p.size());
    std::sort(out.begin(), out.end());
    return out;
}

LatticePath g_bijection(const LatticePath& p) { return g_bijection(p, p.north_count(), p.east_count()); }

LatticePath g_bijection(const LatticePath& p, int a, int b) {
    check_rectangle(p, a, b);
    std::string r(static_cast<std::size_t>(a) + 1, 'N');  // r[y] is R_y, index 0 unused
    std::string s(static_cast<std::size_t>(b) + 1, 'E');  // s[x] is S_x
    int x = 0, y = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.step(i) == 'N') ++y;
        else ++x;
        if (i < p.size() && p.step(i) == 'N' && p.step(i + 1) == 'E') {
            r[static_cast<std::size_t>(y)] = 'E';
            s[static_cast<std::size_t>(x + 1)] = 'N';
        }
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(a + b));
    for (int i = a; i >= 1; --i) out.push_back(r[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= b; ++i) out.push_back(s[static_cast<std::size_t>(i)]);
    return LatticePath(std::move(out));
}

LatticePath g_inverse(const LatticePath& q) { return g_inverse(q, q.north_count(), q.east_count()); }

LatticePath g_inverse(const LatticePath& q, int a, int b) {
    check_rectangle(q, a, b);
    std::vector<int> ys, xs;
    for (int s = 1; s <= a; ++s)
        if (q.step(s) == 'E') ys.push_back(a - s + 1);
    for (int s = 1; s <= b; ++s)
        if (q.step(a + s) == 'N') xs.push_back(s - 1);
    std::sort(ys.begin(), ys.end());
    // xs is already ascending.
    std::string out;
    int x = 0, y = 0;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        out.append(static_cast<std::size_t>(xs[j] - x), 'E');
        out.append(static_cast<std::size_t>(ys[j] - y), 'N');
        x = xs[j];
        y = ys[j];
    }
    out.append(static_cast<std::size_t>(b - x), 'E');
    out.append(static_cast<std::size_t>(a - y), 'N');
    return LatticePath(std::move(out));
}

LatticePath rotate_first_to_last(const LatticePath& p) {
    if (p.empty()) throw std::invalid_argument("cannot rotate an empty path");
    std::string s = p.str().substr(1);
    s.push_back(p.step(1));
    return LatticePath(std::move(s));
}

std::vector<int> despeak_transport(const Permutation& p) {
    if (p.size() % 2 != 0 || !is_cinv321(p))
        throw std::invalid_argument("despeak_transport: not in I^C_{2n}(321): " + p.to_string());
    auto peaks = peak_star(subset_to_path(excedance_subset_of(p)));
    if (peaks != des_plus_set(p))
        throw std::logic_error("Des+ differs from Peak* of the encoding path for " + p.to_string());
    return peaks;
}

namespace {

void paths_rec(std::string& buf, int a, int b, const std::function<void(const LatticePath&)>& fn) {
    if (a == 0 && b == 0) {
        fn(LatticePath(buf));
        return;
    }
    if (b > 0) {
        buf.push_back('E');
        paths_rec(buf, a, b - 1, fn);
        buf.pop_back();
    }
    if (a > 0) {
        buf.push_back('N');
        paths_rec(buf, a - 1, b, fn);
        buf.pop_back();
    }
}

}  // namespace

void for_each_path(int a, int b, const std::function<void(const LatticePath&)>& fn) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative rectangle side");
    std::string buf;
    buf.reserve(static_cast<std::size_t>(a + b));
    paths_rec(buf, a, b, fn);
}

}  // namespace cinv
