#pragma once

// Lattice paths over {N, E} starting at (0,0), read as the southeast boundary
// of a Young diagram anchored at the top-left corner of an a x b rectangle
// (a = number of N steps, b = number of E steps). N increments y, E
// increments x. Vertices are labeled 0..n along the path.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cinv/centro.hpp"
#include "cinv/permutation.hpp"

namespace cinv {

class LatticePath {
public:
    LatticePath() = default;
    // Throws std::invalid_argument on any character other than 'N' or 'E'.
    explicit LatticePath(std::string steps);

    int size() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }
    // 1-based step access.
    char step(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }
    int north_count() const;
    int east_count() const;
    const std::string& str() const { return steps_; }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    std::string steps_;
};

// Weakly decreasing positive parts; zero parts are dropped.
struct PartitionShape {
    std::vector<int> parts;

    PartitionShape() = default;
    explicit PartitionShape(std::vector<int> parts);
    static PartitionShape parse(std::string_view text);

    int size() const;  // number of boxes
    int durfee_side() const;
    bool fits(int a, int b) const;
    std::string to_string() const;

    friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
};

// The map f: step i is N iff i is in the subset.
LatticePath subset_to_path(const ExcedanceSubset& e);
ExcedanceSubset path_to_subset(const LatticePath& p);

std::vector<int> peak_set(const LatticePath& p);
// Peak(P E): adds n when P ends with N.
std::vector<int> peak_star(const LatticePath& p);

// Boxes northwest of the path inside R_{#N, #E}.
int area(const LatticePath& p);
PartitionShape path_to_partition(const LatticePath& p, int a, int b);
LatticePath partition_to_path(const PartitionShape& shape, int a, int b);

// Sizes of the hooks peeled off the diagram, ascending.
std::vector<int> hook_decomposition(const PartitionShape& shape);
std::vector<int> hook_decomposition(const LatticePath& p);
// hd plus n when the path begins with N.
std::vector<int> hd_star(const LatticePath& p);

// Bijection on Y_{a,b} taking Peak to hd and Peak* to hd*.
LatticePath g_bijection(const LatticePath& p);
LatticePath g_bijection(const LatticePath& p, int a, int b);
LatticePath g_inverse(const LatticePath& q);
LatticePath g_inverse(const LatticePath& q, int a, int b);

// Moves the first step to the end.
LatticePath rotate_first_to_last(const LatticePath& p);

// Peak*(f(p)) for p in I^C_{2n}(321); throws std::logic_error if it differs
// from Des+(p).
std::vector<int> despeak_transport(const Permutation& p);

// Every path in Y_{a,b} in lexicographic order (E < N).
void for_each_path(int a, int b, const std::function<void(const LatticePath&)>& fn);

}  // namespace cinv
