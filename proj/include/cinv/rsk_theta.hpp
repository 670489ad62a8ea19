#pragma once

// Row insertion for 321-avoiding involutions (at most two rows) and the
// bijection theta from {pi in I_{a+b}(321) : fp(pi) >= b-a} to Y_{a,b} that
// carries Des(pi) to the hook decomposition.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cinv/lattice_path.hpp"
#include "cinv/permutation.hpp"

namespace cinv {

enum class ThetaErrorKind {
    not_involution,
    contains_321,
    fixed_points_too_few,
    shape_mismatch,
    below_diagonal,
};

const char* to_string(ThetaErrorKind kind);

class ThetaError : public std::invalid_argument {
public:
    ThetaError(ThetaErrorKind kind, const std::string& what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ThetaErrorKind kind() const { return kind_; }

private:
    ThetaErrorKind kind_;
};

struct TwoRowTableau {
    std::vector<int> top;
    std::vector<int> bottom;

    // Rows strictly increasing, |top| >= |bottom|, bottom[j] > top[j], entries = [m].
    bool is_standard() const;
    int size() const { return static_cast<int>(top.size() + bottom.size()); }
};

// Schensted row insertion; throws ThetaError(contains_321) if a third row
// would be created.
TwoRowTableau rsk_two_row(const Permutation& p);
// Inverse for an involution, where the recording tableau equals the insertion tableau.
Permutation involution_from_tableau(const TwoRowTableau& t);

// Step i is N iff i lies in the top row of the insertion tableau.
LatticePath involution_to_path(const Permutation& p);
LatticePath tableau_to_path(const TwoRowTableau& t);
TwoRowTableau path_to_tableau(const LatticePath& p);

struct FacingMatch {
    std::vector<std::pair<int, int>> pairs;  // (N step, E step), sorted by N step
    std::vector<int> unmatched;              // ascending step indices
};

// Parenthesis matching with N as open and E as close. Any path is accepted;
// unmatched E steps precede unmatched N steps.
FacingMatch facing_pairs(const LatticePath& p);
// Same, but throws ThetaError(below_diagonal) if some E is unmatched.
FacingMatch facing_match(const LatticePath& p);

LatticePath theta_fp(const Permutation& p, int a, int b);
Permutation theta_fp_inverse(const LatticePath& lambda, int a, int b);

}  // namespace cinv
