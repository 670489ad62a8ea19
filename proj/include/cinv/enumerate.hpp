#pragma once

// Streaming exhaustive generators. Every generator takes a Shard; the union of
// the streams over shards 0..count-1 is the full class, each object exactly
// once. Sharding splits on the first branching decision of the recursion.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "cinv/centro.hpp"
#include "cinv/lattice_path.hpp"
#include "cinv/permutation.hpp"
#include "cinv/signed_perm.hpp"

namespace cinv {

struct Shard {
    int index = 0;
    int count = 1;
    bool owns(long long branch) const { return branch % count == index; }
};

using PermVisitor = std::function<void(const Permutation&)>;

// Every involution of [m]: 1 is either fixed or paired with some j > 1, recursively.
void for_each_involution(int m, const PermVisitor& fn, Shard shard = {});
void for_each_inv321(int m, const PermVisitor& fn, Shard shard = {});

// Centrosymmetric permutations of [m] built directly: pick images of the first
// floor(m/2) positions so that v and m+1-v are both unused.
void for_each_centrosymmetric(int m, const PermVisitor& fn, Shard shard = {});

// I^C_m(321) by filtering the involutions of [m].
void for_each_cinv321_filtered(int m, const PermVisitor& fn, Shard shard = {});
// I^C_{2n}(321) as the image of all subsets of [n].
void for_each_cinv321_from_subsets(int n, const PermVisitor& fn, Shard shard = {});

void for_each_subset(int n, const std::function<void(const ExcedanceSubset&)>& fn, Shard shard = {});
void for_each_signed(int n, const std::function<void(const SignedPermutation&)>& fn, Shard shard = {});
// All of A_n, grouped by number of N steps.
void for_each_path_of_length(int n, const std::function<void(const LatticePath&)>& fn, Shard shard = {});

enum class ClassLabel {
    cinv321_even,
    cinv321_odd,
    inv321,
    signed_all,
    signed_sixavoiders,
    subsets,
    paths_rect,
};

std::optional<ClassLabel> parse_class_label(std::string_view s);
std::string to_string(ClassLabel label);

enum class EvenRoute { filter, subsets };

using CombObject = std::variant<Permutation, SignedPermutation, ExcedanceSubset, LatticePath>;
std::string object_text(const CombObject& obj);

// size is m for permutation classes, n for signed/subsets/paths. For
// paths_rect, rect = (a,b) restricts to Y_{a,b}; otherwise all of A_size.
struct ClassRequest {
    ClassLabel label;
    int size = 0;
    std::optional<std::pair<int, int>> rect;
    EvenRoute route = EvenRoute::filter;
};

// Throws std::invalid_argument when the size does not suit the class.
void generate_class(const ClassRequest& req, const std::function<void(const CombObject&)>& fn,
                    Shard shard = {});

}  // namespace cinv
