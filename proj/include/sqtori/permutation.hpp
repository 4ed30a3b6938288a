#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqtori/lattice.hpp"

namespace sqtori::lattice {

using Permutation = std::vector<std::uint32_t>; // image-of-index, 0-based

/// Origami encoding of a square-tiled torus: the squares are (i, j) with
/// 0 <= i < w, 0 <= j < h, indexed row-major as i + w * j. `horizontal`
/// moves each square one step right, `vertical` one step up, with the top
/// row glued back to the bottom shifted by the twist t.
struct PermutationPair {
  std::uint32_t n = 1;
  Permutation horizontal{0};
  Permutation vertical{0};

  friend bool operator==(const PermutationPair&, const PermutationPair&) = default;
};

// Throws ResourceError when w * h > max_squares.
PermutationPair to_permutation_pair(const HnfLattice& l, std::uint64_t max_squares = kDefaultMaxTriples);

Permutation compose(const Permutation& outer, const Permutation& inner);
bool commute(const PermutationPair& p);
bool transitive(const PermutationPair& p);

struct GroupSummary {
  std::uint64_t order = 0;
  std::uint64_t max_element_order = 0;
  bool abelian = false;

  bool cyclic() const { return max_element_order == order; }
};

// Closes the group generated by the pair by breadth-first multiplication and
// reports its order, exponent-style maximal element order, and commutativity
// of the generators. Cost is O(order * n).
GroupSummary generated_group(const PermutationPair& p);

// {"n":4,"h":[1,0,3,2],"v":[2,3,0,1]}
std::string to_json(const PermutationPair& p);
// Inverse of to_json; throws DomainError on malformed input or arrays that
// are not permutations of {0, ..., n-1}.
PermutationPair permutation_pair_from_json(std::string_view text);

} // namespace sqtori::lattice
