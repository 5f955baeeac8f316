#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "realblocks/perm_group.hpp"

namespace realblocks {

PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on n points.
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// Q_8 in its regular representation.
PermGroup quaternion_group();
/// Action of the given 2x2 matrices over GF(p) on the nonzero vectors of
/// GF(p)^2 (row vectors, v -> v*M). Degree p^2 - 1.
PermGroup linear_group_2(const std::vector<std::array<std::uint32_t, 4>>& mats, std::uint32_t p);
PermGroup special_linear_2_3();
PermGroup general_linear_2_3();
/// A x B acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// Right regular representation; degree |G|.
PermGroup regular_representation(const PermGroup& g);
/// Point a of `a` and point b of `b` embedded in direct_product(a, b).
Permutation embed_left(const Permutation& x, std::size_t other_degree);
Permutation embed_right(const Permutation& x, std::size_t other_degree);

}  // namespace realblocks
