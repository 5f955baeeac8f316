#pragma once

#include <cstdint>
#include <functional>

#include "realblocks/perm_group.hpp"

namespace realblocks {

/// N x| H in its right regular representation (degree |N||H|). `act(h, x)`
/// is the image of x in N under the automorphism attached to h; it must be
/// a homomorphism H -> Aut(N). Points are numbered n_index * |H| + h_index.
struct SemidirectProduct {
  PermGroup group;
  PermGroup normal_image;  // N x 1
  PermGroup top_image;     // 1 x H
  /// Image of (n, h) as a permutation of the regular representation.
  std::function<Permutation(const Permutation&, const Permutation&)> element;
};

SemidirectProduct semidirect_product(const PermGroup& n, const PermGroup& h,
                                     const std::function<Permutation(const Permutation&, const Permutation&)>& act);

struct CqExtension {
  PermGroup group;
  PermGroup q_subgroup;
  PermGroup e_image;
  PermGroup d_image;
};

/// G = C_q x| E where D centralizes C_q and E \ D inverts it. Throws
/// InputError unless |E:D| = 2 and q is an odd prime.
CqExtension construct_cq_extension(const PermGroup& e, const PermGroup& d, std::uint32_t q = 3);

/// Q_8 x| C_9 with C_9 acting through its quotient of order 3 by i -> j -> k.
PermGroup q8_semidirect_c9();

}  // namespace realblocks
