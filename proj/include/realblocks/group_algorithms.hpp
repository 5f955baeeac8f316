#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "realblocks/perm_group.hpp"

namespace realblocks {

// Number theory helpers used throughout.
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// log_p of a power of p; throws InputError otherwise.
unsigned log_p(std::uint64_t n, std::uint64_t p);
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// The p-part and p'-part of x, as powers of x.
Permutation p_part_of(const Permutation& x, std::uint64_t p);
Permutation p_regular_part_of(const Permutation& x, std::uint64_t p);

/// Subgroup of `g` consisting of the elements satisfying `pred`. The caller
/// guarantees that this set is a subgroup. Generators are picked greedily in
/// element order, so the result is deterministic.
PermGroup subgroup_where(const PermGroup& g, const std::function<bool(const Permutation&)>& pred);

PermGroup centralizer(const PermGroup& g, const Permutation& x);
/// {h : h^-1 x h in {x, x^-1}}.
PermGroup extended_centralizer(const PermGroup& g, const Permutation& x);
/// C_G(H).
PermGroup centralizer(const PermGroup& g, const PermGroup& h);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
PermGroup intersection(const PermGroup& a, const PermGroup& b);
/// <a, b>.
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup conjugate(const PermGroup& h, const Permutation& g);
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p);
/// O_{p'}(G), the largest normal subgroup of order prime to p.
PermGroup core_p_prime(const PermGroup& g, std::uint64_t p);
PermGroup derived_subgroup(const PermGroup& g);
/// G, G', G'', ... ending with the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& g);

bool is_normal(const PermGroup& g, const PermGroup& n);
bool is_abelian(const PermGroup& g);
bool is_cyclic(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_p_group(const PermGroup& g, std::uint64_t p);
/// True iff G / O_{p'}(G) is a p-group.
bool is_p_nilpotent(const PermGroup& g, std::uint64_t p);
std::uint64_t exponent(const PermGroup& g);

/// G/N acting on the right cosets of N.
class Quotient {
 public:
  Quotient(const PermGroup& g, const PermGroup& n);
  const PermGroup& image() const { return image_; }
  const PermGroup& kernel() const { return kernel_; }
  std::size_t coset_of(const Permutation& g) const;
  Permutation map(const Permutation& g) const;

 private:
  PermGroup group_;
  PermGroup kernel_;
  PermGroup image_;
  std::vector<std::uint32_t> coset_;       // element index -> coset id
  std::vector<std::size_t> representative_;  // coset id -> element index
};

/// Throws InputError if n is not normal in g.
PermGroup quotient_by_normal(const PermGroup& g, const PermGroup& n);

/// Some g in G with x^g = y, first in element order.
std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& x, const Permutation& y);
/// Some g in G with a^g = b.
std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& a, const PermGroup& b);
/// Some g in G with a1^g = b1 and a2^g = b2 simultaneously.
std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& a1, const PermGroup& a2,
                                               const PermGroup& b1, const PermGroup& b2);

/// |{x in S : x^2 = y}| over the elements of `s` satisfying `in_set`.
std::uint64_t count_square_roots(const PermGroup& s, const Permutation& y,
                                 const std::function<bool(const Permutation&)>& in_set = {});

}  // namespace realblocks
