#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "realblocks/permutation.hpp"

namespace realblocks {

using BigInt = boost::multiprecision::cpp_int;

/// Maximum number of elements a group may have before element-level
/// algorithms refuse with CapacityError.
inline constexpr std::uint64_t kMaxEnumeratedElements = 1'000'000;

/// A permutation group given by generators, backed by a deterministic
/// Schreier-Sims stabilizer chain. Base points are chosen as the smallest
/// point moved by the residue that forces a new level.
///
/// Instances are immutable and cheap to copy. The sorted element list is
/// built on first use and shared between copies.
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup();

  static PermGroup trivial(std::size_t degree);
  /// Throws InputError if the generators do not share `degree`.
  static PermGroup from_generators(const std::vector<Permutation>& gens, std::size_t degree);
  /// Degree taken from the first generator; `gens` must be non-empty.
  static PermGroup from_generators(const std::vector<Permutation>& gens);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<Point>& base() const;
  /// Orbit lengths of the stabilizer chain, one per base point.
  std::vector<std::size_t> orbit_lengths() const;

  const BigInt& order() const;
  /// order() as an integer; throws CapacityError when it does not fit.
  std::uint64_t size() const;

  bool contains(const Permutation& g) const;
  bool is_trivial() const { return size() == 1; }
  /// True if every generator of `self` lies in `other`.
  bool is_subgroup_of(const PermGroup& other) const;

  /// All elements sorted lexicographically by images. Identity comes first.
  const std::vector<Permutation>& elements() const;
  std::optional<std::size_t> find(const Permutation& g) const;
  /// Position in elements(); throws InputError for non-members.
  std::size_t index_of(const Permutation& g) const;

  /// <self, g>, reusing the existing chain.
  PermGroup with_generator(const Permutation& g) const;

  /// Equality of element sets.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace realblocks
