#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace realblocks {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored by its images.
///
/// Products compose left to right, matching the usual right action of
/// computational group theory: (a * b)[x] == b[a[x]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  std::uint64_t order() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

/// g^-1 * x * g.
Permutation conjugate(const Permutation& x, const Permutation& g);
/// x^-1 * y^-1 * x * y.
Permutation commutator(const Permutation& x, const Permutation& y);

/// Parses "(1,2,3)(4,5)" (1-based, whitespace-insensitive, "()" for the
/// identity) into a permutation of the given degree. Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace realblocks

template <>
struct std::hash<realblocks::Permutation> : realblocks::PermutationHash {};
