#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "realblocks/perm_group.hpp"

namespace realblocks {

/// Upper bound on the number of classes handled by character-table code.
inline constexpr std::size_t kMaxClasses = 60;

struct ConjClass {
  Permutation representative;  // lexicographically smallest member
  std::uint64_t size = 0;
  std::uint32_t element_order = 1;
  bool is_real = false;
  std::size_t inverse_class = 0;
  std::size_t power_map_2 = 0;
};

/// Conjugacy classes of a group in canonical order (element order, size,
/// representative), with constant-time element-to-class lookup.
class ConjugacyClasses {
 public:
  explicit ConjugacyClasses(PermGroup group);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const ConjClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjClass>& classes() const { return classes_; }

  std::size_t class_of(const Permutation& g) const;
  std::size_t class_of_index(std::size_t element_index) const { return class_of_element_[element_index]; }
  /// Element indices of class i, ascending.
  const std::vector<std::uint32_t>& members(std::size_t i) const { return members_[i]; }

  /// Class of rep(i)^e.
  std::size_t power_class(std::size_t i, long long e) const;
  std::uint64_t centralizer_order(std::size_t i) const { return group_.size() / classes_[i].size; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_p_regular(std::size_t i, std::uint64_t p) const { return classes_[i].element_order % p != 0; }
  bool is_p_element(std::size_t i, std::uint64_t p) const;

 private:
  PermGroup group_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_element_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::uint64_t exponent_ = 1;
};

/// Canonically ordered classes of G.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

/// Fusion of the classes of H into the classes of G (H <= G).
std::vector<std::size_t> class_fusion(const ConjugacyClasses& h, const ConjugacyClasses& g);

}  // namespace realblocks
