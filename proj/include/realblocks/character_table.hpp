#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realblocks/conjugacy.hpp"
#include "realblocks/cyclotomic.hpp"

namespace realblocks {

/// A class function of a group, given by one value per conjugacy class.
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Cyclotomic> values);

  const ConjugacyClasses& classes() const { return *classes_; }
  const std::shared_ptr<const ConjugacyClasses>& classes_ptr() const { return classes_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }
  /// Value at an arbitrary group element.
  const Cyclotomic& at(const Permutation& g) const { return values_[classes_->class_of(g)]; }
  const Cyclotomic& degree() const { return values_[0]; }

  ClassFunction conj() const;
  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction scaled(const Cyclotomic& c) const;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values_ == b.values_; }

 private:
  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// Exact ordinary character table computed by the Dixon-Schneider method.
///
/// Rows are sorted by degree and then by value tuple, except that the
/// trivial character is always row 0. Columns follow the canonical class
/// order of ConjugacyClasses. All values live in Q(zeta_e), e the exponent.
class CharacterTable {
 public:
  /// Builds the table; throws CapacityError beyond kMaxClasses classes.
  static std::shared_ptr<const CharacterTable> compute(const PermGroup& g);
  /// Rebuilds a table from a serialized dump, validating it fully.
  static std::shared_ptr<const CharacterTable> deserialize(const PermGroup& g, std::string_view text);

  const PermGroup& group() const { return classes_->group(); }
  const ConjugacyClasses& classes() const { return *classes_; }
  const std::shared_ptr<const ConjugacyClasses>& classes_ptr() const { return classes_; }
  std::size_t size() const { return rows_.size(); }
  unsigned conductor() const { return conductor_; }
  std::uint64_t order() const { return order_; }

  const std::vector<Cyclotomic>& row(std::size_t i) const { return rows_[i]; }
  const Cyclotomic& value(std::size_t i, std::size_t k) const { return rows_[i][k]; }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  ClassFunction character(std::size_t i) const;
  /// Index of the complex conjugate row.
  std::size_t conjugate_row(std::size_t i) const { return conj_row_[i]; }
  bool is_real(std::size_t i) const { return conj_row_[i] == i; }
  /// Row index of an irreducible character; throws InputError if none.
  std::size_t row_of(const ClassFunction& chi) const;
  std::optional<std::size_t> find_row(const std::vector<Cyclotomic>& values) const;

  /// Frobenius-Schur indicator, exactly -1, 0 or 1.
  int fs_indicator(std::size_t i) const { return indicators_[i]; }
  /// |K| chi(g) / chi(1) for g in class k; an algebraic integer.
  Cyclotomic central_character(std::size_t i, std::size_t k) const;
  /// |{x : x^2 = g}| for g in class k, cross-checked against sum_chi eps(chi) chi(g).
  std::uint64_t square_root_count(std::size_t k) const;
  /// Inner products with each irreducible.
  std::vector<Cyclotomic> decompose(const ClassFunction& f) const;

  /// Deterministic text dump used by the on-disk cache.
  std::string serialize() const;
  /// The Dixon-Schneider prime used (0 for deserialized tables).
  std::uint64_t modulus_prime() const { return ell_; }

  CharacterTable(std::shared_ptr<const ConjugacyClasses> classes, std::vector<std::vector<Cyclotomic>> rows,
                 std::uint64_t ell);

 private:
  void validate() const;

  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<std::uint64_t> degrees_;
  std::vector<std::size_t> conj_row_;
  std::vector<int> indicators_;
  unsigned conductor_ = 1;
  std::uint64_t order_ = 1;
  std::uint64_t ell_ = 0;
};

/// Frobenius-Schur indicator of row i.
int fs_indicator(const CharacterTable& t, std::size_t i);
/// Central character value, see CharacterTable::central_character.
Cyclotomic central_character(const CharacterTable& t, std::size_t i, std::size_t k);

/// theta^G for theta a class function of H <= G.
ClassFunction induce(const ClassFunction& theta, const std::shared_ptr<const ConjugacyClasses>& g);
/// chi restricted to H <= G.
ClassFunction restrict(const ClassFunction& chi, const std::shared_ptr<const ConjugacyClasses>& h);

/// 64-bit content hash of the element set, as 16 hex digits.
std::string group_hash(const PermGroup& g);

/// Process-wide table cache keyed by group_hash, optionally backed by a
/// directory of serialized tables. Thread-safe.
class TableCache {
 public:
  static TableCache& global();
  std::shared_ptr<const CharacterTable> get(const PermGroup& g);
  std::shared_ptr<const ConjugacyClasses> classes(const PermGroup& g);
  /// Enables the on-disk layer; empty path disables it.
  void set_directory(std::string dir);
  void clear();

 private:
  struct State;
  TableCache();
  std::shared_ptr<State> state_;
};

}  // namespace realblocks
