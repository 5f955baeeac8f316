#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "realblocks/character_table.hpp"
#include "realblocks/finite_field.hpp"

namespace realblocks {

enum class NilpotencyCertificate { p_nilpotent_group, cyclic_trivial_inertial, abelian_trivial_inertial, uncertified };

std::string to_string(NilpotencyCertificate c);

struct DefectPair {
  PermGroup D;
  PermGroup E;
};

/// A p-block: a set of irreducible characters with equal reduced central
/// characters.
struct Block {
  std::size_t index = 0;
  /// Row indices into the character table, ascending.
  std::vector<std::size_t> members;
  /// lambda_B per class, as field values of the system's reducer.
  std::vector<std::uint32_t> central_character;
  /// Coefficients a_K of the block idempotent per class.
  std::vector<std::uint32_t> idempotent;
  std::size_t defect_class = 0;
  unsigned defect = 0;
  PermGroup defect_group;
  bool is_principal = false;
  bool is_real = false;
  std::size_t conjugate_block = 0;
  /// Heights of the members, parallel to `members`.
  std::vector<unsigned> heights;
  /// p = 2 only: (D, E) from the first real defect class, (D, D) for
  /// non-real blocks.
  std::optional<DefectPair> defect_pair;
  /// p = 2 real blocks: all real defect classes, and whether the pairs they
  /// produce are G-conjugate to defect_pair.
  std::vector<std::size_t> real_defect_classes;
  bool pairs_conjugate = true;

  /// The defect group used by downstream computations: the D of the defect
  /// pair when there is one, otherwise defect_group.
  const PermGroup& D() const { return defect_pair ? defect_pair->D : defect_group; }
  /// E of the defect pair, or D.
  const PermGroup& E() const { return defect_pair ? defect_pair->E : defect_group; }
};

/// All p-blocks of a group. Central characters are reduced through a
/// Reducer of the given conductor, which must be a multiple of the group
/// exponent. Blocks of subgroups that take part in Brauer correspondence
/// must share the conductor and generator choice of the top group.
class BlockSystem {
 public:
  BlockSystem(std::shared_ptr<const CharacterTable> table, std::uint32_t p, unsigned conductor = 0,
              unsigned generator_choice = 0);

  /// Cached system for g, built from TableCache tables.
  static std::shared_ptr<const BlockSystem> get(const PermGroup& g, std::uint32_t p, unsigned conductor = 0,
                                                unsigned generator_choice = 0);

  const CharacterTable& table() const { return *table_; }
  const std::shared_ptr<const CharacterTable>& table_ptr() const { return table_; }
  const PermGroup& group() const { return table_->group(); }
  const ConjugacyClasses& classes() const { return table_->classes(); }
  const Reducer& reducer() const { return reducer_; }
  std::uint32_t prime() const { return p_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t row) const { return block_of_row_[row]; }
  std::size_t principal() const { return block_of_row_[0]; }
  /// Exponent a with |G|_p = p^a.
  unsigned sylow_exponent() const { return a_; }

  /// Indices of blocks b of `sub` with b^G = B, where sub describes a
  /// subgroup of this group.
  std::vector<std::size_t> correspondents(std::size_t block, const BlockSystem& sub) const;
  /// lambda_b^G for block b of a subgroup system, per class of this group.
  std::vector<std::uint32_t> induced_central_character(const BlockSystem& sub, std::size_t b) const;

  /// Recomputes the partition with the other generator choice and compares
  /// member sets.
  bool partition_stable_under_generator_change() const;

 private:
  std::shared_ptr<const CharacterTable> table_;
  std::uint32_t p_;
  Reducer reducer_;
  unsigned a_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_row_;
};

/// Partition of the rows into blocks (member lists), using the reducer.
std::vector<std::vector<std::size_t>> block_partition(const CharacterTable& t, const Reducer& r);

/// Rank of the restrictions of the given rows to the p-regular classes.
std::size_t restriction_rank(const CharacterTable& t, const std::vector<std::size_t>& rows, std::uint32_t p);

/// A B-subsection (u, b): u a p-element of D, b a block of C_G(u) with b^G = B.
struct Subsection {
  Permutation u;
  std::shared_ptr<const BlockSystem> local;  // blocks of C_G(u)
  std::size_t b = 0;                          // index in local
  std::size_t l_b = 0;
  /// Present when l_b == 1.
  std::optional<std::uint64_t> phi_degree;
  std::optional<ClassFunction> phi_values;
  /// d^u_{chi,phi} for chi in B.members, present when l_b == 1.
  std::vector<Cyclotomic> decomposition;
};

/// One subsection list per G-class of p-elements meeting D, in order of the
/// class index; each entry lists every correspondent b.
std::vector<Subsection> subsections(const BlockSystem& sys, std::size_t block);

/// Generalized decomposition numbers d^u_{chi,phi} for every row of the
/// top table, relative to a subsection with l(b) = 1.
std::vector<Cyclotomic> generalized_decomposition(const BlockSystem& sys, const Subsection& s);

struct CanonicalCharacterData {
  PermGroup dc;  // D C_G(D)
  std::shared_ptr<const BlockSystem> dc_blocks;
  std::size_t b_D = 0;
  std::size_t theta = 0;  // row of dc_blocks->table()
  PermGroup normalizer;   // N_G(D)
  PermGroup stabilizer;   // N_G(D)_theta
  PermGroup extended_stabilizer;
  PermGroup inertial;  // N_G(D, b_D)
  PermGroup extended_inertial;
};

CanonicalCharacterData canonical_character_data(const BlockSystem& sys, std::size_t block);

NilpotencyCertificate certify_nilpotent(const BlockSystem& sys, std::size_t block);
NilpotencyCertificate certify_nilpotent(const BlockSystem& sys, std::size_t block, const CanonicalCharacterData& data);

/// Permutation of the classes of a normal subgroup H induced by conjugation
/// with g: result[L] = class of g^-1 rep(L) g.
std::vector<std::size_t> class_action(const ConjugacyClasses& h, const Permutation& g);

}  // namespace realblocks
