#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "realblocks/blocks.hpp"

namespace realblocks {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct VerdictRecord {
  std::string statement;
  std::string block;
  Status status = Status::skipped;
  /// Skip reason, or a one-line summary of a failure.
  std::string reason;
  nlohmann::json witness = nlohmann::json::object();
};

VerdictRecord make_verdict(std::string statement, std::string block, bool ok, nlohmann::json witness,
                           std::string fail_reason = {});
VerdictRecord skipped(std::string statement, std::string block, std::string reason);

/// Lazily computed data about one block, shared by the verifiers.
class BlockAnalysis {
 public:
  BlockAnalysis(std::shared_ptr<const BlockSystem> sys, std::size_t block);

  const BlockSystem& system() const { return *sys_; }
  const Block& block() const { return (*sys_)[index_]; }
  std::size_t index() const { return index_; }
  std::uint32_t prime() const { return sys_->prime(); }
  /// "p<prime>:B<index>"
  std::string id() const;

  const CanonicalCharacterData& canonical() const;
  NilpotencyCertificate certificate() const;
  bool certified() const { return certificate() != NilpotencyCertificate::uncertified; }
  const std::vector<Subsection>& subsections() const;
  /// l(B), the rank of the member restrictions to p-regular classes.
  std::size_t l() const;
  /// Character table of the defect group D (the pair's D for p = 2).
  const CharacterTable& defect_table() const;
  int indicator(std::size_t member_position) const;

 private:
  std::shared_ptr<const BlockSystem> sys_;
  std::size_t index_;
  mutable std::optional<CanonicalCharacterData> canonical_;
  mutable std::optional<NilpotencyCertificate> certificate_;
  mutable std::optional<std::vector<Subsection>> subsections_;
  mutable std::optional<std::size_t> l_;
  mutable std::shared_ptr<const CharacterTable> defect_table_;
};

/// mu(lambda) = (1/|D|) sum_{e in E \ D} lambda(e^2), D the group of lambda.
int gow_indicator(const ClassFunction& lambda, const PermGroup& e);

/// F-S indicator of an arbitrary class function, extended linearly.
Cyclotomic indicator_of(const ClassFunction& f);

VerdictRecord verify_theorem_A(const BlockAnalysis& a);
VerdictRecord verify_conjecture_B(const BlockAnalysis& a);
VerdictRecord verify_conjecture_C(const BlockAnalysis& a);
VerdictRecord verify_theorem_loc(const BlockAnalysis& a);
/// sum_chi eps(chi) d^u = (1/phi(1)) sum_{psi in b} eps(psi) psi(u) for every subsection with l(b) = 1.
VerdictRecord verify_lemma_brauer(const BlockAnalysis& a);
/// gowMurray_i, gowMurray_ii, gowMurray_iii.
std::vector<VerdictRecord> verify_gowmurray(const BlockAnalysis& a);
/// Abelian D: E splits over D iff no member has negative indicator.
VerdictRecord verify_corollary(const BlockAnalysis& a);
VerdictRecord verify_abelian(const BlockAnalysis& a);
VerdictRecord verify_podd(const BlockAnalysis& a);
VerdictRecord verify_hhs(const BlockAnalysis& a);
VerdictRecord verify_solvable_identity(const BlockAnalysis& a);

/// lambda * chi_0 for every lambda in Irr(D).
struct StarFamily {
  std::size_t chi0 = 0;  // row of the top table
  /// Row of lambda * chi_0 per row of the defect group table.
  std::vector<std::size_t> images;
  std::vector<ClassFunction> characters;
};

/// Assembles the family, searching over the matching of subsections with
/// classes of D. Returns nullopt when no matching lands in Irr(B).
std::optional<StarFamily> star_family(const BlockAnalysis& a, nlohmann::json* witness = nullptr);
/// lambda * chi_0 as a class function; throws InvariantError if the family does not exist.
ClassFunction star_character(const BlockAnalysis& a, std::size_t lambda);
VerdictRecord verify_star(const BlockAnalysis& a);

/// Row and column orthogonality, checked exactly.
VerdictRecord verify_orthogonality(const CharacterTable& t);
/// sum_chi eps(chi) chi(g) = |{x : x^2 = g}| on every class, by element count.
VerdictRecord verify_square_root_identity(const CharacterTable& t);
VerdictRecord verify_partition_stable(const BlockSystem& sys);
/// Pairs from different real defect classes are G-conjugate.
VerdictRecord verify_pair_uniqueness(const BlockAnalysis& a);

}  // namespace realblocks
