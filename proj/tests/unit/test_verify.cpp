#include <algorithm>

#include "doctest.h"
#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"
#include "realblocks/named_groups.hpp"
#include "realblocks/verify.hpp"
#include "realblocks/witness.hpp"

using namespace realblocks;

namespace {

PermGroup cyclic_subgroup(const PermGroup& g, std::size_t gen) {
  return PermGroup::from_generators({g.generators()[gen]}, g.degree());
}

std::size_t nonprincipal(const BlockSystem& sys) {
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (!sys[i].is_principal) return i;
  FAIL("no non-principal block");
  return 0;
}

Status status_of(const std::vector<VerdictRecord>& v, const std::string& st) {
  for (const auto& r : v)
    if (r.statement == st) return r.status;
  FAIL("missing statement " << st);
  return Status::skipped;
}

}  // namespace

TEST_CASE("Gow indicator values") {
  PermGroup d8 = dihedral_group(4);
  PermGroup c4 = cyclic_subgroup(d8, 0);
  auto t = TableCache::global().get(c4);
  for (std::size_t r = 0; r < t->size(); ++r) CHECK(gow_indicator(t->character(r), d8) == 1);

  PermGroup q8 = quaternion_group();
  PermGroup i4 = cyclic_subgroup(q8, 0);
  auto ti = TableCache::global().get(i4);
  std::vector<int> mu;
  for (std::size_t r = 0; r < ti->size(); ++r) mu.push_back(gow_indicator(ti->character(r), q8));
  std::sort(mu.begin(), mu.end());
  CHECK(mu == std::vector<int>{-1, -1, 1, 1});

  PermGroup c4b = cyclic_group(4);
  PermGroup c2 = PermGroup::from_generators({c4b.generators()[0].pow(2)}, 4);
  auto t2 = TableCache::global().get(c2);
  CHECK(gow_indicator(t2->character(0), c4b) == 1);
  CHECK(gow_indicator(t2->character(1), c4b) == -1);

  CHECK_THROWS_AS(gow_indicator(t2->character(0), c2), InputError);
}

TEST_CASE("witness blocks of C_3 x| D_8 and C_3 x| Q_8") {
  PermGroup d8 = dihedral_group(4);
  PermGroup q8 = quaternion_group();
  struct Case {
    PermGroup e, d;
    std::vector<std::pair<unsigned, int>> expected;
    std::int64_t conj_c;
  };
  std::vector<Case> cases{{d8, cyclic_subgroup(d8, 0), {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 4},
                          {q8, cyclic_subgroup(q8, 0), {{0, -1}, {0, -1}, {0, 1}, {0, 1}}, 0}};
  for (const auto& c : cases) {
    auto w = construct_cq_extension(c.e, c.d, 3);
    auto sys = BlockSystem::get(w.group, 2);
    BlockAnalysis a(sys, nonprincipal(*sys));
    CHECK(a.certificate() == NilpotencyCertificate::p_nilpotent_group);
    auto b = verify_conjecture_B(a);
    CHECK(b.status == Status::pass);
    CHECK(b.witness["block"].get<std::vector<std::pair<unsigned, int>>>() == c.expected);
    auto cc = verify_conjecture_C(a);
    CHECK(cc.status == Status::pass);
    CHECK(cc.witness["eps_phi"].get<std::int64_t>() == c.conj_c);
    CHECK(verify_theorem_A(a).status == Status::pass);
    CHECK(verify_theorem_loc(a).status == Status::pass);
    CHECK(verify_lemma_brauer(a).status == Status::pass);
    auto gm = verify_gowmurray(a);
    for (const char* st : {"gowMurray_i", "gowMurray_ii", "gowMurray_iii"}) CHECK(status_of(gm, st) == Status::pass);
    CHECK(verify_corollary(a).status == Status::pass);
    CHECK(verify_abelian(a).status == Status::pass);
    CHECK(verify_hhs(a).status == Status::pass);
    CHECK(verify_star(a).status == Status::pass);
    auto s = verify_solvable_identity(a);
    CHECK(s.status == Status::pass);
    CHECK(s.witness["index_G_EN"].get<std::uint64_t>() == 1);
  }
}

TEST_CASE("local sums for C_3 x| Q_8 at the central involution") {
  PermGroup q8 = quaternion_group();
  auto w = construct_cq_extension(q8, cyclic_subgroup(q8, 0), 3);
  auto sys = BlockSystem::get(w.group, 2);
  BlockAnalysis a(sys, nonprincipal(*sys));
  auto r = verify_theorem_loc(a);
  REQUIRE(r.status == Status::pass);
  bool found = false;
  for (const auto& e : r.witness["subsections"]) {
    if (!e["arranged"].get<bool>()) continue;
    Permutation u = parse_cycles(e["u_arranged"].get<std::string>(), w.group.degree());
    if (u.order() == 2) {
      CHECK(e["rhs"].get<std::uint64_t>() == 4);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("D_24 at both primes") {
  PermGroup g = dihedral_group(12);
  auto t = TableCache::global().get(g);
  for (std::size_t i = 0; i < t->size(); ++i) CHECK(t->fs_indicator(i) == 1);
  CHECK(verify_orthogonality(*t).status == Status::pass);
  CHECK(verify_square_root_identity(*t).status == Status::pass);

  auto s2 = BlockSystem::get(g, 2);
  BlockAnalysis a2(s2, nonprincipal(*s2));
  CHECK(verify_theorem_A(a2).status == Status::pass);
  CHECK(verify_conjecture_B(a2).status == Status::pass);
  auto h = verify_hhs(a2);
  CHECK(h.status == Status::pass);
  CHECK(h.witness["heights"][0]["real_members"].get<std::size_t>() == 4);

  auto fam = star_family(a2);
  REQUIRE(fam);
  // the trivial character of D gives chi_0 back
  CHECK(fam->images[0] == fam->chi0);
  auto dt = TableCache::global().get(s2->operator[](nonprincipal(*s2)).D());
  for (std::size_t r = 0; r < dt->size(); ++r) {
    CHECK(t->degree(fam->images[r]) == 2);
    if (!dt->is_real(r)) CHECK(fam->images[r] != fam->chi0);
  }

  auto s3 = BlockSystem::get(g, 3);
  // two non-principal 3-blocks; only the one of degree-2 characters is nilpotent
  std::size_t thm_a_pass = 0, podd_pass = 0;
  for (std::size_t i = 0; i < s3->size(); ++i) {
    BlockAnalysis a3(s3, i);
    if ((*s3)[i].is_principal) continue;
    auto ta = verify_theorem_A(a3);
    auto p = verify_podd(a3);
    CHECK(ta.status != Status::fail);
    CHECK(p.status != Status::fail);
    if (ta.status == Status::pass) ++thm_a_pass;
    if (p.status == Status::pass) {
      ++podd_pass;
      CHECK(p.witness["eps_theta_T"].get<int>() == 1);
      CHECK(a3.certificate() == NilpotencyCertificate::cyclic_trivial_inertial);
    }
  }
  CHECK(thm_a_pass == 1);
  CHECK(podd_pass == 1);
}

TEST_CASE("principal blocks and trivial cases") {
  auto sys = BlockSystem::get(cyclic_group(2), 2);
  BlockAnalysis a(sys, 0);
  CHECK(verify_conjecture_B(a).status == Status::skipped);
  CHECK(verify_conjecture_C(a).status == Status::skipped);
  CHECK(verify_solvable_identity(a).status == Status::skipped);
  CHECK(verify_theorem_loc(a).status == Status::pass);

  // principal block of S_3 at p = 2: sum eps(chi) d_chi = #{x in D : x^2 = 1} = 2
  auto s3 = BlockSystem::get(symmetric_group(3), 2);
  BlockAnalysis p(s3, s3->principal());
  auto r = verify_theorem_loc(p);
  REQUIRE(r.status == Status::pass);
  CHECK(r.witness["subsections"][0]["rhs"].get<std::uint64_t>() == 2);

  auto q8 = BlockSystem::get(quaternion_group(), 2);
  BlockAnalysis qa(q8, 0);
  auto gm = verify_gowmurray(qa);
  CHECK(status_of(gm, "gowMurray_ii") == Status::pass);
  CHECK(gm[1].witness.contains("strictness_clause"));
}

TEST_CASE("uncertified blocks are skipped, not passed") {
  auto sys = BlockSystem::get(symmetric_group(4), 2);
  BlockAnalysis a(sys, sys->principal());
  CHECK(verify_theorem_A(a).status == Status::skipped);
  CHECK(verify_star(a).status == Status::skipped);
  CHECK(verify_hhs(a).status == Status::skipped);
}

TEST_CASE("verifiers over a sample of groups never fail") {
  std::vector<PermGroup> groups{symmetric_group(3), symmetric_group(4), dihedral_group(4), quaternion_group(),
                                special_linear_2_3(), general_linear_2_3(), alternating_group(5),
                                direct_product(quaternion_group(), cyclic_group(3)), dihedral_group(12)};
  for (const auto& g : groups)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      auto sys = BlockSystem::get(g, p);
      CHECK(verify_partition_stable(*sys).status == Status::pass);
      for (std::size_t i = 0; i < sys->size(); ++i) {
        BlockAnalysis a(sys, i);
        std::vector<VerdictRecord> rs{verify_theorem_A(a),        verify_conjecture_B(a), verify_conjecture_C(a),
                                      verify_theorem_loc(a),      verify_lemma_brauer(a), verify_corollary(a),
                                      verify_abelian(a),          verify_podd(a),         verify_hhs(a),
                                      verify_solvable_identity(a), verify_star(a),        verify_pair_uniqueness(a)};
        auto gm = verify_gowmurray(a);
        rs.insert(rs.end(), gm.begin(), gm.end());
        for (const auto& r : rs) {
          INFO(g.order() << " p=" << p << " " << r.statement << " " << r.block << " " << r.reason << " "
                         << r.witness.dump());
          CHECK(r.status != Status::fail);
        }
      }
    }
}
