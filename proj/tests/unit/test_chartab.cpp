#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "realblocks/character_table.hpp"
#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"
#include "realblocks/named_groups.hpp"

using namespace realblocks;

namespace {

std::vector<PermGroup> sample_groups() {
  return {cyclic_group(2),       cyclic_group(7),      dihedral_group(4),
          dihedral_group(12),    quaternion_group(),   symmetric_group(4),
          alternating_group(5),  special_linear_2_3(), general_linear_2_3(),
          direct_product(cyclic_group(4), cyclic_group(2)), symmetric_group(3), symmetric_group(5),
          direct_product(quaternion_group(), cyclic_group(3))};
}

bool is_nonnegative_integer(const Cyclotomic& c) {
  auto r = c.as_rational();
  return r && r->is_integer() && r->num() >= 0;
}

}  // namespace

TEST_CASE("small tables") {
  auto c2 = CharacterTable::compute(cyclic_group(2));
  REQUIRE(c2->size() == 2);
  CHECK(c2->row(0) == std::vector<Cyclotomic>{1, 1});
  CHECK(c2->row(1) == std::vector<Cyclotomic>{1, -1});
  auto q8 = CharacterTable::compute(quaternion_group());
  CHECK(q8->degrees() == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(q8->fs_indicator(4) == -1);
  auto d24 = CharacterTable::compute(dihedral_group(12));
  CHECK(d24->degrees() == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2, 2, 2, 2});
  for (std::size_t i = 0; i < d24->size(); ++i) {
    CHECK(d24->is_real(i));
    CHECK(d24->fs_indicator(i) == 1);
  }
  auto c3 = CharacterTable::compute(cyclic_group(3));
  CHECK(c3->fs_indicator(0) == 1);
  CHECK(c3->fs_indicator(1) == 0);
  CHECK(c3->fs_indicator(2) == 0);
}

TEST_CASE("tables satisfy brute-force oracles") {
  for (const auto& g : sample_groups()) {
    auto t = CharacterTable::compute(g);
    const auto& cc = t->classes();
    CAPTURE(g.size());
    std::uint64_t sum_sq = 0;
    for (auto d : t->degrees()) sum_sq += d * d;
    CHECK(sum_sq == g.size());
    CHECK(t->degree(0) == 1);
    // orthogonality with plain cyclotomic arithmetic
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = 0; j < t->size(); ++j)
        CHECK(inner_product(t->character(i), t->character(j)) == Cyclotomic(i == j ? 1 : 0));
    // Frobenius-Schur indicators and square roots by enumeration
    for (std::size_t i = 0; i < t->size(); ++i) {
      Cyclotomic acc;
      for (const auto& x : g.elements()) acc += t->character(i).at(x * x);
      acc *= Rational(1, static_cast<std::int64_t>(g.size()));
      CHECK(acc == Cyclotomic(t->fs_indicator(i)));
      CHECK((t->fs_indicator(i) == 0) == (t->conjugate_row(i) != i));
    }
    for (std::size_t k = 0; k < cc.size(); ++k) {
      auto brute = oracle::count_if_elements(g.elements(),
                                             [&](const Permutation& x) { return x * x == cc[k].representative; });
      CHECK(t->square_root_count(k) == brute);
      for (std::size_t i = 0; i < t->size(); ++i) CHECK(t->central_character(i, k).is_integer_combination());
    }
    // genuine characters: permutation character and tensor squares decompose
    std::vector<Cyclotomic> fix;
    for (const auto& c : cc.classes()) {
      std::int64_t f = 0;
      for (Point x = 0; x < c.representative.degree(); ++x) f += c.representative[x] == x;
      fix.emplace_back(f);
    }
    for (const auto& m : t->decompose(ClassFunction(t->classes_ptr(), fix))) CHECK(is_nonnegative_integer(m));
    for (std::size_t i = 0; i < t->size(); ++i)
      for (const auto& m : t->decompose(t->character(i) * t->character(i))) CHECK(is_nonnegative_integer(m));
    // serialization round trip
    auto back = CharacterTable::deserialize(g, t->serialize());
    for (std::size_t i = 0; i < t->size(); ++i) CHECK(back->row(i) == t->row(i));
    CHECK(back->serialize() == t->serialize());
  }
}

TEST_CASE("central characters") {
  auto s3 = CharacterTable::compute(symmetric_group(3));
  const auto& cc = s3->classes();
  std::size_t three = 0;
  for (std::size_t k = 0; k < cc.size(); ++k)
    if (cc[k].element_order == 3) three = k;
  std::size_t two_dim = 2;
  REQUIRE(s3->degree(two_dim) == 2);
  CHECK(s3->central_character(two_dim, three) == Cyclotomic(-1));
  CHECK(s3->central_character(two_dim, 0) == Cyclotomic(1));
  for (std::size_t k = 0; k < cc.size(); ++k)
    CHECK(s3->central_character(0, k) == Cyclotomic(static_cast<std::int64_t>(cc[k].size)));
}

TEST_CASE("induction and restriction") {
  auto s3 = symmetric_group(3);
  auto tg = CharacterTable::compute(s3);
  auto c3 = PermGroup::from_generators({parse_cycles("(1,2,3)", 3)}, 3);
  auto th = CharacterTable::compute(c3);
  CHECK(induce(tg->character(0), tg->classes_ptr()) == tg->character(0));
  auto ind = induce(th->character(1), tg->classes_ptr());
  CHECK(ind == tg->character(2));
  auto res = restrict(tg->character(2), th->classes_ptr());
  CHECK(res == th->character(1) + th->character(2));
  CHECK_THROWS_AS(restrict(th->character(1), tg->classes_ptr()), InputError);
  CHECK_THROWS_AS(induce(tg->character(1), th->classes_ptr()), InputError);
  // Frobenius reciprocity on larger groups
  for (const auto& g : {symmetric_group(4), general_linear_2_3(), dihedral_group(12)}) {
    auto tG = CharacterTable::compute(g);
    for (const auto& h : {sylow_subgroup(g, 2), sylow_subgroup(g, 3), centralizer(g, g.generators()[0])}) {
      auto tH = CharacterTable::compute(h);
      for (std::size_t a = 0; a < tH->size(); ++a)
        for (std::size_t b = 0; b < tG->size(); ++b)
          CHECK(inner_product(induce(tH->character(a), tG->classes_ptr()), tG->character(b)) ==
                inner_product(tH->character(a), restrict(tG->character(b), tH->classes_ptr())));
    }
  }
}

TEST_CASE("table cache") {
  TableCache::global().clear();
  auto g = symmetric_group(4);
  auto a = TableCache::global().get(g);
  auto b = TableCache::global().get(symmetric_group(4));
  CHECK(a.get() == b.get());
  CHECK(group_hash(g) == group_hash(PermGroup::from_generators({parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)})));
  CHECK(group_hash(g) != group_hash(alternating_group(4)));
}
