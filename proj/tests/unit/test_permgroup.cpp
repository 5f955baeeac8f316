#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "realblocks/conjugacy.hpp"
#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"
#include "realblocks/named_groups.hpp"

using namespace realblocks;

namespace {

Permutation cyc(std::string_view s, std::size_t n) { return parse_cycles(s, n); }

std::vector<PermGroup> sample_groups() {
  return {PermGroup::trivial(1), cyclic_group(6),           dihedral_group(4),     dihedral_group(12),
          quaternion_group(),    symmetric_group(4),        alternating_group(5),  special_linear_2_3(),
          general_linear_2_3(),  direct_product(cyclic_group(4), cyclic_group(2)), symmetric_group(3)};
}

}  // namespace

TEST_CASE("parse cycles") {
  CHECK(cyc("()", 3).is_identity());
  CHECK(cyc(" (1, 2,3) ", 3).images() == std::vector<Point>{1, 2, 0});
  CHECK(cyc("(1,2)(3,4)", 4).to_cycle_string() == "(1,2)(3,4)");
  CHECK_THROWS_AS(cyc("(1,2", 3), ParseError);
  CHECK_THROWS_AS(cyc("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(1,1)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0,1)", 3), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InputError);
}

TEST_CASE("product convention") {
  auto a = cyc("(1,2)", 3), b = cyc("(2,3)", 3);
  auto ab = a * b;
  for (Point x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK_THROWS_AS(a * cyc("(1,2)", 4), InputError);
}

TEST_CASE("group orders match closure") {
  CHECK(PermGroup::trivial(1).size() == 1);
  auto d8 = PermGroup::from_generators({cyc("(1,2,3,4)", 4), cyc("(1,4)(2,3)", 4)});
  CHECK(d8.size() == 8);
  auto d24 = PermGroup::from_generators(
      {cyc("(1,2,3,4,5,6,7,8,9,10,11,12)", 12), cyc("(2,12)(3,11)(4,10)(5,9)(6,8)", 12)});
  CHECK(d24.size() == 24);
  CHECK_THROWS_AS(PermGroup::from_generators({cyc("(1,2)", 2), cyc("(1,2)", 3)}, 2), InputError);
  for (const auto& g : sample_groups()) {
    auto brute = oracle::closure(g.generators(), g.degree());
    CHECK(brute.size() == g.size());
    CHECK(brute == g.elements());
    std::uint64_t prod = 1;
    for (auto len : g.orbit_lengths()) prod *= len;
    CHECK(prod == g.size());
    for (const auto& s : g.generators()) CHECK(g.contains(s));
  }
  auto s4 = symmetric_group(4);
  CHECK_FALSE(alternating_group(4).contains(cyc("(1,2)", 4)));
  CHECK(s4.contains(cyc("(1,2)", 4)));
  CHECK(s4.base().front() == 0);
}

TEST_CASE("conjugacy classes agree with brute force") {
  CHECK(ConjugacyClasses(PermGroup::trivial(1)).size() == 1);
  CHECK(ConjugacyClasses(dihedral_group(4)).size() == 5);
  ConjugacyClasses d24(dihedral_group(12));
  CHECK(d24.size() == 9);
  for (const auto& c : d24.classes()) CHECK(c.is_real);
  for (const auto& g : sample_groups()) {
    ConjugacyClasses cc(g);
    auto brute = oracle::classes(g.elements());
    CHECK(brute.size() == cc.size());
    std::uint64_t total = 0;
    std::set<Permutation> reps;
    for (std::size_t i = 0; i < cc.size(); ++i) {
      const auto& c = cc[i];
      total += c.size;
      CHECK(g.size() % c.size == 0);
      CHECK(centralizer(g, c.representative).size() * c.size == g.size());
      CHECK((c.inverse_class == i) == c.is_real);
      CHECK(cc.class_of(c.representative * c.representative) == c.power_map_2);
      reps.insert(c.representative);
      if (i > 0) {
        const auto& prev = cc[i - 1];
        CHECK(std::make_tuple(prev.element_order, prev.size, prev.representative) <
              std::make_tuple(c.element_order, c.size, c.representative));
      }
    }
    CHECK(total == g.size());
    for (const auto& cls : brute) {
      CHECK(reps.count(cls.front()) == 1);
      CHECK(cc[cc.class_of(cls.front())].size == cls.size());
    }
  }
}

TEST_CASE("centralizers and extended centralizers") {
  auto s3 = symmetric_group(3);
  auto x = cyc("(1,2,3)", 3);
  CHECK(centralizer(s3, x).size() == 3);
  CHECK(extended_centralizer(s3, x).size() == 6);
  CHECK(centralizer(s3, Permutation(3)) == s3);
  CHECK(extended_centralizer(s3, Permutation(3)) == s3);
  auto c3 = cyclic_group(3);
  CHECK(extended_centralizer(c3, c3.generators()[0]).size() == 3);
  CHECK_THROWS_AS(centralizer(cyclic_group(3), cyc("(1,2)", 3)), InputError);
  for (const auto& g : sample_groups()) {
    for (const auto& c : conjugacy_classes(g)) {
      auto cx = centralizer(g, c.representative);
      auto ex = extended_centralizer(g, c.representative);
      CHECK(cx.is_subgroup_of(ex));
      auto idx = ex.size() / cx.size();
      CHECK((idx == 1 || idx == 2));
      CHECK((idx == 2) == (c.is_real && c.representative.order() > 2));
      auto brute = oracle::count_if_elements(
          g.elements(), [&](const Permutation& h) { return conjugate(c.representative, h) == c.representative; });
      CHECK(brute == cx.size());
    }
  }
}

TEST_CASE("sylow subgroups") {
  auto d24 = dihedral_group(12);
  CHECK(sylow_subgroup(d24, 2).size() == 8);
  CHECK(sylow_subgroup(d24, 3).size() == 3);
  CHECK(sylow_subgroup(d24, 5).size() == 1);
  for (const auto& g : sample_groups()) {
    for (std::uint64_t p : {2, 3, 5}) {
      auto s = sylow_subgroup(g, p);
      CHECK(s.size() == p_part(g.size(), p));
      CHECK(sylow_subgroup(g, p) == s);
      CHECK(s.is_subgroup_of(g));
      // Every p-subgroup generated by a p-element conjugates into s.
      for (const auto& c : conjugacy_classes(g)) {
        if (!is_power_of(c.element_order, p)) continue;
        auto cyclic = PermGroup::from_generators({c.representative}, g.degree());
        bool found = false;
        for (const auto& h : g.elements())
          if (s.contains(conjugate(c.representative, h))) {
            found = true;
            break;
          }
        CHECK(found);
        CHECK(cyclic.size() == c.element_order);
      }
    }
  }
  // Sylow subgroups of S_4 from different generator orders are conjugate.
  auto s4a = symmetric_group(4);
  auto s4b = PermGroup::from_generators({cyc("(1,2)", 4), cyc("(2,3,4)", 4), cyc("(1,2,3,4)", 4)}, 4);
  CHECK(conjugating_element(s4a, sylow_subgroup(s4a, 2), sylow_subgroup(s4b, 2)).has_value());
}

TEST_CASE("normalizers, cores, quotients, series") {
  auto s4 = symmetric_group(4);
  auto v4 = PermGroup::from_generators({cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)}, 4);
  CHECK(normalizer(s4, v4) == s4);
  CHECK(is_normal(s4, v4));
  CHECK(quotient_by_normal(s4, v4).size() == 6);
  CHECK_THROWS_AS(quotient_by_normal(s4, sylow_subgroup(s4, 3)), InputError);
  CHECK(normalizer(s4, sylow_subgroup(s4, 3)).size() == 6);
  auto c12 = cyclic_group(12);
  auto series = derived_series(c12);
  REQUIRE(series.size() == 2);
  CHECK(series[1].is_trivial());
  CHECK(derived_series(s4).size() == 4);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_solvable(alternating_group(5)));
  auto d24 = dihedral_group(12);
  CHECK(core_p_prime(d24, 3).size() == 4);
  CHECK_FALSE(is_p_nilpotent(d24, 3));
  CHECK(is_p_nilpotent(d24, 2));
  CHECK(is_p_nilpotent(quaternion_group(), 2));
  CHECK_FALSE(is_p_nilpotent(s4, 2));
  CHECK(exponent(d24) == 12);
  for (const auto& g : sample_groups()) {
    auto z = centralizer(g, g);
    CHECK(is_normal(g, z));
    Quotient q(g, z);
    CHECK(q.image().size() * z.size() == g.size());
    // the coset map is a homomorphism
    for (const auto& a : g.generators())
      for (const auto& b : g.generators()) CHECK(q.map(a * b) == q.map(a) * q.map(b));
  }
}

TEST_CASE("square root counts") {
  auto q8 = quaternion_group();
  CHECK(count_square_roots(q8, Permutation(8)) == 2);
  Permutation z;
  for (const auto& x : q8.elements())
    if (x.order() == 2) z = x;
  CHECK(count_square_roots(q8, z) == 6);
}
