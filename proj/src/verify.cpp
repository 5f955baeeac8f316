#include "realblocks/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"

namespace realblocks {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

VerdictRecord make_verdict(std::string statement, std::string block, bool ok, json witness, std::string fail_reason) {
  VerdictRecord r;
  r.statement = std::move(statement);
  r.block = std::move(block);
  r.status = ok ? Status::pass : Status::fail;
  if (!ok) r.reason = fail_reason.empty() ? "sides differ" : std::move(fail_reason);
  r.witness = std::move(witness);
  return r;
}

VerdictRecord skipped(std::string statement, std::string block, std::string reason) {
  VerdictRecord r;
  r.statement = std::move(statement);
  r.block = std::move(block);
  r.status = Status::skipped;
  r.reason = std::move(reason);
  return r;
}

namespace {

std::int64_t to_int(const Cyclotomic& c, const char* what) {
  auto q = c.as_rational();
  if (!q || !q->is_integer()) throw InvariantError(std::string(what) + " is not an integer: " + c.to_string());
  return q->num();
}

Rational to_rational(const Cyclotomic& c, const char* what) {
  auto q = c.as_rational();
  if (!q) throw InvariantError(std::string(what) + " is not rational: " + c.to_string());
  return *q;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

std::uint64_t count_outside(const PermGroup& e, const PermGroup& d, const Permutation& y) {
  return count_square_roots(e, y, [&](const Permutation& x) { return !d.contains(x); });
}

template <class T>
json sorted_multiset(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return json(v);
}

// An element of D of maximal order.
Permutation generator_of_cyclic(const PermGroup& d) {
  Permutation best = d.elements().front();
  for (const auto& x : d.elements())
    if (x.order() > best.order()) best = x;
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockAnalysis

BlockAnalysis::BlockAnalysis(std::shared_ptr<const BlockSystem> sys, std::size_t block)
    : sys_(std::move(sys)), index_(block) {
  if (index_ >= sys_->size()) throw InputError("block index out of range");
}

std::string BlockAnalysis::id() const { return "p" + std::to_string(prime()) + ":B" + std::to_string(index_); }

const CanonicalCharacterData& BlockAnalysis::canonical() const {
  if (!canonical_) canonical_ = canonical_character_data(*sys_, index_);
  return *canonical_;
}

NilpotencyCertificate BlockAnalysis::certificate() const {
  if (!certificate_) {
    certificate_ = is_p_nilpotent(sys_->group(), prime()) ? NilpotencyCertificate::p_nilpotent_group
                                                           : certify_nilpotent(*sys_, index_, canonical());
  }
  return *certificate_;
}

const std::vector<Subsection>& BlockAnalysis::subsections() const {
  if (!subsections_) subsections_ = realblocks::subsections(*sys_, index_);
  return *subsections_;
}

std::size_t BlockAnalysis::l() const {
  if (!l_) l_ = restriction_rank(sys_->table(), block().members, prime());
  return *l_;
}

const CharacterTable& BlockAnalysis::defect_table() const {
  if (!defect_table_) defect_table_ = TableCache::global().get(block().D());
  return *defect_table_;
}

int BlockAnalysis::indicator(std::size_t member_position) const {
  return sys_->table().fs_indicator(block().members[member_position]);
}

// ---------------------------------------------------------------------------
// Indicators

int gow_indicator(const ClassFunction& lambda, const PermGroup& e) {
  const PermGroup& d = lambda.classes().group();
  if (!d.is_subgroup_of(e) || e.size() != 2 * d.size()) throw InputError("Gow indicator needs |E:D| = 2");
  Cyclotomic acc;
  for (const auto& x : e.elements())
    if (!d.contains(x)) acc += lambda.at(x * x);
  acc *= Rational(1, static_cast<std::int64_t>(d.size()));
  auto v = to_int(acc, "Gow indicator");
  if (v < -1 || v > 1) throw InvariantError("Gow indicator out of range");
  return static_cast<int>(v);
}

Cyclotomic indicator_of(const ClassFunction& f) {
  const auto& cc = f.classes();
  Cyclotomic acc;
  for (std::size_t k = 0; k < cc.size(); ++k)
    acc += f[cc.power_class(k, 2)] * Rational(static_cast<std::int64_t>(cc[k].size));
  acc *= Rational(1, static_cast<std::int64_t>(cc.group().size()));
  return acc;
}

// ---------------------------------------------------------------------------
// Theorem A

VerdictRecord verify_theorem_A(const BlockAnalysis& a) {
  const std::string st = "thmA";
  const Block& b = a.block();
  if (!b.is_real) return skipped(st, a.id(), "block is not real");
  if (!a.certified()) return skipped(st, a.id(), "nilpotency not certified");
  const auto& canon = a.canonical();
  const auto& t = a.system().table();
  std::uint64_t q = canon.extended_inertial.size() / canon.dc.size();
  if (canon.extended_inertial.size() % canon.dc.size() != 0 || q > 2)
    throw InvariantError("N_G(D,b_D)*/D C_G(D) is not of order at most 2");
  const auto& dt = a.defect_table();
  std::vector<std::size_t> act(dt.classes().size());
  std::iota(act.begin(), act.end(), 0);
  if (q == 2) {
    for (const auto& x : canon.extended_inertial.elements())
      if (!canon.dc.contains(x)) {
        act = class_action(dt.classes(), x);
        break;
      }
  }
  std::uint32_t p = a.prime();
  std::map<unsigned, std::int64_t> block_counts, local_counts;
  for (std::size_t i = 0; i < b.members.size(); ++i)
    if (t.is_real(b.members[i])) ++block_counts[b.heights[i]];
  for (std::size_t r = 0; r < dt.size(); ++r) {
    bool ok = true;
    for (std::size_t l = 0; l < dt.classes().size() && ok; ++l) ok = dt.value(r, act[l]) == dt.value(r, l).conj();
    if (ok) ++local_counts[valuation(dt.degree(r), p)];
  }
  json w;
  w["t_nontrivial"] = q == 2;
  w["real_members_by_height"] = block_counts;
  w["local_count_by_height"] = local_counts;
  bool ok = block_counts == local_counts;
  if (p > 2) {
    std::set<int> eps;
    for (auto row : b.members)
      if (t.is_real(row)) eps.insert(t.fs_indicator(row));
    w["real_indicators"] = eps;
    if (eps.size() > 1) return make_verdict(st, a.id(), false, w, "real members have different indicators");
  }
  return make_verdict(st, a.id(), ok, w, "real character counts differ by height");
}

// ---------------------------------------------------------------------------
// Conjectures B and C

VerdictRecord verify_conjecture_B(const BlockAnalysis& a) {
  const std::string st = "conjB";
  const Block& b = a.block();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  if (!b.is_real) return skipped(st, a.id(), "block is not real");
  if (b.is_principal) return skipped(st, a.id(), "principal block");
  if (!a.certified()) return skipped(st, a.id(), "nilpotency not certified");
  const auto& t = a.system().table();
  std::vector<std::pair<unsigned, int>> lhs, rhs;
  for (std::size_t i = 0; i < b.members.size(); ++i) lhs.emplace_back(b.heights[i], t.fs_indicator(b.members[i]));
  const auto& dt = a.defect_table();
  for (std::size_t r = 0; r < dt.size(); ++r)
    rhs.emplace_back(valuation(dt.degree(r), 2), gow_indicator(dt.character(r), b.E()));
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  json w;
  w["block"] = lhs;
  w["gow"] = rhs;
  return make_verdict(st, a.id(), lhs == rhs, w, "(height, indicator) multisets differ");
}

VerdictRecord verify_conjecture_C(const BlockAnalysis& a) {
  const std::string st = "conjC";
  const Block& b = a.block();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  if (!b.is_real) return skipped(st, a.id(), "block is not real");
  if (b.is_principal) return skipped(st, a.id(), "principal block");
  if (a.l() != 1) return skipped(st, a.id(), "l(B) = " + std::to_string(a.l()));
  const auto& t = a.system().table();
  std::uint64_t g = 0;
  for (auto row : b.members) g = std::gcd(g, t.degree(row));
  std::int64_t lhs = 0;
  for (auto row : b.members) lhs += t.fs_indicator(row) * static_cast<std::int64_t>(t.degree(row) / g);
  auto rhs = static_cast<std::int64_t>(count_outside(b.E(), b.D(), Permutation(b.E().degree())));
  json w;
  w["eps_phi"] = lhs;
  w["involutions_outside_D"] = rhs;
  w["phi_degree"] = g;
  return make_verdict(st, a.id(), lhs == rhs, w);
}

// ---------------------------------------------------------------------------
// Subsection identities

VerdictRecord verify_lemma_brauer(const BlockAnalysis& a) {
  const std::string st = "lemBrauer";
  const Block& b = a.block();
  const auto& t = a.system().table();
  json entries = json::array();
  bool ok = true;
  std::size_t used = 0;
  for (const auto& s : a.subsections()) {
    if (s.l_b != 1) continue;
    ++used;
    Cyclotomic lhs;
    for (std::size_t i = 0; i < b.members.size(); ++i)
      lhs += s.decomposition[i] * Rational(t.fs_indicator(b.members[i]));
    const auto& lt = s.local->table();
    std::size_t uc = lt.classes().class_of(s.u);
    Cyclotomic rhs;
    for (auto row : (*s.local)[s.b].members) rhs += lt.value(row, uc) * Rational(lt.fs_indicator(row));
    rhs *= Rational(1, static_cast<std::int64_t>(*s.phi_degree));
    bool eq = lhs == rhs;
    ok = ok && eq;
    entries.push_back({{"u", s.u.to_cycle_string()}, {"b", s.b}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
  }
  if (used == 0) return skipped(st, a.id(), "no subsection with l(b) = 1");
  return make_verdict(st, a.id(), ok, json{{"subsections", entries}});
}

VerdictRecord verify_theorem_loc(const BlockAnalysis& a) {
  const std::string st = "thmLoc";
  const Block& b = a.block();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  const auto& sys = a.system();
  const auto& t = sys.table();
  const auto& cc = sys.classes();
  const PermGroup& g = sys.group();
  const PermGroup& d = b.D();
  const PermGroup& e = b.E();
  json entries = json::array();
  bool ok = true;
  std::size_t arranged = 0;
  for (const auto& s : a.subsections()) {
    if (s.l_b != 1) continue;
    Cyclotomic sum;
    for (std::size_t i = 0; i < b.members.size(); ++i)
      sum += s.decomposition[i] * Rational(t.fs_indicator(b.members[i]));
    Rational lhs = to_rational(sum, "sum of eps(chi) d^u");
    const Block& lb = (*s.local)[s.b];
    if (!lb.defect_pair) throw InvariantError("local 2-block without defect pair");
    std::optional<Permutation> arranged_u;
    std::size_t uc = cc.class_of(s.u);
    for (const auto& v : d.elements()) {
      if (cc.class_of(v) != uc) continue;
      auto c = conjugating_element(g, s.u, v);
      if (!c) continue;
      PermGroup db = conjugate(lb.defect_pair->D, *c);
      PermGroup eb = conjugate(lb.defect_pair->E, *c);
      PermGroup cv = centralizer(g, v);
      PermGroup cd = intersection(cv, d);
      PermGroup ce = intersection(cv, e);
      if (conjugating_element(cv, db, eb, cd, ce)) {
        arranged_u = v;
        break;
      }
    }
    json entry{{"u", s.u.to_cycle_string()}, {"b", s.b}, {"lhs", lhs.to_string()}};
    if (!arranged_u) {
      entry["arranged"] = false;
      entries.push_back(entry);
      continue;
    }
    ++arranged;
    std::uint64_t rhs = b.is_principal ? count_square_roots(d, *arranged_u) : count_outside(e, d, *arranged_u);
    bool eq = lhs == Rational(static_cast<std::int64_t>(rhs));
    ok = ok && eq;
    entry["arranged"] = true;
    entry["u_arranged"] = arranged_u->to_cycle_string();
    entry["rhs"] = rhs;
    entries.push_back(entry);
  }
  if (arranged == 0) return skipped(st, a.id(), "no arranged subsection with l(b) = 1");
  return make_verdict(st, a.id(), ok, json{{"subsections", entries}});
}

// ---------------------------------------------------------------------------
// Defect pair properties

std::vector<VerdictRecord> verify_gowmurray(const BlockAnalysis& a) {
  std::vector<VerdictRecord> out;
  const Block& b = a.block();
  const std::string id = a.id();
  if (a.prime() != 2 || !b.is_real) {
    std::string why = a.prime() != 2 ? "p is odd" : "block is not real";
    for (const char* st : {"gowMurray_i", "gowMurray_ii", "gowMurray_iii"}) out.push_back(skipped(st, id, why));
    return out;
  }
  const auto& sys = a.system();
  const auto& t = sys.table();
  const auto& cc = sys.classes();
  const PermGroup& g = sys.group();
  const PermGroup& d = b.D();
  const PermGroup& e = b.E();

  {  // (i)
    const auto& canon = a.canonical();
    bool bd_real = (*canon.dc_blocks)[canon.b_D].is_real;
    bool e_eq = join(d, centralizer(e, d)) == e;
    bool ext_eq = join(canon.inertial, e) == canon.extended_inertial;
    json w{{"b_D_real", bd_real}, {"E_eq_DC_E(D)", e_eq}, {"extended_inertial_eq_inertial_E", ext_eq}};
    out.push_back(make_verdict("gowMurray_i", id, bd_real == e_eq && ext_eq, w));
  }
  {  // (ii)
    std::set<std::size_t> square_classes;
    for (const auto& x : e.elements())
      if (!d.contains(x)) square_classes.insert(cc.class_of(x * x));
    std::set<std::size_t> seen;
    json entries = json::array();
    bool ok = true;
    for (const auto& u : d.elements()) {
      std::size_t k = cc.class_of(u);
      if (!seen.insert(k).second) continue;
      Cyclotomic s;
      for (auto row : b.members) s += t.value(row, k) * Rational(t.fs_indicator(row));
      Rational v = to_rational(s, "sum eps(chi) chi(u)");
      bool strict_expected = square_classes.count(k) > 0;
      bool good = v.sign() >= 0;
      if (!b.is_principal) good = good && ((v.sign() > 0) == strict_expected);
      ok = ok && good;
      entries.push_back({{"u", u.to_cycle_string()}, {"sum", v.to_string()}, {"u_is_square_outside_D", strict_expected}});
    }
    json w{{"classes", entries}};
    if (b.is_principal) w["strictness_clause"] = "skipped for the principal block";
    out.push_back(make_verdict("gowMurray_ii", id, ok, w));
  }
  {  // (iii)
    PermGroup dprime = derived_subgroup(d);
    bool split = e == d;
    for (const auto& x : e.elements())
      if (!split && !d.contains(x) && dprime.contains(x * x)) split = true;
    bool nonneg = true;
    for (std::size_t i = 0; i < b.members.size(); ++i)
      if (b.heights[i] == 0 && t.fs_indicator(b.members[i]) < 0) nonneg = false;
    json w{{"E/D'_splits", split}, {"height0_nonnegative", nonneg}};
    out.push_back(make_verdict("gowMurray_iii", id, split == nonneg, w));
  }
  (void)g;
  return out;
}

VerdictRecord verify_corollary(const BlockAnalysis& a) {
  const std::string st = "corCor";
  const Block& b = a.block();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  const PermGroup& d = b.D();
  const PermGroup& e = b.E();
  if (!is_abelian(d)) return skipped(st, a.id(), "D is not abelian");
  bool split = e == d || count_outside(e, d, Permutation(e.degree())) > 0;
  bool nonneg = true;
  for (std::size_t i = 0; i < b.members.size(); ++i) nonneg = nonneg && a.indicator(i) >= 0;
  return make_verdict(st, a.id(), split == nonneg, json{{"E_splits", split}, {"all_nonnegative", nonneg}});
}

VerdictRecord verify_abelian(const BlockAnalysis& a) {
  const std::string st = "thmAbel";
  const Block& b = a.block();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  if (!b.is_real) return skipped(st, a.id(), "block is not real");
  if (!is_abelian(b.D())) return skipped(st, a.id(), "D is not abelian");
  if (!a.certified()) return skipped(st, a.id(), "nilpotency not certified");
  const auto& t = a.system().table();
  bool split = b.E() == b.D() || count_outside(b.E(), b.D(), Permutation(b.E().degree())) > 0;
  std::size_t real = 0, plus = 0;
  for (auto row : b.members)
    if (t.is_real(row)) {
      ++real;
      if (t.fs_indicator(row) == 1) ++plus;
    }
  bool ok = split ? plus == real : 2 * plus == real;
  return make_verdict(st, a.id(), ok, json{{"E_splits", split}, {"real", real}, {"indicator_plus_one", plus}});
}

// ---------------------------------------------------------------------------
// Odd primes and HHS

VerdictRecord verify_podd(const BlockAnalysis& a) {
  const std::string st = "podd";
  const Block& b = a.block();
  if (a.prime() == 2) return skipped(st, a.id(), "p = 2");
  if (!b.is_real) return skipped(st, a.id(), "block is not real");
  if (!is_cyclic(b.D())) return skipped(st, a.id(), "D is not cyclic");
  if (b.D().is_trivial()) return skipped(st, a.id(), "defect zero");
  if (!a.certified()) return skipped(st, a.id(), "nilpotency not certified");
  const auto& t = a.system().table();
  const auto& canon = a.canonical();
  const auto& ht = canon.dc_blocks->table();
  std::size_t theta = canon.theta;
  json w;
  if (ht.conjugate_row(theta) != theta) {
    auto tcl = TableCache::global().classes(canon.extended_stabilizer);
    ClassFunction induced = induce(ht.character(theta), tcl);
    auto eps_t = to_int(indicator_of(induced), "indicator of theta^T");
    std::vector<int> eps;
    bool all_real = true;
    for (auto row : b.members) {
      all_real = all_real && t.is_real(row);
      eps.push_back(t.fs_indicator(row));
    }
    bool ok = all_real && std::all_of(eps.begin(), eps.end(), [&](int x) { return x == eps_t; });
    w = json{{"branch", "theta_nonreal"}, {"eps_theta_T", eps_t}, {"member_indicators", sorted_multiset(eps)},
             {"T_order", canon.extended_stabilizer.size()}};
    return make_verdict(st, a.id(), ok, w, "members do not all carry eps(theta^T)");
  }
  std::vector<std::size_t> real;
  for (auto row : b.members)
    if (t.is_real(row)) real.push_back(row);
  w["branch"] = "theta_real";
  w["real_members"] = real.size();
  if (real.size() != 1) return make_verdict(st, a.id(), false, w, "more than one real member");
  Permutation u = generator_of_cyclic(b.D());
  Rational v = to_rational(t.value(real[0], t.classes().class_of(u)), "chi_0(u)");
  if (v.is_zero()) throw InvariantError("chi_0(u) vanishes");
  int expected = v.sign() * ht.fs_indicator(theta);
  w["chi0_u"] = v.to_string();
  w["eps_theta"] = ht.fs_indicator(theta);
  w["eps_chi0"] = t.fs_indicator(real[0]);
  return make_verdict(st, a.id(), expected == t.fs_indicator(real[0]), w);
}

VerdictRecord verify_hhs(const BlockAnalysis& a) {
  const std::string st = "hhs";
  const Block& b = a.block();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  if (!a.certified()) return skipped(st, a.id(), "nilpotency not certified");
  const auto& t = a.system().table();
  const PermGroup& d = b.D();
  const PermGroup& g = a.system().group();
  PermGroup ext = b.is_real ? a.canonical().extended_inertial : PermGroup::trivial(g.degree());
  PermGroup nd = normalizer(g, d);
  auto series = derived_series(d);
  if (!series.back().is_trivial()) throw InvariantError("defect group is not solvable");
  const auto& de = d.elements();
  json entries = json::array();
  bool ok = true;
  for (std::size_t h = 0; h + 1 < series.size() || (h == 0 && series.size() == 1); ++h) {
    const PermGroup& m = series.size() == 1 ? series[0] : series[h + 1];
    // cosets of M in D, keyed by their smallest element index
    std::vector<std::size_t> key(de.size());
    for (std::size_t i = 0; i < de.size(); ++i) {
      std::size_t best = i;
      for (const auto& y : m.elements()) best = std::min(best, d.index_of(de[i] * y));
      key[i] = best;
    }
    auto coset = [&](const Permutation& x) { return key[d.index_of(x)]; };
    // D-classes of D/M
    std::map<std::size_t, std::size_t> cls;  // coset key -> class id
    std::size_t ncls = 0;
    for (std::size_t i = 0; i < de.size(); ++i) {
      if (cls.count(key[i])) continue;
      for (const auto& y : de) cls.emplace(coset(conjugate(de[i], y)), ncls);
      ++ncls;
    }
    std::size_t classes_real = 0;
    {
      std::set<std::size_t> done;
      for (std::size_t i = 0; i < de.size(); ++i) {
        std::size_t c = cls[key[i]];
        if (!done.insert(c).second) continue;
        std::size_t target = cls[coset(de[i].inverse())];
        for (const auto& x : ext.is_trivial() ? std::vector<Permutation>{Permutation(g.degree())} : ext.elements())
          if (cls[coset(conjugate(de[i], x))] == target) {
            ++classes_real;
            break;
          }
      }
    }
    std::size_t elements_real = 0;
    {
      std::set<std::size_t> done;
      for (std::size_t i = 0; i < de.size(); ++i) {
        if (!done.insert(key[i]).second) continue;
        std::size_t target = coset(de[i].inverse());
        for (const auto& x : nd.elements())
          if (coset(conjugate(de[i], x)) == target) {
            ++elements_real;
            break;
          }
      }
    }
    std::size_t real_le_h = 0;
    if (b.is_real)
      for (std::size_t i = 0; i < b.members.size(); ++i)
        if (b.heights[i] <= h && t.is_real(b.members[i])) ++real_le_h;
    bool good = real_le_h <= classes_real && real_le_h <= elements_real;
    ok = ok && good;
    entries.push_back({{"h", h}, {"real_members", real_le_h}, {"real_classes_bound", classes_real},
                       {"real_elements_bound", elements_real}});
    if (series.size() == 1) break;
  }
  return make_verdict(st, a.id(), ok, json{{"heights", entries}});
}

// ---------------------------------------------------------------------------
// Solvable identity

VerdictRecord verify_solvable_identity(const BlockAnalysis& a) {
  const std::string st = "solvIdentity";
  const Block& b = a.block();
  const auto& sys = a.system();
  const PermGroup& g = sys.group();
  if (a.prime() != 2) return skipped(st, a.id(), "p is odd");
  if (!b.is_real) return skipped(st, a.id(), "block is not real");
  if (b.is_principal) return skipped(st, a.id(), "principal block");
  if (!is_solvable(g)) return skipped(st, a.id(), "group is not solvable");
  if (a.l() != 1) return skipped(st, a.id(), "l(B) = " + std::to_string(a.l()));
  PermGroup n = core_p_prime(g, 2);
  auto ncl = TableCache::global().classes(n);
  auto nt = TableCache::global().get(n);
  ClassFunction res = restrict(sys.table().character(b.members.front()), ncl);
  auto mult = nt->decompose(res);
  std::optional<std::size_t> theta;
  for (std::size_t r = 0; r < mult.size() && !theta; ++r)
    if (!mult[r].is_zero()) theta = r;
  if (!theta) throw InvariantError("restriction to O_2'(G) has no constituent");
  PermGroup g_theta = subgroup_where(g, [&](const Permutation& x) {
    auto act = class_action(*ncl, x);
    for (std::size_t l = 0; l < ncl->size(); ++l)
      if (nt->value(*theta, act[l]) != nt->value(*theta, l)) return false;
    return true;
  });
  json w;
  w["N_order"] = n.size();
  w["G_theta_order"] = g_theta.size();
  if (g_theta == g) return skipped(st, a.id(), "G_theta = G");
  std::uint64_t outside = 0;
  for (const auto& x : g.elements())
    if (!g_theta.contains(x) && n.contains(x * x)) ++outside;
  std::uint64_t nsize = static_cast<std::uint64_t>(n.size());
  if (outside % nsize != 0) throw InvariantError("coset count is not an integer");
  std::uint64_t lhs = outside / nsize;
  std::uint64_t en = b.E().size() * n.size();
  if (g.size() % en != 0) throw InvariantError("|EN| does not divide |G|");
  auto index = static_cast<std::uint64_t>(g.size() / en);
  auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(index))));
  while (root * root > index) --root;
  while ((root + 1) * (root + 1) <= index) ++root;
  std::uint64_t inv = count_outside(b.E(), b.D(), Permutation(b.E().degree()));
  w["lhs"] = lhs;
  w["involutions_outside_D"] = inv;
  w["index_G_EN"] = index;
  // The right side is irrational here, so the identity cannot hold.
  if (root * root != index) return make_verdict(st, a.id(), false, w, "|G:EN| is not a perfect square");
  std::uint64_t rhs = inv * root;
  w["rhs"] = rhs;
  return make_verdict(st, a.id(), lhs == rhs, w);
}

// ---------------------------------------------------------------------------
// Broue-Puig star

namespace {

struct Piece {
  std::vector<Cyclotomic> values;  // per G-class
};

// chi^{(u,b)} for chi = row: d^u_{chi,phi} phi(s) on the p-section of u.
Piece section_piece(const BlockSystem& sys, const Subsection& s, const Cyclotomic& d_u) {
  const auto& cc = sys.classes();
  const PermGroup& g = sys.group();
  const auto& lc = s.local->table().classes();
  std::size_t uc = cc.class_of(s.u);
  Piece out;
  out.values.assign(cc.size(), Cyclotomic());
  for (std::size_t k = 0; k < cc.size(); ++k) {
    const Permutation& x = cc[k].representative;
    Permutation xp = p_part_of(x, sys.prime());
    if (cc.class_of(xp) != uc) continue;
    auto c = conjugating_element(g, xp, s.u);
    if (!c) throw InvariantError("p-part is not conjugate to u");
    Permutation sreg = conjugate(p_regular_part_of(x, sys.prime()), *c);
    out.values[k] = d_u * (*s.phi_values)[lc.class_of(sreg)];
  }
  return out;
}

std::optional<std::size_t> select_chi0(const BlockAnalysis& a) {
  const auto& t = a.system().table();
  const Block& b = a.block();
  const auto& cc = t.classes();
  std::optional<std::size_t> any;
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    if (b.heights[i] != 0) continue;
    std::size_t row = b.members[i];
    bool rational = true;
    for (std::size_t k = 0; k < cc.size() && rational; ++k)
      if (cc.is_p_element(k, a.prime())) rational = t.value(row, k).is_rational();
    if (!rational) continue;
    if (t.is_real(row)) return i;
    if (!any) any = i;
  }
  return any;
}

}  // namespace

std::optional<StarFamily> star_family(const BlockAnalysis& a, json* witness) {
  const auto& sys = a.system();
  const auto& t = sys.table();
  const auto& cc = sys.classes();
  const Block& b = a.block();
  const auto& subs = a.subsections();
  auto chi0_pos = select_chi0(a);
  if (!chi0_pos) throw InvariantError("no p-rational height zero member");
  std::size_t chi0 = b.members[*chi0_pos];

  const auto& dt = a.defect_table();
  const auto& dc = dt.classes();
  // group D-classes and subsections by the G-class of u
  std::map<std::size_t, std::vector<std::size_t>> dclasses_by_g, subs_by_g;
  for (std::size_t c = 0; c < dc.size(); ++c) dclasses_by_g[cc.class_of(dc[c].representative)].push_back(c);
  for (std::size_t i = 0; i < subs.size(); ++i) subs_by_g[cc.class_of(subs[i].u)].push_back(i);
  if (witness) {
    (*witness)["chi0"] = chi0;
    (*witness)["subsections"] = subs.size();
    (*witness)["d_classes"] = dc.size();
  }
  for (const auto& [k, v] : dclasses_by_g)
    if (subs_by_g[k].size() != v.size()) {
      if (witness) (*witness)["mismatch_class"] = k;
      return std::nullopt;
    }

  std::vector<Piece> pieces;
  for (const auto& s : subs) pieces.push_back(section_piece(sys, s, s.decomposition[*chi0_pos]));
  // Q^t conj(Q) entries independent of the matching
  std::vector<std::vector<Cyclotomic>> gram(subs.size(), std::vector<Cyclotomic>(subs.size()));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      for (std::size_t r = 0; r < b.members.size(); ++r)
        gram[i][j] += subs[i].decomposition[r] * subs[j].decomposition[r].conj();

  std::vector<std::size_t> keys;
  for (const auto& [k, v] : dclasses_by_g) keys.push_back(k);
  std::vector<std::size_t> assign(dc.size());  // D-class -> subsection
  std::vector<std::vector<std::size_t>> perms(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) perms[i] = subs_by_g[keys[i]];

  auto try_assignment = [&]() -> std::optional<StarFamily> {
    for (std::size_t c = 0; c < dc.size(); ++c) {
      const auto& x = dc[c].representative;
      std::uint64_t cd = static_cast<std::uint64_t>(a.block().D().size()) / dc[c].size;
      (void)x;
      for (std::size_t c2 = 0; c2 < dc.size(); ++c2) {
        Cyclotomic expected = c == c2 ? Cyclotomic(static_cast<std::int64_t>(cd)) : Cyclotomic();
        if (gram[assign[c]][assign[c2]] != expected) return std::nullopt;
      }
    }
    StarFamily fam;
    fam.chi0 = chi0;
    for (std::size_t r = 0; r < dt.size(); ++r) {
      std::vector<Cyclotomic> vals(cc.size());
      for (std::size_t c = 0; c < dc.size(); ++c) {
        const Cyclotomic& lam = dt.value(r, c);
        const auto& pv = pieces[assign[c]].values;
        for (std::size_t k = 0; k < cc.size(); ++k)
          if (!pv[k].is_zero()) vals[k] += lam * pv[k];
      }
      auto row = t.find_row(vals);
      if (!row || sys.block_of(*row) != b.index) return std::nullopt;
      if (t.degree(*row) != dt.degree(r) * t.degree(chi0)) return std::nullopt;
      fam.images.push_back(*row);
      fam.characters.emplace_back(t.classes_ptr(), std::move(vals));
    }
    return fam;
  };

  std::function<std::optional<StarFamily>(std::size_t)> rec = [&](std::size_t i) -> std::optional<StarFamily> {
    if (i == keys.size()) return try_assignment();
    auto& sv = perms[i];
    std::sort(sv.begin(), sv.end());
    const auto& cls = dclasses_by_g[keys[i]];
    do {
      for (std::size_t j = 0; j < cls.size(); ++j) assign[cls[j]] = sv[j];
      if (auto r = rec(i + 1)) return r;
    } while (std::next_permutation(sv.begin(), sv.end()));
    return std::nullopt;
  };
  return rec(0);
}

ClassFunction star_character(const BlockAnalysis& a, std::size_t lambda) {
  auto fam = star_family(a);
  if (!fam) throw InvariantError("no matching of subsections lands in Irr(B)");
  if (lambda >= fam->characters.size()) throw InputError("lambda out of range");
  return fam->characters[lambda];
}

VerdictRecord verify_star(const BlockAnalysis& a) {
  const std::string st = "starCheck";
  if (!a.certified()) return skipped(st, a.id(), "nilpotency not certified");
  for (const auto& s : a.subsections())
    if (s.l_b != 1) return skipped(st, a.id(), "a subsection has l(b) > 1");
  json w;
  auto fam = star_family(a, &w);
  if (!fam) return make_verdict(st, a.id(), false, w, "no subsection matching passes orthogonality and lands in Irr(B)");
  std::set<std::size_t> distinct(fam->images.begin(), fam->images.end());
  w["images"] = fam->images;
  bool ok = distinct.size() == a.block().members.size() && fam->images.size() == a.block().members.size();
  return make_verdict(st, a.id(), ok, w, "lambda * chi_0 is not a bijection onto Irr(B)");
}

// ---------------------------------------------------------------------------
// Table-level properties

VerdictRecord verify_orthogonality(const CharacterTable& t) {
  const std::string st = "orthogonality";
  const auto& cc = t.classes();
  std::size_t bad_rows = 0, bad_cols = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j) {
      Cyclotomic ip = inner_product(t.character(i), t.character(j));
      if (ip != Cyclotomic(i == j ? 1 : 0)) ++bad_rows;
    }
  for (std::size_t k = 0; k < cc.size(); ++k)
    for (std::size_t l = k; l < cc.size(); ++l) {
      Cyclotomic s;
      for (std::size_t i = 0; i < t.size(); ++i) s += t.value(i, k) * t.value(i, l).conj();
      std::int64_t expected = k == l ? static_cast<std::int64_t>(cc.centralizer_order(k)) : 0;
      if (s != Cyclotomic(expected)) ++bad_cols;
    }
  return make_verdict(st, "table", bad_rows == 0 && bad_cols == 0,
                      json{{"row_failures", bad_rows}, {"column_failures", bad_cols}, {"characters", t.size()}});
}

VerdictRecord verify_square_root_identity(const CharacterTable& t) {
  const std::string st = "sqrtIdentity";
  const auto& cc = t.classes();
  const PermGroup& g = t.group();
  std::vector<std::uint64_t> roots(cc.size(), 0);
  for (const auto& x : g.elements()) ++roots[cc.class_of(x * x)];
  json bad = json::array();
  for (std::size_t k = 0; k < cc.size(); ++k) {
    Cyclotomic s;
    for (std::size_t i = 0; i < t.size(); ++i) s += t.value(i, k) * Rational(t.fs_indicator(i));
    auto per_element = roots[k] / cc[k].size;
    if (roots[k] % cc[k].size != 0 || s != Cyclotomic(static_cast<std::int64_t>(per_element)))
      bad.push_back({{"class", k}, {"sum", s.to_string()}, {"roots", per_element}});
  }
  return make_verdict(st, "table", bad.empty(), json{{"mismatches", bad}, {"classes", cc.size()}});
}

VerdictRecord verify_partition_stable(const BlockSystem& sys) {
  bool ok = sys.partition_stable_under_generator_change();
  return make_verdict("partitionStable", "p" + std::to_string(sys.prime()), ok,
                      json{{"blocks", sys.size()}, {"generator_choice", sys.reducer().generator_choice()}});
}

VerdictRecord verify_pair_uniqueness(const BlockAnalysis& a) {
  const std::string st = "pairUnique";
  const Block& b = a.block();
  if (a.prime() != 2 || !b.is_real) return skipped(st, a.id(), "not a real 2-block");
  if (b.real_defect_classes.size() < 2) return skipped(st, a.id(), "single real defect class");
  return make_verdict(st, a.id(), b.pairs_conjugate, json{{"real_defect_classes", b.real_defect_classes}});
}

}  // namespace realblocks
