#include "realblocks/blocks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"

namespace realblocks {

std::string to_string(NilpotencyCertificate c) {
  switch (c) {
    case NilpotencyCertificate::p_nilpotent_group:
      return "p_nilpotent_group";
    case NilpotencyCertificate::cyclic_trivial_inertial:
      return "cyclic_trivial_inertial";
    case NilpotencyCertificate::abelian_trivial_inertial:
      return "abelian_trivial_inertial";
    case NilpotencyCertificate::uncertified:
      return "uncertified";
  }
  return "uncertified";
}

namespace {

std::vector<std::uint32_t> central_fingerprint(const CharacterTable& t, std::size_t row, const Reducer& r) {
  std::vector<std::uint32_t> out;
  out.reserve(t.classes().size());
  for (std::size_t k = 0; k < t.classes().size(); ++k) {
    try {
      out.push_back(r.reduce_value(t.central_character(row, k)));
    } catch (const IntegralityError& e) {
      throw InvariantError(std::string("central character reduction failed: ") + e.what());
    }
  }
  return out;
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Rank of a rational matrix by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rows = m.size(), rank = 0;
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<std::size_t>> block_partition(const CharacterTable& t, const Reducer& r) {
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> groups;
  std::vector<std::vector<std::uint32_t>> order;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto fp = central_fingerprint(t, i, r);
    auto [it, inserted] = groups.try_emplace(fp);
    if (inserted) order.push_back(fp);
    it->second.push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& fp : order) out.push_back(groups[fp]);
  return out;
}

std::size_t restriction_rank(const CharacterTable& t, const std::vector<std::size_t>& rows, std::uint32_t p) {
  // rank over C of the restriction matrix equals the rank of its Gram
  // matrix for the positive weights |K|; that Gram matrix is rational.
  const auto& cc = t.classes();
  std::vector<std::vector<Rational>> gram(rows.size(), std::vector<Rational>(rows.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a; b < rows.size(); ++b) {
      Cyclotomic acc;
      for (std::size_t k = 0; k < cc.size(); ++k) {
        if (!cc.is_p_regular(k, p)) continue;
        Cyclotomic term = t.value(rows[a], k) * t.value(rows[b], k).conj();
        term *= Rational(static_cast<std::int64_t>(cc[k].size));
        acc += term;
      }
      auto q = acc.as_rational();
      if (!q) throw InvariantError("Gram matrix of p-regular restrictions is not rational");
      gram[a][b] = *q;
      gram[b][a] = *q;
    }
  return rational_rank(std::move(gram));
}

BlockSystem::BlockSystem(std::shared_ptr<const CharacterTable> table, std::uint32_t p, unsigned conductor,
                         unsigned generator_choice)
    : table_(std::move(table)),
      p_(p),
      reducer_(conductor ? conductor : table_->conductor(), p, generator_choice) {
  if (!is_prime(p)) throw InputError("block prime must be prime");
  const auto& t = *table_;
  const auto& cc = t.classes();
  const PermGroup& g = t.group();
  if (reducer_.conductor() % t.conductor() != 0)
    throw InputError("reduction conductor must be a multiple of the group exponent");
  std::uint64_t order = g.size();
  a_ = p_valuation(order, p);

  auto parts = block_partition(t, reducer_);
  block_of_row_.assign(t.size(), 0);
  blocks_.resize(parts.size());
  const FiniteField& f = reducer_.field();
  std::vector<std::uint32_t> idem_sum(cc.size(), 0);
  for (std::size_t bi = 0; bi < parts.size(); ++bi) {
    Block& b = blocks_[bi];
    b.index = bi;
    b.members = parts[bi];
    for (auto row : b.members) block_of_row_[row] = bi;
    b.central_character = central_fingerprint(t, b.members.front(), reducer_);
    b.is_principal = std::find(b.members.begin(), b.members.end(), 0) != b.members.end();
    // idempotent coefficients
    b.idempotent.resize(cc.size());
    for (std::size_t k = 0; k < cc.size(); ++k) {
      Cyclotomic acc;
      for (auto row : b.members) acc += Cyclotomic(static_cast<std::int64_t>(t.degree(row))) * t.value(row, k).conj();
      acc *= Rational(1, static_cast<std::int64_t>(order));
      std::uint32_t v;
      try {
        v = reducer_.reduce_value(acc);
      } catch (const IntegralityError&) {
        throw InvariantError("block idempotent coefficient is not p-integral");
      }
      if (v != 0 && !cc.is_p_regular(k, p)) throw InvariantError("block idempotent supported on a p-singular class");
      b.idempotent[k] = v;
      idem_sum[k] = f.add(idem_sum[k], v);
    }
  }
  for (std::size_t k = 0; k < cc.size(); ++k)
    if (idem_sum[k] != (k == 0 ? 1u : 0u)) throw InvariantError("block idempotents do not sum to 1");

  // conjugate blocks
  for (auto& b : blocks_) {
    b.conjugate_block = block_of_row_[t.conjugate_row(b.members.front())];
    for (auto row : b.members)
      if (block_of_row_[t.conjugate_row(row)] != b.conjugate_block)
        throw InvariantError("complex conjugation does not permute blocks");
    b.is_real = b.conjugate_block == b.index;
  }

  for (auto& b : blocks_) {
    std::optional<std::size_t> dc;
    for (std::size_t k = 0; k < cc.size() && !dc; ++k)
      if (b.idempotent[k] != 0 && b.central_character[k] != 0) dc = k;
    if (!dc) throw InvariantError("block has no defect class");
    if (!cc.is_p_regular(*dc, p)) throw InvariantError("defect class is not p-regular");
    b.defect_class = *dc;
    b.defect_group = sylow_subgroup(centralizer(g, cc[*dc].representative), p);
    b.defect = log_p(b.defect_group.size(), p);
    unsigned base = a_ - b.defect;
    bool height_zero = false;
    for (auto row : b.members) {
      unsigned v = p_valuation(t.degree(row), p);
      if (v < base) throw InvariantError("negative height");
      b.heights.push_back(v - base);
      height_zero = height_zero || v == base;
    }
    if (!height_zero) throw InvariantError("block has no character of height zero");

    if (p != 2) continue;
    if (!b.is_real) {
      b.defect_pair = DefectPair{b.defect_group, b.defect_group};
      continue;
    }
    for (std::size_t k = 0; k < cc.size(); ++k)
      if (cc[k].is_real && b.idempotent[k] != 0 && b.central_character[k] != 0) b.real_defect_classes.push_back(k);
    if (b.real_defect_classes.empty()) throw InvariantError("real 2-block without a real defect class");
    for (std::size_t idx = 0; idx < b.real_defect_classes.size(); ++idx) {
      const Permutation& x = cc[b.real_defect_classes[idx]].representative;
      PermGroup cx = centralizer(g, x);
      PermGroup e = sylow_subgroup(extended_centralizer(g, x), 2);
      PermGroup d = intersection(e, cx);
      if (!b.is_principal && e.size() != 2 * d.size())
        throw InvariantError("extended defect group does not have index 2 over D");
      if (idx == 0) {
        b.defect_pair = DefectPair{d, e};
        if (!conjugating_element(g, d, b.defect_group))
          throw InvariantError("defect pair group is not conjugate to the defect group");
      } else if (!conjugating_element(g, b.defect_pair->D, b.defect_pair->E, d, e)) {
        b.pairs_conjugate = false;
      }
    }
  }
}

std::shared_ptr<const BlockSystem> BlockSystem::get(const PermGroup& g, std::uint32_t p, unsigned conductor,
                                                    unsigned generator_choice) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::uint32_t, unsigned, unsigned>, std::shared_ptr<const BlockSystem>> cache;
  auto table = TableCache::global().get(g);
  unsigned cond = Cyclotomic::zeta(conductor ? conductor : table->conductor()).conductor();
  auto key = std::make_tuple(group_hash(g), p, cond, generator_choice);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->table_ptr() == table) return it->second;
  }
  auto sys = std::make_shared<const BlockSystem>(table, p, cond, generator_choice);
  std::lock_guard lock(mu);
  cache[key] = sys;
  return sys;
}

std::vector<std::uint32_t> BlockSystem::induced_central_character(const BlockSystem& sub, std::size_t b) const {
  if (sub.reducer().conductor() != reducer_.conductor() || sub.reducer().generator_choice() != reducer_.generator_choice() ||
      sub.prime() != p_)
    throw InputError("subgroup blocks use a different reduction");
  auto fusion = class_fusion(sub.classes(), classes());
  const FiniteField& f = reducer_.field();
  std::vector<std::uint32_t> out(classes().size(), 0);
  for (std::size_t l = 0; l < fusion.size(); ++l) out[fusion[l]] = f.add(out[fusion[l]], sub[b].central_character[l]);
  return out;
}

std::vector<std::size_t> BlockSystem::correspondents(std::size_t block, const BlockSystem& sub) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < sub.size(); ++b)
    if (induced_central_character(sub, b) == blocks_[block].central_character) out.push_back(b);
  return out;
}

bool BlockSystem::partition_stable_under_generator_change() const {
  Reducer other(reducer_.conductor(), p_, 1 - reducer_.generator_choice());
  auto a = block_partition(*table_, reducer_);
  auto b = block_partition(*table_, other);
  std::set<std::vector<std::size_t>> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return sa == sb;
}

// ---------------------------------------------------------------------------
// Subsections

std::vector<Subsection> subsections(const BlockSystem& sys, std::size_t block) {
  const Block& B = sys[block];
  const auto& cc = sys.classes();
  const PermGroup& g = sys.group();
  const PermGroup& d = B.D();
  // one representative per G-class meeting D: the smallest element of D in it
  std::map<std::size_t, Permutation> reps;
  for (const auto& x : d.elements()) {
    std::size_t k = cc.class_of(x);
    if (!reps.count(k)) reps.emplace(k, x);
  }
  std::vector<Subsection> out;
  for (const auto& [k, u] : reps) {
    (void)k;
    PermGroup c = centralizer(g, u);
    auto local = BlockSystem::get(c, sys.prime(), sys.reducer().conductor(), sys.reducer().generator_choice());
    for (std::size_t b : sys.correspondents(block, *local)) {
      Subsection s;
      s.u = u;
      s.local = local;
      s.b = b;
      const auto& lt = local->table();
      s.l_b = restriction_rank(lt, (*local)[b].members, sys.prime());
      if (s.l_b == 1) {
        std::uint64_t gd = 0;
        for (auto row : (*local)[b].members) gd = std::gcd(gd, lt.degree(row));
        s.phi_degree = gd;
        const auto& lc = lt.classes();
        auto row0 = (*local)[b].members.front();
        std::vector<Cyclotomic> phi(lc.size());
        for (std::size_t l = 0; l < lc.size(); ++l)
          if (lc.is_p_regular(l, sys.prime()))
            phi[l] = lt.value(row0, l) * Cyclotomic(Rational(static_cast<std::int64_t>(gd),
                                                             static_cast<std::int64_t>(lt.degree(row0))));
        for (auto row : (*local)[b].members)
          for (std::size_t l = 0; l < lc.size(); ++l)
            if (lc.is_p_regular(l, sys.prime()) &&
                lt.value(row, l) != phi[l] * Cyclotomic(Rational(static_cast<std::int64_t>(lt.degree(row) / gd))))
              throw InvariantError("restrictions in a block with l(b) = 1 are not proportional");
        s.phi_values = ClassFunction(lt.classes_ptr(), std::move(phi));
        auto all = generalized_decomposition(sys, s);
        for (auto row : B.members) s.decomposition.push_back(all[row]);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Cyclotomic> generalized_decomposition(const BlockSystem& sys, const Subsection& s) {
  if (s.l_b != 1 || !s.phi_degree) throw InputError("generalized decomposition needs l(b) = 1");
  const auto& t = sys.table();
  const auto& lt = s.local->table();
  const auto& lc = lt.classes();
  std::uint64_t phi1 = *s.phi_degree;
  // Phi_b = sum_{psi in b} (psi(1)/phi(1)) psi on p-regular classes of C.
  std::vector<Cyclotomic> big_phi(lc.size());
  for (auto row : (*s.local)[s.b].members)
    for (std::size_t l = 0; l < lc.size(); ++l)
      if (lc.is_p_regular(l, sys.prime()))
        big_phi[l] += lt.value(row, l) * Cyclotomic(static_cast<std::int64_t>(lt.degree(row) / phi1));
  std::vector<std::size_t> section_class(lc.size());
  for (std::size_t l = 0; l < lc.size(); ++l)
    if (lc.is_p_regular(l, sys.prime())) section_class[l] = t.classes().class_of(s.u * lc[l].representative);
  std::vector<Cyclotomic> out;
  out.reserve(t.size());
  for (std::size_t row = 0; row < t.size(); ++row) {
    Cyclotomic acc;
    for (std::size_t l = 0; l < lc.size(); ++l) {
      if (!lc.is_p_regular(l, sys.prime()) || big_phi[l].is_zero()) continue;
      Cyclotomic term = t.value(row, section_class[l]) * big_phi[l].conj();
      term *= Rational(static_cast<std::int64_t>(lc[l].size));
      acc += term;
    }
    acc *= Rational(1, static_cast<std::int64_t>(lc.group().size()));
    if (!acc.is_integer_combination()) throw InvariantError("generalized decomposition number is not integral");
    out.push_back(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical characters and certificates

std::vector<std::size_t> class_action(const ConjugacyClasses& h, const Permutation& g) {
  std::vector<std::size_t> out(h.size());
  for (std::size_t l = 0; l < h.size(); ++l) out[l] = h.class_of(conjugate(h[l].representative, g));
  return out;
}

CanonicalCharacterData canonical_character_data(const BlockSystem& sys, std::size_t block) {
  const Block& B = sys[block];
  const PermGroup& g = sys.group();
  const PermGroup& d = B.D();
  CanonicalCharacterData out;
  out.dc = join(d, centralizer(g, d));
  out.dc_blocks = BlockSystem::get(out.dc, sys.prime(), sys.reducer().conductor(), sys.reducer().generator_choice());
  auto corr = sys.correspondents(block, *out.dc_blocks);
  if (corr.empty()) throw InvariantError("no Brauer correspondent in D C_G(D)");
  out.b_D = corr.front();
  const auto& bd = (*out.dc_blocks)[out.b_D];
  const auto& ht = out.dc_blocks->table();
  const auto& hc = ht.classes();
  std::vector<std::size_t> d_classes;
  for (const auto& x : d.elements()) d_classes.push_back(hc.class_of(x));
  std::optional<std::size_t> theta;
  for (auto row : bd.members) {
    bool kernel = std::all_of(d_classes.begin(), d_classes.end(),
                              [&](std::size_t l) { return ht.value(row, l) == ht.value(row, 0); });
    if (!kernel) continue;
    if (theta) throw InvariantError("Brauer correspondent has two canonical characters");
    theta = row;
  }
  if (!theta) throw InvariantError("no canonical character found");
  out.theta = *theta;
  std::size_t theta_bar = ht.conjugate_row(*theta);
  std::size_t bd_bar = bd.conjugate_block;

  out.normalizer = normalizer(g, d);
  const auto& dcb = *out.dc_blocks;
  auto fixes_row = [&](const Permutation& x, std::size_t row) {
    auto act = class_action(hc, x);
    for (std::size_t l = 0; l < hc.size(); ++l)
      if (ht.value(row, act[l]) != ht.value(*theta, l)) return false;
    return true;
  };
  auto moves_block_to = [&](const Permutation& x, std::size_t target) {
    auto act = class_action(hc, x);
    for (std::size_t l = 0; l < hc.size(); ++l)
      if (dcb[target].central_character[act[l]] != bd.central_character[l]) return false;
    return true;
  };
  out.stabilizer = subgroup_where(out.normalizer, [&](const Permutation& x) { return fixes_row(x, *theta); });
  out.extended_stabilizer = subgroup_where(out.normalizer, [&](const Permutation& x) {
    return fixes_row(x, *theta) || fixes_row(x, theta_bar);
  });
  out.inertial = subgroup_where(out.normalizer, [&](const Permutation& x) { return moves_block_to(x, out.b_D); });
  out.extended_inertial = subgroup_where(out.normalizer, [&](const Permutation& x) {
    return moves_block_to(x, out.b_D) || moves_block_to(x, bd_bar);
  });
  if (!out.stabilizer.is_subgroup_of(out.extended_stabilizer) ||
      out.extended_stabilizer.size() > 2 * out.stabilizer.size())
    throw InvariantError("extended stabilizer has index greater than 2");
  return out;
}

NilpotencyCertificate certify_nilpotent(const BlockSystem& sys, std::size_t block, const CanonicalCharacterData& data) {
  if (is_p_nilpotent(sys.group(), sys.prime())) return NilpotencyCertificate::p_nilpotent_group;
  const PermGroup& d = sys[block].D();
  bool trivial_inertial = data.inertial == data.dc;
  if (trivial_inertial && is_cyclic(d)) return NilpotencyCertificate::cyclic_trivial_inertial;
  if (trivial_inertial && is_abelian(d)) return NilpotencyCertificate::abelian_trivial_inertial;
  return NilpotencyCertificate::uncertified;
}

NilpotencyCertificate certify_nilpotent(const BlockSystem& sys, std::size_t block) {
  if (is_p_nilpotent(sys.group(), sys.prime())) return NilpotencyCertificate::p_nilpotent_group;
  return certify_nilpotent(sys, block, canonical_character_data(sys, block));
}

}  // namespace realblocks
