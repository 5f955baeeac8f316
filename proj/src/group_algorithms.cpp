#include "realblocks/group_algorithms.hpp"

#include <numeric>

#include "realblocks/errors.hpp"

namespace realblocks {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0 && n > 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return n > 0 && p_part(n, p) == n; }

unsigned log_p(std::uint64_t n, std::uint64_t p) {
  if (!is_power_of(n, p)) throw InputError(std::to_string(n) + " is not a power of " + std::to_string(p));
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

namespace {

// Exponent s with x^s the p-part of x, where x has order m.
std::uint64_t p_part_exponent(std::uint64_t m, std::uint64_t p) {
  std::uint64_t pa = p_part(m, p);
  std::uint64_t mp = m / pa;
  if (pa == 1) return 0;
  // s = mp * (mp^{-1} mod pa)
  std::uint64_t inv = 1;
  for (; inv < pa; ++inv)
    if ((mp * inv) % pa == 1) break;
  return (mp * inv) % m;
}

}  // namespace

Permutation p_part_of(const Permutation& x, std::uint64_t p) {
  return x.pow(static_cast<long long>(p_part_exponent(x.order(), p)));
}

Permutation p_regular_part_of(const Permutation& x, std::uint64_t p) {
  std::uint64_t m = x.order();
  std::uint64_t s = p_part_exponent(m, p);
  return x.pow(static_cast<long long>((m + 1 - s) % m));
}

PermGroup subgroup_where(const PermGroup& g, const std::function<bool(const Permutation&)>& pred) {
  PermGroup h = PermGroup::trivial(g.degree());
  for (const auto& x : g.elements())
    if (!h.contains(x) && pred(x)) h = h.with_generator(x);
  return h;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw InputError("element is not in the group");
  return subgroup_where(g, [&](const Permutation& h) { return x * h == h * x; });
}

PermGroup extended_centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw InputError("element is not in the group");
  Permutation xi = x.inverse();
  return subgroup_where(g, [&](const Permutation& h) {
    Permutation c = conjugate(x, h);
    return c == x || c == xi;
  });
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  return subgroup_where(g, [&](const Permutation& y) {
    for (const auto& s : h.generators())
      if (s * y != y * s) return false;
    return true;
  });
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  return subgroup_where(g, [&](const Permutation& y) {
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, y))) return false;
    return true;
  });
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.size() <= b.size() ? a : b;
  const PermGroup& other = a.size() <= b.size() ? b : a;
  return subgroup_where(small, [&](const Permutation& y) { return other.contains(y); });
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  PermGroup r = a;
  for (const auto& s : b.generators()) r = r.with_generator(s);
  return r;
}

PermGroup conjugate(const PermGroup& h, const Permutation& g) {
  std::vector<Permutation> gens;
  for (const auto& s : h.generators()) gens.push_back(conjugate(s, g));
  return PermGroup::from_generators(gens, h.degree());
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
  PermGroup h = PermGroup::from_generators(s, g.degree());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Permutation> gens = h.generators();
    for (const auto& x : gens) {
      for (const auto& y : g.generators()) {
        Permutation c = conjugate(x, y);
        if (!h.contains(c)) {
          h = h.with_generator(c);
          changed = true;
        }
      }
    }
  }
  return h;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("sylow_subgroup needs a prime");
  std::uint64_t target = p_part(g.size(), p);
  PermGroup s = PermGroup::trivial(g.degree());
  while (s.size() < target) {
    // s is a p-subgroup, not Sylow, so N_G(s)/s has order divisible by p.
    PermGroup n = normalizer(g, s);
    bool grown = false;
    for (const auto& x : n.elements()) {
      if (s.contains(x)) continue;
      if (!is_power_of(x.order(), p)) continue;
      s = s.with_generator(x);
      grown = true;
      break;
    }
    if (!grown) throw InvariantError("Sylow search stalled");
  }
  return s;
}

PermGroup core_p_prime(const PermGroup& g, std::uint64_t p) {
  PermGroup n = PermGroup::trivial(g.degree());
  for (const auto& x : g.elements()) {
    if (x.order() % p == 0 || n.contains(x)) continue;
    std::vector<Permutation> gens = n.generators();
    gens.push_back(x);
    PermGroup m = normal_closure(g, gens);
    if (m.size() % p != 0) n = m;
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    series.push_back(d);
  }
  return series;
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : n.generators())
    for (const auto& y : g.generators())
      if (!n.contains(conjugate(x, y))) return false;
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_cyclic(const PermGroup& g) {
  if (!is_abelian(g)) return false;
  std::uint64_t n = g.size();
  for (const auto& x : g.elements())
    if (x.order() == n) return true;
  return false;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_p_group(const PermGroup& g, std::uint64_t p) { return is_power_of(g.size(), p); }

bool is_p_nilpotent(const PermGroup& g, std::uint64_t p) {
  PermGroup o = core_p_prime(g, p);
  return is_power_of(g.size() / o.size(), p);
}

std::uint64_t exponent(const PermGroup& g) {
  std::uint64_t e = 1;
  for (const auto& x : g.elements()) e = std::lcm(e, x.order());
  return e;
}

Quotient::Quotient(const PermGroup& g, const PermGroup& n) : group_(g), kernel_(n) {
  if (!is_normal(g, n)) throw InputError("subgroup is not normal");
  const auto& elts = g.elements();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  coset_.assign(elts.size(), kUnset);
  for (std::size_t i = 0; i < elts.size(); ++i) {
    if (coset_[i] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(representative_.size());
    representative_.push_back(i);
    for (const auto& k : n.elements()) coset_[g.index_of(k * elts[i])] = id;
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(map(s));
  image_ = PermGroup::from_generators(gens, representative_.size());
}

std::size_t Quotient::coset_of(const Permutation& g) const { return coset_[group_.index_of(g)]; }

Permutation Quotient::map(const Permutation& g) const {
  const auto& elts = group_.elements();
  std::vector<Point> images(representative_.size());
  for (std::size_t c = 0; c < representative_.size(); ++c)
    images[c] = coset_[group_.index_of(elts[representative_[c]] * g)];
  return Permutation(std::move(images));
}

PermGroup quotient_by_normal(const PermGroup& g, const PermGroup& n) { return Quotient(g, n).image(); }

std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& x, const Permutation& y) {
  if (x.order() != y.order()) return std::nullopt;
  for (const auto& h : g.elements())
    if (conjugate(x, h) == y) return h;
  return std::nullopt;
}

std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (const auto& h : g.elements()) {
    bool ok = true;
    for (const auto& s : a.generators())
      if (!b.contains(conjugate(s, h))) {
        ok = false;
        break;
      }
    if (ok) return h;
  }
  return std::nullopt;
}

std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& a1, const PermGroup& a2,
                                               const PermGroup& b1, const PermGroup& b2) {
  if (a1.order() != b1.order() || a2.order() != b2.order()) return std::nullopt;
  for (const auto& h : g.elements()) {
    bool ok = true;
    for (const auto& s : a1.generators())
      if (!b1.contains(conjugate(s, h))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const auto& s : a2.generators())
      if (!b2.contains(conjugate(s, h))) {
        ok = false;
        break;
      }
    if (ok) return h;
  }
  return std::nullopt;
}

std::uint64_t count_square_roots(const PermGroup& s, const Permutation& y,
                                 const std::function<bool(const Permutation&)>& in_set) {
  std::uint64_t n = 0;
  for (const auto& x : s.elements())
    if ((!in_set || in_set(x)) && x * x == y) ++n;
  return n;
}

}  // namespace realblocks
