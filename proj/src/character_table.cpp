#include "realblocks/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"

namespace realblocks {

// ---------------------------------------------------------------------------
// Class functions

ClassFunction::ClassFunction(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (values_.size() != classes_->size()) throw InputError("class function length does not match class count");
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return {classes_, std::move(v)};
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (o.size() != size()) throw InputError("class functions of different groups");
  auto v = values_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += o.values_[k];
  return {classes_, std::move(v)};
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + o.scaled(Cyclotomic(-1)); }

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (o.size() != size()) throw InputError("class functions of different groups");
  auto v = values_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= o.values_[k];
  return {classes_, std::move(v)};
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
  auto v = values_;
  for (auto& x : v) x *= c;
  return {classes_, std::move(v)};
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw InputError("class functions of different groups");
  const auto& cc = a.classes();
  Cyclotomic acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    Cyclotomic term = a[k] * b[k].conj();
    term *= Rational(static_cast<std::int64_t>(cc[k].size));
    acc += term;
  }
  acc *= Rational(1, static_cast<std::int64_t>(cc.group().size()));
  return acc;
}

ClassFunction induce(const ClassFunction& theta, const std::shared_ptr<const ConjugacyClasses>& g) {
  const auto& hc = theta.classes();
  const PermGroup& h = hc.group();
  if (h.degree() != g->group().degree() || !h.is_subgroup_of(g->group()))
    throw InputError("induction from a non-subgroup");
  auto fusion = class_fusion(hc, *g);
  std::vector<Cyclotomic> sums(g->size());
  for (std::size_t l = 0; l < hc.size(); ++l) {
    if (theta[l].is_zero()) continue;
    Cyclotomic t = theta[l];
    t *= Rational(static_cast<std::int64_t>(hc[l].size));
    sums[fusion[l]] += t;
  }
  for (std::size_t k = 0; k < sums.size(); ++k)
    sums[k] *= Rational(static_cast<std::int64_t>(g->centralizer_order(k)), static_cast<std::int64_t>(h.size()));
  return {g, std::move(sums)};
}

ClassFunction restrict(const ClassFunction& chi, const std::shared_ptr<const ConjugacyClasses>& h) {
  const PermGroup& g = chi.classes().group();
  if (h->group().degree() != g.degree() || !h->group().is_subgroup_of(g))
    throw InputError("restriction to a non-subgroup");
  std::vector<Cyclotomic> v;
  v.reserve(h->size());
  for (const auto& c : h->classes()) v.push_back(chi.at(c.representative));
  return {h, std::move(v)};
}

// ---------------------------------------------------------------------------
// Modular linear algebra for Dixon-Schneider

namespace {

using u64 = std::uint64_t;
using Matrix = std::vector<std::vector<u64>>;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  if (a % m == 0) throw ArithmeticError("modular inverse of zero");
  return powmod(a, m - 2, m);
}

u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    f.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) f.push_back(n);
  return f;
}

u64 primitive_root(u64 ell) {
  auto fac = prime_factors(ell - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : fac)
      if (powmod(g, (ell - 1) / q, ell) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, u64 m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size(), row = 0;
  if (rows == 0) return pivots;
  std::size_t cols = a[0].size();
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    u64 inv = invmod(a[row][c], m);
    for (auto& x : a[row]) x = mulmod(x, inv, m);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      u64 f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = submod(a[r][k], mulmod(f, a[row][k], m), m);
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

// Basis (as rows) of the null space of a square matrix acting on columns.
Matrix null_space(Matrix a, u64 m) {
  std::size_t n = a.size();
  auto pivots = rref(a, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = submod(0, a[r][free], m);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via reduction to Hessenberg form; coefficients
// ascending, monic of degree n.
std::vector<u64> char_poly(Matrix h, u64 m) {
  std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (auto& row : h) std::swap(row[piv], row[c + 1]);
    }
    u64 inv = invmod(h[c + 1][c], m);
    for (std::size_t r = c + 2; r < n; ++r) {
      if (h[r][c] == 0) continue;
      u64 f = mulmod(h[r][c], inv, m);
      for (std::size_t k = 0; k < n; ++k) h[r][k] = submod(h[r][k], mulmod(f, h[c + 1][k], m), m);
      for (std::size_t k = 0; k < n; ++k) h[k][c + 1] = (h[k][c + 1] + mulmod(f, h[k][r], m)) % m;
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    std::vector<u64> cur(k + 1, 0);
    for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
      cur[t + 1] = (cur[t + 1] + p[k - 1][t]) % m;
      cur[t] = submod(cur[t], mulmod(h[k - 1][k - 1], p[k - 1][t], m), m);
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], m);
      if (prod == 0) break;
      u64 f = mulmod(h[i][k - 1], prod, m);
      if (f == 0) continue;
      for (std::size_t t = 0; t < p[i].size(); ++t) cur[t] = submod(cur[t], mulmod(f, p[i][t], m), m);
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

std::vector<u64> roots_mod(const std::vector<u64>& poly, u64 m) {
  std::vector<u64> roots;
  for (u64 x = 0; x < m; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (mulmod(acc, x, m) + poly[i]) % m;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

struct ClassData {
  std::size_t r = 0;
  std::uint64_t order = 0;
  // coeff[j][i][k] = #{x in K_j : x^-1 z_k in K_i}
  std::vector<std::uint32_t> coeff;
  std::uint32_t at(std::size_t j, std::size_t i, std::size_t k) const { return coeff[(j * r + i) * r + k]; }
};

ClassData class_coefficients(const ConjugacyClasses& cc) {
  ClassData d;
  d.r = cc.size();
  const PermGroup& g = cc.group();
  d.order = g.size();
  d.coeff.assign(d.r * d.r * d.r, 0);
  const auto& elts = g.elements();
  std::vector<Permutation> inverses;
  inverses.reserve(elts.size());
  for (const auto& x : elts) inverses.push_back(x.inverse());
  for (std::size_t k = 0; k < d.r; ++k) {
    const Permutation& z = cc[k].representative;
    for (std::size_t ix = 0; ix < elts.size(); ++ix) {
      std::size_t j = cc.class_of_index(ix);
      std::size_t i = cc.class_of(inverses[ix] * z);
      ++d.coeff[(j * d.r + i) * d.r + k];
    }
  }
  return d;
}

// Central characters mod ell, one vector per irreducible, or empty if ell
// fails to separate them.
std::vector<std::vector<u64>> central_characters_mod(const ClassData& cd, u64 ell) {
  std::size_t r = cd.r;
  std::vector<Matrix> spaces;
  {
    Matrix id(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool all_done = std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.size() == 1; });
    if (all_done) break;
    std::vector<Matrix> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      auto pivots = rref(space, ell);
      std::size_t dim = space.size();
      // image of each basis vector under M_j, (M_j w)_i = sum_k c_jik w_k
      Matrix a(dim, std::vector<u64>(dim, 0));
      for (std::size_t s = 0; s < dim; ++s) {
        const auto& w = space[s];
        for (std::size_t t = 0; t < dim; ++t) {
          std::size_t i = pivots[t];
          u64 acc = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (w[k]) acc = (acc + mulmod(cd.at(j, i, k), w[k], ell)) % ell;
          a[t][s] = acc;
        }
      }
      auto roots = roots_mod(char_poly(a, ell), ell);
      std::size_t covered = 0;
      for (u64 lambda : roots) {
        Matrix shifted = a;
        for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = submod(shifted[t][t], lambda, ell);
        auto coords = null_space(shifted, ell);
        Matrix sub;
        for (const auto& c : coords) {
          std::vector<u64> v(r, 0);
          for (std::size_t s = 0; s < dim; ++s)
            if (c[s])
              for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mulmod(c[s], space[s][k], ell)) % ell;
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != dim) return {};
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<u64>> out;
  for (auto& s : spaces) {
    if (s.size() != 1) return {};
    auto w = s[0];
    if (w[0] == 0) return {};
    u64 inv = invmod(w[0], ell);
    for (auto& x : w) x = mulmod(x, inv, ell);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::int64_t> integer_coefficients(const Cyclotomic& z, unsigned n) {
  Cyclotomic w = z.conductor() == n ? z : z.lifted(n);
  std::vector<std::int64_t> out;
  out.reserve(w.coefficients().size());
  for (const auto& c : w.coefficients()) {
    if (!c.is_integer()) throw InvariantError("character value is not an algebraic integer");
    out.push_back(c.num());
  }
  return out;
}

std::string fnv_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 15];
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Character tables

CharacterTable::CharacterTable(std::shared_ptr<const ConjugacyClasses> classes,
                               std::vector<std::vector<Cyclotomic>> rows, std::uint64_t ell)
    : classes_(std::move(classes)), rows_(std::move(rows)), ell_(ell) {
  const auto& cc = *classes_;
  order_ = cc.group().size();
  conductor_ = Cyclotomic::zeta(static_cast<unsigned>(cc.exponent())).conductor();
  if (rows_.size() != cc.size()) throw InvariantError("row count differs from class count");
  for (auto& row : rows_) {
    if (row.size() != cc.size()) throw InvariantError("row length differs from class count");
    for (auto& v : row)
      if (v.conductor() != conductor_) v = v.lifted(conductor_);
  }
  // canonical order: trivial first, then (degree, values)
  auto is_trivial = [](const std::vector<Cyclotomic>& row) {
    return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::sort(rows_.begin(), rows_.end(), [&](const auto& a, const auto& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a[0] != b[0]) return a[0] < b[0];
    return a < b;
  });
  if (!is_trivial(rows_[0])) throw InvariantError("table has no trivial character");
  for (const auto& row : rows_) {
    auto d = row[0].as_rational();
    if (!d || !d->is_integer() || d->num() <= 0) throw InvariantError("character degree is not a positive integer");
    degrees_.push_back(static_cast<std::uint64_t>(d->num()));
  }
  validate();
  std::map<std::vector<Cyclotomic>, std::size_t> index;
  for (std::size_t i = 0; i < rows_.size(); ++i) index.emplace(rows_[i], i);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::vector<Cyclotomic> c;
    for (const auto& v : rows_[i]) c.push_back(v.conj());
    auto it = index.find(c);
    if (it == index.end()) throw InvariantError("conjugate of a character is missing");
    conj_row_.push_back(it->second);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Cyclotomic acc;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      Cyclotomic t = rows_[i][cc[k].power_map_2];
      t *= Rational(static_cast<std::int64_t>(cc[k].size));
      acc += t;
    }
    acc *= Rational(1, static_cast<std::int64_t>(order_));
    auto v = acc.as_rational();
    if (!v || !v->is_integer() || v->num() < -1 || v->num() > 1)
      throw InvariantError("Frobenius-Schur indicator out of range");
    int eps = static_cast<int>(v->num());
    if ((eps == 0) != (conj_row_[i] != i)) throw InvariantError("indicator zero does not match non-reality");
    indicators_.push_back(eps);
  }
}

void CharacterTable::validate() const {
  const auto& cc = *classes_;
  std::size_t r = cc.size();
  unsigned n = conductor_;
  // Work in Z[x]/(x^n - 1) with the power-basis integer coefficients, and
  // reduce modulo the cyclotomic polynomial only at the end.
  std::vector<std::vector<std::vector<std::int64_t>>> coef(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) coef[i].push_back(integer_coefficients(rows_[i][k], n));
  std::vector<std::int64_t> acc(n);
  auto accumulate = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t w) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!a[s]) continue;
      for (std::size_t t = 0; t < b.size(); ++t)
        if (b[t]) acc[(s + n - t) % n] += w * a[s] * b[t];
    }
  };
  auto equals_integer = [&](std::int64_t expected) {
    std::vector<Rational> ex(n);
    for (unsigned i = 0; i < n; ++i) ex[i] = Rational(acc[i]);
    return Cyclotomic::from_exponents(n, ex) == Cyclotomic(expected);
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < r; ++k) accumulate(coef[i][k], coef[j][k], static_cast<std::int64_t>(cc[k].size));
      if (!equals_integer(i == j ? static_cast<std::int64_t>(order_) : 0))
        throw InvariantError("row orthogonality fails for characters " + std::to_string(i) + ", " + std::to_string(j));
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < r; ++i) accumulate(coef[i][k], coef[i][l], 1);
      if (!equals_integer(k == l ? static_cast<std::int64_t>(cc.centralizer_order(k)) : 0))
        throw InvariantError("column orthogonality fails for classes " + std::to_string(k) + ", " + std::to_string(l));
    }
}

std::shared_ptr<const CharacterTable> CharacterTable::compute(const PermGroup& g) {
  auto classes = std::make_shared<const ConjugacyClasses>(g);
  const auto& cc = *classes;
  std::size_t r = cc.size();
  if (r > kMaxClasses) throw CapacityError("group has " + std::to_string(r) + " classes, limit is " + std::to_string(kMaxClasses));
  std::uint64_t order = g.size();
  std::uint64_t e = cc.exponent();
  ClassData cd = class_coefficients(cc);

  // Powers of class representatives: pow_class[k][j] = class of rep_k^j.
  std::vector<std::vector<std::size_t>> pow_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    const Permutation& x = cc[k].representative;
    Permutation cur(x.degree());
    for (std::uint32_t j = 0; j < cc[k].element_order; ++j) {
      pow_class[k].push_back(cc.class_of(cur));
      cur = cur * x;
    }
  }

  auto bound = static_cast<std::uint64_t>(2 * std::sqrt(static_cast<double>(order))) + 1;
  std::uint64_t ell = e + 1;
  while (ell <= bound || !is_prime(ell)) ell += e;
  for (int attempt = 0; attempt < 64; ++attempt, ell += e) {
    while (!is_prime(ell)) ell += e;
    auto omegas = central_characters_mod(cd, ell);
    if (omegas.size() != r) continue;
    u64 z = powmod(primitive_root(ell), (ell - 1) / e, ell);  // image of zeta_e
    std::vector<std::vector<Cyclotomic>> rows;
    bool ok = true;
    for (const auto& w : omegas) {
      u64 s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s = (s + mulmod(mulmod(w[k], w[cc[k].inverse_class], ell), invmod(cc[k].size % ell, ell), ell)) % ell;
      if (s == 0) {
        ok = false;
        break;
      }
      u64 d2 = mulmod(order % ell, invmod(s, ell), ell);
      u64 d = 0;
      for (u64 c = 1; c * c <= order; ++c)
        if (order % c == 0 && mulmod(c, c, ell) == d2) {
          d = c;
          break;
        }
      if (d == 0) {
        ok = false;
        break;
      }
      std::vector<u64> chi(r);
      for (std::size_t k = 0; k < r; ++k) chi[k] = mulmod(mulmod(w[k], d, ell), invmod(cc[k].size % ell, ell), ell);
      std::vector<Cyclotomic> row;
      for (std::size_t k = 0; k < r && ok; ++k) {
        std::uint64_t m = cc[k].element_order;
        u64 zm = powmod(z, e / m, ell);
        u64 zm_inv = invmod(zm, ell);
        u64 m_inv = invmod(m % ell, ell);
        std::vector<Rational> ex(e);
        u64 total = 0;
        for (std::uint64_t t = 0; t < m; ++t) {
          // a_t = (1/m) sum_j chi(g^j) zeta_m^(-jt)
          u64 acc = 0, step = powmod(zm_inv, t, ell), cur = 1;
          for (std::uint64_t j = 0; j < m; ++j) {
            acc = (acc + mulmod(chi[pow_class[k][j]], cur, ell)) % ell;
            cur = mulmod(cur, step, ell);
          }
          acc = mulmod(acc, m_inv, ell);
          if (acc > d) {
            ok = false;
            break;
          }
          total += acc;
          ex[t * (e / m)] = Rational(static_cast<std::int64_t>(acc));
        }
        if (total != d) ok = false;
        if (ok) row.push_back(Cyclotomic::from_exponents(static_cast<unsigned>(e), ex));
      }
      if (!ok) break;
      rows.push_back(std::move(row));
    }
    if (!ok) continue;
    return std::make_shared<const CharacterTable>(classes, std::move(rows), ell);
  }
  throw InvariantError("Dixon-Schneider failed for every prime tried");
}

ClassFunction CharacterTable::character(std::size_t i) const { return {classes_, rows_[i]}; }

std::optional<std::size_t> CharacterTable::find_row(const std::vector<Cyclotomic>& values) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == values) return i;
  return std::nullopt;
}

std::size_t CharacterTable::row_of(const ClassFunction& chi) const {
  auto i = find_row(chi.values());
  if (!i) throw InputError("class function is not an irreducible character");
  return *i;
}

Cyclotomic CharacterTable::central_character(std::size_t i, std::size_t k) const {
  Cyclotomic v = rows_[i][k];
  v *= Rational(static_cast<std::int64_t>((*classes_)[k].size), static_cast<std::int64_t>(degrees_[i]));
  if (!v.is_integer_combination()) throw InvariantError("central character value is not an algebraic integer");
  return v;
}

std::uint64_t CharacterTable::square_root_count(std::size_t k) const {
  const auto& cc = *classes_;
  std::uint64_t roots = 0;
  for (std::size_t l = 0; l < cc.size(); ++l)
    if (cc[l].power_map_2 == k) roots += cc[l].size;
  if (roots % cc[k].size) throw InvariantError("square root count is not integral");
  roots /= cc[k].size;
  Cyclotomic acc;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (indicators_[i]) acc += Cyclotomic(indicators_[i]) * rows_[i][k];
  if (acc != Cyclotomic(static_cast<std::int64_t>(roots)))
    throw InvariantError("square root count disagrees with sum of indicators");
  return roots;
}

std::vector<Cyclotomic> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(inner_product(f, character(i)));
  return out;
}

int fs_indicator(const CharacterTable& t, std::size_t i) { return t.fs_indicator(i); }

Cyclotomic central_character(const CharacterTable& t, std::size_t i, std::size_t k) {
  return t.central_character(i, k);
}

// ---------------------------------------------------------------------------
// Serialization

std::string CharacterTable::serialize() const {
  const auto& cc = *classes_;
  std::ostringstream out;
  out << "realblocks-table 1\n";
  out << "order " << order_ << "\n";
  out << "conductor " << conductor_ << "\n";
  out << "classes " << cc.size() << "\n";
  for (const auto& c : cc.classes())
    out << "class " << c.size << ' ' << c.element_order << ' ' << c.representative.to_cycle_string() << "\n";
  out << "characters " << rows_.size() << "\n";
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k].to_string();
    out << "\n";
  }
  return out.str();
}

std::shared_ptr<const CharacterTable> CharacterTable::deserialize(const PermGroup& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::size_t r = 0;
  std::uint64_t order = 0;
  unsigned cond = 0;
  in >> word;
  if (word != "realblocks-table") throw ParseError("not a character table dump");
  in >> word >> word >> order >> word >> cond >> word >> r;
  if (!in || order != g.size()) throw ParseError("table dump header does not match the group");
  auto classes = std::make_shared<const ConjugacyClasses>(g);
  if (classes->size() != r) throw ParseError("class count mismatch");
  for (std::size_t k = 0; k < r; ++k) {
    std::uint64_t size = 0, ord = 0;
    std::string rep;
    in >> word >> size >> ord >> rep;
    const auto& c = (*classes)[k];
    if (word != "class" || size != c.size || ord != c.element_order || rep != c.representative.to_cycle_string())
      throw ParseError("class data mismatch at class " + std::to_string(k));
  }
  std::size_t nrows = 0;
  in >> word >> nrows;
  if (word != "characters" || nrows != r) throw ParseError("character count mismatch");
  std::vector<std::vector<Cyclotomic>> rows(r);
  for (auto& row : rows)
    for (std::size_t k = 0; k < r; ++k) {
      in >> word;
      if (!in) throw ParseError("truncated table dump");
      row.push_back(Cyclotomic::parse(word));
    }
  auto table = std::make_shared<const CharacterTable>(classes, std::move(rows), 0);
  if (table->conductor() != cond) throw ParseError("conductor mismatch");
  return table;
}

std::string group_hash(const PermGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (16 * i)) & 0xffff;
      h *= 1099511628211ull;
    }
  };
  mix(g.degree());
  mix(g.size());
  for (const auto& x : g.elements())
    for (Point y : x.images()) mix(y);
  return fnv_hex(h);
}

// ---------------------------------------------------------------------------
// Cache

struct TableCache::State {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const CharacterTable>> tables;
  std::map<std::string, std::shared_ptr<const ConjugacyClasses>> classes;
  std::string dir;
};

TableCache::TableCache() : state_(std::make_shared<State>()) {}

TableCache& TableCache::global() {
  static TableCache cache;
  return cache;
}

void TableCache::set_directory(std::string dir) {
  std::lock_guard lock(state_->mu);
  state_->dir = std::move(dir);
  if (!state_->dir.empty()) std::filesystem::create_directories(state_->dir);
}

void TableCache::clear() {
  std::lock_guard lock(state_->mu);
  state_->tables.clear();
  state_->classes.clear();
}

namespace {

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

}  // namespace

std::shared_ptr<const CharacterTable> TableCache::get(const PermGroup& g) {
  std::string key = group_hash(g);
  std::string dir;
  {
    std::lock_guard lock(state_->mu);
    auto it = state_->tables.find(key);
    if (it != state_->tables.end() && same_group(it->second->group(), g)) return it->second;
    dir = state_->dir;
  }
  std::shared_ptr<const CharacterTable> table;
  std::filesystem::path file;
  if (!dir.empty()) {
    file = std::filesystem::path(dir) / (key + ".table");
    std::ifstream in(file);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        table = CharacterTable::deserialize(g, buf.str());
      } catch (const std::exception&) {
        table.reset();  // stale or corrupt entry: recompute below
      }
    }
  }
  if (!table) {
    table = CharacterTable::compute(g);
    if (!dir.empty()) {
      auto tmp = file;
      tmp += ".tmp" + std::to_string(std::hash<std::string>{}(key) ^ reinterpret_cast<std::uintptr_t>(&table));
      {
        std::ofstream out(tmp);
        out << table->serialize();
      }
      std::filesystem::rename(tmp, file);
    }
  }
  std::lock_guard lock(state_->mu);
  auto [it, inserted] = state_->tables.emplace(key, table);
  if (!inserted && same_group(it->second->group(), g)) return it->second;
  if (!inserted) return table;  // hash collision: serve uncached
  state_->classes[key] = table->classes_ptr();
  return table;
}

std::shared_ptr<const ConjugacyClasses> TableCache::classes(const PermGroup& g) {
  std::string key = group_hash(g);
  {
    std::lock_guard lock(state_->mu);
    auto it = state_->classes.find(key);
    if (it != state_->classes.end() && same_group(it->second->group(), g)) return it->second;
  }
  auto cc = std::make_shared<const ConjugacyClasses>(g);
  std::lock_guard lock(state_->mu);
  auto [it, inserted] = state_->classes.emplace(key, cc);
  if (!inserted && same_group(it->second->group(), g)) return it->second;
  return cc;
}

}  // namespace realblocks
