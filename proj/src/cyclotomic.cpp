#include "realblocks/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "realblocks/errors.hpp"

namespace realblocks {

namespace detail {

struct CycloField {
  unsigned n = 1;
  unsigned phi = 1;
  // zeta_pow[k] = coordinates of zeta^k in the power basis, k in [0, n).
  std::vector<std::vector<std::int64_t>> zeta_pow;
  std::vector<unsigned> units;
};

namespace {

using Poly = std::vector<std::int64_t>;  // ascending coefficients

Poly poly_divide_exact(Poly num, const Poly& den) {
  // den monic
  std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw InvariantError("cyclotomic polynomial division");
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw InvariantError("cyclotomic polynomial division has remainder");
  return q;
}

Poly cyclotomic_polynomial(unsigned n, std::map<unsigned, Poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d, memo));
  memo[n] = p;
  return p;
}

std::unique_ptr<CycloField> build_field(unsigned n) {
  static std::map<unsigned, Poly> memo;  // guarded by the caller's lock
  auto f = std::make_unique<CycloField>();
  f->n = n;
  Poly phi_n = cyclotomic_polynomial(n, memo);
  f->phi = static_cast<unsigned>(phi_n.size() - 1);
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k % n, n) == 1) f->units.push_back(k % n);
  std::sort(f->units.begin(), f->units.end());
  std::vector<std::int64_t> cur(f->phi, 0);
  cur[0] = 1;
  if (f->phi == 0) throw InvariantError("degenerate cyclotomic field");
  for (unsigned k = 0; k < n; ++k) {
    f->zeta_pow.push_back(cur);
    // multiply by x and reduce by the monic phi_n
    std::int64_t top = cur[f->phi - 1];
    for (unsigned j = f->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned j = 0; j < f->phi; ++j) cur[j] -= top * phi_n[j];
  }
  return f;
}

}  // namespace

const CycloField* cyclo_field(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloField>> cache;
  if (n == 0) throw InputError("conductor must be positive");
  if (n % 4 == 2) n /= 2;  // Q(zeta_2m) = Q(zeta_m) for odd m, but keep exponents sane below
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_field(n);
  return slot.get();
}

}  // namespace detail

namespace {

const detail::CycloField* field_for(unsigned n) {
  // Conductors n = 2 mod 4 are stored as n/2; callers pass exponents for n.
  return detail::cyclo_field(n);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Cyclotomic::Cyclotomic() : field_(field_for(1)), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(Rational r) : field_(field_for(1)), coeffs_(1, r) {}

Cyclotomic::Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}

Cyclotomic::Cyclotomic(const detail::CycloField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

unsigned Cyclotomic::conductor() const { return field_->n; }

Cyclotomic Cyclotomic::fold(const detail::CycloField* f, const std::vector<Rational>& a) {
  std::vector<Rational> out(f->phi);
  for (unsigned k = 0; k < f->n; ++k) {
    if (a[k].is_zero()) continue;
    if (k < f->phi) {
      out[k] += a[k];
      continue;
    }
    const auto& row = f->zeta_pow[k];
    for (unsigned j = 0; j < f->phi; ++j)
      if (row[j] != 0) out[j] += a[k] * Rational(row[j]);
  }
  return Cyclotomic(f, std::move(out));
}

Cyclotomic Cyclotomic::from_exponents(unsigned n, const std::vector<Rational>& by_exponent) {
  if (by_exponent.size() != n) throw InputError("exponent vector length must equal the conductor");
  const auto* f = field_for(n);
  if (f->n == n) return fold(f, by_exponent);
  // n = 2m with m odd: zeta_n = -zeta_m^((m+1)/2).
  unsigned m = f->n;
  std::vector<Rational> a(m);
  for (unsigned k = 0; k < n; ++k) {
    if (by_exponent[k].is_zero()) continue;
    // zeta_n^k = (-1)^k zeta_m^(k (m+1)/2)
    unsigned e = static_cast<unsigned>((static_cast<std::uint64_t>(k) * ((m + 1) / 2)) % m);
    a[e] += (k % 2 ? -by_exponent[k] : by_exponent[k]);
  }
  return fold(f, a);
}

Cyclotomic Cyclotomic::zeta(unsigned n, long long k) {
  std::vector<Rational> a(n);
  long long e = ((k % static_cast<long long>(n)) + n) % n;
  a[static_cast<std::size_t>(e)] = 1;
  return from_exponents(n, a);
}

Cyclotomic Cyclotomic::lifted(unsigned m) const {
  unsigned n = field_->n;
  if (m % n != 0) throw InputError("lift target must be a multiple of the conductor");
  const auto* f = field_for(m);
  if (f == field_) return *this;
  unsigned mm = f->n;  // actual stored conductor, multiple of n
  unsigned step = mm / n;
  std::vector<Rational> a(mm);
  for (unsigned i = 0; i < coeffs_.size(); ++i) a[i * step] = coeffs_[i];
  return fold(f, a);
}

namespace {

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (field_ != o.field_) {
    unsigned m = lcm_conductor(conductor(), o.conductor());
    *this = lifted(m);
    return *this += o.lifted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (field_ != o.field_) {
    unsigned m = lcm_conductor(conductor(), o.conductor());
    *this = lifted(m);
    return *this *= o.lifted(m);
  }
  if (o.field_->phi == 1 || o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    Rational r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  unsigned n = field_->n;
  std::vector<Rational> a(n);
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      a[(i + j) % n] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = fold(field_, a);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::galois(long long k) const {
  unsigned n = field_->n;
  long long kk = ((k % static_cast<long long>(n)) + n) % n;
  if (std::gcd(static_cast<unsigned>(kk), n) != 1 && n > 1)
    throw InputError("Galois exponent must be coprime to the conductor");
  std::vector<Rational> a(n);
  for (unsigned i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) a[(static_cast<unsigned long long>(i) * kk) % n] += coeffs_[i];
  return fold(field_, a);
}

Cyclotomic Cyclotomic::conj() const { return galois(static_cast<long long>(field_->n) - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  if (is_rational()) {
    std::vector<Rational> c(coeffs_.size());
    c[0] = Rational(1) / coeffs_[0];
    return Cyclotomic(field_, std::move(c));
  }
  Cyclotomic others(Rational(1));
  for (unsigned k : field_->units)
    if (k != 1) others *= galois(k);
  Cyclotomic norm = *this * others;
  auto r = norm.as_rational();
  if (!r) throw InvariantError("field norm is not rational");
  others *= Rational(1) / *r;
  return others;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_integer_combination() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  unsigned m = std::lcm(a.conductor(), b.conductor());
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    unsigned m = std::lcm(a.conductor(), b.conductor());
    return a.lifted(m) <=> b.lifted(m);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    auto c = a.coeffs_[i] <=> b.coeffs_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  std::string out = std::to_string(conductor()) + ":";
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    if (any && c.sign() > 0) out += '+';
    out += s;
    if (i > 0) out += "*z^" + std::to_string(i);
    any = true;
  }
  if (!any) out += '0';
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("cyclotomic needs a conductor prefix");
  unsigned n = 0;
  for (char ch : text.substr(0, colon)) {
    if (ch < '0' || ch > '9') throw ParseError("bad conductor");
    n = n * 10 + static_cast<unsigned>(ch - '0');
  }
  std::vector<Rational> a(n);
  std::string_view body = text.substr(colon + 1);
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t j = i + 1;
    while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
    std::string_view term = body.substr(i, j - i);
    if (!term.empty() && term[0] == '+') term.remove_prefix(1);
    std::size_t exponent = 0;
    auto star = term.find("*z^");
    std::string_view coeff = term;
    if (star != std::string_view::npos) {
      coeff = term.substr(0, star);
      for (char ch : term.substr(star + 3)) exponent = exponent * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (exponent >= n) throw ParseError("exponent out of range");
    a[exponent] += Rational::parse(coeff);
    i = j;
  }
  return from_exponents(n, a);
}

}  // namespace realblocks
