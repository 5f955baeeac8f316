#include "realblocks/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "realblocks/errors.hpp"

namespace realblocks {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Multiply the residue `a` (base-p digits) by x modulo the monic polynomial
// with lower coefficients `low`.
std::uint32_t times_x(std::uint32_t a, std::uint32_t p, unsigned k, std::uint32_t top_unit,
                      const std::vector<std::uint32_t>& low) {
  std::uint32_t top = a / top_unit;
  std::uint32_t shifted = (a % top_unit) * p;
  if (top == 0) return shifted;
  std::uint32_t out = 0, unit = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint32_t d = (shifted / unit) % p;
    d = (d + (p - (top * low[i]) % p)) % p;
    out += d * unit;
    unit *= p;
  }
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (p < 2 || k == 0) throw InputError("invalid finite field parameters");
  std::uint64_t q = ipow(p, k);
  if (q > kMaxFieldSize) throw CapacityError("finite field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") too large");
  q_ = static_cast<std::uint32_t>(q);
  std::uint32_t top_unit = q_ / p;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  // Lexicographically first monic polynomial of degree k with x primitive.
  for (std::uint32_t code = 0; code < q_; ++code) {
    std::vector<std::uint32_t> low(k);
    for (unsigned i = 0, c = code; i < k; ++i, c /= p) low[i] = c % p;
    if (low[0] == 0) continue;
    std::uint32_t cur = 1;
    std::uint32_t steps = 0;
    bool ok = true;
    do {
      if (steps >= q_ - 1) {
        ok = false;
        break;
      }
      exp_[steps++] = cur;
      cur = (k == 1) ? static_cast<std::uint32_t>((static_cast<std::uint64_t>(cur) * ((p - low[0]) % p)) % p)
                     : times_x(cur, p, k, top_unit, low);
    } while (cur != 1);
    if (!ok || steps != q_ - 1) continue;
    modulus_ = low;
    modulus_.push_back(1);
    break;
  }
  if (modulus_.empty()) throw InvariantError("no primitive polynomial found");
  for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

const FiniteField& FiniteField::get(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_unique<FiniteField>(p, k);
  return *slot;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, unit = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * unit;
    a /= p_;
    b /= p_;
    unit *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0, unit = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * unit;
    a /= p_;
    unit *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FiniteField::from_integer(std::int64_t m) const {
  std::int64_t r = m % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::string FiniteField::modulus_string() const {
  std::string s;
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

std::string FinFieldElem::to_string() const {
  std::string s;
  std::uint32_t v = value;
  for (unsigned i = 0; i < field->degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(v % field->characteristic());
    v /= field->characteristic();
  }
  return s;
}

namespace {

unsigned multiplicative_order(std::uint64_t p, std::uint64_t n) {
  if (n == 1) return 1;
  unsigned k = 1;
  std::uint64_t x = p % n;
  while (x != 1) {
    x = (x * p) % n;
    ++k;
  }
  return k;
}

}  // namespace

Reducer::Reducer(unsigned conductor, std::uint32_t p, unsigned generator_choice)
    : conductor_(Cyclotomic::zeta(conductor).conductor()), p_(p), choice_(generator_choice) {
  if (p < 2) throw InputError("reduction prime must be at least 2");
  if (generator_choice > 1) throw InputError("generator choice must be 0 or 1");
  std::uint64_t pa = 1, n_prime = conductor_;
  while (n_prime % p == 0) {
    n_prime /= p;
    pa *= p;
  }
  if (std::gcd(std::uint64_t{p}, n_prime) != 1) throw InputError("reduction prime is not coprime to n'");
  unsigned k = multiplicative_order(p, n_prime);
  field_ = &FiniteField::get(p, k);
  std::uint64_t q1 = field_->size() - 1;
  std::uint64_t j = 1;
  if (choice_ == 1) {
    j = 2;
    while (std::gcd(j, q1) != 1) ++j;
  }
  // u = p^-a mod n'
  std::uint64_t u = 1;
  if (n_prime > 1) {
    std::uint64_t pa_mod = pa % n_prime;
    for (u = 1; u < n_prime; ++u)
      if ((u * pa_mod) % n_prime == 1) break;
  }
  std::uint64_t step = (j * u % q1) * (q1 / n_prime) % q1;
  if (q1 == 0) step = 0;
  zeta_image_.resize(conductor_);
  for (unsigned i = 0; i < conductor_; ++i)
    zeta_image_[i] = q1 == 0 ? 1 : field_->gen_pow((step * i) % q1);
}

FinFieldElem Reducer::reduce(const Rational& r) const {
  std::int64_t d = r.den() % static_cast<std::int64_t>(p_);
  if (d == 0) throw IntegralityError("value " + r.to_string() + " is not " + std::to_string(p_) + "-integral");
  std::uint32_t num = field_->from_integer(r.num());
  std::uint32_t den = field_->from_integer(r.den());
  return {field_, field_->mul(num, field_->inv(den))};
}

FinFieldElem Reducer::reduce(const Cyclotomic& z) const {
  Cyclotomic w = z.conductor() == conductor_ ? z : z.lifted(conductor_);
  std::uint32_t acc = 0;
  const auto& c = w.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    acc = field_->add(acc, field_->mul(reduce(c[i]).value, zeta_image_[i]));
  }
  return {field_, acc};
}

std::string Reducer::description() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(field_->degree()) + ") modulus [" +
         field_->modulus_string() + "] generator choice " + std::to_string(choice_) + " conductor " +
         std::to_string(conductor_);
}

}  // namespace realblocks
