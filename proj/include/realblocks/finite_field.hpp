#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realblocks/cyclotomic.hpp"

namespace realblocks {

/// Largest field size for which log tables are built.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 22;

/// GF(p^k) with elements encoded as integers in [0, q): the base-p digits
/// are the coefficients of a polynomial residue modulo a fixed primitive
/// polynomial. The designated generator is the class of x.
class FiniteField {
 public:
  /// Shared, cached instance.
  static const FiniteField& get(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Coefficients of the monic modulus, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return exp_[1 % (q_ - 1)]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws ArithmeticError for zero.
  std::uint32_t inv(std::uint32_t a) const;
  /// g^e for the designated generator g.
  std::uint32_t gen_pow(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Discrete log base the generator; a != 0.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  /// Image of the integer m.
  std::uint32_t from_integer(std::int64_t m) const;

  std::string modulus_string() const;

  FiniteField(std::uint32_t p, unsigned k);

 private:
  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

struct FinFieldElem {
  const FiniteField* field = nullptr;
  std::uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  friend bool operator==(const FinFieldElem& a, const FinFieldElem& b) {
    return a.field == b.field && a.value == b.value;
  }
  FinFieldElem operator+(const FinFieldElem& o) const { return {field, field->add(value, o.value)}; }
  FinFieldElem operator-(const FinFieldElem& o) const { return {field, field->sub(value, o.value)}; }
  FinFieldElem operator*(const FinFieldElem& o) const { return {field, field->mul(value, o.value)}; }
  /// Power-basis coefficients, constant term first, joined by ",".
  std::string to_string() const;
};

/// The reduction O -> F for the p-local integers of Q(zeta_N). zeta_N is
/// sent to g^(u (q-1)/n') with n' the p'-part of N, u = p^-a mod n', and g
/// the designated generator of GF(p^k), k the order of p mod n'. Choice 1
/// replaces g by g^j, j the smallest integer > 1 coprime to q - 1.
class Reducer {
 public:
  Reducer(unsigned conductor, std::uint32_t p, unsigned generator_choice = 0);

  const FiniteField& field() const { return *field_; }
  unsigned conductor() const { return conductor_; }
  std::uint32_t prime() const { return p_; }
  unsigned generator_choice() const { return choice_; }

  /// Throws IntegralityError if a coefficient has a denominator divisible by p.
  FinFieldElem reduce(const Cyclotomic& z) const;
  std::uint32_t reduce_value(const Cyclotomic& z) const { return reduce(z).value; }
  FinFieldElem reduce(const Rational& r) const;
  FinFieldElem zero() const { return {field_, 0}; }
  FinFieldElem one() const { return {field_, 1}; }

  /// Human-readable description of the embedding, for reports.
  std::string description() const;

 private:
  unsigned conductor_;
  std::uint32_t p_;
  unsigned choice_;
  const FiniteField* field_;
  std::vector<std::uint32_t> zeta_image_;  // image of zeta^i, i < conductor
};

}  // namespace realblocks
