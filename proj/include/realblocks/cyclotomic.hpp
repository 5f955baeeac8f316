#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realblocks/rational.hpp"

namespace realblocks {

namespace detail {
struct CycloField;
}

/// An element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1)
/// reduced modulo the n-th cyclotomic polynomial. The coefficient vector
/// always has exactly phi(n) entries, so equal values of equal conductor
/// have identical representations. Mixed-conductor operands are lifted to
/// the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(Rational r);      // NOLINT(implicit)
  Cyclotomic(std::int64_t v);  // NOLINT(implicit)

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic zeta(unsigned n, long long k = 1);
  /// sum_k by_exponent[k] * zeta_n^k, with by_exponent.size() == n.
  static Cyclotomic from_exponents(unsigned n, const std::vector<Rational>& by_exponent);

  unsigned conductor() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Same value written over Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic lifted(unsigned m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  /// Throws ArithmeticError on division by zero.
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// The field automorphism zeta -> zeta^k; gcd(k, conductor) must be 1.
  Cyclotomic galois(long long k) const;
  Cyclotomic inverse() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const { return *this == conj(); }
  /// Algebraic-integer test: all power-basis coefficients are integers.
  bool is_integer_combination() const;
  std::optional<Rational> as_rational() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic order on coefficient vectors over a common conductor.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// "n:c0+c1*z^1+..." with the conductor as prefix.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

 private:
  Cyclotomic(const detail::CycloField* field, std::vector<Rational> coeffs);
  static Cyclotomic fold(const detail::CycloField* field, const std::vector<Rational>& by_exponent);

  const detail::CycloField* field_;
  std::vector<Rational> coeffs_;
};

/// Euler's totient.
unsigned euler_phi(unsigned n);

}  // namespace realblocks
