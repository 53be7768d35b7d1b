#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "critlocus/errors.hpp"

namespace critlocus {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "num" or "num/den" (optional leading sign).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const;

  /// "num/den", den omitted when 1.
  std::string to_string() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_;
};

/// Odd prime modulus; primality is checked on construction by trial division.
class OddPrime {
 public:
  explicit OddPrime(std::uint64_t p);
  std::uint32_t value() const { return p_; }
  friend bool operator==(OddPrime, OddPrime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// p-adic valuation; +infinity is the valuation of zero and compares above
/// every finite value.
class Valuation {
 public:
  constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const;
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator<(const Valuation& a, long b) { return a < Valuation(b); }
  friend constexpr bool operator>=(const Valuation& a, long b) { return a >= Valuation(b); }

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

/// Valuation of an integer; exponent of p in |n|.
Valuation padic_valuation(const mpz_class& n, OddPrime p);
Valuation padic_valuation(const Rational& q, OddPrime p);

/// Element of the prime field F_p.
class PrimeFieldElem {
 public:
  PrimeFieldElem(std::int64_t value, OddPrime p);
  std::uint32_t residue() const { return residue_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }
  PrimeFieldElem inverse() const;

  friend PrimeFieldElem operator+(PrimeFieldElem a, PrimeFieldElem b);
  friend PrimeFieldElem operator-(PrimeFieldElem a, PrimeFieldElem b);
  friend PrimeFieldElem operator*(PrimeFieldElem a, PrimeFieldElem b);
  friend PrimeFieldElem operator-(PrimeFieldElem a);
  friend bool operator==(PrimeFieldElem, PrimeFieldElem) = default;

 private:
  PrimeFieldElem(std::uint32_t residue, std::uint32_t modulus, int)
      : residue_(residue), modulus_(modulus) {}
  std::uint32_t residue_;
  std::uint32_t modulus_;
};

/// numerator * denominator^{-1} in F_p. Throws NegativeValuation when p
/// divides the denominator.
PrimeFieldElem reduce_mod_p(const Rational& q, OddPrime p);

namespace modarith {
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
}  // namespace modarith

}  // namespace critlocus
