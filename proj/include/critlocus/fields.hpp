#pragma once

#include <cstdint>
#include <string>

#include "critlocus/exactnum.hpp"

namespace critlocus {

/// Coefficient policy for polynomials over Q.
struct RationalField {
  using value_type = Rational;

  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  static bool is_one(const value_type& v) { return v.is_one(); }
  static bool is_negative(const value_type& v) { return v.sign() < 0; }
  static value_type abs(const value_type& v) { return v.abs(); }
  static void add_to(value_type& acc, const value_type& v) { acc += v; }
  static void sub_from(value_type& acc, const value_type& v) { acc -= v; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
  static value_type neg(const value_type& a) { return -a; }
  static std::string render(const value_type& v) { return v.to_string(); }
  static constexpr std::uint32_t characteristic() { return 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Coefficient policy for polynomials over F_p; values are residues in [0, p).
struct PrimeField {
  using value_type = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(OddPrime prime) : p(prime.value()) {}

  std::uint32_t p = 0;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  static bool is_zero(value_type v) { return v == 0; }
  static bool is_one(value_type v) { return v == 1; }
  static bool is_negative(value_type) { return false; }
  static value_type abs(value_type v) { return v; }
  void add_to(value_type& acc, value_type v) const {
    acc += v;
    if (acc >= p) acc -= p;
  }
  void sub_from(value_type& acc, value_type v) const { add_to(acc, neg(v)); }
  value_type mul(value_type a, value_type b) const { return modarith::mul(a, b, p); }
  value_type div(value_type a, value_type b) const { return mul(a, modarith::inverse(b, p)); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  static std::string render(value_type v) { return std::to_string(v); }
  std::uint32_t characteristic() const { return p; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

}  // namespace critlocus
