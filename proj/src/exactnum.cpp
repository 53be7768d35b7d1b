#include "critlocus/exactnum.hpp"

#include <cctype>
#include <ostream>

namespace critlocus {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
  }
  return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

OddPrime::OddPrime(std::uint64_t p) {
  if (p == 2 || !is_prime(p) || p > 65521) {
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime below 2^16");
  }
  p_ = static_cast<std::uint32_t>(p);
}

long Valuation::value() const {
  if (infinite_) throw DomainError("finite value requested of infinite valuation");
  return value_;
}

Valuation padic_valuation(const mpz_class& n, OddPrime p) {
  if (n == 0) return Valuation::infinity();
  mpz_class rest = n;
  long v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p.value()) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p.value());
    ++v;
  }
  return Valuation(v);
}

Valuation padic_valuation(const Rational& q, OddPrime p) {
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(padic_valuation(q.numerator(), p).value() -
                   padic_valuation(q.denominator(), p).value());
}

namespace modarith {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw DomainError("inverse of zero in F_p");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace modarith

PrimeFieldElem::PrimeFieldElem(std::int64_t value, OddPrime p) : modulus_(p.value()) {
  std::int64_t r = value % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  residue_ = static_cast<std::uint32_t>(r);
}

PrimeFieldElem PrimeFieldElem::inverse() const {
  return {modarith::inverse(residue_, modulus_), modulus_, 0};
}

PrimeFieldElem operator+(PrimeFieldElem a, PrimeFieldElem b) {
  if (a.modulus_ != b.modulus_) throw DomainError("mixed moduli");
  std::uint32_t s = a.residue_ + b.residue_;
  if (s >= a.modulus_) s -= a.modulus_;
  return {s, a.modulus_, 0};
}

PrimeFieldElem operator-(PrimeFieldElem a) {
  return {a.residue_ == 0 ? 0 : a.modulus_ - a.residue_, a.modulus_, 0};
}

PrimeFieldElem operator-(PrimeFieldElem a, PrimeFieldElem b) { return a + (-b); }

PrimeFieldElem operator*(PrimeFieldElem a, PrimeFieldElem b) {
  if (a.modulus_ != b.modulus_) throw DomainError("mixed moduli");
  return {modarith::mul(a.residue_, b.residue_, a.modulus_), a.modulus_, 0};
}

PrimeFieldElem reduce_mod_p(const Rational& q, OddPrime p) {
  const auto den = mpz_fdiv_ui(q.denominator().get_mpz_t(), p.value());
  if (den == 0) {
    throw NegativeValuation(q.to_string() + " is not p-integral for p = " + std::to_string(p.value()));
  }
  const auto num = mpz_fdiv_ui(q.numerator().get_mpz_t(), p.value());
  return PrimeFieldElem(static_cast<std::int64_t>(num), p) *
         PrimeFieldElem(static_cast<std::int64_t>(den), p).inverse();
}

}  // namespace critlocus
