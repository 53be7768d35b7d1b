#include "doctest.h"

#include "critlocus/exactnum.hpp"

using namespace critlocus;

TEST_CASE("rationals are stored reduced with positive denominator") {
  const Rational q(mpz_class(6), mpz_class(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(mpz_class(0), mpz_class(7)).denominator() == 1);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DomainError);
}

TEST_CASE("rational arithmetic and parsing") {
  const Rational a = Rational::parse("-3/6");
  CHECK(a == Rational(mpz_class(-1), mpz_class(2)));
  CHECK(a + Rational(1) == Rational(mpz_class(1), mpz_class(2)));
  CHECK(a * a == Rational(mpz_class(1), mpz_class(4)));
  CHECK(Rational(3) / Rational(6) == Rational(mpz_class(1), mpz_class(2)));
  CHECK(Rational::parse("17").is_integer());
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS(Rational::parse("1/"));
  CHECK(Rational(2) > Rational(mpz_class(3), mpz_class(2)));
}

TEST_CASE("p-adic valuation") {
  const OddPrime three(3);
  CHECK(padic_valuation(Rational(mpz_class(9), mpz_class(2)), three) == Valuation(2));
  CHECK(padic_valuation(Rational(0), OddPrime(5)).is_infinite());
  CHECK(padic_valuation(Rational(mpz_class(5), mpz_class(3)), three) == Valuation(-1));
  CHECK(padic_valuation(mpz_class(-162), three) == Valuation(4));
  CHECK(Valuation::infinity() > Valuation(1000000));
  CHECK(Valuation(1) < 2);
}

TEST_CASE("odd primes are checked on construction") {
  CHECK_NOTHROW(OddPrime(7));
  CHECK_THROWS_AS(OddPrime(2), DomainError);
  CHECK_THROWS_AS(OddPrime(9), DomainError);
  CHECK_THROWS_AS(OddPrime(1), DomainError);
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("reduction of rationals mod p") {
  const OddPrime three(3);
  CHECK(reduce_mod_p(Rational(mpz_class(5), mpz_class(2)), three).residue() == 1);
  CHECK(reduce_mod_p(Rational(3), three).residue() == 0);
  CHECK(reduce_mod_p(Rational(-1), three).residue() == 2);
  CHECK_THROWS_AS(reduce_mod_p(Rational(mpz_class(1), mpz_class(3)), three), NegativeValuation);
}

TEST_CASE("prime field arithmetic") {
  const OddPrime seven(7);
  const PrimeFieldElem a(3, seven);
  const PrimeFieldElem b(-2, seven);
  CHECK(b.residue() == 5);
  CHECK((a + b).residue() == 1);
  CHECK((a * b).residue() == 1);
  CHECK((a * a.inverse()).residue() == 1);
  CHECK((-a).residue() == 4);
  CHECK_THROWS(PrimeFieldElem(0, seven).inverse());
  for (std::uint32_t x = 1; x < 7; ++x) CHECK(modarith::mul(x, modarith::inverse(x, 7), 7) == 1);
}
