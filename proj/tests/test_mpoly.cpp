#include "doctest.h"

#include "critlocus/mpoly.hpp"

using namespace critlocus;

namespace {

Poly P(const std::string& s, const SpacePtr& space) { return parse_poly(s, space); }

}  // namespace

TEST_CASE("variable spaces") {
  const auto full = VarSpace::full(4);
  CHECK(full->arity() == 5);
  CHECK(full->variable(0).name() == "z");
  CHECK(full->variable(3).name() == "a3");
  CHECK(full->variable(4).name() == "b");
  const auto hat = VarSpace::hatted(4);
  CHECK(hat->arity() == 4);
  CHECK_FALSE(hat->index_of("a3"));
  CHECK(*hat->beta_index() == 3);
}

TEST_CASE("ring arithmetic") {
  const auto s = VarSpace::hatted(3);
  CHECK(P("b - a1", s) * P("b + a1", s) == P("b^2 - a1^2", s));
  CHECK(pow(P("b - a1", s), 2) == P("b^2 - 2*a1*b + a1^2", s));
  CHECK((P("b^3 + a1", s) * Poly(s)).is_zero());
  CHECK(P("b - a1", s) - P("b - a1", s) == Poly(s));
  CHECK(P("z*b + 1", s).total_degree() == 2);
}

TEST_CASE("polynomials from different spaces do not mix") {
  CHECK_THROWS_AS(P("b", VarSpace::hatted(3)) + P("b", VarSpace::hatted(5)), VarSpaceMismatch);
}

TEST_CASE("canonical rendering uses grevlex with z < a1 < ... < b") {
  const auto s = VarSpace::hatted(3);
  CHECK(P("b^3 - 3*a1^2*b + 2*a1^3", s).to_string() == "b^3 - 3*a1^2*b + 2*a1^3");
  CHECK(P("z^3 - 3*a1^2*z + 2*a1^3 + b", s).to_string() == "2*a1^3 - 3*z*a1^2 + z^3 + b");
  CHECK(P("b - a1", s).to_string() == "b - a1");
  CHECK(Poly(s).to_string() == "0");
}

TEST_CASE("parsing") {
  const auto s = VarSpace::full(3);
  const Poly g = P("3*b^2*a1 + 1/2", s);
  CHECK(g == Poly::term(s, Monomial::variable(*s->beta_index(), 2), Rational(3)) * Poly::variable(s, "a1") +
                 Poly::constant(s, Rational(mpz_class(1), mpz_class(2))));
  CHECK(g.to_string() == "3*a1*b^2 + 1/2");
  CHECK(P(g.to_string(), s) == g);
  CHECK(P("(b - a1)^2", s) == pow(P("b - a1", s), 2));
  CHECK(P("-(a2 + 2)*3", s) == P("-3*a2 - 6", s));
  CHECK_THROWS_AS(P("b +", s), ParseError);
  CHECK_THROWS_AS(P("a7", s), ParseError);
  CHECK_THROWS_AS(P("b^x", s), ParseError);
  CHECK(P("b/3 + a1/4", s) == P("1/3*b + 1/4*a1", s));
  CHECK_THROWS_AS(P("b/a1", s), ParseError);
  CHECK_THROWS_AS(P("b/0", s), ParseError);
  CHECK(parse_modp_poly("4*b + 5", VarSpace::hatted(3), OddPrime(3)).to_string() == "b + 2");
}

TEST_CASE("elementary symmetric polynomials") {
  const auto s = VarSpace::full(4);
  const std::vector<std::size_t> two = {*s->index_of("a1"), *s->index_of("a2")};
  const std::vector<std::size_t> three = {*s->index_of("a1"), *s->index_of("a2"), *s->index_of("a3")};
  CHECK(elementary_symmetric<RationalField>(s, 2, two) == P("a1*a2", s));
  CHECK(elementary_symmetric<RationalField>(s, 1, three) == P("a1 + a2 + a3", s));
  CHECK(elementary_symmetric<RationalField>(s, 0, three) == P("1", s));
  CHECK(elementary_symmetric<RationalField>(s, 3, three) == P("a1*a2*a3", s));
}

TEST_CASE("composition in z") {
  const auto s = VarSpace::full(3);
  CHECK(compose_in_z(P("z^2 + b", s), P("z + a1", s)) == P("z^2 + 2*a1*z + a1^2 + b", s));
  CHECK(compose_in_z(P("z", s), P("a2*b - 1", s)) == P("a2*b - 1", s));
  const Poly f = P("z^3 + 3*a1*a2*z - a1^3 - 3*a1^2*a2 + b", s);
  CHECK(compose_in_z(f, P("z", s)) == f);
}

TEST_CASE("hat map") {
  const auto s = VarSpace::full(4);
  const auto hat = VarSpace::hatted(4);
  CHECK(hat_of_variable<RationalField>(s, *s->index_of("a3")) == P("-a1 - a2", hat));
  CHECK(substitute_hat(P("b", s)) == P("b", hat));
  const auto s3 = VarSpace::full(3);
  CHECK(substitute_hat(P("a1*a2", s3)) == P("-a1^2", VarSpace::hatted(3)));
  CHECK_THROWS(substitute_hat(P("b", hat)));
}

TEST_CASE("exact division") {
  const auto s = VarSpace::hatted(3);
  CHECK(exact_divide(P("b^3 - 3*a1^2*b + 2*a1^3", s), P("(b - a1)^2", s)) == P("b + 2*a1", s));
  const Poly g = P("a1*b^2 + 7", s);
  CHECK(exact_divide(g, P("1", s)) == g);
  CHECK_THROWS_AS(exact_divide(P("b^2 - a1^2", s), P("b + 2*a1", s)), NotDivisible);
  CHECK_FALSE(try_divide(P("b^2 - a1^2", s), P("b + 2*a1", s)));
}

TEST_CASE("gcd in b") {
  const auto s = VarSpace::hatted(3);
  CHECK(gcd_in_beta(P("b - a1", s), P("(b - a1)*(b + 2*a1)", s)) == P("b - a1", s));
  CHECK(gcd_in_beta(P("b + 2*a1", s), P("b - a1", s)) == P("1", s));
  const Poly c = P("b", s);
  CHECK(gcd_in_beta(pow(c, 5) * P("b^4 + 3*b^2 + 3", s), pow(c, 3)) == pow(c, 3));
  CHECK(gcd_in_beta(P("(b - a1)^2*(b + a1)", s), P("(b - a1)^3*(b - 2*a1)", s)) == P("(b - a1)^2", s));
}

TEST_CASE("resultant in b") {
  const auto s = VarSpace::hatted(3);
  const Poly res = resultant_in_beta(P("b + 2*a1", s), P("b - a1", s));
  CHECK((res == P("3*a1", s) || res == P("-3*a1", s)));
  CHECK(resultant_in_beta(P("(b - a1)*(b^2 + a1)", s), P("b - a1", s)).is_zero());
  const auto s5 = VarSpace::hatted(5);
  const Poly g = P("b^2 + a2*b - a3^2 + a1", s5);
  const Poly r = resultant_in_beta(g, P("b - a1", s5));
  const Poly e = substitute_var(g, *s5->beta_index(), P("a1", s5));
  CHECK((r == e || r == -e));
  const Poly q = resultant_in_beta(P("b^2 - a1", s), P("b^2 - a1^2", s));
  CHECK(q == P("(a1 - a1^2)^2", s));
}

TEST_CASE("homogeneous parts") {
  const auto s = VarSpace::hatted(3);
  CHECK(homogeneous_part(P("b^2 + 3*a1*b + a1", s), HomogeneousWhich::Lowest) == P("a1", s));
  CHECK(homogeneous_part(P("(b - a1)^4 + b", s), HomogeneousWhich::Highest) == P("(b - a1)^4", s));
  CHECK_THROWS_AS(homogeneous_part(Poly(s), HomogeneousWhich::Lowest), ZeroPolynomial);
}

TEST_CASE("reduction mod p") {
  const auto full = VarSpace::full(3);
  const OddPrime three(3);
  const Poly f = P("z^3 + 3*a1*a2*z - a1^3 - 3*a1^2*a2 + b", full);
  CHECK(reduce_poly_mod_p(f, three) == parse_modp_poly("z^3 - a1^3 + b", full, three));
  const auto hat = VarSpace::hatted(3);
  CHECK(reduce_poly_mod_p(substitute_hat(f), three).to_string() == "2*a1^3 + z^3 + b");
  CHECK(reduce_poly_mod_p(P("3*b + a1", hat), three) == parse_modp_poly("a1", hat, three));
  CHECK_THROWS_AS(reduce_poly_mod_p(P("b/3", hat), three), NegativeValuation);
  CHECK(lift_to_rational(parse_modp_poly("-b", hat, three)) == P("2*b", hat));
  CHECK(min_valuation(P("9*b + 3/2*a1", hat), three) == Valuation(1));
  CHECK(min_valuation(Poly(hat), three).is_infinite());
}

TEST_CASE("Phi_n") {
  const auto s = VarSpace::full(3);
  const auto z = *s->z_index();
  const auto b = *s->beta_index();
  CHECK(phi<RationalField>(s, 1, z, b) == P("1", s));
  CHECK(phi<RationalField>(s, 3, z, b) == P("z^2 + z*b + b^2", s));
  for (long n = 1; n <= 12; ++n) {
    CHECK((P("z - b", s) * phi<RationalField>(s, n, z, b)) ==
          pow(P("z", s), static_cast<std::uint64_t>(n)) - pow(P("b", s), static_cast<std::uint64_t>(n)));
  }
}

TEST_CASE("power detection over F_p") {
  const auto s = VarSpace::hatted(5);
  const OddPrime three(3);
  const ModPPoly lin3 = parse_modp_poly("b - a1", s, three);
  CHECK(is_power_of(pow(lin3, 9), lin3) == std::optional<std::uint64_t>(9));
  CHECK(is_power_of(lin3, lin3) == std::optional<std::uint64_t>(1));
  const OddPrime five(5);
  const ModPPoly lin5 = parse_modp_poly("b - a1", s, five);
  CHECK_FALSE(is_power_of(pow(lin5, 4) + ModPPoly::from_int(s, 1, PrimeField(five)), lin5));
  CHECK_FALSE(is_power_of(parse_modp_poly("b + a1", s, five), lin5));
  CHECK(is_power_of(pow(lin5, 125), lin5) == std::optional<std::uint64_t>(125));
}

TEST_CASE("Frobenius on F_p polynomials") {
  const auto s = VarSpace::hatted(3);
  const OddPrime three(3);
  const ModPPoly g = parse_modp_poly("b + 2*a1*z + 1", s, three);
  CHECK(frobenius(g) == pow(g, 3));
  CHECK(pow(g, 9) == frobenius(frobenius(g)));
}

TEST_CASE("derivatives and coefficients in a variable") {
  const auto s = VarSpace::hatted(3);
  const auto z = *s->z_index();
  const auto b = *s->beta_index();
  CHECK(derivative(P("z^3 - 3*a1^2*z + b", s), z) == P("3*z^2 - 3*a1^2", s));
  const Poly g = P("a1*b^2 + b - 4", s);
  const auto c = coefficients_in(g, b);
  REQUIRE(c.size() == 3);
  CHECK(c[2] == P("a1", s));
  CHECK(from_coefficients_in(c, b, s) == g);
  CHECK_FALSE(is_monic_in_beta(g));
  CHECK(is_monic_in_beta(P("b^2 + a1*b", s)));
  CHECK(remainder_in_beta(P("b^2", s), P("b - a1", s)) == P("a1^2", s));
}
