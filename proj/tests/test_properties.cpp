#include "doctest.h"

#include "critlocus/properties.hpp"

using namespace critlocus;

namespace {

void check(const props::Outcome& o) {
  INFO(o.name << ": " << o.first_failure);
  CHECK(o.ok());
}

}  // namespace

TEST_CASE("generators are deterministic for a fixed seed") {
  const auto s = VarSpace::full(4);
  props::Gen a(7);
  props::Gen b(7);
  for (int i = 0; i < 20; ++i) CHECK(a.poly(s, 5, 4) == b.poly(s, 5, 4));
  props::Gen c(7);
  props::Gen d(8);
  bool differ = false;
  for (int i = 0; i < 20; ++i) differ = differ || !(c.poly(s, 5, 4) == d.poly(s, 5, 4));
  CHECK(differ);
}

TEST_CASE("generated rationals avoid p in the denominator") {
  props::Gen g(3);
  for (int i = 0; i < 500; ++i) {
    CHECK(g.rational(20, 30, OddPrime(3)).denominator() % 3 != 0);
  }
}

TEST_CASE("monic-in-b generator") {
  props::Gen g(11);
  const auto s = VarSpace::hatted(5);
  for (int i = 0; i < 100; ++i) {
    const Poly p = g.monic_in_beta(s, 2, 3, 2);
    CHECK(is_monic_in_beta(p));
    CHECK(p.degree_in(*s->beta_index()) == 2);
  }
}

TEST_CASE("property: hat commutes with composition") { check(props::hat_commutes_with_composition(1, 300)); }
TEST_CASE("property: hat is a ring homomorphism") { check(props::hat_is_ring_homomorphism(2, 300)); }
TEST_CASE("property: exact division round trip") { check(props::exact_divide_round_trip(3, 300)); }
TEST_CASE("property: resultant equals evaluation") { check(props::resultant_matches_evaluation(4, 300)); }
TEST_CASE("property: reduction mod p is a homomorphism") { check(props::reduce_mod_p_homomorphism(5, 300)); }
TEST_CASE("property: homogeneous parts are multiplicative") { check(props::homogeneous_parts_multiply(6, 300)); }
TEST_CASE("property: parse and render round trip") { check(props::parse_render_round_trip(7, 300)); }
TEST_CASE("property: reducible products are never certified") { check(props::reducible_never_certified(8, 300)); }

TEST_CASE("outcomes record the first failure") {
  props::Outcome o{"x"};
  CHECK_FALSE(o.ok());
  o.cases = 3;
  CHECK(o.ok());
  o.failures = 1;
  CHECK_FALSE(o.ok());
}
