#include "doctest.h"

#include "critlocus/dynamics.hpp"

using namespace critlocus;

namespace {

Poly P(const std::string& s, const SpacePtr& space) { return parse_poly(s, space); }

}  // namespace

TEST_CASE("normal form of degree 3") {
  const NormalForm nf = build_normal_form(3);
  CHECK(nf.f == P("z^3 + 3*a1*a2*z - a1^3 - 3*a1^2*a2 + b", nf.full_space));
  CHECK(nf.fhat == P("z^3 - 3*a1^2*z + 2*a1^3 + b", nf.hatted_space));
  const auto z = *nf.hatted_space->z_index();
  CHECK(substitute_var(nf.fhat, z, P("a1", nf.hatted_space)) == P("b", nf.hatted_space));
  CHECK_FALSE(normal_form_violation(nf));
}

TEST_CASE("normal-form invariants up to degree 9") {
  for (int d = 3; d <= 9; ++d) {
    CAPTURE(d);
    const NormalForm nf = build_normal_form(d);
    CHECK_FALSE(normal_form_violation(nf));
    const auto z = *nf.hatted_space->z_index();
    const auto c = coefficients_in(nf.fhat, z);
    REQUIRE(c.size() == static_cast<std::size_t>(d + 1));
    CHECK(c[d] == Poly::from_int(nf.hatted_space, 1));
    CHECK(c[d - 1].is_zero());
  }
}

TEST_CASE("normal-form coefficients are p-integral for prime-power degrees") {
  for (int d : {3, 5, 7, 9}) {
    const NormalForm nf = build_normal_form(d);
    const OddPrime p(d == 9 ? 3 : static_cast<std::uint64_t>(d));
    CHECK(min_valuation(nf.f, p) >= 0);
  }
}

TEST_CASE("violated invariants are reported") {
  NormalForm nf = build_normal_form(3);
  nf.fhat = nf.fhat + Poly::variable(nf.hatted_space, "a1");
  CHECK(normal_form_violation(nf));
  NormalForm nf2 = build_normal_form(5);
  nf2.f = nf2.f + Poly::from_int(nf2.full_space, 1);
  CHECK(normal_form_violation(nf2));
}

TEST_CASE("orbit points for d = 3") {
  const OrbitCache orbit(3);
  const auto& s = orbit.normal_form().hatted_space;
  CHECK(orbit.point(0) == P("a1", s));
  CHECK(orbit.point(1) == P("b", s));
  CHECK(orbit.point(2) == P("b^3 - 3*a1^2*b + 2*a1^3 + b", s));
  CHECK(orbit.point(1, false) == P("b", orbit.normal_form().full_space));
}

TEST_CASE("f_knd for d = 3") {
  const OrbitCache orbit(3);
  const auto& s = orbit.normal_form().hatted_space;
  CHECK(f_knd(orbit, 0, 1) == P("b - a1", s));
  CHECK(f_knd(orbit, 1, 1) == P("b^3 - 3*a1^2*b + 2*a1^3", s));
}

TEST_CASE("hat commutes with the orbit construction") {
  for (int d : {3, 5}) {
    const OrbitCache orbit(d);
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t n = 1; k + n <= (d == 3 ? 4u : 3u); ++n) {
        CAPTURE(d);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(substitute_hat(f_knd(orbit, k, n, false)) == f_knd(orbit, k, n, true));
      }
    }
  }
}

TEST_CASE("divisibility of f_knd") {
  const OrbitCache orbit(3);
  const auto& s = orbit.normal_form().hatted_space;
  CHECK(check_divisibility(orbit, 0, 1, 1, 1) == P("(b - a1)*(b + 2*a1)", s));
  CHECK(check_divisibility(orbit, 1, 1, 1, 1) == P("1", s));
  CHECK(check_divisibility(orbit, 0, 1, 0, 2) == exact_divide(f_knd(orbit, 0, 2), P("b - a1", s)));
  CHECK_NOTHROW(check_divisibility(orbit, 1, 1, 2, 2));
  CHECK_NOTHROW(check_divisibility(orbit, 0, 1, 3, 1));
}

TEST_CASE("telescoping of f_knd") {
  const OrbitCache orbit(3);
  CHECK(check_telescoping(orbit, 0, 1, 3));
  CHECK(check_telescoping(orbit, 1, 1, 2));
  CHECK(check_telescoping(orbit, 0, 2, 2));
  const OrbitCache orbit5(5);
  CHECK(check_telescoping(orbit5, 0, 1, 2));
}

TEST_CASE("h_k1p golden values") {
  const OrbitCache orbit(3);
  const auto& s = orbit.normal_form().hatted_space;
  CHECK(h_k1p(orbit, 0) == P("b - a1", s));
  CHECK(h_k1p(orbit, 1) == P("b + 2*a1", s));
  const OrbitCache orbit5(5);
  CHECK(h_k1p(orbit5, 0) == P("b - a1", orbit5.normal_form().hatted_space));
}

TEST_CASE("lowest part of h_k1p for k >= 2") {
  for (auto [p, k] : std::vector<std::pair<int, std::size_t>>{{3, 2}, {3, 3}, {5, 2}}) {
    const OrbitCache orbit(p);
    const Poly h = h_k1p(orbit, k);
    CHECK(homogeneous_part(h, HomogeneousWhich::Lowest) == expected_lowest_form(p));
    CHECK_FALSE(try_divide(h, P("b - a1", orbit.normal_form().hatted_space)));
  }
  CHECK(expected_lowest_form(3) == P("3*(b + a1)", VarSpace::hatted(3)));
  CHECK(expected_lowest_form(5) == P("5*(b + a1 + a2 + a3)*(b - a2)*(b - a3)", VarSpace::hatted(5)));
}

TEST_CASE("h_general agrees with h_k1p") {
  const OrbitCache orbit(3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(h_general(orbit, k, 1) == h_k1p(orbit, k));
  const OrbitCache orbit5(5);
  for (std::size_t k = 0; k <= 1; ++k) CHECK(h_general(orbit5, k, 1) == h_k1p(orbit5, k));
}

TEST_CASE("h_0_2_p mod p") {
  for (int p : {3, 5, 7}) {
    const OrbitCache orbit(p);
    const auto& s = orbit.normal_form().hatted_space;
    const OddPrime op(static_cast<std::uint64_t>(p));
    const ModPPoly lin = parse_modp_poly("b - a1", s, op);
    const ModPPoly expected = pow(lin, static_cast<std::uint64_t>(p - 1)) + ModPPoly::from_int(s, 1, PrimeField(op));
    CHECK(reduce_poly_mod_p(h_general(orbit, 0, 2), op) == expected);
  }
}

TEST_CASE("fhat_k_1_p is a power of b - a1 mod p") {
  for (int p : {3, 5, 7}) {
    for (std::size_t k = 0; k <= 3; ++k) CHECK(check_power_congruence_mod_p(p, OddPrime(static_cast<std::uint64_t>(p)), k));
  }
  CHECK(check_power_congruence_mod_p(9, OddPrime(3), 1));
  CHECK(check_power_congruence_mod_p(9, OddPrime(3), 2));
  CHECK(check_power_congruence_mod_p(3, OddPrime(3), 2, false));
}

TEST_CASE("exact Eisenstein congruence against the mod-p shadow") {
  const OrbitCache orbit(3);
  const auto& s = orbit.normal_form().hatted_space;
  const OddPrime three(3);
  for (std::size_t k = 0; k <= 3; ++k) {
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < k; ++i) e *= 3;
    const ModPPoly expected = pow(parse_modp_poly("b - a1", s, three), e);
    CHECK(reduce_poly_mod_p(f_knd(orbit, k, 1), three) == expected);
  }
}

TEST_CASE("derivative congruence at d = 3") {
  const OrbitCache orbit(3);
  CHECK(check_derivative_congruence(orbit, 2));
}

TEST_CASE("mixed specialization") {
  const OrbitCache orbit(5);
  const auto& s = orbit.normal_form().hatted_space;
  const MixedSpecialization lin = mixed_specialize(P("b - a1", s), 2);
  CHECK(lin.poly.to_string() == "b - a1");
  CHECK(lin.poly.space()->arity() == 3);
  const MixedSpecialization ms = mixed_specialize(P("a2*a3 + b", s), 2);
  CHECK(ms.poly == P("a1*a3 + b", ms.poly.space()));
  CHECK_THROWS(mixed_specialize(P("b", s), 1));
  CHECK_THROWS(mixed_specialize(P("b", s), 4));
}

TEST_CASE("mixed specialization of h_k1p splits off the marked fixed point") {
  const OrbitCache orbit(5);
  const MixedSpecialization ms = mixed_specialize(h_k1p(orbit, 2), 2);
  const auto [cofactor, t] = strip_marked_fixed_factor(ms.poly);
  CHECK(t == 1);
  const auto& s = ms.poly.space();
  CHECK(cofactor * P("b - a1", s) == ms.poly);
  CHECK(homogeneous_part(ms.poly, HomogeneousWhich::Lowest) == P("5*(b - a3)*(b - a1)*(b + a3 + 2*a1)", s));
}

TEST_CASE("unicritical limit of h_k1p has lowest term p*b^(p-2) for k >= 2") {
  for (auto [p, k] : std::vector<std::pair<int, std::size_t>>{{3, 2}, {3, 3}, {5, 2}}) {
    const OrbitCache orbit(p);
    const auto& s = orbit.normal_form().hatted_space;
    std::vector<Poly> images;
    for (std::size_t i = 0; i < s->arity(); ++i) {
      images.push_back(s->variable(i).kind == VarSpace::Kind::Beta ? Poly::variable(s, i) : Poly(s));
    }
    const Poly u = substitute<RationalField>(h_k1p(orbit, k), s, images);
    CHECK(homogeneous_part(u, HomogeneousWhich::Lowest) ==
          P(std::to_string(p) + "*b^" + std::to_string(p - 2), s));
  }
}

TEST_CASE("rigidity examples") {
  const RigidityReport a = rigidity_check(RigidityParams{3, 1, 0, 1, 2, 0, 1}, true);
  CHECK(a.coprime_mod_p);
  CHECK(a.diff1_power == std::optional<std::uint64_t>(1));
  CHECK(a.diffi_power == std::optional<std::uint64_t>(3));
  const RigidityReport b = rigidity_check(RigidityParams{3, 2, 1, 1, 2, 0, 1}, true);
  CHECK(b.diff1_power == std::optional<std::uint64_t>(9));
  CHECK(b.to_text().find("coprime-mod-p: true") != std::string::npos);
  CHECK(rigidity_check(RigidityParams{5, 1, 1, 2, 3, 1, 1}, false).coprime_mod_p);
  CHECK_THROWS(rigidity_check(RigidityParams{3, 1, 0, 1, 3, 0, 1}, true));
}

TEST_CASE("mod-p orbit of f = z^p - a1^p + b") {
  ModPOrbit orbit(3, OddPrime(3), false);
  CHECK(orbit.point("a1", 1).to_string() == "b");
  CHECK(orbit.start_point("a2") == orbit.point("a2", 0));
  CHECK(orbit.point("a2", 1) == parse_modp_poly("a2^3 - a1^3 + b", orbit.space(), OddPrime(3)));
}

TEST_CASE("resultant with b - a1 is evaluation at b = a1") {
  for (auto [p, k] : std::vector<std::pair<int, std::size_t>>{{3, 3}, {5, 2}}) {
    const OrbitCache orbit(p);
    const auto& s = orbit.normal_form().hatted_space;
    const Poly h = h_k1p(orbit, k);
    const Poly res = resultant_in_beta(h, P("b - a1", s));
    const Poly at = substitute_var(h, *s->beta_index(), P("a1", s));
    CHECK((res == at || res == -at));
    CHECK(min_valuation(res, OddPrime(static_cast<std::uint64_t>(p))) == Valuation(1));
  }
}
