#include "doctest.h"

#include <cmath>

#include "critlocus/dynamics.hpp"
#include "critlocus/unicritical.hpp"

using namespace critlocus;

namespace {

UniPoly U(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

}  // namespace

TEST_CASE("dense univariate arithmetic") {
  const UniPoly b = UniPoly::variable();
  CHECK((b * b - U({1})) == U({-1, 0, 1}));
  CHECK(U({0, 0, 0}).is_zero());
  CHECK(U({3, 0, 3, 0, 1}).to_string() == "b^4 + 3*b^2 + 3");
  CHECK(U({2, 4}).monic() == UniPoly({Rational(mpz_class(1), mpz_class(2)), Rational(1)}));
  CHECK(U({-2, 4}).primitive() == U({-1, 2}));
  const auto [q, r] = divmod(U({-1, 0, 1}), U({1, 1}));
  CHECK(q == U({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(U({-1, 0, 1}), U({1, 2, 1})) == U({1, 1}));
  CHECK(compose(U({0, 0, 1}), U({1, 1})) == U({1, 2, 1}));
  CHECK_THROWS(divmod(U({1}), UniPoly()));
}

TEST_CASE("univariate and multivariate views agree") {
  const auto s = VarSpace::hatted(3);
  const UniPoly g = U({3, 0, 3, 0, 1});
  CHECK(UniPoly::from_poly(g.to_poly(s)) == g);
  CHECK(g.to_poly(s) == parse_poly("b^4 + 3*b^2 + 3", s));
  CHECK_THROWS(UniPoly::from_poly(parse_poly("b + a1", s)));
}

TEST_CASE("unicritical orbit differences") {
  CHECK(uni_f_knd(3, 0, 1) == UniPoly::variable());
  CHECK(uni_f_knd(3, 1, 1) == U({0, 0, 0, 1}));
  CHECK(uni_f_knd(3, 2, 1) == U({0, 0, 0, 0, 0, 3, 0, 3, 0, 1}));
  CHECK(uni_orbit_point(2, 3) == U({0, 1, 1, 2, 1}));
}

TEST_CASE("Gleason-Misiurewicz polynomials R_k_1_p") {
  for (int p : {3, 5, 7}) {
    CHECK(R_knd(p, 0, 1).R == UniPoly::variable());
    CHECK(R_knd(p, 1, 1).R == U({1}));
  }
  CHECK(R_knd(3, 2, 1).R == U({3, 0, 3, 0, 1}));
  CHECK(R_knd(3, 3, 1).R.degree() == 16);
  CHECK(R_knd(5, 2, 1).R.degree() == 16);
  CHECK(R_knd(7, 2, 1).R.degree() == 36);
}

TEST_CASE("removed factors account for the full degree") {
  for (auto [d, k, n] : std::vector<std::tuple<int, std::size_t, std::size_t>>{
           {3, 2, 1}, {3, 3, 1}, {5, 2, 1}, {3, 1, 2}, {2, 2, 2}, {3, 4, 1}}) {
    const RResult r = R_knd(d, k, n);
    CHECK(r.R.degree() + r.removed_degree() == uni_f_knd(d, k, n).degree());
    CHECK(R_knd(d, k, n, true).R == r.R);
    CHECK(gcd(r.R, uni_f_knd(d, k == 0 ? 0 : k - 1, n)).is_constant());
  }
}

TEST_CASE("Eisenstein at p for R_k_1_p") {
  const std::vector<std::pair<int, std::size_t>> cases = {{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}};
  for (auto [p, k] : cases) {
    const auto c = certify_R_eisenstein(R_knd(p, k, 1).R, OddPrime(static_cast<std::uint64_t>(p)));
    CHECK(c.verdict == Verdict::Pass);
  }
  CHECK(certify_R_eisenstein(UniPoly::variable(), OddPrime(3)).verdict == Verdict::Pass);
  CHECK(certify_R_eisenstein(U({1}), OddPrime(3)).verdict == Verdict::Constant);
}

TEST_CASE("unicritical restriction of h_k1p is divisible by R") {
  for (auto [p, k] : std::vector<std::pair<int, std::size_t>>{{3, 2}, {3, 3}, {5, 2}}) {
    const OrbitCache orbit(p);
    const UniPoly u = unicritical_restriction(h_k1p(orbit, k));
    CHECK(divmod(u, R_knd(p, k, 1).R).second.is_zero());
    CHECK(u.coefficients().front() != Rational(0));
    CHECK(certify_R_eisenstein(u, OddPrime(static_cast<std::uint64_t>(p))).verdict == Verdict::Pass);
  }
}

TEST_CASE("root finder") {
  const auto roots = find_roots(U({1, 0, 1}));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(std::abs(std::stod(r.re)) < 1e-30);
    CHECK(std::abs(std::abs(std::stod(r.im)) - 1) < 1e-15);
  }
  const auto cubic = find_roots(U({-6, 11, -6, 1}));
  REQUIRE(cubic.size() == 3);
  std::vector<double> re;
  for (const auto& r : cubic) re.push_back(std::stod(r.re));
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0));
  CHECK(re[1] == doctest::Approx(2.0));
  CHECK(re[2] == doctest::Approx(3.0));
  CHECK(find_roots(U({1, 0, 1})) == find_roots(U({1, 0, 1})));
}

TEST_CASE("root finder results are deterministic for a fixed seed") {
  const UniPoly R = R_knd(3, 3, 1).R;
  const auto a = find_roots(R);
  const auto b = find_roots(R);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].re == b[i].re);
    CHECK(a[i].im == b[i].im);
  }
}

TEST_CASE("numeric preperiodicity oracle") {
  const UniPoly R = U({3, 0, 3, 0, 1});
  for (const auto& root : find_roots(R)) {
    const auto w = numeric_preperiodicity_oracle(3, 2, 1, root, 1e-9, 1e-6, R);
    CHECK(w.passed);
    CHECK(w.residual < 1e-9);
    CHECK(w.margin > 1e-6);
  }
  const auto zero = numeric_preperiodicity_oracle(3, 0, 1, Complex{"0", "0"});
  CHECK(zero.passed);
  CHECK(zero.residual == 0);
  CHECK(std::isinf(zero.margin));
  const auto off = numeric_preperiodicity_oracle(3, 2, 1, Complex{"0.3", "0.2"});
  CHECK_FALSE(off.passed);
  CHECK(off.residual > 1e-9);
  const auto root = find_roots(R).front();
  CHECK_FALSE(numeric_preperiodicity_oracle(3, 2, 2, root).passed);
  CHECK_FALSE(numeric_preperiodicity_oracle(3, 3, 1, root).passed);
  CHECK(numeric_preperiodicity_oracle(3, 2, 1, root).to_text().find("passed: true") != std::string::npos);
}

TEST_CASE("R_k_1_p is squarefree where computed") {
  for (auto [d, k] : std::vector<std::pair<int, std::size_t>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
    const UniPoly R = R_knd(d, k, 1).R;
    std::vector<Rational> dc;
    for (std::size_t i = 1; i < R.coefficients().size(); ++i) dc.push_back(R.coefficients()[i] * Rational(static_cast<long>(i)));
    CAPTURE(d);
    CAPTURE(k);
    CHECK(gcd(R, UniPoly(dc)).is_constant());
  }
}
