#include "critlocus/properties.hpp"

#include "critlocus/certify.hpp"

namespace critlocus::props {

namespace {

const OddPrime kPrimes[] = {OddPrime(3), OddPrime(5), OddPrime(7)};

void record(Outcome& out, bool ok, const std::string& detail) {
  ++out.cases;
  if (ok) return;
  if (out.failures++ == 0) out.first_failure = detail;
}

template <class Check>
Outcome run(const std::string& name, std::size_t cases, Check&& check) {
  Outcome out{name};
  for (std::size_t i = 0; i < cases; ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail += std::string(" threw: ") + e.what();
    }
    record(out, ok, "case " + std::to_string(i) + ": " + detail);
  }
  return out;
}

std::vector<std::size_t> alpha_indices(const VarSpace& space) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    if (space.variable(i).kind == VarSpace::Kind::Alpha) out.push_back(i);
  }
  return out;
}

}  // namespace

long Gen::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Gen::rational(long max_num, long max_den, std::optional<OddPrime> avoid) {
  const long num = integer(-max_num, max_num);
  long den = integer(1, max_den);
  while (avoid && den % static_cast<long>(avoid->value()) == 0) den = integer(1, max_den);
  return Rational(mpz_class(num), mpz_class(den));
}

Poly Gen::poly(const SpacePtr& space, int max_terms, int max_degree, std::optional<OddPrime> avoid, bool allow_z) {
  Poly g(space);
  const int terms = static_cast<int>(integer(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int e = 0; e < deg; ++e) {
      std::size_t v = static_cast<std::size_t>(integer(0, static_cast<long>(space->arity()) - 1));
      if (!allow_z && space->z_index() && v == *space->z_index()) continue;
      m.set(v, m[v] + 1);
    }
    g.add_term(m, rational(9, 4, avoid));
  }
  return g;
}

Poly Gen::monic_in_beta(const SpacePtr& space, int beta_degree, int max_terms, int max_degree, bool allow_z) {
  const auto b = *space->beta_index();
  Poly g = Poly::term(space, Monomial::variable(b, static_cast<std::uint32_t>(beta_degree)), Rational(1));
  for (int j = 0; j < beta_degree; ++j) {
    Poly c = poly(space, max_terms, max_degree, std::nullopt, allow_z);
    Poly stripped(space);
    for (const auto& [m, v] : c.terms()) {
      Monomial mm = m;
      mm.set(b, 0);
      stripped.add_term(mm, v);
    }
    g += stripped.times_term(Monomial::variable(b, static_cast<std::uint32_t>(j)), Rational(1));
  }
  return g;
}

Poly Gen::alpha_linear_form(const SpacePtr& space) {
  Poly l(space);
  for (auto i : alpha_indices(*space)) l.add_term(Monomial::variable(i), Rational(integer(-3, 3)));
  return l;
}

Outcome hat_commutes_with_composition(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("hat commutes with composition", cases, [&](std::string& detail) {
    const int d = static_cast<int>(gen.integer(3, 4));
    const auto space = VarSpace::full(d);
    const Poly g = gen.poly(space, 3, 3);
    const Poly h = gen.poly(space, 3, 2);
    detail = "g = " + g.to_string() + ", h = " + h.to_string();
    const Poly lhs = substitute_hat(compose_in_z(g, h));
    const Poly rhs = compose_in_z(substitute_hat(g), substitute_hat(h));
    return lhs == rhs;
  });
}

Outcome hat_is_ring_homomorphism(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("hat is a ring homomorphism", cases, [&](std::string& detail) {
    const int d = static_cast<int>(gen.integer(3, 5));
    const auto space = VarSpace::full(d);
    const Poly a = gen.poly(space, 4, 3);
    const Poly b = gen.poly(space, 4, 3);
    detail = "a = " + a.to_string() + ", b = " + b.to_string();
    return substitute_hat(a * b) == substitute_hat(a) * substitute_hat(b) &&
           substitute_hat(a + b) == substitute_hat(a) + substitute_hat(b);
  });
}

Outcome exact_divide_round_trip(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("exact_divide round trip", cases, [&](std::string& detail) {
    const auto space = VarSpace::hatted(static_cast<int>(gen.integer(3, 5)));
    const Poly q = gen.poly(space, 4, 3);
    const Poly den = gen.monic_in_beta(space, static_cast<int>(gen.integer(1, 2)), 2, 2);
    detail = "q = " + q.to_string() + ", den = " + den.to_string();
    return exact_divide(q * den, den) == q;
  });
}

Outcome resultant_matches_evaluation(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("resultant equals evaluation for linear h", cases, [&](std::string& detail) {
    const auto space = VarSpace::hatted(static_cast<int>(gen.integer(3, 5)));
    const auto b = *space->beta_index();
    const Poly g = gen.monic_in_beta(space, static_cast<int>(gen.integer(1, 3)), 2, 2);
    const Poly l = gen.alpha_linear_form(space);
    const Poly h = Poly::variable(space, b) - l;
    detail = "g = " + g.to_string() + ", h = " + h.to_string();
    const Poly res = resultant_in_beta(g, h);
    const Poly eval = substitute_var(g, b, l);
    return res == eval || res == -eval;
  });
}

Outcome reduce_mod_p_homomorphism(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("reduction mod p is a homomorphism", cases, [&](std::string& detail) {
    const OddPrime p = kPrimes[gen.integer(0, 2)];
    const auto space = VarSpace::full(static_cast<int>(gen.integer(3, 4)));
    const Poly a = gen.poly(space, 4, 3, p);
    const Poly b = gen.poly(space, 4, 3, p);
    detail = "p = " + std::to_string(p.value()) + ", a = " + a.to_string() + ", b = " + b.to_string();
    const ModPPoly ra = reduce_poly_mod_p(a, p);
    const ModPPoly rb = reduce_poly_mod_p(b, p);
    return reduce_poly_mod_p(a + b, p) == ra + rb && reduce_poly_mod_p(a * b, p) == ra * rb;
  });
}

Outcome homogeneous_parts_multiply(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("homogeneous parts are multiplicative", cases, [&](std::string& detail) {
    const auto space = VarSpace::hatted(static_cast<int>(gen.integer(3, 5)));
    Poly a = gen.poly(space, 4, 4);
    Poly b = gen.poly(space, 4, 4);
    if (a.is_zero()) a = Poly::from_int(space, 1);
    if (b.is_zero()) b = Poly::from_int(space, 2);
    detail = "a = " + a.to_string() + ", b = " + b.to_string();
    const auto lo = HomogeneousWhich::Lowest;
    const auto hi = HomogeneousWhich::Highest;
    return homogeneous_part(a * b, lo) == homogeneous_part(a, lo) * homogeneous_part(b, lo) &&
           homogeneous_part(a * b, hi) == homogeneous_part(a, hi) * homogeneous_part(b, hi);
  });
}

Outcome parse_render_round_trip(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("parse/render round trip", cases, [&](std::string& detail) {
    const auto space = VarSpace::full(static_cast<int>(gen.integer(3, 5)));
    const Poly g = gen.poly(space, 5, 4);
    const std::string s = g.to_string();
    detail = s;
    const Poly back = parse_poly(s, space);
    return back == g && back.to_string() == s;
  });
}

Outcome reducible_never_certified(std::uint64_t seed, std::size_t cases) {
  Gen gen(seed);
  return run("reducible polynomials never certified", cases, [&](std::string& detail) {
    const OddPrime p = kPrimes[gen.integer(0, 2)];
    const auto space = VarSpace::hatted(static_cast<int>(gen.integer(3, 5)));
    const auto b = *space->beta_index();
    const Poly u = gen.monic_in_beta(space, static_cast<int>(gen.integer(1, 2)), 2, 2);
    const Poly v = gen.monic_in_beta(space, static_cast<int>(gen.integer(1, 2)), 2, 2);
    const Poly h = gen.integer(0, 1) ? Poly::variable(space, b) - Poly::variable(space, "a1")
                                     : Poly::variable(space, b) - gen.alpha_linear_form(space);
    detail = "p = " + std::to_string(p.value()) + ", u = " + u.to_string() + ", v = " + v.to_string() +
             ", h = " + h.to_string();
    Poly g = u * v;
    try {
      return certify_eisenstein(g, h, p).verdict != Verdict::Pass;
    } catch (const NegativeValuation&) {
      return true;
    }
  });
}

}  // namespace critlocus::props
