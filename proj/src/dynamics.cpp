#include "critlocus/dynamics.hpp"

#include <numeric>
#include <sstream>

namespace critlocus {

namespace {

std::vector<std::size_t> alpha_slots(const VarSpace& space) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    if (space.variable(i).kind == VarSpace::Kind::Alpha) out.push_back(i);
  }
  return out;
}

Poly var(const SpacePtr& space, const std::string& name) { return Poly::variable(space, name); }

Poly b_minus_a1(const SpacePtr& space) { return var(space, "b") - var(space, "a1"); }

std::string params_dump(const std::string& what, std::initializer_list<std::pair<const char*, long>> params) {
  std::ostringstream os;
  os << "operation: " << what << '\n';
  for (const auto& [k, v] : params) os << k << ": " << v << '\n';
  return os.str();
}

// f' = d * prod (z - a_i) with the a_i taken as images in `space`.
Poly derivative_product(const SpacePtr& space, int d, const std::vector<Poly>& critical_points) {
  const auto z = var(space, "z");
  Poly prod = Poly::from_int(space, d);
  for (const auto& a : critical_points) prod = prod * (z - a);
  return prod;
}

std::optional<std::string> check_one(const Poly& f, const SpacePtr& space, int d,
                                     const std::vector<Poly>& critical_points, const Poly& correction) {
  const auto zi = *space->z_index();
  const auto coeffs = coefficients_in(f, zi);
  if (coeffs.size() != static_cast<std::size_t>(d) + 1 || !coeffs[d].is_one()) return "not monic of degree d in z";
  if (!coeffs[d - 1].is_zero()) return "coefficient of z^(d-1) is nonzero";
  if (!(compose_in_z(f, var(space, "a1")) == var(space, "b"))) return "f(a1) != b";
  if (!(derivative(f, zi) == derivative_product(space, d, critical_points) + correction)) return "f' != d*prod(z - a_i)";
  return std::nullopt;
}

// Smallest prime dividing d when d is a prime power, else nothing.
std::optional<std::uint32_t> prime_power_base(int d) {
  for (int q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    int r = d;
    while (r % q == 0) r /= q;
    if (r == 1 && q != 2) return static_cast<std::uint32_t>(q);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

NormalForm build_normal_form(int d) {
  if (d < 3) throw DomainError("normal form requires d >= 3");
  const auto space = VarSpace::full(d);
  const auto slots = alpha_slots(*space);
  const auto z = var(space, "z");
  const auto a1 = var(space, "a1");

  Poly f = pow(z, d) - pow(a1, d) + var(space, "b");
  for (int i = 2; i <= d - 1; ++i) {
    const Rational c = Rational((i % 2 == 0) ? d : -d) / Rational(d - i);
    const Poly s = elementary_symmetric<RationalField>(space, i, slots).scaled(c);
    f += s * (pow(z, d - i) - pow(a1, d - i));
  }
  Poly fhat = substitute_hat(f);
  NormalForm nf{d, space, VarSpace::hatted(d), std::move(f), std::move(fhat)};

  if (auto bad = normal_form_violation(nf)) {
    throw FalsifiedIdentity("normal form invariant failed: " + *bad, params_dump("build_normal_form", {{"d", d}}));
  }
  return nf;
}

std::optional<std::string> normal_form_violation(const NormalForm& nf) {
  const int d = nf.degree;
  std::vector<Poly> full_points;
  for (int i = 1; i <= d - 1; ++i) full_points.push_back(var(nf.full_space, "a" + std::to_string(i)));
  // Off the reduced locus f' picks up d * s_1 * z^{d-2}.
  Poly s1(nf.full_space);
  for (const auto& a : full_points) s1 += a;
  const Poly correction = Poly::from_int(nf.full_space, d) * s1 * pow(var(nf.full_space, "z"), d - 2);
  if (auto bad = check_one(nf.f, nf.full_space, d, full_points, correction)) return *bad;

  std::vector<Poly> hat_points;
  for (std::size_t i = 1; i + 1 < nf.full_space->arity(); ++i) {
    hat_points.push_back(hat_of_variable<RationalField>(nf.full_space, i));
  }
  if (auto bad = check_one(nf.fhat, nf.hatted_space, d, hat_points, Poly(nf.hatted_space))) return "hatted: " + *bad;

  if (auto p = prime_power_base(d)) {
    if (min_valuation(nf.f, OddPrime(*p)) < 0) return "coefficients not p-integral";
  }
  return std::nullopt;
}

OrbitCache::OrbitCache(int d) : nf_(build_normal_form(d)) {
  hatted_.push_back(var(nf_.hatted_space, "a1"));
  full_.push_back(var(nf_.full_space, "a1"));
}

Poly OrbitCache::point(std::size_t k, bool hatted) const {
  std::lock_guard lock(mutex_);
  auto& cache = hatted ? hatted_ : full_;
  const Poly& f = hatted ? nf_.fhat : nf_.f;
  while (cache.size() <= k) {
    cache.push_back(compose_in_z(f, cache.back()));
    if (cache.size() == 2 && !(cache[1] == var(f.space(), "b"))) {
      throw FalsifiedIdentity("f(a1) != b", params_dump("orbit", {{"d", nf_.degree}}));
    }
  }
  return cache[k];
}

Poly f_knd(const OrbitCache& orbit, std::size_t k, std::size_t n, bool hatted) {
  if (n < 1) throw DomainError("f_knd requires n >= 1");
  return orbit.point(k + n, hatted) - orbit.point(k, hatted);
}

Poly check_divisibility(const OrbitCache& orbit, std::size_t l, std::size_t m, std::size_t k, std::size_t n) {
  if (l > k || m < 1 || n % m != 0) throw DomainError("check_divisibility requires l <= k and m | n");
  const auto dump = params_dump("check_divisibility", {{"d", orbit.degree()},
                                                       {"l", static_cast<long>(l)},
                                                       {"m", static_cast<long>(m)},
                                                       {"k", static_cast<long>(k)},
                                                       {"n", static_cast<long>(n)}});
  try {
    return exact_divide(f_knd(orbit, k, n), f_knd(orbit, l, m));
  } catch (const NotDivisible& e) {
    throw FalsifiedIdentity(std::string("f_{l,m,d} does not divide f_{k,n,d}: ") + e.what(), dump);
  }
}

Poly h_k1p(const OrbitCache& orbit, std::size_t k) {
  const OddPrime p(static_cast<std::uint64_t>(orbit.degree()));
  const auto& space = orbit.normal_form().hatted_space;
  const Poly base = b_minus_a1(space);
  if (k == 0) return base;
  const auto dump = params_dump("h_k1p", {{"p", p.value()}, {"k", static_cast<long>(k)}});
  Poly h(space);
  try {
    if (k == 1) {
      h = exact_divide(f_knd(orbit, 1, 1), base * base);
    } else {
      h = exact_divide(f_knd(orbit, k, 1), f_knd(orbit, k - 1, 1) * base);
    }
  } catch (const NotDivisible& e) {
    throw FalsifiedIdentity(std::string("h_{k,1,p} division failed: ") + e.what(), dump);
  }
  if (k >= 2 && try_divide(h, base)) {
    throw FalsifiedIdentity("b - a1 still divides h_{k,1,p}", dump);
  }
  return h;
}

Poly h_general(const OrbitCache& orbit, std::size_t k, std::size_t n) {
  if (n < 1) throw DomainError("h_general requires n >= 1");
  Poly g = f_knd(orbit, k, n);
  for (std::size_t l = 0; l <= k; ++l) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m != 0 || (l == k && m == n)) continue;
      const Poly lower = f_knd(orbit, l, m);
      while (true) {
        const Poly common = gcd_in_beta(g, lower);
        if (common.is_constant()) break;
        g = exact_divide(g, common);
      }
    }
  }
  return g;
}

Poly expected_lowest_form(int p) {
  const auto space = VarSpace::hatted(p);
  const auto b = var(space, "b");
  Poly sum = b;
  for (int i = 1; i <= p - 2; ++i) sum += var(space, "a" + std::to_string(i));
  Poly prod = Poly::from_int(space, p) * sum;
  for (int i = 2; i <= p - 2; ++i) prod = prod * (b - var(space, "a" + std::to_string(i)));
  return prod;
}

MixedSpecialization mixed_specialize(const Poly& h, int j) {
  const auto& src = h.space();
  const int p = src->degree();
  if (!src->is_hatted()) throw DomainError("mixed_specialize expects a polynomial over the hatted space");
  if (j < 2 || j > p - 2) throw DomainError("mixed_specialize requires 2 <= j <= p-2");
  std::vector<VarSpace::Variable> vars{{VarSpace::Kind::Alpha, 1}};
  for (int i = j + 1; i <= p - 2; ++i) vars.push_back({VarSpace::Kind::Alpha, i});
  vars.push_back({VarSpace::Kind::Beta});
  const auto target = VarSpace::custom(vars, p, false);

  MixedSpecialization out{Poly(target), j, {}};
  std::vector<Poly> images;
  for (std::size_t i = 0; i < src->arity(); ++i) {
    const auto& v = src->variable(i);
    if (v.kind == VarSpace::Kind::Z) {
      if (h.involves(i)) throw DomainError("mixed_specialize: input depends on z");
      images.push_back(Poly(target));
      continue;
    }
    const std::string name = (v.kind == VarSpace::Kind::Alpha && v.alpha_index <= j) ? "a1" : v.name();
    out.mapping.emplace_back(v.name(), name);
    images.push_back(var(target, name));
  }
  out.poly = substitute<RationalField>(h, target, images);
  return out;
}

std::pair<Poly, std::uint32_t> strip_marked_fixed_factor(const Poly& g) {
  const Poly base = b_minus_a1(g.space());
  Poly rest = g;
  std::uint32_t t = 0;
  while (auto q = try_divide(rest, base)) {
    rest = std::move(*q);
    ++t;
  }
  return {std::move(rest), t};
}

ModPOrbit::ModPOrbit(int d, OddPrime p, bool hatted) : d_(d), p_(p), f_(VarSpace::full(d)) {
  const auto nf = build_normal_form(d);
  f_ = reduce_poly_mod_p(hatted ? nf.fhat : nf.f, p);
  space_ = f_.space();
}

ModPPoly ModPOrbit::start_point(const std::string& start) const {
  if (auto i = space_->index_of(start)) return ModPPoly::variable(space_, *i, PrimeField(p_));
  const auto full = VarSpace::full(d_);
  return hat_of_variable(full, full->require(start), PrimeField(p_));
}

ModPPoly ModPOrbit::point(const std::string& start, std::size_t k) {
  auto& seq = cache_[start];
  if (seq.empty()) seq.push_back(start_point(start));
  while (seq.size() <= k) seq.push_back(compose_in_z(f_, seq.back()));
  return seq[k];
}

bool check_power_congruence_mod_p(int d, OddPrime p, std::size_t k, bool hatted) {
  ModPOrbit orbit(d, p, hatted);
  const ModPPoly diff = orbit.point("a1", k + 1) - orbit.point("a1", k);
  const PrimeField F(p);
  const ModPPoly base = ModPPoly::variable(orbit.space(), "b", F) - ModPPoly::variable(orbit.space(), "a1", F);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < k; ++i) e *= static_cast<std::uint64_t>(d);
  return diff == pow(base, e);
}

std::string RigidityReport::to_text() const {
  auto power = [](const std::optional<std::uint64_t>& n) { return n ? std::to_string(*n) : std::string("absent"); };
  std::ostringstream os;
  os << "kind: rigidity\n"
     << "p: " << params.p << '\n'
     << "e: " << params.e << '\n'
     << "k1: " << params.k1 << '\n'
     << "n1: " << params.n1 << '\n'
     << "i: " << params.i << '\n'
     << "ki: " << params.ki << '\n'
     << "ni: " << params.ni << '\n'
     << "space: " << (hatted ? "hatted" : "full") << '\n'
     << "diff1_congruence: " << (diff1_congruence ? "true" : "false") << '\n'
     << "diffi_congruence: " << (diffi_congruence ? "true" : "false") << '\n'
     << "diff1_highest_power_of_b_minus_a1: " << power(diff1_power) << '\n'
     << "diffi_highest_power_of_ai_minus_a1: " << power(diffi_power) << '\n'
     << "diff1_highest: " << diff1_highest << '\n'
     << "diffi_highest: " << diffi_highest << '\n'
     << "coprime-mod-p: " << (coprime_mod_p ? "true" : "false") << '\n';
  return os.str();
}

RigidityReport rigidity_check(const RigidityParams& params, bool hatted) {
  const OddPrime p(params.p);
  if (params.e < 1) throw DomainError("rigidity_check requires e >= 1");
  int d = 1;
  for (std::uint32_t i = 0; i < params.e; ++i) d *= static_cast<int>(params.p);
  if (params.i < 2 || params.i > d - 1) throw DomainError("rigidity_check requires 2 <= i <= d-1");
  if (params.n1 < 1 || params.ni < 1) throw DomainError("rigidity_check requires n1, ni >= 1");

  ModPOrbit orbit(d, p, hatted);
  const PrimeField F(p);
  const auto& space = orbit.space();
  const ModPPoly a1 = ModPPoly::variable(space, "a1", F);
  const ModPPoly u = ModPPoly::variable(space, "b", F) - a1;
  const std::string ai_name = "a" + std::to_string(params.i);
  const ModPPoly w = orbit.start_point(ai_name) - a1;
  auto dpow = [&](std::size_t j) {
    std::uint64_t r = 1;
    for (std::size_t t = 0; t < j; ++t) r *= static_cast<std::uint64_t>(d);
    return r;
  };
  auto tail = [&](std::size_t k, std::size_t n) {
    ModPPoly s(space, F);
    for (std::size_t j = k; j < k + n; ++j) s += pow(u, dpow(j));
    return s;
  };

  RigidityReport r;
  r.params = params;
  r.hatted = hatted;
  const ModPPoly diff1 = orbit.point("a1", params.k1 + params.n1) - orbit.point("a1", params.k1);
  const ModPPoly diffi = orbit.point(ai_name, params.ki + params.ni) - orbit.point(ai_name, params.ki);
  r.diff1_congruence = diff1 == tail(params.k1, params.n1);
  r.diffi_congruence =
      diffi == pow(w, dpow(params.ki + params.ni)) - pow(w, dpow(params.ki)) + tail(params.ki, params.ni);
  const ModPPoly high1 = homogeneous_part(diff1, HomogeneousWhich::Highest);
  const ModPPoly highi = homogeneous_part(diffi, HomogeneousWhich::Highest);
  r.diff1_highest = high1.to_string();
  r.diffi_highest = highi.to_string();
  r.diff1_power = is_power_of(high1, u);
  r.diffi_power = is_power_of(highi, w);
  r.coprime_mod_p = r.diff1_congruence && r.diffi_congruence && r.diff1_power && r.diffi_power && !(u == w);
  if (!r.coprime_mod_p) throw FalsifiedIdentity("rigidity computation failed", r.to_text());
  return r;
}

bool check_telescoping(const OrbitCache& orbit, std::size_t k, std::size_t m, std::size_t t) {
  if (m < 1 || t < 1) throw DomainError("check_telescoping requires m, t >= 1");
  Poly sum(orbit.normal_form().hatted_space);
  for (std::size_t i = 0; i < t; ++i) sum += f_knd(orbit, k + m * i, m);
  return sum == f_knd(orbit, k, m * t);
}

bool check_derivative_congruence(const OrbitCache& orbit, std::size_t k) {
  if (k < 1) throw DomainError("check_derivative_congruence requires k >= 1");
  const auto& nf = orbit.normal_form();
  const int d = nf.degree;
  const Poly modulus = f_knd(orbit, k - 1, 1);
  const Poly quotient = exact_divide(f_knd(orbit, k, 1), modulus);
  const Poly x = orbit.point(k - 1);
  Poly rhs = Poly::from_int(nf.hatted_space, d);
  for (std::size_t i = 1; i + 1 < nf.full_space->arity(); ++i) {
    rhs = rhs * (x - hat_of_variable<RationalField>(nf.full_space, i));
  }
  return remainder_in_beta(quotient, modulus) == remainder_in_beta(rhs, modulus);
}

}  // namespace critlocus
