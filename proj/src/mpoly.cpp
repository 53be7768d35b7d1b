#include "critlocus/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <type_traits>

namespace critlocus {

namespace {

template <class F>
constexpr bool is_prime_field = std::is_same_v<F, PrimeField>;

std::string render_monomial(const Monomial& m, const VarSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += space.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint32_t>::max() / 2) throw DomainError("exponent overflow");
  return static_cast<std::uint32_t>(e);
}

template <class F>
SparsePoly<F> one_like(const SparsePoly<F>& g) {
  return SparsePoly<F>::constant(g.space(), g.field().one(), g.field());
}

template <class F>
void require_beta(const SparsePoly<F>& g, const char* op) {
  if (!g.space()->beta_index()) throw DomainError(std::string(op) + ": space has no b variable");
}

// Univariate-in-b view: coefficient vector, highest entry nonzero.
template <class F>
using BetaPoly = std::vector<SparsePoly<F>>;

template <class F>
void trim(BetaPoly<F>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

template <class F>
BetaPoly<F> pseudo_remainder(const BetaPoly<F>& a, const BetaPoly<F>& b) {
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  BetaPoly<F> r = a;
  const auto& lc = b[n];
  for (std::size_t step = 0; step + n <= m; ++step) {
    const std::size_t top = m - step;
    const auto c = r[top];
    for (auto& x : r) {
      if (!x.is_zero() && !lc.is_one()) x = lc * x;
    }
    if (!c.is_zero()) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (!b[j].is_zero()) r[top - n + j] -= c * b[j];
      }
    }
    r[top] = SparsePoly<F>(a[0].space(), a[0].field());
  }
  r.erase(r.begin() + static_cast<long>(n), r.end());
  trim(r);
  return r;
}

}  // namespace

template <class F>
std::string SparsePoly<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = F::is_negative(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const auto magnitude = F::abs(c);
    if (m.is_one()) {
      out += F::render(magnitude);
    } else if (F::is_one(magnitude)) {
      out += render_monomial(m, *space_);
    } else {
      out += F::render(magnitude) + '*' + render_monomial(m, *space_);
    }
  }
  return out;
}

ModPPoly frobenius(const ModPPoly& g) {
  const std::uint32_t p = g.field().p;
  ModPPoly r(g.space(), g.field());
  for (const auto& [m, c] : g.terms()) {
    Monomial mp;
    for (std::size_t i = 0; i < kMaxVars; ++i) mp.exp[i] = checked_exponent(std::uint64_t{m[i]} * p);
    mp.total = checked_exponent(std::uint64_t{m.total} * p);
    r.add_term(mp, c);
  }
  return r;
}

template <class F>
SparsePoly<F> pow(const SparsePoly<F>& g, std::uint64_t e) {
  if (e == 0) return one_like(g);
  if (e == 1 || g.is_zero()) return g;
  if constexpr (is_prime_field<F>) {
    if (e % g.field().p == 0) return frobenius(pow(g, e / g.field().p));
  }
  if (g.size() == 1) {
    const auto& [m, c] = *g.terms().begin();
    Monomial me;
    for (std::size_t i = 0; i < kMaxVars; ++i) me.exp[i] = checked_exponent(std::uint64_t{m[i]} * e);
    me.total = checked_exponent(std::uint64_t{m.total} * e);
    auto ce = g.field().one();
    auto base = c;
    for (std::uint64_t k = e; k > 0; k >>= 1) {
      if (k & 1) ce = g.field().mul(ce, base);
      if (k > 1) base = g.field().mul(base, base);
    }
    return SparsePoly<F>::term(g.space(), me, ce, g.field());
  }
  SparsePoly<F> result = one_like(g);
  SparsePoly<F> base = g;
  bool started = false;
  for (std::uint64_t k = e; k > 0; k >>= 1) {
    if (k & 1) {
      result = started ? result * base : base;
      started = true;
    }
    if (k > 1) base = base * base;
  }
  return result;
}

template <class F>
SparsePoly<F> derivative(const SparsePoly<F>& g, std::size_t var) {
  SparsePoly<F> r(g.space(), g.field());
  for (const auto& [m, c] : g.terms()) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm.set(var, m[var] - 1);
    r.add_term(dm, g.field().mul(c, g.field().from_int(static_cast<long>(m[var]))));
  }
  return r;
}

template <class F>
SparsePoly<F> substitute(const SparsePoly<F>& g, const SpacePtr& target,
                         std::span<const SparsePoly<F>> images) {
  const std::size_t arity = g.space()->arity();
  if (images.size() != arity) throw DomainError("substitute: one image per source variable required");
  for (const auto& im : images) require_same_space(im.space(), target, "substitute");
  const F& field = g.field();

  // Single-term images are applied monomially; the rest go through cached powers.
  std::vector<std::size_t> heavy;
  for (std::size_t i = 0; i < arity; ++i) {
    if (images[i].size() > 1 && g.involves(i)) heavy.push_back(i);
  }

  std::map<std::vector<std::uint32_t>, SparsePoly<F>> groups;
  for (const auto& [m, c] : g.terms()) {
    Monomial light = Monomial::one();
    auto coeff = c;
    for (std::size_t i = 0; i < arity; ++i) {
      if (m[i] == 0 || std::find(heavy.begin(), heavy.end(), i) != heavy.end()) continue;
      if (images[i].is_zero()) {
        coeff = field.zero();
        break;
      }
      const auto& [im_m, im_c] = *images[i].terms().begin();
      for (std::uint32_t k = 0; k < m[i]; ++k) {
        light = light * im_m;
        coeff = field.mul(coeff, im_c);
      }
    }
    if (F::is_zero(coeff)) continue;
    std::vector<std::uint32_t> key;
    key.reserve(heavy.size());
    for (auto i : heavy) key.push_back(m[i]);
    auto [it, inserted] = groups.try_emplace(key, SparsePoly<F>(target, field));
    it->second.add_term(light, coeff);
  }

  std::vector<std::map<std::uint32_t, SparsePoly<F>>> powers(heavy.size());
  auto power_of = [&](std::size_t h, std::uint32_t e) -> const SparsePoly<F>& {
    auto& cache = powers[h];
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    const auto& base = images[heavy[h]];
    SparsePoly<F> value(target, field);
    bool done = false;
    if constexpr (is_prime_field<F>) {
      if (e % field.p == 0) {
        value = pow(base, e);
        done = true;
      }
    }
    if (!done) {
      if (e == 1) {
        value = base;
      } else if (auto prev = cache.find(e - 1); prev != cache.end()) {
        value = prev->second * base;
      } else {
        value = pow(base, e);
      }
    }
    return cache.emplace(e, std::move(value)).first->second;
  };

  SparsePoly<F> result(target, field);
  for (auto& [key, coeff_poly] : groups) {
    SparsePoly<F> term = std::move(coeff_poly);
    for (std::size_t h = 0; h < heavy.size(); ++h) {
      if (key[h] == 0) continue;
      // Powers are requested in increasing order so incremental products hit the cache.
      for (std::uint32_t e = 1; e <= key[h]; ++e) {
        if (powers[h].count(e) == 0 && e != key[h]) {
          bool need = true;
          if constexpr (is_prime_field<F>) need = key[h] % field.p != 0;
          if (!need) break;
          power_of(h, e);
        }
      }
      term = term * power_of(h, key[h]);
    }
    result += term;
  }
  return result;
}

template <class F>
SparsePoly<F> substitute_var(const SparsePoly<F>& g, std::size_t var, const SparsePoly<F>& value) {
  require_same_space(g.space(), value.space(), "substitute_var");
  std::vector<SparsePoly<F>> images;
  for (std::size_t i = 0; i < g.space()->arity(); ++i) {
    images.push_back(i == var ? value : SparsePoly<F>::variable(g.space(), i, g.field()));
  }
  return substitute<F>(g, g.space(), images);
}

template <class F>
SparsePoly<F> change_space(const SparsePoly<F>& g, const SpacePtr& target) {
  std::vector<std::optional<std::size_t>> where(g.space()->arity());
  for (std::size_t i = 0; i < g.space()->arity(); ++i) where[i] = target->index_of(g.space()->name(i));
  SparsePoly<F> r(target, g.field());
  for (const auto& [m, c] : g.terms()) {
    Monomial tm;
    for (std::size_t i = 0; i < g.space()->arity(); ++i) {
      if (m[i] == 0) continue;
      if (!where[i]) {
        throw VarSpaceMismatch("change_space: " + g.space()->name(i) + " missing from " + target->describe());
      }
      tm.set(*where[i], m[i]);
    }
    r.add_term(tm, c);
  }
  return r;
}

template <class F>
SparsePoly<F> compose_in_z(const SparsePoly<F>& g, const SparsePoly<F>& h) {
  require_same_space(g.space(), h.space(), "compose_in_z");
  const auto z = g.space()->z_index();
  if (!z) throw DomainError("compose_in_z: space has no z");
  return substitute_var(g, *z, h);
}

template <class F>
SparsePoly<F> hat_of_variable(const SpacePtr& full_space, std::size_t var, F field) {
  const int d = full_space->degree();
  if (full_space->is_hatted() || d < 3 || !(*full_space == *VarSpace::full(d))) {
    throw VarSpaceMismatch("hat map expects the unhatted space of a degree, got " + full_space->describe());
  }
  const auto hatted = VarSpace::hatted(d);
  const auto& v = full_space->variable(var);
  if (v.kind == VarSpace::Kind::Alpha && v.alpha_index == d - 1) {
    SparsePoly<F> sum(hatted, field);
    for (int i = 1; i <= d - 2; ++i) sum += SparsePoly<F>::variable(hatted, *hatted->alpha_slot(i), field);
    return -sum;
  }
  return SparsePoly<F>::variable(hatted, hatted->require(v.name()), field);
}

template <class F>
SparsePoly<F> substitute_hat(const SparsePoly<F>& g) {
  const auto& space = g.space();
  std::vector<SparsePoly<F>> images;
  for (std::size_t i = 0; i < space->arity(); ++i) images.push_back(hat_of_variable(space, i, g.field()));
  return substitute<F>(g, VarSpace::hatted(space->degree()), images);
}

template <class F>
SparsePoly<F> elementary_symmetric(const SpacePtr& space, std::size_t i,
                                   std::span<const std::size_t> vars, F field) {
  if (i > vars.size()) throw DomainError("elementary_symmetric: index exceeds variable count");
  std::vector<SparsePoly<F>> e(i + 1, SparsePoly<F>(space, field));
  e[0] = SparsePoly<F>::constant(space, field.one(), field);
  for (auto v : vars) {
    const auto x = SparsePoly<F>::variable(space, v, field);
    for (std::size_t j = i; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[i];
}

template <class F>
SparsePoly<F> phi(const SpacePtr& space, long n, std::size_t x, std::size_t y, F field) {
  if (n < 1) throw DomainError("phi: n must be at least 1");
  SparsePoly<F> r(space, field);
  for (long j = 0; j < n; ++j) {
    Monomial m;
    m.set(x, static_cast<std::uint32_t>(j));
    Monomial my;
    my.set(y, static_cast<std::uint32_t>(n - 1 - j));
    r.add_term(x == y ? m * my : m * my, field.one());
  }
  return r;
}

template <class F>
std::optional<SparsePoly<F>> try_divide(const SparsePoly<F>& num, const SparsePoly<F>& den) {
  require_same_space(num.space(), den.space(), "divide");
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  const F& field = num.field();
  SparsePoly<F> rem = num;
  SparsePoly<F> quotient(num.space(), field);
  const auto& [lead_m, lead_c] = den.leading_term();
  const auto lead_inv = field.div(field.one(), lead_c);
  while (!rem.is_zero()) {
    const auto [m, c] = *rem.terms().begin();
    if (!lead_m.divides(m)) return std::nullopt;
    const Monomial qm = m / lead_m;
    const auto qc = field.mul(c, lead_inv);
    quotient.add_term(qm, qc);
    const auto neg_qc = field.neg(qc);
    for (const auto& [dm, dc] : den.terms()) rem.add_term(dm * qm, field.mul(dc, neg_qc));
  }
  return quotient;
}

template <class F>
SparsePoly<F> exact_divide(const SparsePoly<F>& num, const SparsePoly<F>& den) {
  auto q = try_divide(num, den);
  if (!q) {
    throw NotDivisible("(" + num.to_string().substr(0, 200) + ") is not divisible by (" +
                       den.to_string().substr(0, 200) + ")");
  }
  if (!(*q * den == num)) throw NotDivisible("quotient failed re-verification");
  return std::move(*q);
}

template <class F>
std::vector<SparsePoly<F>> coefficients_in(const SparsePoly<F>& g, std::size_t var) {
  std::vector<SparsePoly<F>> out(g.degree_in(var) + 1, SparsePoly<F>(g.space(), g.field()));
  for (const auto& [m, c] : g.terms()) {
    Monomial rest = m;
    rest.set(var, 0);
    out[m[var]].add_term(rest, c);
  }
  return out;
}

template <class F>
SparsePoly<F> from_coefficients_in(const std::vector<SparsePoly<F>>& coeffs, std::size_t var,
                                   const SpacePtr& space, F field) {
  SparsePoly<F> r(space, field);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    r += coeffs[j].times_term(Monomial::variable(var, static_cast<std::uint32_t>(j)), field.one());
  }
  return r;
}

template <class F>
bool is_monic_in_beta(const SparsePoly<F>& g) {
  const auto b = g.space()->beta_index();
  if (!b || g.is_zero()) return false;
  const auto coeffs = coefficients_in(g, *b);
  return coeffs.back().is_one();
}

template <class F>
SparsePoly<F> remainder_in_beta(const SparsePoly<F>& a, const SparsePoly<F>& b) {
  require_same_space(a.space(), b.space(), "remainder_in_beta");
  require_beta(a, "remainder_in_beta");
  if (!is_monic_in_beta(b)) throw NotMonicInBeta("remainder_in_beta: divisor not monic in b");
  const auto bi = *a.space()->beta_index();
  auto r = coefficients_in(a, bi);
  const auto d = coefficients_in(b, bi);
  const std::size_t n = d.size() - 1;
  for (std::size_t top = r.size(); top-- > n;) {
    if (r[top].is_zero()) continue;
    const auto c = r[top];
    for (std::size_t j = 0; j < n; ++j) {
      if (!d[j].is_zero()) r[top - n + j] -= c * d[j];
    }
    r[top] = SparsePoly<F>(a.space(), a.field());
  }
  if (r.size() > n) r.erase(r.begin() + static_cast<long>(n), r.end());
  return from_coefficients_in(r, bi, a.space(), a.field());
}

template <class F>
SparsePoly<F> gcd_in_beta(const SparsePoly<F>& a, const SparsePoly<F>& b) {
  require_same_space(a.space(), b.space(), "gcd_in_beta");
  require_beta(a, "gcd_in_beta");
  if (!is_monic_in_beta(a) || !is_monic_in_beta(b)) throw NotMonicInBeta("gcd_in_beta: inputs must be monic in b");
  const auto bi = *a.space()->beta_index();
  const auto& space = a.space();
  const F& field = a.field();
  BetaPoly<F> A = coefficients_in(a, bi);
  BetaPoly<F> B = coefficients_in(b, bi);
  if (A.size() < B.size()) std::swap(A, B);
  if (B.size() == 1) return one_like(a);

  // Subresultant PRS.
  SparsePoly<F> g = one_like(a);
  SparsePoly<F> h = one_like(a);
  while (true) {
    const std::size_t delta = A.size() - B.size();
    BetaPoly<F> R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return one_like(a);
    A = std::move(B);
    const SparsePoly<F> divisor = g * pow(h, delta);
    for (auto& c : R) {
      if (!c.is_zero()) c = exact_divide(c, divisor);
    }
    B = std::move(R);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(pow(g, delta), pow(h, delta - 1));
    }
  }
  const SparsePoly<F> lead = B.back();
  for (auto& c : B) {
    if (!c.is_zero()) c = exact_divide(c, lead);
  }
  return from_coefficients_in(B, bi, space, field);
}

template <class F>
SparsePoly<F> resultant_in_beta(const SparsePoly<F>& g, const SparsePoly<F>& h) {
  require_same_space(g.space(), h.space(), "resultant_in_beta");
  require_beta(g, "resultant_in_beta");
  const auto bi = *g.space()->beta_index();
  const auto gc = coefficients_in(g, bi);
  const auto hc = coefficients_in(h, bi);
  const std::size_t m = gc.size() - 1;
  const std::size_t n = hc.size() - 1;
  if (g.is_zero() || h.is_zero() || m == 0 || n == 0) throw ZeroDegree("resultant_in_beta: input constant in b");
  const std::size_t size = m + n;
  const SparsePoly<F> zero(g.space(), g.field());
  std::vector<std::vector<SparsePoly<F>>> M(size, std::vector<SparsePoly<F>>(size, zero));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = gc[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = hc[n - j];
  }

  // Fraction-free Bareiss elimination. The pivot is the smallest nonzero entry
  // in the column (ties to the lowest row), which keeps the linear-h case at
  // synthetic-division cost.
  bool negate = false;
  SparsePoly<F> prev = one_like(g);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t best = size;
    for (std::size_t r = k; r < size; ++r) {
      if (M[r][k].is_zero()) continue;
      if (best == size || M[r][k].size() < M[best][k].size()) best = r;
    }
    if (best == size) return zero;
    if (best != k) {
      std::swap(M[best], M[k]);
      negate = !negate;
    }
    const auto& pivot = M[k][k];
    const bool pivot_is_prev = pivot == prev;
    for (std::size_t i = k + 1; i < size; ++i) {
      const SparsePoly<F> factor = M[i][k];
      for (std::size_t j = k + 1; j < size; ++j) {
        if (factor.is_zero()) {
          if (pivot_is_prev || M[i][j].is_zero()) continue;
          M[i][j] = exact_divide(pivot * M[i][j], prev);
          continue;
        }
        SparsePoly<F> t = pivot_is_prev && prev.is_one() ? M[i][j] : pivot * M[i][j];
        if (!M[k][j].is_zero()) t -= factor * M[k][j];
        M[i][j] = prev.is_one() ? std::move(t) : exact_divide(t, prev);
      }
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  return negate ? -M[size - 1][size - 1] : M[size - 1][size - 1];
}

template <class F>
SparsePoly<F> homogeneous_part(const SparsePoly<F>& g, HomogeneousWhich which) {
  if (g.is_zero()) throw ZeroPolynomial("homogeneous part of zero polynomial");
  const auto target = which == HomogeneousWhich::Lowest ? g.lowest_total_degree() : g.total_degree();
  SparsePoly<F> r(g.space(), g.field());
  for (const auto& [m, c] : g.terms()) {
    if (m.total == static_cast<std::uint32_t>(target)) r.add_term(m, c);
  }
  return r;
}

ModPPoly reduce_poly_mod_p(const Poly& g, OddPrime p) {
  ModPPoly r(g.space(), PrimeField(p));
  for (const auto& [m, c] : g.terms()) {
    try {
      r.add_term(m, reduce_mod_p(c, p).residue());
    } catch (const NegativeValuation&) {
      const auto mono = render_monomial(m, *g.space());
      throw NegativeValuation("coefficient " + c.to_string() + " of monomial " + (mono.empty() ? "1" : mono) +
                              " is not p-integral for p = " + std::to_string(p.value()));
    }
  }
  return r;
}

Poly lift_to_rational(const ModPPoly& g) {
  Poly r(g.space());
  for (const auto& [m, c] : g.terms()) r.add_term(m, Rational(static_cast<long>(c)));
  return r;
}

Valuation min_valuation(const Poly& g, OddPrime p) {
  Valuation best = Valuation::infinity();
  for (const auto& [m, c] : g.terms()) best = std::min(best, padic_valuation(c, p));
  return best;
}

std::optional<std::uint64_t> is_power_of(const ModPPoly& g, const ModPPoly& h) {
  require_same_space(g.space(), h.space(), "is_power_of");
  if (h.is_constant()) throw DomainError("is_power_of: base must be nonconstant");
  if (g.is_zero()) return std::nullopt;
  if (g.is_one()) return 0;
  const auto dg = static_cast<std::uint64_t>(g.total_degree());
  const auto dh = static_cast<std::uint64_t>(h.total_degree());
  if (dg % dh != 0) return std::nullopt;
  const std::uint64_t n = dg / dh;
  // Small exponents peel off one factor at a time; large ones compare
  // against h^n built through the Frobenius shortcut.
  if (n <= 32) {
    ModPPoly rest = g;
    for (std::uint64_t k = 0; k < n; ++k) {
      auto q = try_divide(rest, h);
      if (!q) return std::nullopt;
      rest = std::move(*q);
    }
    return rest.is_one() ? std::optional<std::uint64_t>(n) : std::nullopt;
  }
  return pow(h, n) == g ? std::optional<std::uint64_t>(n) : std::nullopt;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SpacePtr& space) : text_(text), space_(space) {}

  Poly parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Poly r = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(space_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Poly den = factor();
        if (!den.is_constant() || den.is_zero()) throw ParseError("divisor must be a nonzero constant", at);
        acc = acc * Poly::constant(space_, den.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  std::uint64_t integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  Poly power_suffix(Poly base) {
    if (accept('^')) return pow(base, integer_literal());
    return base;
  }

  Poly factor() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return power_suffix(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string literal(text_.substr(start, pos_ - start));
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) throw ParseError("expected denominator", den_start);
        literal += '/' + std::string(text_.substr(den_start, pos_ - den_start));
      }
      Rational q;
      try {
        q = Rational::parse(literal);
      } catch (const DomainError&) {
        throw ParseError("zero denominator", start);
      }
      return power_suffix(Poly::constant(space_, q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto index = space_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", start);
      return power_suffix(Poly::variable(space_, *index));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  SpacePtr space_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const SpacePtr& space) { return Parser(text, space).parse(); }

ModPPoly parse_modp_poly(std::string_view text, const SpacePtr& space, OddPrime p) {
  return reduce_poly_mod_p(parse_poly(text, space), p);
}

#define CRITLOCUS_INSTANTIATE(F)                                                                        \
  template class SparsePoly<F>;                                                                         \
  template SparsePoly<F> pow(const SparsePoly<F>&, std::uint64_t);                                      \
  template SparsePoly<F> derivative(const SparsePoly<F>&, std::size_t);                                 \
  template SparsePoly<F> substitute(const SparsePoly<F>&, const SpacePtr&, std::span<const SparsePoly<F>>); \
  template SparsePoly<F> substitute_var(const SparsePoly<F>&, std::size_t, const SparsePoly<F>&);       \
  template SparsePoly<F> change_space(const SparsePoly<F>&, const SpacePtr&);                           \
  template SparsePoly<F> compose_in_z(const SparsePoly<F>&, const SparsePoly<F>&);                      \
  template SparsePoly<F> substitute_hat(const SparsePoly<F>&);                                          \
  template SparsePoly<F> hat_of_variable(const SpacePtr&, std::size_t, F);                              \
  template SparsePoly<F> elementary_symmetric(const SpacePtr&, std::size_t, std::span<const std::size_t>, F); \
  template SparsePoly<F> phi(const SpacePtr&, long, std::size_t, std::size_t, F);                       \
  template SparsePoly<F> exact_divide(const SparsePoly<F>&, const SparsePoly<F>&);                      \
  template std::optional<SparsePoly<F>> try_divide(const SparsePoly<F>&, const SparsePoly<F>&);         \
  template std::vector<SparsePoly<F>> coefficients_in(const SparsePoly<F>&, std::size_t);               \
  template SparsePoly<F> from_coefficients_in(const std::vector<SparsePoly<F>>&, std::size_t,           \
                                              const SpacePtr&, F);                                      \
  template bool is_monic_in_beta(const SparsePoly<F>&);                                                 \
  template SparsePoly<F> remainder_in_beta(const SparsePoly<F>&, const SparsePoly<F>&);                 \
  template SparsePoly<F> gcd_in_beta(const SparsePoly<F>&, const SparsePoly<F>&);                       \
  template SparsePoly<F> resultant_in_beta(const SparsePoly<F>&, const SparsePoly<F>&);                 \
  template SparsePoly<F> homogeneous_part(const SparsePoly<F>&, HomogeneousWhich);

CRITLOCUS_INSTANTIATE(RationalField)
CRITLOCUS_INSTANTIATE(PrimeField)

#undef CRITLOCUS_INSTANTIATE

}  // namespace critlocus
