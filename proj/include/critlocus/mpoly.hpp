#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "critlocus/errors.hpp"
#include "critlocus/exactnum.hpp"
#include "critlocus/fields.hpp"
#include "critlocus/varspace.hpp"

namespace critlocus {

/// Canonical sparse multivariate polynomial. Terms are kept in an ordered map
/// keyed by exponent vector in graded reverse-lex order (largest first), and
/// no stored coefficient is ever zero, so structural equality is polynomial
/// equality.
template <class F>
class SparsePoly {
 public:
  using Field = F;
  using Coeff = typename F::value_type;
  using TermMap = std::map<Monomial, Coeff, GrevlexDescending>;

  explicit SparsePoly(SpacePtr space, F field = {}) : space_(std::move(space)), field_(field) {}

  static SparsePoly constant(SpacePtr space, const Coeff& c, F field = {}) {
    SparsePoly r(std::move(space), field);
    r.add_term(Monomial::one(), c);
    return r;
  }
  static SparsePoly from_int(SpacePtr space, long c, F field = {}) {
    return constant(space, field.from_int(c), field);
  }
  static SparsePoly variable(SpacePtr space, std::size_t index, F field = {}) {
    if (index >= space->arity()) throw DomainError("variable index out of range");
    SparsePoly r(std::move(space), field);
    r.add_term(Monomial::variable(index), field.one());
    return r;
  }
  static SparsePoly variable(SpacePtr space, std::string_view name, F field = {}) {
    const auto i = space->require(name);
    return variable(std::move(space), i, field);
  }
  static SparsePoly term(SpacePtr space, const Monomial& m, const Coeff& c, F field = {}) {
    SparsePoly r(std::move(space), field);
    r.add_term(m, c);
    return r;
  }

  const SpacePtr& space() const { return space_; }
  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && F::is_one(terms_.begin()->second); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }
  Coeff constant_term() const { return coefficient(Monomial::one()); }

  /// -1 for the zero polynomial.
  long total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.total); }
  long lowest_total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.total); }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  const std::pair<const Monomial, Coeff>& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of zero polynomial");
    return *terms_.begin();
  }

  /// Accumulates c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coeff& c) {
    if (F::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      field_.add_to(it->second, c);
      if (F::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    require_same_space(space_, o.space_, "add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    require_same_space(space_, o.space_, "subtract");
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return a.scaled(a.field_.neg(a.field_.one())); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require_same_space(a.space_, b.space_, "multiply");
    SparsePoly r(a.space_, a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1) return b.times_term(a.terms_.begin()->first, a.terms_.begin()->second);
    if (b.size() == 1) return a.times_term(b.terms_.begin()->first, b.terms_.begin()->second);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(a.size() * 2 + b.size() * 2);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(ma * mb, a.field_.zero());
        a.field_.add_to(it->second, a.field_.mul(ca, cb));
      }
    }
    for (auto& [m, c] : acc) {
      if (!F::is_zero(c)) r.terms_.emplace(m, std::move(c));
    }
    return r;
  }

  SparsePoly scaled(const Coeff& c) const {
    SparsePoly r(space_, field_);
    if (F::is_zero(c)) return r;
    auto hint = r.terms_.end();
    for (const auto& [m, v] : terms_) hint = r.terms_.emplace_hint(hint, m, field_.mul(v, c));
    return r;
  }

  /// Multiplication by c * m; monomial multiplication preserves the order.
  SparsePoly times_term(const Monomial& mono, const Coeff& c) const {
    SparsePoly r(space_, field_);
    if (F::is_zero(c)) return r;
    auto hint = r.terms_.end();
    for (const auto& [m, v] : terms_) hint = r.terms_.emplace_hint(hint, m * mono, field_.mul(v, c));
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "b^3 - 3*a1^2*b + 2*a1^3".
  std::string to_string() const;

 private:
  SpacePtr space_;
  F field_;
  TermMap terms_;
};

using Poly = SparsePoly<RationalField>;
using ModPPoly = SparsePoly<PrimeField>;

enum class HomogeneousWhich { Lowest, Highest };

/// g^e by repeated squaring; over F_p an exponent divisible by p is routed
/// through the Frobenius map (g^p = g with every exponent scaled by p).
template <class F>
SparsePoly<F> pow(const SparsePoly<F>& g, std::uint64_t e);

/// Frobenius endomorphism of F_p[x]: sum c*m -> sum c*m^p.
ModPPoly frobenius(const ModPPoly& g);

template <class F>
SparsePoly<F> derivative(const SparsePoly<F>& g, std::size_t var);

/// Ring homomorphism into `target`: source variable i is sent to images[i].
template <class F>
SparsePoly<F> substitute(const SparsePoly<F>& g, const SpacePtr& target,
                         std::span<const SparsePoly<F>> images);

/// Replaces a single variable by a polynomial in the same space.
template <class F>
SparsePoly<F> substitute_var(const SparsePoly<F>& g, std::size_t var, const SparsePoly<F>& value);

/// Re-expresses g in `target` by variable name; throws if g uses a variable
/// absent from target.
template <class F>
SparsePoly<F> change_space(const SparsePoly<F>& g, const SpacePtr& target);

/// g with z replaced by h.
template <class F>
SparsePoly<F> compose_in_z(const SparsePoly<F>& g, const SparsePoly<F>& h);

/// Hat map: a_{d-1} -> -(a_1 + ... + a_{d-2}), result in the hatted space.
template <class F>
SparsePoly<F> substitute_hat(const SparsePoly<F>& g);

/// The image of a single variable under the hat map, e.g. a_{d-1} as a
/// polynomial in the hatted space.
template <class F>
SparsePoly<F> hat_of_variable(const SpacePtr& full_space, std::size_t var, F field = {});

/// e_i over the listed variables; e_0 = 1.
template <class F>
SparsePoly<F> elementary_symmetric(const SpacePtr& space, std::size_t i,
                                   std::span<const std::size_t> vars, F field = {});

/// Phi_n(x, y) = sum_{j=0}^{n-1} x^j y^{n-1-j}.
template <class F>
SparsePoly<F> phi(const SpacePtr& space, long n, std::size_t x, std::size_t y, F field = {});

/// num / den when the division is exact; re-verifies the product.
template <class F>
SparsePoly<F> exact_divide(const SparsePoly<F>& num, const SparsePoly<F>& den);

template <class F>
std::optional<SparsePoly<F>> try_divide(const SparsePoly<F>& num, const SparsePoly<F>& den);

/// coefficients[j] is the coefficient of var^j, as a polynomial in the same space.
template <class F>
std::vector<SparsePoly<F>> coefficients_in(const SparsePoly<F>& g, std::size_t var);

template <class F>
SparsePoly<F> from_coefficients_in(const std::vector<SparsePoly<F>>& coeffs, std::size_t var,
                                   const SpacePtr& space, F field = {});

/// True iff g is monic as a polynomial in b over the other variables.
template <class F>
bool is_monic_in_beta(const SparsePoly<F>& g);

/// Remainder of a modulo b as polynomials in b; b must be monic in b.
template <class F>
SparsePoly<F> remainder_in_beta(const SparsePoly<F>& a, const SparsePoly<F>& b);

/// gcd of two polynomials monic in b, normalized monic in b.
template <class F>
SparsePoly<F> gcd_in_beta(const SparsePoly<F>& a, const SparsePoly<F>& b);

/// Sylvester-matrix resultant in b (rows of g first), by Bareiss elimination.
template <class F>
SparsePoly<F> resultant_in_beta(const SparsePoly<F>& g, const SparsePoly<F>& h);

template <class F>
SparsePoly<F> homogeneous_part(const SparsePoly<F>& g, HomogeneousWhich which);

/// Coefficient-wise reduction into F_p. Throws NegativeValuation naming the
/// offending monomial.
ModPPoly reduce_poly_mod_p(const Poly& g, OddPrime p);

/// Residues lifted to integers in [0, p).
Poly lift_to_rational(const ModPPoly& g);

/// Minimum p-adic valuation over all coefficients (+inf for zero).
Valuation min_valuation(const Poly& g, OddPrime p);

/// N with g = h^N if one exists.
std::optional<std::uint64_t> is_power_of(const ModPPoly& g, const ModPPoly& h);

Poly parse_poly(std::string_view text, const SpacePtr& space);
ModPPoly parse_modp_poly(std::string_view text, const SpacePtr& space, OddPrime p);

}  // namespace critlocus
