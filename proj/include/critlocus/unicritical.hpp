#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "critlocus/certify.hpp"
#include "critlocus/exactnum.hpp"
#include "critlocus/mpoly.hpp"

namespace critlocus {

/// Dense univariate polynomial in b over Q, constant term first; the leading
/// stored coefficient is nonzero (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UniPoly primitive() const;

  /// "b^4 + 3*b^2 + 3", same format as multivariate rendering.
  std::string to_string() const;
  Poly to_poly(const SpacePtr& space) const;
  static UniPoly from_poly(const Poly& g);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a by b over Q.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly compose(const UniPoly& g, const UniPoly& h);

/// f^k(0) for f = z^d + b.
UniPoly uni_orbit_point(int d, std::size_t k);
/// f^{k+n}(0) - f^k(0).
UniPoly uni_f_knd(int d, std::size_t k, std::size_t n);

struct RemovedFactor {
  std::size_t l = 0;
  std::size_t m = 0;
  UniPoly factor;  // monic gcd removed at this step
};

struct RResult {
  UniPoly R;
  std::vector<RemovedFactor> removed;
  /// Sum of the degrees of all removed factors.
  long removed_degree() const;
};

/// R_{k,n,d} by gcd removal. `reverse_order` walks the (l, m) pairs in the
/// opposite order; the result must not depend on it.
RResult R_knd(int d, std::size_t k, std::size_t n, bool reverse_order = false);

/// Classical Eisenstein test at p for R_{k,1,p}.
EisensteinCertificate certify_R_eisenstein(const UniPoly& R, OddPrime p, TargetId target = {});

/// h(0, ..., 0, b) / b^{p-2} for a polynomial over the hatted space of degree p.
UniPoly unicritical_restriction(const Poly& h);

struct Complex {
  std::string re;
  std::string im;
  friend bool operator==(const Complex&, const Complex&) = default;
};

struct PreperiodicityWitness {
  std::complex<double> root;
  double residual = 0;
  double margin = 0;  // +inf when no smaller (l, m) exists
  double tol_eq = 1e-9;
  double tol_strict = 1e-6;
  bool passed = false;

  /// "re+im*i" with 17 significant digits.
  std::string root_text() const;
  std::string to_text() const;
};

struct RootFinderOptions {
  std::uint64_t seed = 20240531;
  int max_iterations = 2000;
};

/// All complex roots of a squarefree polynomial: Aberth-Ehrlich iteration
/// followed by Newton polishing in multiprecision. Roots are returned as
/// decimal strings with ~45 significant digits.
std::vector<Complex> find_roots(const UniPoly& g, const RootFinderOptions& opts = {});

/// Evaluates the critical orbit of z^d + c from 0 in multiprecision and
/// tests strict (k, n)-preperiodicity. `polish` is refined against first
/// when nonzero.
PreperiodicityWitness numeric_preperiodicity_oracle(int d, std::size_t k, std::size_t n, const Complex& root,
                                                    double tol_eq = 1e-9, double tol_strict = 1e-6,
                                                    const UniPoly& polish = {});

}  // namespace critlocus
