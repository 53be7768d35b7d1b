#include "critlocus/unicritical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace critlocus {

namespace {

using MpReal = boost::multiprecision::cpp_bin_float_50;
using MpComplex = boost::multiprecision::cpp_complex_50;
using LComplex = std::complex<long double>;

SpacePtr beta_space() {
  static const SpacePtr space = VarSpace::custom({{VarSpace::Kind::Beta}});
  return space;
}

MpReal to_mp(const Rational& q) {
  return MpReal(q.numerator().get_str()) / MpReal(q.denominator().get_str());
}

std::string mp_text(const MpReal& x) { return x.str(45, std::ios_base::scientific); }

MpComplex parse_complex(const Complex& c) { return MpComplex(MpReal(c.re), MpReal(c.im)); }

// Horner evaluation of p and p'.
template <class T, class C>
std::pair<T, T> eval_with_derivative(const std::vector<C>& coeffs, const T& z) {
  T p = T(0);
  T dp = T(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + T(*it);
  }
  return {p, dp};
}

MpReal magnitude(const MpComplex& z) { return boost::multiprecision::abs(z); }

MpComplex newton_polish(const std::vector<MpComplex>& coeffs, MpComplex z, int max_iterations = 200) {
  const MpReal tol("1e-40");
  for (int it = 0; it < max_iterations; ++it) {
    const auto [p, dp] = eval_with_derivative(coeffs, z);
    if (magnitude(p) == 0) return z;
    if (magnitude(dp) == 0) throw DidNotConverge("Newton step hit a critical point");
    const MpComplex step = p / dp;
    z -= step;
    const MpReal scale = std::max(MpReal(1), magnitude(z));
    if (magnitude(step) <= tol * scale) return z;
  }
  throw DidNotConverge("Newton polishing did not converge");
}

std::vector<MpComplex> mp_coefficients(const UniPoly& g) {
  std::vector<MpComplex> out;
  for (const auto& c : g.coefficients()) out.emplace_back(to_mp(c));
  return out;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  std::vector<Rational> r;
  for (const auto& c : c_) r.push_back(c * inv);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : c_) {
    ints.push_back(c.numerator() * (den_lcm / c.denominator()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> r;
  for (const auto& v : ints) r.emplace_back(mpz_class(v / content));
  return UniPoly(std::move(r));
}

Poly UniPoly::to_poly(const SpacePtr& space) const {
  const auto b = space->beta_index();
  if (!b) throw DomainError("space has no b");
  Poly r(space);
  for (std::size_t i = 0; i < c_.size(); ++i) r.add_term(Monomial::variable(*b, static_cast<std::uint32_t>(i)), c_[i]);
  return r;
}

UniPoly UniPoly::from_poly(const Poly& g) {
  const auto b = g.space()->beta_index();
  if (!b) throw DomainError("space has no b");
  std::vector<Rational> c(g.degree_in(*b) + 1);
  for (const auto& [m, v] : g.terms()) {
    if (m.total != m[*b]) throw DomainError("polynomial involves variables other than b");
    c[m[*b]] = v;
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string() const { return to_poly(beta_space()).to_string(); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  if (rem.size() < bc.size()) return {UniPoly(), a};
  std::vector<Rational> q(rem.size() - bc.size() + 1);
  const Rational inv = b.leading().inverse();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational c = rem[i + bc.size() - 1] * inv;
    q[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= c * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly compose(const UniPoly& g, const UniPoly& h) {
  UniPoly r;
  const auto& c = g.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * h + UniPoly::constant(*it);
  return r;
}

UniPoly uni_orbit_point(int d, std::size_t k) {
  if (d < 2) throw DomainError("unicritical degree must be at least 2");
  UniPoly x;
  const UniPoly b = UniPoly::variable();
  for (std::size_t j = 0; j < k; ++j) {
    UniPoly power = UniPoly::constant(1);
    for (int e = 0; e < d; ++e) power = power * x;
    x = power + b;
  }
  return x;
}

UniPoly uni_f_knd(int d, std::size_t k, std::size_t n) {
  if (n < 1) throw DomainError("uni_f_knd requires n >= 1");
  return uni_orbit_point(d, k + n) - uni_orbit_point(d, k);
}

long RResult::removed_degree() const {
  long total = 0;
  for (const auto& r : removed) total += r.factor.degree();
  return total;
}

RResult R_knd(int d, std::size_t k, std::size_t n, bool reverse_order) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t l = 0; l <= k; ++l) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m == 0 && !(l == k && m == n)) pairs.emplace_back(l, m);
    }
  }
  if (reverse_order) std::reverse(pairs.begin(), pairs.end());
  RResult out;
  UniPoly g = uni_f_knd(d, k, n);
  for (const auto& [l, m] : pairs) {
    const UniPoly lower = uni_f_knd(d, l, m);
    while (true) {
      const UniPoly common = gcd(g, lower);
      if (common.degree() < 1) break;
      auto [q, r] = divmod(g, common);
      if (!r.is_zero()) throw FalsifiedIdentity("gcd does not divide", "R_knd d=" + std::to_string(d));
      g = std::move(q);
      out.removed.push_back({l, m, common});
    }
  }
  out.R = g.primitive();
  return out;
}

EisensteinCertificate certify_R_eisenstein(const UniPoly& R, OddPrime p, TargetId target) {
  const UniPoly prim = R.primitive();
  return certify_univariate_eisenstein(prim.coefficients(), p, prim.to_string(), std::move(target));
}

UniPoly unicritical_restriction(const Poly& h) {
  const auto& src = h.space();
  const int p = src->degree();
  const auto target = beta_space();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < src->arity(); ++i) {
    images.push_back(src->variable(i).kind == VarSpace::Kind::Beta ? Poly::variable(target, 0) : Poly(target));
  }
  const UniPoly full = UniPoly::from_poly(substitute<RationalField>(h, target, images));
  const auto& c = full.coefficients();
  const std::size_t shift = static_cast<std::size_t>(std::max(0, p - 2));
  for (std::size_t i = 0; i < shift && i < c.size(); ++i) {
    if (!c[i].is_zero()) throw NotDivisible("restriction is not divisible by b^(p-2)");
  }
  if (c.size() <= shift) return {};
  return UniPoly(std::vector<Rational>(c.begin() + static_cast<long>(shift), c.end()));
}

std::string PreperiodicityWitness::root_text() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", root.real(), root.imag());
  return buf;
}

std::string PreperiodicityWitness::to_text() const {
  char buf[64];
  std::ostringstream os;
  os << "root: " << root_text() << '\n';
  std::snprintf(buf, sizeof(buf), "%.6e", residual);
  os << "residual: " << buf << '\n';
  if (std::isinf(margin)) {
    os << "margin: inf\n";
  } else {
    std::snprintf(buf, sizeof(buf), "%.6e", margin);
    os << "margin: " << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "%.3g", tol_eq);
  os << "tol_eq: " << buf << '\n';
  std::snprintf(buf, sizeof(buf), "%.3g", tol_strict);
  os << "tol_strict: " << buf << '\n';
  os << "passed: " << (passed ? "true" : "false") << '\n';
  return os.str();
}

std::vector<Complex> find_roots(const UniPoly& g, const RootFinderOptions& opts) {
  if (g.degree() < 1) return {};
  const UniPoly monic = g.monic();
  const auto& c = monic.coefficients();
  const std::size_t n = c.size() - 1;
  std::vector<long double> lc;
  for (const auto& x : c) lc.push_back(static_cast<long double>(x.to_double()));

  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (lc[i] != 0) radius = std::max(radius, std::pow(std::fabs(lc[i]), 1.0L / static_cast<long double>(n - i)));
  }
  radius = std::max(2 * radius, 1.0L);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<long double> jitter(-0.1L, 0.1L);
  std::vector<LComplex> z(n);
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle = two_pi * (static_cast<long double>(i) + 0.25L + jitter(rng)) / static_cast<long double>(n);
    z[i] = std::polar(radius * (1 + jitter(rng)), angle);
  }

  for (int it = 0; it < opts.max_iterations; ++it) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [p, dp] = eval_with_derivative(lc, z[i]);
      if (p == LComplex(0)) continue;
      const LComplex ratio = p / dp;
      LComplex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      const LComplex w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }

  const auto mc = mp_coefficients(monic);
  std::vector<MpComplex> polished;
  for (const auto& x : z) {
    polished.push_back(newton_polish(mc, MpComplex(MpReal(static_cast<double>(x.real())), MpReal(static_cast<double>(x.imag())))));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (magnitude(polished[i] - polished[j]) < MpReal("1e-20")) {
        throw DidNotConverge("two root approximations converged to the same root");
      }
    }
  }
  std::vector<Complex> out;
  for (const auto& x : polished) out.push_back({mp_text(x.real()), mp_text(x.imag())});
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    const MpReal ar(a.re);
    const MpReal br(b.re);
    if (ar != br) return ar < br;
    return MpReal(a.im) < MpReal(b.im);
  });
  return out;
}

PreperiodicityWitness numeric_preperiodicity_oracle(int d, std::size_t k, std::size_t n, const Complex& root,
                                                    double tol_eq, double tol_strict, const UniPoly& polish) {
  if (n < 1) throw DomainError("oracle requires n >= 1");
  MpComplex c = parse_complex(root);
  if (!polish.is_zero() && polish.degree() >= 1) c = newton_polish(mp_coefficients(polish.monic()), c);

  std::vector<MpComplex> orbit{MpComplex(0)};
  for (std::size_t j = 0; j < k + n; ++j) {
    MpComplex power(1);
    for (int e = 0; e < d; ++e) power *= orbit.back();
    orbit.push_back(power + c);
    if (boost::multiprecision::isnan(orbit.back().real()) || magnitude(orbit.back()) > MpReal("1e100")) {
      throw PrecisionExhausted("critical orbit escaped numeric range");
    }
  }

  PreperiodicityWitness w;
  w.root = {static_cast<double>(c.real()), static_cast<double>(c.imag())};
  w.tol_eq = tol_eq;
  w.tol_strict = tol_strict;
  w.residual = static_cast<double>(magnitude(orbit[k + n] - orbit[k]));
  w.margin = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l <= k; ++l) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m != 0 || (l == k && m == n)) continue;
      w.margin = std::min(w.margin, static_cast<double>(magnitude(orbit[l + m] - orbit[l])));
    }
  }
  w.passed = w.residual < tol_eq && w.margin > tol_strict;
  return w;
}

}  // namespace critlocus
