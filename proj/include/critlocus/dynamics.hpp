#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "critlocus/mpoly.hpp"

namespace critlocus {

/// Monic reduced polynomial with marked critical point a1 and critical value
/// b = f(a1), written in the critical points a1..a_{d-1}.
struct NormalForm {
  int degree;
  SpacePtr full_space;
  SpacePtr hatted_space;
  Poly f;
  Poly fhat;
};

/// Builds the normal form of degree d and asserts its invariants (monic,
/// reduced, f(a1) = b, f' = d * prod(z - a_i)). Throws FalsifiedIdentity if
/// any invariant fails.
NormalForm build_normal_form(int d);

/// Re-checks the normal-form invariants; returns a description of the first
/// failure, or nothing when all hold.
std::optional<std::string> normal_form_violation(const NormalForm& nf);

/// Symbolic orbit of a1 under f (or fhat), computed on demand and cached.
/// Safe to share between threads.
class OrbitCache {
 public:
  explicit OrbitCache(int d);

  const NormalForm& normal_form() const { return nf_; }
  int degree() const { return nf_.degree; }

  /// f^k(a1) in the hatted space (hatted = true) or the full space.
  Poly point(std::size_t k, bool hatted = true) const;

 private:
  NormalForm nf_;
  mutable std::mutex mutex_;
  mutable std::vector<Poly> hatted_;
  mutable std::vector<Poly> full_;
};

/// f^{k+n}(a1) - f^k(a1).
Poly f_knd(const OrbitCache& orbit, std::size_t k, std::size_t n, bool hatted = true);

/// f_{k,n,d} / f_{l,m,d} for l <= k, m | n. Throws FalsifiedIdentity if the
/// division is not exact.
Poly check_divisibility(const OrbitCache& orbit, std::size_t l, std::size_t m, std::size_t k,
                        std::size_t n);

/// h_{k,1,p} by the explicit division formulas. Requires the orbit degree to
/// be the prime p.
Poly h_k1p(const OrbitCache& orbit, std::size_t k);

/// h_{k,n,d}: f_{k,n,d} with every factor shared with a lower f_{l,m,d}
/// removed to full multiplicity.
Poly h_general(const OrbitCache& orbit, std::size_t k, std::size_t n);

/// p * (b + a1 + ... + a_{p-2}) * prod_{i=2}^{p-2} (b - a_i) in the hatted space.
Poly expected_lowest_form(int p);

/// Result of identifying a2..a_j with a1.
struct MixedSpecialization {
  Poly poly;
  int j = 0;
  /// Source variable name -> name in the target space.
  std::vector<std::pair<std::string, std::string>> mapping;
};

/// Substitutes a2, ..., a_j -> a1 in a polynomial over the hatted space of
/// degree p. The result lives in {a1, a_{j+1}, ..., a_{p-2}, b}.
MixedSpecialization mixed_specialize(const Poly& h, int j);

/// Removes the largest power (b - a1)^t dividing g; returns the cofactor and t.
std::pair<Poly, std::uint32_t> strip_marked_fixed_factor(const Poly& g);

/// Mod-p orbit of an arbitrary starting variable under f reduced mod p.
class ModPOrbit {
 public:
  /// d must be a power of p. `hatted` selects the space.
  ModPOrbit(int d, OddPrime p, bool hatted);

  const SpacePtr& space() const { return space_; }
  /// f^k(x) mod p for the starting variable x named by `start`
  /// ("a1", "a3", ...); a_{d-1} in the hatted space means its hat image.
  ModPPoly point(const std::string& start, std::size_t k);
  ModPPoly start_point(const std::string& start) const;

 private:
  int d_;
  OddPrime p_;
  SpacePtr space_;
  ModPPoly f_;
  std::map<std::string, std::vector<ModPPoly>> cache_;
};

/// f_{k,1,p^e} mod p compared with (b - a1)^{p^{ke}}.
bool check_power_congruence_mod_p(int d, OddPrime p, std::size_t k, bool hatted = true);

struct RigidityParams {
  std::uint32_t p = 3;
  std::uint32_t e = 1;
  std::size_t k1 = 0;
  std::size_t n1 = 1;
  int i = 2;
  std::size_t ki = 0;
  std::size_t ni = 1;
};

struct RigidityReport {
  RigidityParams params;
  bool hatted = false;
  std::string diff1_highest;
  std::string diffi_highest;
  bool diff1_congruence = false;
  bool diffi_congruence = false;
  std::optional<std::uint64_t> diff1_power;
  std::optional<std::uint64_t> diffi_power;
  bool coprime_mod_p = false;

  std::string to_text() const;
};

/// Orbit differences of a1 and a_i mod p, their closed-form congruences and
/// highest homogeneous parts. Throws FalsifiedIdentity on a false verdict.
RigidityReport rigidity_check(const RigidityParams& params, bool hatted);

/// Checks f_{k,mt,d} = sum_{i<t} f_{k+mi,m,d}.
bool check_telescoping(const OrbitCache& orbit, std::size_t k, std::size_t m, std::size_t t);

/// Checks f_{k,1,p}/f_{k-1,1,p} = p * prod_{i=1}^{p-1} (f^{k-1}(a1) - a_i)
/// modulo f_{k-1,1,p}, with both sides reduced as polynomials in b.
bool check_derivative_congruence(const OrbitCache& orbit, std::size_t k);

}  // namespace critlocus
