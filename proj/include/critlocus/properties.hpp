#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "critlocus/mpoly.hpp"

namespace critlocus::props {

/// Seeded generator of small random rationals and polynomials.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// num/den with |num| <= max_num, 1 <= den <= max_den; den coprime to
  /// `avoid` when given.
  Rational rational(long max_num, long max_den, std::optional<OddPrime> avoid = std::nullopt);
  Poly poly(const SpacePtr& space, int max_terms, int max_degree, std::optional<OddPrime> avoid = std::nullopt,
            bool allow_z = true);
  /// Monic in b of the given b-degree; lower coefficients are random
  /// polynomials in the remaining variables.
  Poly monic_in_beta(const SpacePtr& space, int beta_degree, int max_terms, int max_degree, bool allow_z = false);
  /// Random linear form in the alpha variables.
  Poly alpha_linear_form(const SpacePtr& space);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Psi(g o h) = Psi(g) o Psi(h) for random g, h over the full space.
Outcome hat_commutes_with_composition(std::uint64_t seed, std::size_t cases);
/// Psi(ab) = Psi(a)Psi(b), Psi(a+b) = Psi(a)+Psi(b).
Outcome hat_is_ring_homomorphism(std::uint64_t seed, std::size_t cases);
/// exact_divide(q * den, den) = q with den monic in b.
Outcome exact_divide_round_trip(std::uint64_t seed, std::size_t cases);
/// Res_b(g, b - l) = +-g(b = l).
Outcome resultant_matches_evaluation(std::uint64_t seed, std::size_t cases);
/// Reduction mod p commutes with + and *.
Outcome reduce_mod_p_homomorphism(std::uint64_t seed, std::size_t cases);
/// lowest(ab) = lowest(a) lowest(b), highest likewise.
Outcome homogeneous_parts_multiply(std::uint64_t seed, std::size_t cases);
/// render(parse(render(g))) = render(g).
Outcome parse_render_round_trip(std::uint64_t seed, std::size_t cases);
/// A product of two random nonconstant monic-in-b polynomials never passes.
Outcome reducible_never_certified(std::uint64_t seed, std::size_t cases);

}  // namespace critlocus::props
