#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critlocus/mpoly.hpp"

namespace critlocus {

/// Names the polynomial a certificate is about, e.g. "h_2_1_5" or "h_2_1_5^j2".
struct TargetId {
  long k = 0;
  long n = 1;
  long d = 0;
  std::string specialization;  // empty, "j2", "unicritical", ...

  std::string to_string() const;
  static TargetId parse(const std::string& text);
  friend bool operator==(const TargetId&, const TargetId&) = default;
};

enum class Verdict { Pass, Fail, Undecided, Constant };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

enum class Tristate { Yes, No, Undecided };
std::string to_string(Tristate t);
Tristate tristate_from_string(const std::string& s);

/// Record of the three conditions of the generalized Eisenstein criterion:
/// g = h^N mod p, h irreducible mod p, v_p(Res_b(g, h)) < 2 deg_b(h).
struct EisensteinCertificate {
  std::string kind = "eisenstein";
  TargetId target;
  std::string g;
  std::string h;
  std::uint32_t prime = 0;
  std::optional<std::uint64_t> power_exponent;
  Tristate h_irreducible_mod_p = Tristate::Undecided;
  Valuation resultant_valuation = Valuation::infinity();
  long threshold = 0;
  Verdict verdict = Verdict::Fail;
  int failing_condition = 0;  // 0 when none

  std::string to_text() const;
  std::string to_json() const;
  static EisensteinCertificate from_text(const std::string& text);
  static EisensteinCertificate from_json(const std::string& json);
  friend bool operator==(const EisensteinCertificate&, const EisensteinCertificate&) = default;
};

EisensteinCertificate certify_eisenstein(const Poly& g, const Poly& h, OddPrime p, TargetId target = {});

/// Irreducibility of a univariate polynomial over F_p (Ben-Or test).
bool is_irreducible_univariate_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

struct LinearFactor {
  Poly form;
  std::uint32_t multiplicity = 0;
};

struct LinearFactorization {
  Rational constant;
  std::vector<LinearFactor> factors;
};

/// Writes a homogeneous form as constant * prod of rational linear forms,
/// each normalized so its largest variable has coefficient 1. Throws
/// NotProductOfRationalLinears when no such factorization exists.
LinearFactorization linear_factorization_of_form(const Poly& form);

enum class AbsoluteShape {
  LowestPart,      // lowest homogeneous part of g
  MarkedFiber,     // g restricted to b = a1
};

struct AbsoluteIrreducibilityReport {
  std::string kind = "absolute";
  TargetId target;
  std::string shape;
  std::string examined;  // the form that was factored
  Rational constant;
  std::vector<std::pair<std::string, std::uint32_t>> factors;
  std::string witness;  // a simple rational linear factor, empty if none
  bool all_simple = false;
  bool eisenstein_passed = false;
  Verdict verdict = Verdict::Fail;

  std::string to_text() const;
  std::string to_json() const;
  static AbsoluteIrreducibilityReport from_text(const std::string& text);
  static AbsoluteIrreducibilityReport from_json(const std::string& json);
  friend bool operator==(const AbsoluteIrreducibilityReport&, const AbsoluteIrreducibilityReport&) = default;
};

AbsoluteIrreducibilityReport certify_absolute(const Poly& g, const EisensteinCertificate& eis,
                                              AbsoluteShape shape = AbsoluteShape::LowestPart);

/// Classical Eisenstein at p for a univariate polynomial with integer
/// coefficients (constant term first). Constant input yields Verdict::Constant.
EisensteinCertificate certify_univariate_eisenstein(const std::vector<Rational>& coeffs, OddPrime p,
                                                    const std::string& rendered, TargetId target = {});

}  // namespace critlocus
