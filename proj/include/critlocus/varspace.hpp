#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critlocus {

inline constexpr std::size_t kMaxVars = 14;

/// Ordered variable universe. Variables are kept in the fixed total order
///   z < a1 < a2 < ... < b
/// and a polynomial's exponent vector is indexed by position in this list.
class VarSpace {
 public:
  enum class Kind { Z, Alpha, Beta };

  struct Variable {
    Kind kind;
    int alpha_index = 0;  // 1-based, only for Kind::Alpha
    std::string name() const;
    friend bool operator==(const Variable&, const Variable&) = default;
  };

  /// {z, a1, ..., a_{d-1}, b}
  static std::shared_ptr<const VarSpace> full(int d);
  /// {z, a1, ..., a_{d-2}, b}: a_{d-1} eliminated by the hat map.
  static std::shared_ptr<const VarSpace> hatted(int d);
  /// Any order-respecting subset; throws DomainError on out-of-order input.
  static std::shared_ptr<const VarSpace> custom(std::vector<Variable> vars, int degree = 0,
                                                bool hatted = false);
  /// Builds from variable names ("z", "a3", "b").
  static std::shared_ptr<const VarSpace> from_names(const std::vector<std::string>& names,
                                                    int degree = 0, bool hatted = false);

  std::size_t arity() const { return vars_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  std::string name(std::size_t i) const { return vars_.at(i).name(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> z_index() const;
  std::optional<std::size_t> beta_index() const;
  std::optional<std::size_t> alpha_slot(int alpha_index) const;
  std::size_t require(std::string_view name) const;

  /// Degree d this space was built for (0 for custom spaces without one).
  int degree() const { return degree_; }
  bool is_hatted() const { return hatted_; }

  std::string describe() const;

  friend bool operator==(const VarSpace& a, const VarSpace& b) { return a.vars_ == b.vars_; }

 private:
  VarSpace(std::vector<Variable> vars, int degree, bool hatted);
  std::vector<Variable> vars_;
  int degree_;
  bool hatted_;
};

using SpacePtr = std::shared_ptr<const VarSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op);

struct Monomial {
  std::array<std::uint32_t, kMaxVars> exp{};
  std::uint32_t total = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, std::uint32_t e);
  bool is_one() const { return total == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded reverse-lexicographic order, largest first. Ties in total degree are
/// broken at the smallest variable where the exponents differ: the monomial
/// with the smaller exponent there is the larger one.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total != b.total) return a.total > b.total;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    }
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace critlocus
