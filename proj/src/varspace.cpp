#include "critlocus/varspace.hpp"

#include <limits>
#include <sstream>

#include "critlocus/errors.hpp"

namespace critlocus {

namespace {

int rank(const VarSpace::Variable& v) {
  switch (v.kind) {
    case VarSpace::Kind::Z:
      return 0;
    case VarSpace::Kind::Alpha:
      return v.alpha_index;
    case VarSpace::Kind::Beta:
      return std::numeric_limits<int>::max();
  }
  return 0;
}

}  // namespace

std::string VarSpace::Variable::name() const {
  switch (kind) {
    case Kind::Z:
      return "z";
    case Kind::Alpha:
      return "a" + std::to_string(alpha_index);
    case Kind::Beta:
      return "b";
  }
  return "?";
}

VarSpace::VarSpace(std::vector<Variable> vars, int degree, bool hatted)
    : vars_(std::move(vars)), degree_(degree), hatted_(hatted) {
  if (vars_.size() > kMaxVars) {
    throw DomainError("variable space exceeds " + std::to_string(kMaxVars) + " variables");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].kind == Kind::Alpha && vars_[i].alpha_index < 1) {
      throw DomainError("alpha variables are 1-based");
    }
    if (i > 0 && rank(vars_[i - 1]) >= rank(vars_[i])) {
      throw DomainError("variables must follow z < a1 < ... < b without repeats");
    }
  }
}

SpacePtr VarSpace::full(int d) {
  if (d < 2) throw DomainError("degree must be at least 2");
  std::vector<Variable> vars{{Kind::Z}};
  for (int i = 1; i <= d - 1; ++i) vars.push_back({Kind::Alpha, i});
  vars.push_back({Kind::Beta});
  return SpacePtr(new VarSpace(std::move(vars), d, false));
}

SpacePtr VarSpace::hatted(int d) {
  if (d < 3) throw DomainError("hatted space needs degree at least 3");
  std::vector<Variable> vars{{Kind::Z}};
  for (int i = 1; i <= d - 2; ++i) vars.push_back({Kind::Alpha, i});
  vars.push_back({Kind::Beta});
  return SpacePtr(new VarSpace(std::move(vars), d, true));
}

SpacePtr VarSpace::custom(std::vector<Variable> vars, int degree, bool hatted) {
  return SpacePtr(new VarSpace(std::move(vars), degree, hatted));
}

SpacePtr VarSpace::from_names(const std::vector<std::string>& names, int degree, bool hatted) {
  std::vector<Variable> vars;
  for (const auto& n : names) {
    if (n == "z") {
      vars.push_back({Kind::Z});
    } else if (n == "b") {
      vars.push_back({Kind::Beta});
    } else if (n.size() > 1 && n[0] == 'a' && n.find_first_not_of("0123456789", 1) == std::string::npos) {
      vars.push_back({Kind::Alpha, std::stoi(n.substr(1))});
    } else {
      throw DomainError("unknown variable name '" + n + "'");
    }
  }
  return custom(std::move(vars), degree, hatted);
}

std::optional<std::size_t> VarSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name() == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> VarSpace::z_index() const {
  if (!vars_.empty() && vars_.front().kind == Kind::Z) return 0;
  return std::nullopt;
}

std::optional<std::size_t> VarSpace::beta_index() const {
  if (!vars_.empty() && vars_.back().kind == Kind::Beta) return vars_.size() - 1;
  return std::nullopt;
}

std::optional<std::size_t> VarSpace::alpha_slot(int alpha_index) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].kind == Kind::Alpha && vars_[i].alpha_index == alpha_index) return i;
  }
  return std::nullopt;
}

std::size_t VarSpace::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw DomainError("variable '" + std::string(name) + "' not in space " + describe());
}

std::string VarSpace::describe() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i].name();
  os << '}';
  return os.str();
}

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op) {
  if (!same_space(a, b)) {
    throw VarSpaceMismatch(std::string(op) + ": " + a->describe() + " vs " + b->describe());
  }
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  total = total - exp[i] + e;
  exp[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = a.exp[i] + b.exp[i];
  m.total = a.total + b.total;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = a.exp[i] - b.exp[i];
  m.total = a.total - b.total;
  return m;
}

}  // namespace critlocus
