#include "critlocus/certify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace critlocus {

namespace {

using json = nlohmann::json;

std::vector<std::pair<std::string, std::string>> parse_lines(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("expected 'key: value' in '" + line + "'", 0);
    out.emplace_back(line.substr(0, colon), line.substr(colon + 2));
  }
  return out;
}

const std::string& lookup(const std::vector<std::pair<std::string, std::string>>& kv, const std::string& key) {
  for (const auto& [k, v] : kv) {
    if (k == key) return v;
  }
  throw ParseError("missing field '" + key + "'", 0);
}

std::string valuation_text(const Valuation& v) { return v.to_string(); }

Valuation valuation_from_text(const std::string& s) {
  if (s == "inf") return Valuation::infinity();
  return Valuation(std::stol(s));
}

// ---- univariate F_p helpers (constant term first) ----

using UPoly = std::vector<std::uint32_t>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& m, std::uint32_t p) {
  utrim(a);
  const std::uint32_t inv = modarith::inverse(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t c = modarith::mul(a.back(), inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - modarith::mul(c, m[i], p)) % p);
    }
    utrim(a);
  }
  return a;
}

UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + modarith::mul(a[i], b[j], p)) % p;
  }
  return umod(std::move(r), m, p);
}

UPoly ugcd(UPoly a, UPoly b, std::uint32_t p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly upowmod(UPoly base, std::uint64_t e, const UPoly& m, std::uint32_t p) {
  UPoly result{1};
  result = umod(result, m, p);
  base = umod(base, m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = umulmod(result, base, m, p);
    if (e > 1) base = umulmod(base, base, m, p);
  }
  return result;
}

// ---- rational roots ----

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (unsigned long q = 2; q < 100000 && q * q <= n; ++q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) primes.emplace_back(mpz_class(q), e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : primes) {
    const std::size_t count = divs.size();
    mpz_class power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * power);
    }
  }
  return divs;
}

// Rational roots of sum coeffs[j] t^j.
std::set<Rational> rational_roots(std::vector<Rational> coeffs) {
  std::set<Rational> roots;
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) return roots;
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
  }
  if (coeffs.size() < 2) return roots;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) ints.push_back(c.numerator() * (den_lcm / c.denominator()));
  const auto us = positive_divisors(ints.front());
  const auto ws = positive_divisors(ints.back());
  for (const auto& u : us) {
    for (const auto& w : ws) {
      for (int sign : {1, -1}) {
        const Rational r(mpz_class(sign * u), w);
        Rational acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
        if (acc.is_zero()) roots.insert(r);
      }
    }
  }
  return roots;
}

bool is_homogeneous(const Poly& g) { return !g.is_zero() && g.total_degree() == g.lowest_total_degree(); }

std::string factor_list_text(const std::vector<std::pair<std::string, std::uint32_t>>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "; ";
    out += "(" + factors[i].first + ")^" + std::to_string(factors[i].second);
  }
  return out;
}

std::vector<std::pair<std::string, std::uint32_t>> factor_list_from_text(const std::string& s) {
  std::vector<std::pair<std::string, std::uint32_t>> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto close = s.find(")^", pos);
    if (s[pos] != '(' || close == std::string::npos) throw ParseError("malformed factor list", pos);
    auto end = s.find("; ", close);
    if (end == std::string::npos) end = s.size();
    out.emplace_back(s.substr(pos + 1, close - pos - 1),
                     static_cast<std::uint32_t>(std::stoul(s.substr(close + 2, end - close - 2))));
    pos = end == s.size() ? end : end + 2;
  }
  return out;
}

}  // namespace

std::string TargetId::to_string() const {
  std::string s = "h_" + std::to_string(k) + "_" + std::to_string(n) + "_" + std::to_string(d);
  if (!specialization.empty()) s += "^" + specialization;
  return s;
}

TargetId TargetId::parse(const std::string& text) {
  TargetId t;
  std::string body = text;
  if (const auto caret = text.find('^'); caret != std::string::npos) {
    t.specialization = text.substr(caret + 1);
    body = text.substr(0, caret);
  }
  char h = 0;
  char u1 = 0;
  char u2 = 0;
  char u3 = 0;
  std::istringstream is(body);
  if (!(is >> h >> u1 >> t.k >> u2 >> t.n >> u3 >> t.d) || h != 'h' || u1 != '_' || u2 != '_' || u3 != '_') {
    throw ParseError("malformed target id '" + text + "'", 0);
  }
  return t;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Undecided:
      return "undecided";
    case Verdict::Constant:
      return "constant";
  }
  return "fail";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "undecided") return Verdict::Undecided;
  if (s == "constant") return Verdict::Constant;
  throw ParseError("unknown verdict '" + s + "'", 0);
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes:
      return "yes";
    case Tristate::No:
      return "no";
    case Tristate::Undecided:
      return "undecided";
  }
  return "undecided";
}

Tristate tristate_from_string(const std::string& s) {
  if (s == "yes") return Tristate::Yes;
  if (s == "no") return Tristate::No;
  if (s == "undecided") return Tristate::Undecided;
  throw ParseError("unknown tristate '" + s + "'", 0);
}

std::string EisensteinCertificate::to_text() const {
  std::ostringstream os;
  os << "kind: " << kind << '\n'
     << "target: " << target.to_string() << '\n'
     << "g: " << g << '\n'
     << "h: " << h << '\n'
     << "prime: " << prime << '\n'
     << "power_exponent: " << (power_exponent ? std::to_string(*power_exponent) : "absent") << '\n'
     << "h_irreducible_mod_p: " << to_string(h_irreducible_mod_p) << '\n'
     << "resultant_valuation: " << valuation_text(resultant_valuation) << '\n'
     << "threshold: " << threshold << '\n'
     << "verdict: " << to_string(verdict) << '\n'
     << "failing_condition: " << failing_condition << '\n';
  return os.str();
}

EisensteinCertificate EisensteinCertificate::from_text(const std::string& text) {
  const auto kv = parse_lines(text);
  EisensteinCertificate c;
  c.kind = lookup(kv, "kind");
  c.target = TargetId::parse(lookup(kv, "target"));
  c.g = lookup(kv, "g");
  c.h = lookup(kv, "h");
  c.prime = static_cast<std::uint32_t>(std::stoul(lookup(kv, "prime")));
  const auto& n = lookup(kv, "power_exponent");
  if (n != "absent") c.power_exponent = std::stoull(n);
  c.h_irreducible_mod_p = tristate_from_string(lookup(kv, "h_irreducible_mod_p"));
  c.resultant_valuation = valuation_from_text(lookup(kv, "resultant_valuation"));
  c.threshold = std::stol(lookup(kv, "threshold"));
  c.verdict = verdict_from_string(lookup(kv, "verdict"));
  c.failing_condition = std::stoi(lookup(kv, "failing_condition"));
  return c;
}

std::string EisensteinCertificate::to_json() const {
  json j;
  j["kind"] = kind;
  j["target"] = target.to_string();
  j["g"] = g;
  j["h"] = h;
  j["prime"] = prime;
  j["power_exponent"] = power_exponent ? json(*power_exponent) : json(nullptr);
  j["h_irreducible_mod_p"] = to_string(h_irreducible_mod_p);
  j["resultant_valuation"] = valuation_text(resultant_valuation);
  j["threshold"] = threshold;
  j["verdict"] = to_string(verdict);
  j["failing_condition"] = failing_condition;
  return j.dump(2) + "\n";
}

EisensteinCertificate EisensteinCertificate::from_json(const std::string& text) {
  const json j = json::parse(text);
  EisensteinCertificate c;
  c.kind = j.at("kind").get<std::string>();
  c.target = TargetId::parse(j.at("target").get<std::string>());
  c.g = j.at("g").get<std::string>();
  c.h = j.at("h").get<std::string>();
  c.prime = j.at("prime").get<std::uint32_t>();
  if (!j.at("power_exponent").is_null()) c.power_exponent = j.at("power_exponent").get<std::uint64_t>();
  c.h_irreducible_mod_p = tristate_from_string(j.at("h_irreducible_mod_p").get<std::string>());
  c.resultant_valuation = valuation_from_text(j.at("resultant_valuation").get<std::string>());
  c.threshold = j.at("threshold").get<long>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.failing_condition = j.at("failing_condition").get<int>();
  return c;
}

bool is_irreducible_univariate_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  UPoly f = coeffs;
  utrim(f);
  if (f.size() < 2) throw DomainError("irreducibility test needs a nonconstant polynomial");
  const std::size_t n = f.size() - 1;
  const UPoly x{0, 1};
  UPoly xq = umod(x, f, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    xq = upowmod(xq, p, f, p);
    UPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    utrim(diff);
    if (diff.empty()) return false;
    if (ugcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

EisensteinCertificate certify_eisenstein(const Poly& g, const Poly& h, OddPrime p, TargetId target) {
  require_same_space(g.space(), h.space(), "certify_eisenstein");
  if (!is_monic_in_beta(g) || !is_monic_in_beta(h)) throw NotMonicInBeta("certify_eisenstein: inputs must be monic in b");
  const auto bi = *g.space()->beta_index();
  EisensteinCertificate c;
  c.target = std::move(target);
  c.g = g.to_string();
  c.h = h.to_string();
  c.prime = p.value();

  const ModPPoly gm = reduce_poly_mod_p(g, p);
  const ModPPoly hm = reduce_poly_mod_p(h, p);
  c.power_exponent = is_power_of(gm, hm);

  const std::uint32_t deg_h = h.degree_in(bi);
  if (deg_h == 1) {
    c.h_irreducible_mod_p = Tristate::Yes;
  } else {
    std::size_t involved = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < hm.space()->arity(); ++i) {
      if (hm.involves(i)) {
        ++involved;
        which = i;
      }
    }
    if (involved == 1) {
      std::vector<std::uint32_t> coeffs(hm.degree_in(which) + 1, 0);
      for (const auto& [m, v] : hm.terms()) coeffs[m[which]] = v;
      c.h_irreducible_mod_p = is_irreducible_univariate_mod_p(coeffs, p.value()) ? Tristate::Yes : Tristate::No;
    }
  }

  c.resultant_valuation = min_valuation(resultant_in_beta(g, h), p);
  c.threshold = 2L * deg_h;

  const bool ok1 = c.power_exponent.has_value();
  const bool ok3 = c.resultant_valuation < c.threshold;
  if (!ok1) {
    c.failing_condition = 1;
  } else if (c.h_irreducible_mod_p == Tristate::No) {
    c.failing_condition = 2;
  } else if (!ok3) {
    c.failing_condition = 3;
  }
  if (c.failing_condition != 0) {
    c.verdict = Verdict::Fail;
  } else {
    c.verdict = c.h_irreducible_mod_p == Tristate::Yes ? Verdict::Pass : Verdict::Undecided;
  }
  return c;
}

LinearFactorization linear_factorization_of_form(const Poly& form) {
  if (!is_homogeneous(form)) throw DomainError("linear_factorization_of_form expects a nonzero homogeneous form");
  const auto& space = form.space();
  Poly rest = form;
  std::vector<LinearFactor> factors;

  // Monomial content first; otherwise binary slices through a shared variable vanish.
  for (std::size_t v = space->arity(); v-- > 0;) {
    std::uint32_t e = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [m, c] : rest.terms()) e = std::min(e, m[v]);
    if (e == 0) continue;
    Poly stripped(space);
    for (const auto& [m, c] : rest.terms()) {
      Monomial mm = m;
      mm.set(v, m[v] - e);
      stripped.add_term(mm, c);
    }
    rest = std::move(stripped);
    factors.push_back({Poly::variable(space, v), e});
  }

  for (std::size_t v = space->arity(); v-- > 0;) {
    while (rest.involves(v)) {
      std::vector<std::size_t> others;
      for (std::size_t i = 0; i < v; ++i) {
        if (rest.involves(i)) others.push_back(i);
      }
      // Candidate coefficients c_i in x_v + sum c_i x_i from binary slices.
      std::vector<std::set<Rational>> candidates(others.size());
      std::set<Rational> pooled{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
      std::vector<bool> empty_slice(others.size(), false);
      for (std::size_t s = 0; s < others.size(); ++s) {
        const std::size_t xi = others[s];
        std::vector<Rational> slice(rest.degree_in(v) + 1);
        bool any = false;
        for (const auto& [m, c] : rest.terms()) {
          if (m.total != m[v] + m[xi]) continue;
          slice[m[v]] += c;
          any = true;
        }
        for (const auto& r : rational_roots(slice)) candidates[s].insert(-r);
        if (!any || candidates[s].empty()) empty_slice[s] = true;
        pooled.insert(candidates[s].begin(), candidates[s].end());
      }
      for (std::size_t s = 0; s < others.size(); ++s) {
        if (empty_slice[s]) candidates[s] = pooled;
      }

      std::vector<std::vector<Rational>> lists;
      std::size_t combos = 1;
      for (const auto& c : candidates) {
        lists.emplace_back(c.begin(), c.end());
        combos *= std::max<std::size_t>(1, c.size());
        if (combos > 2000000) throw NotProductOfRationalLinears("candidate search space too large");
      }

      bool found = false;
      std::vector<std::size_t> idx(others.size(), 0);
      for (std::size_t attempt = 0; attempt < combos && !found; ++attempt) {
        Poly linear = Poly::variable(space, v);
        bool valid = true;
        for (std::size_t s = 0; s < others.size(); ++s) {
          if (lists[s].empty()) {
            valid = false;
            break;
          }
          const Rational& c = lists[s][idx[s]];
          if (!c.is_zero()) linear.add_term(Monomial::variable(others[s]), c);
        }
        if (valid) {
          if (auto q = try_divide(rest, linear)) {
            std::uint32_t mult = 0;
            while (auto next = try_divide(rest, linear)) {
              rest = std::move(*next);
              ++mult;
            }
            factors.push_back({linear, mult});
            found = true;
          }
        }
        for (std::size_t s = 0; s < others.size(); ++s) {
          if (++idx[s] < std::max<std::size_t>(1, lists[s].size())) break;
          idx[s] = 0;
        }
      }
      if (!found) {
        throw NotProductOfRationalLinears("no rational linear factor involving " + space->name(v) + " in " + rest.to_string().substr(0, 200));
      }
    }
  }
  if (!rest.is_constant() || rest.is_zero()) throw NotProductOfRationalLinears("form does not reduce to a constant");
  return {rest.constant_term(), std::move(factors)};
}

std::string AbsoluteIrreducibilityReport::to_text() const {
  std::ostringstream os;
  os << "kind: " << kind << '\n'
     << "target: " << target.to_string() << '\n'
     << "shape: " << shape << '\n'
     << "examined: " << examined << '\n'
     << "constant: " << constant.to_string() << '\n'
     << "factors: " << factor_list_text(factors) << '\n'
     << "witness: " << (witness.empty() ? "absent" : witness) << '\n'
     << "all_simple: " << (all_simple ? "true" : "false") << '\n'
     << "eisenstein_passed: " << (eisenstein_passed ? "true" : "false") << '\n'
     << "verdict: " << to_string(verdict) << '\n';
  return os.str();
}

AbsoluteIrreducibilityReport AbsoluteIrreducibilityReport::from_text(const std::string& text) {
  const auto kv = parse_lines(text);
  AbsoluteIrreducibilityReport r;
  r.kind = lookup(kv, "kind");
  r.target = TargetId::parse(lookup(kv, "target"));
  r.shape = lookup(kv, "shape");
  r.examined = lookup(kv, "examined");
  r.constant = Rational::parse(lookup(kv, "constant"));
  r.factors = factor_list_from_text(lookup(kv, "factors"));
  const auto& w = lookup(kv, "witness");
  r.witness = w == "absent" ? "" : w;
  r.all_simple = lookup(kv, "all_simple") == "true";
  r.eisenstein_passed = lookup(kv, "eisenstein_passed") == "true";
  r.verdict = verdict_from_string(lookup(kv, "verdict"));
  return r;
}

std::string AbsoluteIrreducibilityReport::to_json() const {
  json j;
  j["kind"] = kind;
  j["target"] = target.to_string();
  j["shape"] = shape;
  j["examined"] = examined;
  j["constant"] = constant.to_string();
  json fs = json::array();
  for (const auto& [f, m] : factors) fs.push_back({{"form", f}, {"multiplicity", m}});
  j["factors"] = fs;
  j["witness"] = witness.empty() ? json(nullptr) : json(witness);
  j["all_simple"] = all_simple;
  j["eisenstein_passed"] = eisenstein_passed;
  j["verdict"] = to_string(verdict);
  return j.dump(2) + "\n";
}

AbsoluteIrreducibilityReport AbsoluteIrreducibilityReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  AbsoluteIrreducibilityReport r;
  r.kind = j.at("kind").get<std::string>();
  r.target = TargetId::parse(j.at("target").get<std::string>());
  r.shape = j.at("shape").get<std::string>();
  r.examined = j.at("examined").get<std::string>();
  r.constant = Rational::parse(j.at("constant").get<std::string>());
  for (const auto& f : j.at("factors")) {
    r.factors.emplace_back(f.at("form").get<std::string>(), f.at("multiplicity").get<std::uint32_t>());
  }
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
  r.all_simple = j.at("all_simple").get<bool>();
  r.eisenstein_passed = j.at("eisenstein_passed").get<bool>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return r;
}

AbsoluteIrreducibilityReport certify_absolute(const Poly& g, const EisensteinCertificate& eis, AbsoluteShape shape) {
  AbsoluteIrreducibilityReport r;
  r.target = eis.target;
  r.eisenstein_passed = eis.verdict == Verdict::Pass;
  Poly examined(g.space());
  if (shape == AbsoluteShape::LowestPart) {
    r.shape = "lowest-homogeneous-part";
    examined = homogeneous_part(g, HomogeneousWhich::Lowest);
  } else {
    r.shape = "restriction-to-b=a1";
    const auto& space = g.space();
    examined = substitute_var(g, *space->beta_index(), Poly::variable(space, "a1"));
    if (!is_homogeneous(examined)) examined = homogeneous_part(examined, HomogeneousWhich::Lowest);
  }
  r.examined = examined.to_string();
  LinearFactorization fac;
  try {
    fac = linear_factorization_of_form(examined);
  } catch (const NotProductOfRationalLinears&) {
    r.verdict = Verdict::Fail;
    return r;
  }
  r.constant = fac.constant;
  r.all_simple = !fac.factors.empty();
  std::size_t best_terms = 0;
  for (const auto& f : fac.factors) {
    r.factors.emplace_back(f.form.to_string(), f.multiplicity);
    if (f.multiplicity != 1) {
      r.all_simple = false;
    } else if (f.form.size() > best_terms) {
      best_terms = f.form.size();
      r.witness = f.form.to_string();
    }
  }
  r.verdict = (r.eisenstein_passed && !r.witness.empty()) ? Verdict::Pass : Verdict::Fail;
  return r;
}

EisensteinCertificate certify_univariate_eisenstein(const std::vector<Rational>& coeffs, OddPrime p,
                                                    const std::string& rendered, TargetId target) {
  EisensteinCertificate c;
  c.kind = "eisenstein-univariate";
  c.target = std::move(target);
  c.g = rendered;
  c.h = "b";
  c.prime = p.value();
  c.threshold = 2;
  c.h_irreducible_mod_p = Tristate::Yes;
  std::vector<Rational> a = coeffs;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  if (a.empty()) throw ZeroPolynomial("Eisenstein test of the zero polynomial");
  for (const auto& x : a) {
    if (!x.is_integer()) throw DomainError("univariate Eisenstein expects integer coefficients");
  }
  const std::size_t n = a.size() - 1;
  c.resultant_valuation = padic_valuation(a.front(), p);
  if (n == 0) {
    c.verdict = Verdict::Constant;
    return c;
  }
  bool lower_divisible = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (padic_valuation(a[i], p) < 1) lower_divisible = false;
  }
  const bool lead_unit = padic_valuation(a[n], p) == Valuation(0);
  if (lower_divisible && lead_unit) c.power_exponent = n;
  if (!c.power_exponent) {
    c.failing_condition = 1;
  } else if (!(c.resultant_valuation < c.threshold) && n > 1) {
    c.failing_condition = 3;
  }
  c.verdict = c.failing_condition == 0 ? Verdict::Pass : Verdict::Fail;
  return c;
}

}  // namespace critlocus
