#include "critlocus/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "critlocus/certify.hpp"
#include "critlocus/cli.hpp"
#include "critlocus/dynamics.hpp"
#include "critlocus/properties.hpp"
#include "critlocus/unicritical.hpp"

namespace critlocus::acceptance {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const OrbitCache& orbit_for(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<OrbitCache>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<OrbitCache>(d);
  return *slot;
}

Poly h_cached(int p, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::size_t>, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
  }
  Poly h = h_k1p(orbit_for(p), k);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, k), h).first->second;
}

Poly marked_linear(const SpacePtr& space) {
  return Poly::variable(space, "b") - Poly::variable(space, "a1");
}

/// Accumulates checks; each failing check adds a detail line.
class Checks {
 public:
  explicit Checks(CriterionResult& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      r_.details.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { r_.details.push_back(s); }
  bool ok() const { return ok_; }

 private:
  CriterionResult& r_;
  bool ok_ = true;
};

struct Pk {
  int p;
  std::size_t k;
};

const std::vector<Pk> kRequiredCertificates = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}};
const std::vector<Pk> kStretchCertificates = {{5, 3}, {7, 2}};

void certificate_case(Checks& c, Pk pk, double budget) {
  const auto start = Clock::now();
  const Poly h = h_cached(pk.p, pk.k);
  const OddPrime p(static_cast<std::uint64_t>(pk.p));
  const TargetId target{static_cast<long>(pk.k), 1, pk.p, ""};
  const auto eis = certify_eisenstein(h, marked_linear(h.space()), p, target);
  const auto shape = pk.k == 1 ? AbsoluteShape::MarkedFiber : AbsoluteShape::LowestPart;
  const auto abs = certify_absolute(h, eis, shape);
  const double t = seconds_since(start);
  const std::string name = target.to_string();
  c.expect(eis.verdict == Verdict::Pass, name + " eisenstein verdict " + to_string(eis.verdict));
  c.expect(eis.resultant_valuation == Valuation(1), name + " resultant valuation " + eis.resultant_valuation.to_string());
  c.expect(abs.verdict == Verdict::Pass, name + " absolute verdict " + to_string(abs.verdict));
  c.expect(t < budget, name + " took " + fmt_seconds(t));
  c.note(name + ": " + std::to_string(h.size()) + " terms, N=" +
         (eis.power_exponent ? std::to_string(*eis.power_exponent) : "none") +
         ", v=" + eis.resultant_valuation.to_string() + ", witness " + abs.witness + ", " + fmt_seconds(t));
}

bool c1(const Options&, Checks& c) {
  for (int d : {3, 5, 7, 9}) {
    const NormalForm nf = build_normal_form(d);
    const auto violation = normal_form_violation(nf);
    c.expect(!violation, "d=" + std::to_string(d) + ": " + violation.value_or(""));
  }
  return c.ok();
}

bool c2(const Options&, Checks& c) {
  const OrbitCache& orbit = orbit_for(3);
  const auto& nf = orbit.normal_form();
  const SpacePtr& hs = nf.hatted_space;
  c.expect(nf.fhat == parse_poly("z^3 - 3*a1^2*z + 2*a1^3 + b", hs), "fhat = " + nf.fhat.to_string());
  const Poly h0 = h_k1p(orbit, 0);
  const Poly h1 = h_k1p(orbit, 1);
  c.expect(h0 == parse_poly("b - a1", hs), "h_0_1_3 = " + h0.to_string());
  c.expect(h1 == parse_poly("b + 2*a1", hs), "h_1_1_3 = " + h1.to_string());
  const Poly res = resultant_in_beta(h1, marked_linear(hs));
  const auto z = *hs->z_index();
  Poly second = substitute_var(derivative(derivative(nf.fhat, z), z), z, Poly::variable(hs, "a1"));
  second = second * Poly::constant(hs, Rational(1, 2));
  c.expect(res == second || res == -second, "Res = " + res.to_string() + ", fhat''(a1)/2 = " + second.to_string());
  c.expect(res == Poly::variable(hs, "a1") * Poly::from_int(hs, 3) || res == Poly::variable(hs, "a1") * Poly::from_int(hs, -3),
           "Res = " + res.to_string());
  return c.ok();
}

bool c3(const Options& opts, Checks& c) {
  for (const auto& pk : kRequiredCertificates) certificate_case(c, pk, 60);
  if (opts.stretch) {
    for (const auto& pk : kStretchCertificates) certificate_case(c, pk, 900);
  } else {
    c.note("stretch h_3_1_5, h_2_1_7: NOT RUN (pass --stretch; expected to exceed desk memory and time, see README)");
  }
  return c.ok();
}

bool c4(const Options& opts, Checks& c) {
  std::vector<Pk> cases;
  for (const auto& pk : kRequiredCertificates) {
    if (pk.k >= 2) cases.push_back(pk);
  }
  if (opts.stretch) cases.insert(cases.end(), kStretchCertificates.begin(), kStretchCertificates.end());
  for (const auto& pk : cases) {
    const Poly h = h_cached(pk.p, pk.k);
    const Poly lowest = homogeneous_part(h, HomogeneousWhich::Lowest);
    const Poly expected = expected_lowest_form(pk.p);
    c.expect(lowest == expected, "h_" + std::to_string(pk.k) + "_1_" + std::to_string(pk.p) +
                                      " lowest part " + lowest.to_string());
    c.expect(!try_divide(h, marked_linear(h.space())), "b - a1 divides h_" + std::to_string(pk.k) + "_1_" +
                                                           std::to_string(pk.p));
  }
  return c.ok();
}

bool c5(const Options&, Checks& c) {
  for (int p : {3, 5, 7}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      c.expect(check_power_congruence_mod_p(p, OddPrime(static_cast<std::uint64_t>(p)), k),
               "fhat_" + std::to_string(k) + "_1_" + std::to_string(p) + " mod p");
    }
  }
  return c.ok();
}

bool c6(const Options&, Checks& c) {
  for (int p : {5, 7, 11}) {
    const OddPrime op(static_cast<std::uint64_t>(p));
    const OrbitCache& orbit = orbit_for(p);
    const Poly h = h_general(orbit, 0, 2);
    const auto& hs = orbit.normal_form().hatted_space;
    const ModPPoly reduced = reduce_poly_mod_p(h, op);
    const ModPPoly lin = reduce_poly_mod_p(marked_linear(hs), op);
    const ModPPoly expected = pow(lin, static_cast<std::uint64_t>(p - 1)) + ModPPoly::from_int(hs, 1, PrimeField(op));
    const std::string name = "h_0_2_" + std::to_string(p);
    c.expect(reduced == expected, name + " mod p = " + reduced.to_string());
    c.expect(!is_power_of(reduced, lin), name + " is a power of b - a1 mod p");
    const auto eis = certify_eisenstein(h, marked_linear(hs), op, TargetId{0, 2, p, ""});
    c.expect(eis.verdict == Verdict::Fail && eis.failing_condition == 1,
             name + " eisenstein verdict " + to_string(eis.verdict));
  }
  return c.ok();
}

bool c7(const Options&, Checks& c) {
  const Poly h = h_cached(5, 2);
  const MixedSpecialization ms = mixed_specialize(h, 2);
  const SpacePtr& space = ms.poly.space();
  const TargetId target{2, 1, 5, "j2"};
  const OddPrime p(5);
  const auto eis = certify_eisenstein(ms.poly, marked_linear(space), p, target);
  const auto abs = certify_absolute(ms.poly, eis, AbsoluteShape::LowestPart);
  const Poly witness = parse_poly("b + 2*a1 + a3", space);
  bool simple_witness = false;
  for (const auto& [form, mult] : abs.factors) {
    if (mult == 1 && parse_poly(form, space) == witness) simple_witness = true;
  }
  c.expect(eis.verdict == Verdict::Pass, "h_2_1_5^j2 eisenstein verdict " + to_string(eis.verdict) +
                                             " (condition " + std::to_string(eis.failing_condition) +
                                             ", v=" + eis.resultant_valuation.to_string() + ")");
  c.expect(simple_witness, "b + 2*a1 + a3 is not a simple factor of the lowest part");
  c.note("lowest part factors: constant " + abs.constant.to_string() + ", witness " + abs.witness);
  const auto [cofactor, t] = strip_marked_fixed_factor(ms.poly);
  const auto co = certify_eisenstein(cofactor, marked_linear(space), p, TargetId{2, 1, 5, "j2-cofactor"});
  c.note("diagnostic: h_2_1_5^j2 = (b - a1)^" + std::to_string(t) + " * g; g eisenstein " + to_string(co.verdict) +
         " with N=" + (co.power_exponent ? std::to_string(*co.power_exponent) : "none") +
         ", v=" + co.resultant_valuation.to_string());
  return c.ok();
}

bool c8(const Options& opts, Checks& c) {
  const std::map<int, std::size_t> K = {{3, 4}, {5, 3}, {7, 2}};
  for (const auto& [p, kmax] : K) {
    c.expect(R_knd(p, 0, 1).R == UniPoly::variable(), "R_0_1_" + std::to_string(p) + " != b");
    c.expect(R_knd(p, 1, 1).R.is_constant(), "R_1_1_" + std::to_string(p) + " not constant");
  }
  const UniPoly r213 = R_knd(3, 2, 1).R;
  c.expect(r213 == UniPoly({Rational(3), Rational(0), Rational(3), Rational(0), Rational(1)}),
           "R_2_1_3 = " + r213.to_string());
  double worst_residual = 0;
  double min_margin = 1e300;
  std::size_t roots_checked = 0;
  for (const auto& [p, kmax] : K) {
    const OddPrime op(static_cast<std::uint64_t>(p));
    for (std::size_t k = 2; k <= kmax; ++k) {
      const UniPoly R = R_knd(p, k, 1).R;
      const std::string name = "R_" + std::to_string(k) + "_1_" + std::to_string(p);
      const auto cert = certify_R_eisenstein(R, op, TargetId{static_cast<long>(k), 1, p, "unicritical"});
      c.expect(cert.verdict == Verdict::Pass, name + " eisenstein " + to_string(cert.verdict));
      RootFinderOptions ro;
      ro.seed = opts.seed;
      for (const auto& root : find_roots(R, ro)) {
        const auto w = numeric_preperiodicity_oracle(p, k, 1, root, opts.tol_eq, opts.tol_strict, R);
        ++roots_checked;
        worst_residual = std::max(worst_residual, w.residual);
        min_margin = std::min(min_margin, w.margin);
        c.expect(w.passed, name + " root " + w.root_text() + " residual " + std::to_string(w.residual));
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu roots, worst residual %.3g, min margin %.3g", roots_checked, worst_residual,
                min_margin);
  c.note(buf);
  const auto off = numeric_preperiodicity_oracle(3, 2, 1, Complex{"0.3", "0.2"}, opts.tol_eq, opts.tol_strict);
  c.expect(!off.passed, "non-root 0.3+0.2i accepted");
  const auto roots = find_roots(r213);
  const auto wrong_k = numeric_preperiodicity_oracle(3, 1, 1, roots.front(), opts.tol_eq, opts.tol_strict);
  c.expect(!wrong_k.passed, "root of R_2_1_3 accepted as (1,1)-preperiodic");
  const auto wrong_n = numeric_preperiodicity_oracle(3, 2, 2, roots.front(), opts.tol_eq, opts.tol_strict);
  c.expect(!wrong_n.passed, "root of R_2_1_3 accepted as strictly (2,2)-preperiodic");
  return c.ok();
}

bool c9(const Options&, Checks& c) {
  for (const Pk pk : std::vector<Pk>{{3, 2}, {3, 3}, {5, 2}}) {
    const UniPoly u = unicritical_restriction(h_cached(pk.p, pk.k));
    const UniPoly R = R_knd(pk.p, pk.k, 1).R;
    const std::string name = "h_" + std::to_string(pk.k) + "_1_" + std::to_string(pk.p) + "(0,...,0,b)";
    const auto cert = certify_R_eisenstein(u, OddPrime(static_cast<std::uint64_t>(pk.p)),
                                           TargetId{static_cast<long>(pk.k), 1, pk.p, "restriction"});
    c.expect(cert.verdict == Verdict::Pass, name + " eisenstein " + to_string(cert.verdict));
    c.expect(divmod(u, R).second.is_zero(), "R does not divide " + name);
    c.note(name + ": degree " + std::to_string(u.degree()) + ", R degree " + std::to_string(R.degree()));
  }
  return c.ok();
}

bool c10(const Options&, Checks& c) {
  std::size_t checks = 0;
  for (const auto& [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const int d = e == 1 ? static_cast<int>(p) : static_cast<int>(p * p);
    for (std::size_t k1 = 0; k1 <= 2; ++k1) {
      for (std::size_t ki = 0; ki <= 2; ++ki) {
        for (int i = 2; i <= d - 1; ++i) {
          RigidityParams params{p, e, k1, 1, i, ki, 1};
          const RigidityReport r = rigidity_check(params, true);
          ++checks;
          c.expect(r.coprime_mod_p && r.diff1_congruence && r.diffi_congruence,
                   "rigidity p=" + std::to_string(p) + " e=" + std::to_string(e) + " k1=" + std::to_string(k1) +
                       " i=" + std::to_string(i) + " ki=" + std::to_string(ki));
        }
      }
    }
  }
  for (std::size_t k = 1; k <= 2; ++k) {
    c.expect(check_power_congruence_mod_p(9, OddPrime(3), k), "fhat_" + std::to_string(k) + "_1_9 mod 3");
  }
  c.note(std::to_string(checks) + " rigidity configurations");
  return c.ok();
}

bool c11(const Options& opts, Checks& c) {
  using Fn = props::Outcome (*)(std::uint64_t, std::size_t);
  const std::vector<Fn> suite = {props::hat_commutes_with_composition, props::hat_is_ring_homomorphism,
                                 props::exact_divide_round_trip,       props::resultant_matches_evaluation,
                                 props::reduce_mod_p_homomorphism,     props::homogeneous_parts_multiply,
                                 props::parse_render_round_trip,       props::reducible_never_certified};
  const std::size_t per = (opts.property_cases + suite.size() - 1) / suite.size();
  std::size_t total = 0;
  for (std::size_t s = 0; s < suite.size(); ++s) {
    const auto out = suite[s](opts.seed + s, per);
    total += out.cases;
    c.expect(out.ok(), out.name + ": " + std::to_string(out.failures) + " failures, first " + out.first_failure);
  }
  c.expect(total >= opts.property_cases, "only " + std::to_string(total) + " cases");
  c.note(std::to_string(total) + " randomized cases");
  return c.ok();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<cli::JobSpec> determinism_jobs(const Options& opts) {
  auto make = [&](std::string cmd) {
    cli::JobSpec j;
    j.command = std::move(cmd);
    j.seed = opts.seed;
    j.tol_eq = opts.tol_eq;
    j.tol_strict = opts.tol_strict;
    return j;
  };
  std::vector<cli::JobSpec> jobs;
  auto nf = make("normalform");
  nf.d = 5;
  jobs.push_back(nf);
  for (const auto& pk : kRequiredCertificates) {
    auto j = make("hk1p");
    j.p = pk.p;
    j.k = static_cast<long>(pk.k);
    jobs.push_back(j);
  }
  auto mixed = make("mixed");
  mixed.p = 5;
  mixed.k = 2;
  mixed.j = 2;
  jobs.push_back(mixed);
  for (long k = 0; k <= 4; ++k) {
    auto j = make("uni");
    j.p = 3;
    j.k = k;
    jobs.push_back(j);
  }
  auto rig = make("rigidity");
  rig.p = 3;
  rig.e = 2;
  rig.k1 = 1;
  jobs.push_back(rig);
  auto modp = make("modp");
  modp.p = 3;
  modp.e = 2;
  modp.k = 2;
  jobs.push_back(modp);
  auto hg = make("hgeneral");
  hg.d = 3;
  hg.k = 1;
  hg.n = 2;
  jobs.push_back(hg);
  return jobs;
}

bool c12(const Options& opts, Checks& c) {
  const auto jobs = determinism_jobs(opts);
  std::ostringstream sink;
  std::size_t compared = 0;
  for (std::size_t n = 0; n < jobs.size(); ++n) {
    std::vector<fs::path> dirs;
    for (const char* run : {"run1", "run2"}) {
      auto job = jobs[n];
      job.out = opts.scratch / run / (std::to_string(n) + "-" + job.command);
      fs::remove_all(job.out);
      const int status = cli::run(job, sink);
      c.expect(status == cli::kAllPass || status == cli::kCertificateFail,
               job.command + " " + job.parameters_text() + " exited " + std::to_string(status));
      dirs.push_back(job.out);
    }
    const auto files = cli::manifest_files(dirs[0]);
    c.expect(files == cli::manifest_files(dirs[1]), "file lists differ for job " + std::to_string(n));
    for (const auto& f : files) {
      const auto ext = fs::path(f).extension();
      if (ext != ".poly" && ext != ".cert" && ext != ".json" && ext != ".report") continue;
      ++compared;
      c.expect(slurp(dirs[0] / f) == slurp(dirs[1] / f), "bytes differ: " + f + " (job " + std::to_string(n) + ")");
    }
  }
  c.expect(compared > 0, "no artifacts compared");
  c.note(std::to_string(jobs.size()) + " jobs, " + std::to_string(compared) + " artifacts compared byte for byte");
  return c.ok();
}

struct Criterion {
  const char* title;
  double budget;
  bool known_red;
  bool (*run)(const Options&, Checks&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"normal-form invariants for d in {3,5,7,9}", 5, false, c1},
    {"golden d=3 values", 1, false, c2},
    {"Eisenstein and absolute certificates for h_k_1_p", 6 * 60, false, c3},
    {"lowest homogeneous part of h_k_1_p for k >= 2", 60, false, c4},
    {"mod-p congruences fhat_k_1_p = (b - a1)^(p^k)", 5, false, c5},
    {"h_0_2_p mod p = (b - a1)^(p-1) + 1, no power", 30, false, c6},
    {"mixed case h_2_1_5^j2 Eisenstein with simple witness", 60, true, c7},
    {"unicritical R_k_1_p and numeric preperiodicity oracle", 60, false, c8},
    {"unicritical restriction divisible by R_k_1_p", 60, false, c9},
    {"rigidity mod-p congruences and highest parts", 30, false, c10},
    {"property suites, 10^4 randomized cases", 60, false, c11},
    {"determinism of .poly and .cert artifacts", 120, false, c12},
};

}  // namespace

std::string CriterionResult::line() const {
  const char* tag = status == Status::Pass ? "PASS" : status == Status::Fail ? "FAIL" : "NOT RUN";
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s, budget %.0f s)", seconds, budget_seconds);
  std::string s = std::string(tag) + "  " + (id < 10 ? " " : "") + std::to_string(id) + "  " + title + buf;
  if (status == Status::Fail && known_red) s += " [known red, see README]";
  return s;
}

CriterionResult run_criterion(int id, const Options& opts) {
  if (id < 1 || id > kCriterionCount) throw DomainError("no acceptance criterion " + std::to_string(id));
  const Criterion& spec = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  r.budget_seconds = spec.budget;
  r.known_red = spec.known_red;
  Checks checks(r);
  const auto start = Clock::now();
  bool ok = false;
  try {
    ok = spec.run(opts, checks);
  } catch (const std::exception& e) {
    r.details.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = seconds_since(start);
  if (ok && r.seconds >= r.budget_seconds) {
    ok = false;
    r.details.push_back("over budget: " + fmt_seconds(r.seconds));
  }
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> results(kCriterionCount);
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int id = next++; id <= kCriterionCount; id = next++) results[id - 1] = run_criterion(id, opts);
  };
  const unsigned width = std::max(1u, std::min<unsigned>(opts.jobs, kCriterionCount));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

int exit_code(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (r.status == Status::Fail && !r.known_red) return 1;
  }
  return 0;
}

}  // namespace critlocus::acceptance
