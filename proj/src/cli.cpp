#include "critlocus/cli.hpp"

#include <gmp.h>

#include <boost/version.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "critlocus/acceptance.hpp"
#include "critlocus/certify.hpp"
#include "critlocus/dynamics.hpp"
#include "critlocus/errors.hpp"
#include "critlocus/unicritical.hpp"

namespace critlocus::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "1.0.0";

class IoError : public Error {
 public:
  using Error::Error;
};

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

/// Output directory plus the ordered list of files written into it.
class Artifacts {
 public:
  explicit Artifacts(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create " + dir_.string() + ": " + ec.message());
  }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    out << with_newline(content);
    if (!out) throw IoError("cannot write " + (dir_ / name).string());
    files_.push_back(name);
  }

  const fs::path& dir() const { return dir_; }
  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

std::string idx(long k, long n, long d) {
  return std::to_string(k) + "_" + std::to_string(n) + "_" + std::to_string(d);
}

Poly marked_linear(const SpacePtr& space) {
  return Poly::variable(space, "b") - Poly::variable(space, "a1");
}

std::string read_operand(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw IoError("cannot read " + text.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int status_of(Verdict v) { return v == Verdict::Fail || v == Verdict::Undecided ? kCertificateFail : kAllPass; }

void write_eisenstein(Artifacts& out, const std::string& stem, const EisensteinCertificate& cert) {
  out.write(stem + ".cert", cert.to_text());
  out.write(stem + ".json", cert.to_json());
}

void write_absolute(Artifacts& out, const std::string& stem, const AbsoluteIrreducibilityReport& rep) {
  out.write(stem + ".cert", rep.to_text());
  out.write(stem + ".json", rep.to_json());
}

int cmd_normalform(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const int d = static_cast<int>(job.degree());
  const NormalForm nf = build_normal_form(d);
  out.write("f_" + std::to_string(d) + ".poly", nf.f.to_string());
  out.write("fhat_" + std::to_string(d) + ".poly", nf.fhat.to_string());
  log << "normal form of degree " << d << ": invariants hold\n";
  return kAllPass;
}

int cmd_orbit(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const OrbitCache orbit(static_cast<int>(job.degree()));
  const Poly pt = orbit.point(static_cast<std::size_t>(*job.k), !job.full_space);
  const std::string name = std::string(job.full_space ? "orbit_" : "orbithat_") + std::to_string(*job.k) + "_" +
                           std::to_string(job.degree()) + ".poly";
  out.write(name, pt.to_string());
  log << name << ": " << pt.size() << " terms\n";
  return kAllPass;
}

int cmd_fknd(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const OrbitCache orbit(static_cast<int>(job.degree()));
  const Poly g = f_knd(orbit, static_cast<std::size_t>(*job.k), static_cast<std::size_t>(job.n), !job.full_space);
  const std::string name =
      std::string(job.full_space ? "f_" : "fhat_") + idx(*job.k, job.n, job.degree()) + ".poly";
  out.write(name, g.to_string());
  log << name << ": " << g.size() << " terms\n";
  return kAllPass;
}

int cmd_hk1p(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const long p = *job.p;
  const long k = *job.k;
  const OrbitCache orbit(static_cast<int>(p));
  const Poly h = h_k1p(orbit, static_cast<std::size_t>(k));
  const std::string name = "h_" + idx(k, 1, p);
  out.write(name + ".poly", h.to_string());
  log << name << ": " << h.size() << " terms\n";
  if (k == 0) {
    log << name << " is linear in b\n";
    return kAllPass;
  }
  const TargetId target{k, 1, p, ""};
  const auto eis = certify_eisenstein(h, marked_linear(h.space()), OddPrime(static_cast<std::uint64_t>(p)), target);
  write_eisenstein(out, "eisenstein", eis);
  const auto abs = certify_absolute(h, eis, k == 1 ? AbsoluteShape::MarkedFiber : AbsoluteShape::LowestPart);
  write_absolute(out, "absolute", abs);
  log << "eisenstein: " << to_string(eis.verdict) << ", absolute: " << to_string(abs.verdict) << '\n';
  return std::max(status_of(eis.verdict), status_of(abs.verdict));
}

int cmd_hgeneral(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const OrbitCache orbit(static_cast<int>(job.degree()));
  const Poly h = h_general(orbit, static_cast<std::size_t>(*job.k), static_cast<std::size_t>(job.n));
  const std::string name = "h_" + idx(*job.k, job.n, job.degree()) + ".poly";
  out.write(name, h.to_string());
  log << name << ": " << h.size() << " terms\n";
  return kAllPass;
}

int cmd_mixed(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const long p = *job.p;
  const long k = *job.k;
  const int j = static_cast<int>(*job.j);
  const OrbitCache orbit(static_cast<int>(p));
  const MixedSpecialization ms = mixed_specialize(h_k1p(orbit, static_cast<std::size_t>(k)), j);
  const OddPrime prime(static_cast<std::uint64_t>(p));
  const std::string spec = "j" + std::to_string(j);
  const std::string name = "h_" + idx(k, 1, p) + "_" + spec;
  out.write(name + ".poly", ms.poly.to_string());

  const SpacePtr& space = ms.poly.space();
  const auto eis = certify_eisenstein(ms.poly, marked_linear(space), prime, TargetId{k, 1, p, spec});
  write_eisenstein(out, "eisenstein", eis);
  const auto abs = certify_absolute(ms.poly, eis, AbsoluteShape::LowestPart);
  write_absolute(out, "absolute", abs);

  const auto [cofactor, t] = strip_marked_fixed_factor(ms.poly);
  out.write(name + "_cofactor.poly", cofactor.to_string());
  const auto co = certify_eisenstein(cofactor, marked_linear(space), prime, TargetId{k, 1, p, spec + "-cofactor"});
  write_eisenstein(out, "eisenstein_cofactor", co);

  std::ostringstream rep;
  rep << "kind: mixed\n" << "target: " << TargetId{k, 1, p, spec}.to_string() << '\n' << "j: " << j << '\n';
  for (const auto& [from, to] : ms.mapping) rep << "map: " << from << " -> " << to << '\n';
  rep << "marked_fixed_factor_power: " << t << '\n'
      << "eisenstein: " << to_string(eis.verdict) << '\n'
      << "cofactor_eisenstein: " << to_string(co.verdict) << '\n'
      << "absolute: " << to_string(abs.verdict) << '\n'
      << "witness: " << abs.witness << '\n';
  out.write("mixed.report", rep.str());
  log << name << ": eisenstein " << to_string(eis.verdict) << ", (b - a1)^" << t << " split off, cofactor "
      << to_string(co.verdict) << ", absolute " << to_string(abs.verdict) << '\n';
  return std::max(status_of(eis.verdict), status_of(abs.verdict));
}

int cmd_certify(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const int d = static_cast<int>(job.degree());
  const SpacePtr space = job.full_space ? VarSpace::full(d) : VarSpace::hatted(d);
  const Poly g = parse_poly(read_operand(job.g), space);
  const Poly h = job.h.empty() ? marked_linear(space) : parse_poly(read_operand(job.h), space);
  const long p = job.p ? *job.p : d;
  const TargetId target{job.k.value_or(0), job.n, d, "input"};
  const auto eis = certify_eisenstein(g, h, OddPrime(static_cast<std::uint64_t>(p)), target);
  write_eisenstein(out, "eisenstein", eis);
  int status = status_of(eis.verdict);
  log << "eisenstein: " << to_string(eis.verdict) << '\n';
  if (eis.verdict == Verdict::Pass) {
    const auto abs = certify_absolute(g, eis, AbsoluteShape::LowestPart);
    write_absolute(out, "absolute", abs);
    log << "absolute: " << to_string(abs.verdict) << '\n';
    status = std::max(status, status_of(abs.verdict));
  }
  return status;
}

int cmd_uni(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const int d = static_cast<int>(job.degree());
  const long k = *job.k;
  const RResult r = R_knd(d, static_cast<std::size_t>(k), static_cast<std::size_t>(job.n));
  const std::string name = "R_" + idx(k, job.n, d);
  out.write(name + ".poly", r.R.to_string());
  std::ostringstream removed;
  removed << "kind: removed-factors\n" << "target: " << name << '\n';
  for (const auto& f : r.removed) {
    removed << "removed: l=" << f.l << " m=" << f.m << " degree=" << f.factor.degree() << " factor=" << f.factor.to_string()
            << '\n';
  }
  removed << "removed_degree: " << r.removed_degree() << '\n' << "R_degree: " << r.R.degree() << '\n';
  out.write(name + "_removed.report", removed.str());
  int status = kAllPass;
  if (job.n == 1 && job.e == 1 && is_prime(static_cast<std::uint64_t>(d))) {
    const auto cert = certify_R_eisenstein(r.R, OddPrime(static_cast<std::uint64_t>(d)),
                                           TargetId{k, 1, d, "unicritical"});
    write_eisenstein(out, "eisenstein", cert);
    status = status_of(cert.verdict);
    log << name << ": degree " << r.R.degree() << ", eisenstein " << to_string(cert.verdict) << '\n';
  }
  if (!r.R.is_constant()) {
    RootFinderOptions ro;
    ro.seed = job.seed;
    std::ostringstream roots;
    std::size_t failed = 0;
    const auto found = find_roots(r.R, ro);
    for (const auto& root : found) {
      const auto w = numeric_preperiodicity_oracle(d, static_cast<std::size_t>(k), static_cast<std::size_t>(job.n),
                                                   root, job.tol_eq, job.tol_strict, r.R);
      roots << w.to_text() << '\n';
      if (!w.passed) ++failed;
    }
    out.write(name + "_roots.report", roots.str());
    log << found.size() << " roots, " << failed << " failing the preperiodicity oracle\n";
    if (failed) status = kCertificateFail;
  }
  return status;
}

int cmd_rigidity(const JobSpec& job, Artifacts& out, std::ostream& log) {
  RigidityParams params;
  params.p = static_cast<std::uint32_t>(*job.p);
  params.e = static_cast<std::uint32_t>(job.e);
  params.k1 = static_cast<std::size_t>(job.k1);
  params.n1 = static_cast<std::size_t>(job.n1);
  params.i = static_cast<int>(job.i);
  params.ki = static_cast<std::size_t>(job.ki);
  params.ni = static_cast<std::size_t>(job.ni);
  const RigidityReport r = rigidity_check(params, !job.full_space);
  out.write("rigidity.report", r.to_text());
  log << "coprime-mod-p: " << (r.coprime_mod_p ? "true" : "false") << '\n';
  return kAllPass;
}

int cmd_modp(const JobSpec& job, Artifacts& out, std::ostream& log) {
  const int d = static_cast<int>(job.degree());
  const OddPrime p(static_cast<std::uint64_t>(*job.p));
  const auto k = static_cast<std::size_t>(*job.k);
  const auto n = static_cast<std::size_t>(job.n);
  ModPOrbit orbit(d, p, !job.full_space);
  const ModPPoly diff = orbit.point("a1", k + n) - orbit.point("a1", k);
  const std::string name = std::string(job.full_space ? "f_" : "fhat_") + idx(static_cast<long>(k), job.n, d) +
                           "_mod_" + std::to_string(p.value());
  out.write(name + ".poly", diff.to_string());
  const ModPPoly lin =
      reduce_poly_mod_p(marked_linear(orbit.space()), p);
  const auto power = is_power_of(diff, lin);
  std::ostringstream rep;
  rep << "kind: modp\n" << "target: " << name << '\n'
      << "terms: " << diff.size() << '\n'
      << "power_of_b_minus_a1: " << (power ? std::to_string(*power) : std::string("absent")) << '\n';
  int status = kAllPass;
  if (n == 1) {
    std::uint64_t expected = 1;
    for (std::size_t s = 0; s < k; ++s) expected *= static_cast<std::uint64_t>(d);
    const bool ok = power && *power == expected;
    rep << "expected_power: " << expected << '\n' << "congruence: " << (ok ? "true" : "false") << '\n';
    if (!ok) {
      out.write("modp.report", rep.str());
      throw FalsifiedIdentity("f_k_1_d is not congruent to (b - a1)^(d^k) mod p", rep.str());
    }
  }
  out.write("modp.report", rep.str());
  log << name << ": power " << (power ? std::to_string(*power) : std::string("absent")) << '\n';
  return status;
}

int cmd_suite(const JobSpec& job, Artifacts& out, std::ostream& log) {
  acceptance::Options opts;
  opts.seed = job.seed;
  opts.stretch = job.stretch;
  opts.tol_eq = job.tol_eq;
  opts.tol_strict = job.tol_strict;
  opts.jobs = job.jobs;
  opts.property_cases = job.property_cases;
  opts.scratch = out.dir() / "determinism";
  const auto results = acceptance::run_all(opts);
  std::ostringstream summary;
  bool any_fail = false;
  for (const auto& r : results) {
    summary << r.line() << '\n';
    for (const auto& d : r.details) summary << "    " << d << '\n';
    any_fail = any_fail || r.status == acceptance::Status::Fail;
  }
  out.write("acceptance.txt", summary.str());
  log << summary.str();
  return any_fail ? kCertificateFail : kAllPass;
}

using Handler = int (*)(const JobSpec&, Artifacts&, std::ostream&);

struct Command {
  const char* name;
  const char* help;
  Handler handler;
};

const Command kCommands[] = {
    {"normalform", "normal form f and its hatted form fhat of degree d", cmd_normalform},
    {"orbit", "symbolic orbit point f^k(a1)", cmd_orbit},
    {"fknd", "f_{k,n,d} = f^{k+n}(a1) - f^k(a1)", cmd_fknd},
    {"hk1p", "h_{k,1,p} with Eisenstein and absolute-irreducibility certificates", cmd_hk1p},
    {"hgeneral", "h_{k,n,d} by gcd removal", cmd_hgeneral},
    {"mixed", "mixed-critical specialization h_{k,1,p}^j and its certificates", cmd_mixed},
    {"certify", "generalized Eisenstein certificate for --g with respect to --h", cmd_certify},
    {"uni", "unicritical R_{k,n,d}, Eisenstein certificate and numeric oracle", cmd_uni},
    {"rigidity", "mod-p rigidity computation", cmd_rigidity},
    {"modp", "f_{k,n,p^e} mod p via the Frobenius fast path", cmd_modp},
    {"suite", "acceptance battery", cmd_suite},
};

const Command& find_command(const std::string& name) {
  for (const auto& c : kCommands) {
    if (name == c.name) return c;
  }
  throw DomainError("unknown command '" + name + "'");
}

bool uses(const std::string& cmd, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (cmd == n) return true;
  }
  return false;
}

fs::path default_out() {
  if (const char* env = std::getenv("CRITLOCUS_OUT"); env && *env) return env;
  return "critlocus-out";
}

std::string manifest_text(const JobSpec& job, const Artifacts& out, int status, double elapsed) {
  std::ostringstream m;
  m << "command: " << job.command << '\n'
    << "parameters: " << job.parameters_text() << '\n'
    << "version: critlocus " << kVersion << '\n'
    << "gmp: " << gmp_version << '\n'
    << "boost: " << BOOST_VERSION / 100000 << '.' << BOOST_VERSION / 100 % 1000 << '.' << BOOST_VERSION % 100 << '\n'
    << "status: " << status << '\n';
  for (const auto& f : out.files()) m << "file: " << f << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", elapsed);
  m << "elapsed_seconds: " << buf << '\n';
  return m.str();
}

}  // namespace

long JobSpec::degree() const {
  if (d) return *d;
  if (!p) throw DomainError("one of --d or --p is required");
  long r = 1;
  for (long s = 0; s < e; ++s) r *= *p;
  return r;
}

std::string JobSpec::parameters_text() const {
  std::ostringstream os;
  auto sep = [&os, first = true]() mutable -> std::ostream& {
    if (!first) os << ' ';
    first = false;
    return os;
  };
  if (p) sep() << "p=" << *p << " e=" << e;
  if (d) sep() << "d=" << *d;
  if (command == "rigidity") {
    sep() << "k1=" << k1 << " n1=" << n1 << " i=" << i << " ki=" << ki << " ni=" << ni;
  } else {
    if (k) sep() << "k=" << *k;
    if (uses(command, {"fknd", "hgeneral", "uni", "modp", "certify"})) sep() << "n=" << n;
  }
  if (j) sep() << "j=" << *j;
  if (full_space) sep() << "space=full";
  if (!g.empty()) sep() << "g=" << g;
  if (!h.empty()) sep() << "h=" << h;
  if (uses(command, {"uni", "suite"})) {
    sep() << "seed=" << seed << " tol_eq=" << tol_eq << " tol_strict=" << tol_strict;
  }
  if (command == "suite") sep() << "stretch=" << (stretch ? "true" : "false") << " cases=" << property_cases;
  return os.str();
}

void validate(const JobSpec& job) {
  const std::string& c = job.command;
  find_command(c);
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw DomainError(c + ": " + what);
  };
  if (job.p) need(*job.p > 2 && is_prime(static_cast<std::uint64_t>(*job.p)), "--p must be an odd prime");
  need(job.e >= 1 && job.e <= 4, "--e must be in 1..4");
  if (job.d) need(*job.d >= 3 && *job.d <= 81, "--d must be in 3..81");
  if (job.d && job.p) {
    long q = 1;
    for (long s = 0; s < job.e; ++s) q *= *job.p;
    need(q == *job.d, "--d must equal p^e");
  }
  need(job.n >= 1, "--n must be at least 1");
  if (job.k) need(*job.k >= 0 && *job.k <= 12, "--k must be in 0..12");
  need(job.jobs >= 1, "--jobs must be at least 1");
  need(job.tol_eq > 0 && job.tol_strict > 0, "tolerances must be positive");
  if (uses(c, {"normalform", "orbit", "fknd", "hgeneral", "uni", "certify"})) {
    need(job.d || job.p, "--d or --p is required");
  }
  if (uses(c, {"orbit", "fknd", "hk1p", "hgeneral", "mixed", "uni", "modp"})) need(job.k.has_value(), "--k is required");
  if (uses(c, {"hk1p", "mixed", "rigidity", "modp"})) need(job.p.has_value(), "--p is required");
  if (uses(c, {"hk1p", "mixed"})) need(job.e == 1, "--e must be 1");
  if (c == "hk1p") need(*job.k >= 0, "--k must be nonnegative");
  if (c == "mixed") {
    need(*job.p > 3, "--p must exceed 3");
    need(job.j && *job.j >= 2 && *job.j <= *job.p - 2, "--j must be in 2..p-2");
  }
  if (c == "certify") need(!job.g.empty(), "--g is required");
  if (c == "rigidity") {
    const long d = job.degree();
    need(job.i >= 2 && job.i <= d - 1, "--i must be in 2..p^e-1");
    need(job.n1 >= 1 && job.ni >= 1, "--n1 and --ni must be at least 1");
    need(job.k1 >= 0 && job.ki >= 0, "--k1 and --ki must be nonnegative");
  }
}

int run(const JobSpec& job, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  try {
    validate(job);
  } catch (const Error& e) {
    log << "invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  }
  const fs::path dir = job.out.empty() ? default_out() : job.out;
  int status = kAllPass;
  std::optional<Artifacts> out;
  try {
    out.emplace(dir);
    try {
      status = find_command(job.command).handler(job, *out, log);
    } catch (const FalsifiedIdentity& e) {
      log << "falsified identity: " << e.what() << '\n' << e.dump() << '\n';
      out->write("falsified.report", std::string("error: ") + e.what() + "\n" + e.dump());
      status = kFalsifiedIdentity;
    } catch (const IoError&) {
      throw;
    } catch (const Error& e) {
      log << "invalid parameters: " << e.what() << '\n';
      status = kInvalidParameters;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ofstream m(dir / "manifest.txt", std::ios::binary | std::ios::trunc);
    m << manifest_text(job, *out, status, elapsed);
    if (!m) throw IoError("cannot write " + (dir / "manifest.txt").string());
  } catch (const IoError& e) {
    log << "i/o error: " << e.what() << '\n';
    return kIoError;
  }
  return status;
}

std::vector<std::string> manifest_files(const fs::path& dir) {
  std::ifstream in(dir / "manifest.txt");
  std::vector<std::string> files;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("file: ", 0) == 0) files.push_back(line.substr(6));
  }
  return files;
}

std::string version() { return kVersion; }

int main_entry(int argc, char** argv) {
  CLI::App app{"critlocus: preperiodicity polynomials and their irreducibility certificates"};
  app.set_version_flag("--version", std::string("critlocus ") + kVersion);
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  JobSpec job;
  std::string out;

  auto optional = [](CLI::App* sub, const std::string& flag, std::optional<long>& target, const std::string& help) {
    sub->add_option_function<long>(flag, [&target](const long& v) { target = v; }, help);
  };

  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    optional(sub, "--p", job.p, "odd prime");
    sub->add_option("--e", job.e, "exponent, degree d = p^e")->capture_default_str();
    optional(sub, "--d", job.d, "degree (alternative to --p/--e)");
    optional(sub, "--k", job.k, "preperiod");
    sub->add_option("--n", job.n, "period")->capture_default_str();
    optional(sub, "--j", job.j, "number of critical points identified with a1");
    sub->add_option("--k1", job.k1, "preperiod of a1 (rigidity)")->capture_default_str();
    sub->add_option("--n1", job.n1, "period of a1 (rigidity)")->capture_default_str();
    sub->add_option("--i", job.i, "index of the second critical point (rigidity)")->capture_default_str();
    sub->add_option("--ki", job.ki, "preperiod of a_i (rigidity)")->capture_default_str();
    sub->add_option("--ni", job.ni, "period of a_i (rigidity)")->capture_default_str();
    sub->add_option("--g", job.g, "polynomial to certify, or @file");
    sub->add_option("--h", job.h, "Eisenstein modulus (default b - a1), or @file");
    sub->add_flag("--full", job.full_space, "work in the full space instead of the hatted one");
    sub->add_option("--out", out, "output directory (default $CRITLOCUS_OUT or ./critlocus-out)");
    sub->add_option("--tol-eq", job.tol_eq, "oracle equality tolerance")->capture_default_str();
    sub->add_option("--tol-strict", job.tol_strict, "oracle strictness tolerance")->capture_default_str();
    sub->add_option("--jobs", job.jobs, "parallel width for suite")->capture_default_str();
    sub->add_option("--seed", job.seed, "root-finder perturbation seed")->capture_default_str();
    sub->add_flag("--stretch", job.stretch, "suite: include stretch certificate cases");
    sub->add_option("--cases", job.property_cases, "suite: randomized property cases")->capture_default_str();
    sub->final_callback([&job, sub] { job.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAllPass : kInvalidParameters;
  }
  job.out = out.empty() ? default_out() : fs::path(out);
  return run(job, std::cout);
}

}  // namespace critlocus::cli
