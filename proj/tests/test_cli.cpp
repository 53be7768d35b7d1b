#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "critlocus/cli.hpp"
#include "critlocus/errors.hpp"

using namespace critlocus;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "critlocus-cli-test" / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli::JobSpec job(const std::string& command, const std::string& dir) {
  cli::JobSpec j;
  j.command = command;
  j.out = scratch(dir);
  return j;
}

int run_quiet(const cli::JobSpec& j) {
  std::ostringstream log;
  return cli::run(j, log);
}

int run_argv(std::vector<std::string> args) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("hk1p writes the polynomial, both certificates and a manifest") {
  auto j = job("hk1p", "hk1p");
  j.p = 3;
  j.k = 2;
  CHECK(run_quiet(j) == cli::kAllPass);
  for (const char* f : {"h_2_1_3.poly", "eisenstein.cert", "eisenstein.json", "absolute.cert", "absolute.json",
                        "manifest.txt"}) {
    CHECK(fs::exists(j.out / f));
  }
  CHECK(slurp(j.out / "eisenstein.cert").find("verdict: pass") != std::string::npos);
  const std::string manifest = slurp(j.out / "manifest.txt");
  CHECK(manifest.find("command: hk1p") != std::string::npos);
  CHECK(manifest.find("parameters: p=3 e=1 k=2") != std::string::npos);
  CHECK(manifest.find("elapsed_seconds: ") != std::string::npos);
  CHECK(cli::manifest_files(j.out).size() == 5);
}

TEST_CASE("uni writes R_2_1_3") {
  auto j = job("uni", "uni");
  j.p = 3;
  j.k = 2;
  CHECK(run_quiet(j) == cli::kAllPass);
  CHECK(slurp(j.out / "R_2_1_3.poly") == "b^4 + 3*b^2 + 3\n");
  CHECK(slurp(j.out / "eisenstein.cert").find("verdict: pass") != std::string::npos);
  CHECK(slurp(j.out / "R_2_1_3_roots.report").find("passed: false") == std::string::npos);
}

TEST_CASE("rigidity report from the command line") {
  const fs::path dir = scratch("rigidity");
  CHECK(run_argv({"critlocus", "rigidity", "--p", "3", "--e", "2", "--k1", "1", "--n1", "1", "--i", "2", "--ki", "0",
                  "--ni", "1", "--out", dir.string()}) == cli::kAllPass);
  CHECK(slurp(dir / "rigidity.report").find("coprime-mod-p: true") != std::string::npos);
}

TEST_CASE("CRITLOCUS_OUT supplies the default output directory") {
  const fs::path dir = scratch("env");
  setenv("CRITLOCUS_OUT", dir.c_str(), 1);
  CHECK(run_argv({"critlocus", "normalform", "--d", "3"}) == cli::kAllPass);
  unsetenv("CRITLOCUS_OUT");
  CHECK(slurp(dir / "fhat_3.poly") == "2*a1^3 - 3*z*a1^2 + z^3 + b\n");
  CHECK(slurp(dir / "f_3.poly").size() > 0);
}

TEST_CASE("certificate failure exits 1") {
  auto j = job("certify", "certify-fail");
  j.d = 3;
  j.g = "(b - a1)^2";
  CHECK(run_quiet(j) == cli::kCertificateFail);
  CHECK(slurp(j.out / "eisenstein.cert").find("failing_condition: 3") != std::string::npos);

  auto m = job("mixed", "mixed");
  m.p = 5;
  m.k = 1;
  m.j = 2;
  CHECK(run_quiet(m) == cli::kCertificateFail);
  CHECK(fs::exists(m.out / "eisenstein_cofactor.cert"));
  CHECK(slurp(m.out / "eisenstein_cofactor.cert").find("verdict: pass") != std::string::npos);
}

TEST_CASE("certify passes on a certified input and reads @files") {
  const fs::path dir = scratch("certify-file");
  fs::create_directories(dir);
  std::ofstream(dir / "g.txt") << "b + 2*a1\n";
  auto j = job("certify", "certify-pass");
  j.p = 3;
  j.g = "@" + (dir / "g.txt").string();
  CHECK(run_quiet(j) == cli::kAllPass);
  CHECK(fs::exists(j.out / "absolute.cert"));
}

TEST_CASE("invalid parameters are rejected before dispatch") {
  auto j = job("hk1p", "invalid");
  j.p = 4;
  j.k = 1;
  CHECK_THROWS_AS(cli::validate(j), DomainError);
  CHECK(run_quiet(j) == cli::kInvalidParameters);
  j.p = 3;
  j.k.reset();
  CHECK(run_quiet(j) == cli::kInvalidParameters);
  auto m = job("mixed", "invalid-mixed");
  m.p = 5;
  m.k = 1;
  m.j = 4;
  CHECK(run_quiet(m) == cli::kInvalidParameters);
  auto r = job("rigidity", "invalid-rigidity");
  r.p = 3;
  r.i = 3;
  CHECK(run_quiet(r) == cli::kInvalidParameters);
  auto d = job("normalform", "invalid-d");
  d.p = 3;
  d.d = 5;
  CHECK(run_quiet(d) == cli::kInvalidParameters);
  CHECK(run_argv({"critlocus", "nosuchcommand"}) == cli::kInvalidParameters);
  auto parse = job("certify", "invalid-parse");
  parse.d = 3;
  parse.g = "b +";
  CHECK(run_quiet(parse) == cli::kInvalidParameters);
}

TEST_CASE("modp reports the Frobenius power") {
  auto j = job("modp", "modp");
  j.p = 3;
  j.e = 2;
  j.k = 2;
  CHECK(run_quiet(j) == cli::kAllPass);
  const std::string rep = slurp(j.out / "modp.report");
  CHECK(rep.find("power_of_b_minus_a1: 81") != std::string::npos);
  CHECK(rep.find("congruence: true") != std::string::npos);
  auto two = job("modp", "modp-h02");
  two.p = 5;
  two.k = 0;
  two.n = 2;
  CHECK(run_quiet(two) == cli::kAllPass);
  CHECK(slurp(two.out / "modp.report").find("power_of_b_minus_a1: absent") != std::string::npos);
}

TEST_CASE("reruns produce byte-identical artifacts") {
  for (const char* cmd : {"hk1p", "uni", "mixed"}) {
    auto a = job(cmd, std::string("rerun-a-") + cmd);
    auto b = job(cmd, std::string("rerun-b-") + cmd);
    for (auto* j : {&a, &b}) {
      j->p = 5;
      j->k = 2;
      j->j = std::string(cmd) == "mixed" ? std::optional<long>(2) : std::nullopt;
      run_quiet(*j);
    }
    const auto files = cli::manifest_files(a.out);
    REQUIRE_FALSE(files.empty());
    CHECK(files == cli::manifest_files(b.out));
    for (const auto& f : files) CHECK(slurp(a.out / f) == slurp(b.out / f));
  }
}

TEST_CASE("other subcommands write their polynomials") {
  auto o = job("orbit", "orbit");
  o.d = 3;
  o.k = 2;
  CHECK(run_quiet(o) == cli::kAllPass);
  CHECK(slurp(o.out / "orbithat_2_3.poly") == "b^3 - 3*a1^2*b + 2*a1^3 + b\n");
  auto f = job("fknd", "fknd");
  f.d = 3;
  f.k = 1;
  CHECK(run_quiet(f) == cli::kAllPass);
  CHECK(fs::exists(f.out / "fhat_1_1_3.poly"));
  auto h = job("hgeneral", "hgeneral");
  h.d = 3;
  h.k = 1;
  h.n = 1;
  CHECK(run_quiet(h) == cli::kAllPass);
  CHECK(slurp(h.out / "h_1_1_3.poly") == "b + 2*a1\n");
}

TEST_CASE("job parameters text") {
  cli::JobSpec j;
  j.command = "hk1p";
  j.p = 3;
  j.k = 2;
  CHECK(j.parameters_text() == "p=3 e=1 k=2");
  CHECK(j.degree() == 3);
  j.e = 2;
  CHECK(j.degree() == 9);
}
