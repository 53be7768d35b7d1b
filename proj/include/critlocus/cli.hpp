#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace critlocus::cli {

enum ExitStatus : int {
  kAllPass = 0,
  kCertificateFail = 1,
  kFalsifiedIdentity = 2,
  kInvalidParameters = 3,
  kIoError = 4,
};

/// One CLI invocation. Jobs are pure functions of this record apart from the
/// timing fields of the manifest.
struct JobSpec {
  std::string command;
  std::optional<long> p;
  long e = 1;
  std::optional<long> d;
  std::optional<long> k;
  long n = 1;
  std::optional<long> j;
  long k1 = 0;
  long n1 = 1;
  long i = 2;
  long ki = 0;
  long ni = 1;
  bool full_space = false;
  std::string g;
  std::string h;
  std::filesystem::path out;
  double tol_eq = 1e-9;
  double tol_strict = 1e-6;
  unsigned jobs = 1;
  std::uint64_t seed = 20240531;
  bool stretch = false;
  std::size_t property_cases = 10000;

  /// Degree implied by --d or --p/--e.
  long degree() const;
  /// "p=3 e=1 k=2 n=1", listing only parameters the command uses.
  std::string parameters_text() const;
};

/// Throws DomainError describing the first invalid parameter.
void validate(const JobSpec& job);

/// Runs the job, writing artifacts into job.out and progress to `log`.
int run(const JobSpec& job, std::ostream& log);

/// Parses argv (CLI11) and runs; CRITLOCUS_OUT supplies the default --out.
int main_entry(int argc, char** argv);

std::string version();

/// Files written by the most recent run() into `dir`, in write order.
std::vector<std::string> manifest_files(const std::filesystem::path& dir);

}  // namespace critlocus::cli
