#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace critlocus::acceptance {

struct Options {
  std::uint64_t seed = 20240531;
  std::size_t property_cases = 10000;
  bool stretch = false;
  double tol_eq = 1e-9;
  double tol_strict = 1e-6;
  unsigned jobs = 1;
  /// Scratch directory for the determinism criterion.
  std::filesystem::path scratch = std::filesystem::temp_directory_path() / "critlocus-acceptance";
};

enum class Status { Pass, Fail, NotRun };

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::NotRun;
  double seconds = 0;
  double budget_seconds = 0;
  /// Failure is explained in the decisions ledger and does not fail the run.
  bool known_red = false;
  std::vector<std::string> details;

  /// "PASS  3  Eisenstein + absolute certificates ... (1.2 s, budget 60 s)"
  std::string line() const;
};

constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const Options& opts);
/// Runs every criterion, up to opts.jobs at a time; results in id order.
std::vector<CriterionResult> run_all(const Options& opts);
/// 0 when every criterion passed or is a known red; 1 otherwise.
int exit_code(const std::vector<CriterionResult>& results);

}  // namespace critlocus::acceptance
