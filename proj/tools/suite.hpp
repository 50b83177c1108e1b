#pragma once

#include <functional>
#include <string>
#include <vector>

namespace doob::suite {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  /// The mathematical statement being checked, in words.
  std::string claim;
  /// Wall-clock budget; exceeding it fails the criterion.
  double limit_seconds = 0;
  std::function<Outcome(unsigned threads)> check;
};

struct Result {
  int id = 0;
  std::string name;
  std::string claim;
  bool passed = false;
  /// Set when the check itself raised TheoremFalsification.
  bool falsified = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

const std::vector<Criterion>& criteria();

/// Runs one criterion, timing it and turning exceptions into failures.
Result run(const Criterion& c, unsigned threads = 1);

/// Runs the selected criteria (all when `only` is empty), calling `progress`
/// after each one.
std::vector<Result> run_all(const std::vector<int>& only, unsigned threads,
                            const std::function<void(const Result&)>& progress = {});

/// "PASS  7  key proposition ... (42.1 s / 600 s)  detail"
std::string format_line(const Result& r);

}  // namespace doob::suite
