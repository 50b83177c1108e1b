// One line per acceptance criterion; exit status is nonzero if any fails.
//
//   doob_acceptance [--threads N] [criterion ...]

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <vector>

#include "suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the doob library", "doob_acceptance"};
  unsigned threads = 1;
  std::vector<int> only;
  app.add_option("--threads", threads, "Upper bound on worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("criteria", only, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  const auto results = doob::suite::run_all(only, threads, [&](const doob::suite::Result& r) {
    std::cout << doob::suite::format_line(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
