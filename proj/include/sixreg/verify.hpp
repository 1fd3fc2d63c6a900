#pragma once

#include <string>
#include <vector>

namespace sixreg {

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // informational lines, never failures

  bool ok() const { return failures.empty(); }
};

/// Names accepted by run_verify besides "all".
const std::vector<std::string>& verify_suites();

/// Runs invariant suites over the corpus of spheres with at most max_n
/// vertices. Throws BadParameter for an unknown suite name.
std::vector<SuiteResult> run_verify(const std::string& suite, int max_n, int threads = 1);

}  // namespace sixreg
