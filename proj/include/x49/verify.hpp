#pragma once

#include <string>
#include <vector>

namespace x49 {

struct VerifyCheck {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct VerifySuiteResult {
  std::string suite;
  std::vector<VerifyCheck> checks;
  double elapsed_seconds = 0;

  bool passed() const;
};

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& verify_suite_names();

/// Runs one suite ("ueda", "theta", "shimura", "lfun", "criterion") or "all".
/// Throws std::invalid_argument for an unknown name.
std::vector<VerifySuiteResult> run_verify(const std::string& suite);

}  // namespace x49
