#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodromy/semigroup.hpp"

namespace monodromy {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  /// One line per check, then the overall status. Byte-stable.
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

struct VerifyOptions {
  /// Check ids to run (1..10); empty runs all of them.
  std::vector<int> only;
  std::uint64_t seed = 0;  // 0 selects the configured default
  int random_pairs = 64;
};

/// The two shipped factorizations of the counterexample in Br_4.
Factorization fixture_s1();
Factorization fixture_s2();

/// Runs the verification suite on the given pair (normally the fixtures).
/// Failures are recorded in the report, never thrown.
VerificationReport verify_paper(const Factorization& s1, const Factorization& s2,
                                const VerifyOptions& options = {});
VerificationReport verify_paper(const VerifyOptions& options = {});

}  // namespace monodromy
