#pragma once

#include <string>
#include <vector>

namespace qlat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Invariant suite for a given rank: root-system identities, dihedral group
// relations, eigen-structure, the projection census, and (ranks 3..5) the
// dissociation checks. Every check runs; failures carry a short diagnostic.
std::vector<CheckResult> run_checks(int n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qlat
