#pragma once

#include <string>
#include <vector>

namespace eswap {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Exhaustive identity checks over the permutation, partition and exact
/// moment layers, plus the two-route swap equivalence. pmax caps the
/// exhaustive symmetric-group enumerations (allowed range 2..8).
std::vector<CheckResult> run_verification(int pmax);

}  // namespace eswap
