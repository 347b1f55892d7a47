#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conifold {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteConfig {
    std::string golden_dir = "golden";
    std::uint64_t seed = 0;
};

// The one-shot verification suite: table reproduction, duality fixed
// points, extension-class uniqueness, the tuple-level coincidence of split
// and corrected objects, multi-node structure, the weight-filtration
// battery, monodromy calculus, single-node limiting data, long-exact-
// sequence bookkeeping, and the gluing-datum validator. Deterministic for a
// fixed (golden_dir, seed).
std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& config);

}  // namespace conifold
