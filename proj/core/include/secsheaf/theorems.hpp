#pragma once

#include "secsheaf/report.hpp"
#include "secsheaf/sheaf.hpp"

namespace secsheaf {

struct TheoremSuiteResult {
    std::vector<CheckRecord> records;
    int passed = 0, failed = 0, skipped = 0;
    bool clean() const { return failed == 0; }
};

// Runs every sheaf-theoretic check for the instance (M, N, K <= M) over the
// distinguished open U = X^s \ V^s(K).  Checks whose hypotheses fail are
// skipped with a reason, never silently passed.
TheoremSuiteResult theorem_suite(const DualTopology& topo, const ModulePtr& coefficient,
                                 const Submodule& k, const Guards& guards = {});

// Convenience: sections of O(N, M) without re-running the checks.
Sheaf build_sheaf(const DualTopology& topo, const ModulePtr& coefficient,
                  const Guards& guards = {});

}  // namespace secsheaf
