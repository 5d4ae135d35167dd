#pragma once

#include "secsheaf/report.hpp"
#include "secsheaf/sheaf.hpp"

namespace secsheaf {

struct SchemeResult {
    std::vector<CheckRecord> records;
    bool hypotheses_hold = false;
    bool clean() const { return !any_failed(records); }
};

// Verifies that (Spec^s(M), O(R,M)) is a scheme: on a covering family of
// basic opens Y_g, the natural map is a homeomorphism onto D_g = Spec(R_g)
// and the sections match the classical structure sheaf of R_g, section by
// section and stalk by stalk.  Requires M faithful, secondful and the
// spectrum T_0; otherwise the result records a skip with the reason.
SchemeResult verify_scheme(const DualTopology& topo, const Guards& guards = {});

}  // namespace secsheaf
