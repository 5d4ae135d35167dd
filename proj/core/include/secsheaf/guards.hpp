#pragma once

namespace secsheaf {

// Enumeration caps.  Exceeding one raises CapacityError; none of them is a
// correctness parameter.
struct Guards {
    int ring_cap = 64;                    // max |R| for ideal enumeration
    int submodule_cap = 256;              // max |M| for submodule enumeration
    long long hom_cap = 1'000'000;        // max candidate assignments in hom searches
    long long family_cap = 1'000'000;     // max candidate families in brute-force sections
    long long cover_cap = 4096;           // max basic-open cover combinations per open
};

}  // namespace secsheaf
