#pragma once

#include "secsheaf/constructions.hpp"
#include "secsheaf/hom.hpp"

namespace secsheaf {

// N_S realized as N/T with T = {n : sn = 0 for some s in S}; fractions are
// resolved eagerly to carrier elements, never stored.
struct LocalizedModule {
    ModulePtr source;
    Bitset inverted;        // S
    ModulePtr result;       // N/T, still an R-module
    ModuleMap canonical;    // n -> n/1
    std::vector<int> rep;   // result id -> source element

    bool is_invertible(int t) const { return !inverse_action[t].empty(); }
    // m/t in the localization; t must act bijectively on the result.
    int fraction(int m, int t) const;

    std::vector<std::vector<int>> inverse_action;  // per scalar; empty when not bijective
};

LocalizedModule localize_at_set(const ModulePtr& n, Bitset mult_set);
LocalizedModule localize_at_prime(const ModulePtr& n, const Ideal& p);
LocalizedModule localize_at_element(const ModulePtr& n, int f);

// Gamma_I(N): the union of (0 :_N I^k), realized at the stable power of I.
struct TorsionSubmodule {
    ModulePtr parent;
    Ideal ideal;
    Submodule elements;
    int stable_exponent;
};

TorsionSubmodule torsion_submodule(const ModulePtr& n, const Ideal& i);
bool is_torsion(const ModulePtr& n, const Ideal& i);

// D_I(N) = Hom(I^infinity, N), realized at the stable ideal power; the
// transition maps between consecutive powers are retained as an audit.
struct IdealTransform {
    ModulePtr module;
    Ideal ideal;
    HomModule hom;        // Hom(stable power, N)
    ModulePtr transform;  // hom.module
    ModuleMap eta;        // n -> (x -> xn)

    struct AuditRow {
        int exponent;
        int ideal_size;
        int hom_order;
        bool transition_bijective;  // restriction Hom(I^k,N) -> Hom(I^(k+1),N)
    };
    std::vector<AuditRow> audit;
};

IdealTransform ideal_transform(const ModulePtr& n, const Ideal& i, const Guards& guards = {});

}  // namespace secsheaf
