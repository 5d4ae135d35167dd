#pragma once

#include "secsheaf/report.hpp"
#include "secsheaf/sheaf.hpp"

namespace secsheaf {

struct MorphismResult {
    std::vector<CheckRecord> records;
    bool clean() const { return !any_failed(records); }
};

// A module map K -> L induces a sheaf morphism O(K,M) -> O(L,M) over the
// same space, entrywise on fractions; an isomorphism transfers.
struct InducedSheafMorphism {
    std::vector<ModuleMap> components;  // one per open, aligned with the space's lattice
    std::vector<CheckRecord> records;
    bool all_components_iso = false;
    bool clean() const { return !any_failed(records); }
};

InducedSheafMorphism induced_sheaf_morphism(const Sheaf& source_sheaf, const Sheaf& target_sheaf,
                                            const ModuleMap& phi, const Guards& guards = {});

// A monomorphism M -> N induces: the point map S -> phi(S) from Spec^s(M)
// into Spec^s(N) (annihilators preserved), the pullback of R-coefficient
// sections over preimages, and identity-of-fractions stalk maps.
MorphismResult mono_induced_checks(const DualTopology& topo_m, const DualTopology& topo_n,
                                   const ModuleMap& phi, const Guards& guards = {});

// A ring hom phi: R -> S with a compatible module map delta: A -> B induces
// h: Spec^s(N) -> Spec^s(M) by annihilator contraction and a sheaf morphism
// O(A,M) -> pushforward of O(B,N) by a/s -> delta(a)/phi(s).  Hypothesis
// failures raise PreconditionError naming the hypothesis.
MorphismResult ring_hom_induced_checks(const RingHom& phi, const DualTopology& topo_m,
                                       const DualTopology& topo_n, const ModulePtr& a,
                                       const ModulePtr& b, const std::vector<int>& delta_values,
                                       const Guards& guards = {});

}  // namespace secsheaf
