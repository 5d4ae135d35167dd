#pragma once

#include <string>
#include <vector>

#include "secsheaf/localization.hpp"
#include "secsheaf/topology.hpp"

namespace secsheaf {

// A finite space whose points carry localization slots: sections over an
// open set are families indexed by the slots of its points, locally given by
// a single fraction m/t.  Instantiated twice: by the dual Zariski topology
// (slots = support primes) and by the Zariski spectrum of a ring (slots =
// points).
struct SectionSpace {
    RingPtr ring;
    ModulePtr coefficient;
    int point_count = 0;
    std::vector<Bitset> opens;          // sorted; includes empty and full
    std::vector<Bitset> basics;         // per ring element r
    std::vector<int> point_slot;        // point -> slot
    std::vector<Ideal> slot_primes;     // slot -> prime (denominators are its complement)
    std::vector<LocalizedModule> slot_local;
    std::vector<std::string> point_labels;

    int index_of_open(const Bitset& pts) const;
    std::vector<int> slots_of(const Bitset& pts) const;  // sorted unique
    int full_open_index() const;
    int empty_open_index() const;
};

SectionSpace dual_section_space(const DualTopology& topo, const ModulePtr& coefficient);
// The classical structure-sheaf space over Spec(R); the coefficient module
// is usually natural(R).
SectionSpace ring_section_space(const RingSpectrum& rs, const ModulePtr& coefficient);

// The sections over one open: all families satisfying the local-fraction
// condition, with the pointwise module structure.
struct SectionModule {
    int open_index = -1;
    Bitset points;
    std::vector<int> slots;                  // positions index family entries
    std::vector<std::vector<int>> families;  // sorted
    ModulePtr module;                        // carrier indexes `families`
    bool brute_ran = false;
    bool constructive_ran = false;

    int index_of(const std::vector<int>& family) const;
    int slot_position(int slot) const;  // -1 if the slot does not occur
};

struct AxiomCheck {
    std::string axiom;
    bool passed = false;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    long long covers_checked = 0;
    bool guard_limited = false;
    bool all_passed() const;
};

struct StalkInfo {
    int point = -1;
    int minimal_open = -1;
    ModulePtr value;                   // sections over the minimal neighborhood
    const LocalizedModule* localization = nullptr;
    bool comparison_ok = false;        // projection at the point's slot is an isomorphism
    std::string failure;
};

// O(N, M): sections for every open of the space, restriction maps, the
// canonical maps tau, stalks, and the sheaf-axiom verification.
class Sheaf {
public:
    Sheaf(SectionSpace space, const Guards& guards = {});

    const SectionSpace& space() const { return space_; }
    const Guards& guards() const { return guards_; }
    int open_count() const { return (int)space_.opens.size(); }

    const SectionModule& sections(int open_index) const { return sections_[open_index]; }
    const SectionModule& global_sections() const { return sections_[space_.full_open_index()]; }

    ModuleMap restriction(int from_open, int to_open) const;
    ModuleMap tau(int open_index) const;  // coefficient -> sections
    StalkInfo stalk(int point) const;
    AxiomReport verify_axioms() const;

    // Componentwise ring structure, available when the coefficient is the
    // ring itself (localizations are then quotient rings).
    bool has_ring_structure() const;
    int section_one(int open_index) const;
    int section_product(int open_index, int a, int b) const;

private:
    SectionModule compute_sections(int open_index) const;

    SectionSpace space_;
    Guards guards_;
    std::vector<SectionModule> sections_;
};

}  // namespace secsheaf
