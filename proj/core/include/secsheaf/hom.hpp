#pragma once

#include <optional>
#include <vector>

#include "secsheaf/constructions.hpp"

namespace secsheaf {

// Greedy generating set, ascending by element id; empty for the zero module.
std::vector<int> minimal_generators(const ModulePtr& m);

// All R-linear maps source -> target, as value tables sorted lexicographically.
// The candidate count |target|^(number of generators) is guarded by hom_cap.
std::vector<std::vector<int>> enumerate_homs(const ModulePtr& source, const ModulePtr& target,
                                             const Guards& guards = {});

// Hom(A, B) with its pointwise module structure.
struct HomModule {
    ModulePtr domain, codomain;
    ModulePtr module;                    // carrier indexes `maps`
    std::vector<std::vector<int>> maps;  // value tables, sorted
    ModuleMap map_at(int i) const { return ModuleMap(domain, codomain, maps[i]); }
    int index_of(const std::vector<int>& values) const;
};

HomModule hom_module(const ModulePtr& a, const ModulePtr& b, const Guards& guards = {});

// All extensions of the pinned assignments (elem -> image) to full maps.
std::vector<std::vector<int>> extend_homs(const ModulePtr& source, const ModulePtr& target,
                                          const std::vector<std::pair<int, int>>& pinned,
                                          const Guards& guards = {});

// Invariant pre-screen (order, annihilator, additive-order histogram) then
// backtracking over generator images.
std::optional<ModuleMap> find_isomorphism(const ModulePtr& a, const ModulePtr& b,
                                          const Guards& guards = {});

bool modules_isomorphic(const ModulePtr& a, const ModulePtr& b, const Guards& guards = {});

}  // namespace secsheaf
