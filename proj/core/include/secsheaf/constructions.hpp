#pragma once

#include "secsheaf/submodule.hpp"

namespace secsheaf {

// M/N with the canonical projection; rep maps each coset id to its least
// parent representative.
struct QuotientModule {
    ModulePtr module;
    ModuleMap projection;   // parent -> quotient
    std::vector<int> rep;   // quotient id -> parent element
    int project(int parent_elem) const { return projection(parent_elem); }
};

QuotientModule quotient(const ModulePtr& m, const Submodule& n);

struct DirectSum {
    ModulePtr module;
    ModuleMap inject_left, inject_right;
    ModuleMap project_left, project_right;
    int encode(int a, int b) const;
    std::pair<int, int> decode(int x) const;

    int right_order;
};

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b);

// A module over a product ring assembled from one module per factor.
ModulePtr product_module(const RingPtr& product_ring, const std::vector<ModulePtr>& components);

}  // namespace secsheaf
