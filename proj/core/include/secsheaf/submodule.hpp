#pragma once

#include <vector>

#include "secsheaf/guards.hpp"
#include "secsheaf/ideal.hpp"
#include "secsheaf/module_map.hpp"

namespace secsheaf {

// A submodule realized standalone, with its inclusion into the parent.
struct StandaloneSubmodule {
    ModulePtr module;
    std::vector<int> elem;  // id -> parent element
    ModuleMap inclusion;
};

// A submodule of a FiniteModule, stored as a membership bit-set; closure is
// verified on construction.
class Submodule {
public:
    Submodule(ModulePtr parent, Bitset elements);

    static Submodule zero(ModulePtr parent);
    static Submodule full(ModulePtr parent);
    static Submodule span(ModulePtr parent, const std::vector<int>& gens);

    const ModulePtr& parent() const { return parent_; }
    const Bitset& elements() const { return elems_; }
    int size() const { return elems_.count(); }
    bool contains(int a) const { return elems_.test(a); }
    bool is_zero() const { return size() == 1; }
    bool is_full() const { return size() == parent_->order(); }

    bool subset_of(const Submodule& o) const { return elems_.subset_of(o.elems_); }
    bool operator==(const Submodule& o) const { return elems_ == o.elems_; }
    bool operator!=(const Submodule& o) const { return !(*this == o); }
    bool operator<(const Submodule& o) const { return elems_ < o.elems_; }

    Submodule sum(const Submodule& o) const;
    Submodule intersect(const Submodule& o) const;

    Ideal annihilator() const;
    StandaloneSubmodule as_module() const;

    std::string name() const { return parent_->subset_name(elems_); }

private:
    ModulePtr parent_;
    Bitset elems_;
};

// All submodules, by closing the cyclic submodules under pairwise join.
std::vector<Submodule> submodules(const ModulePtr& m, const Guards& guards = {});

// (0 :_M I) = {m : Im = 0} and its single-element variant.
Submodule colon_submodule(const ModulePtr& m, const Ideal& ideal);
Submodule colon_element(const ModulePtr& m, int r);

Ideal annihilator_of_module(const ModulePtr& m);

}  // namespace secsheaf
