#pragma once

#include <vector>

#include "secsheaf/module.hpp"

namespace secsheaf {

class Submodule;

// An R-linear map between finite modules over the same ring, stored
// element-wise; additivity and equivariance are verified on construction.
class ModuleMap {
public:
    ModuleMap(ModulePtr source, ModulePtr target, std::vector<int> values);

    static ModuleMap identity(ModulePtr m);
    static ModuleMap zero_map(ModulePtr source, ModulePtr target);

    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    int operator()(int a) const { return values_[a]; }
    const std::vector<int>& values() const { return values_; }

    ModuleMap compose_after(const ModuleMap& inner) const;  // this ∘ inner

    Submodule kernel() const;
    Submodule image() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    ModuleMap inverse() const;  // requires bijective

    bool operator==(const ModuleMap& o) const { return values_ == o.values_; }

private:
    ModulePtr source_, target_;
    std::vector<int> values_;
};

}  // namespace secsheaf
