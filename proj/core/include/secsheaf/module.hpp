#pragma once

#include <memory>
#include <string>
#include <vector>

#include "secsheaf/ring.hpp"
#include "secsheaf/ring_spectrum.hpp"

namespace secsheaf {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// A finite unital module over a FiniteRing.  The abelian-group and
// bilinearity axioms are checked exhaustively on construction.
class FiniteModule {
public:
    static ModulePtr natural(RingPtr ring);  // R as a module over itself
    static ModulePtr zero_module(RingPtr ring);
    // prod Z/d_i over Z/n with the natural action; requires each d_i | n.
    static ModulePtr cyclic_product(RingPtr zmod_ring, const std::vector<int>& orders);
    static ModulePtr from_tables(RingPtr ring, const std::vector<std::vector<int>>& add,
                                 const std::vector<std::vector<int>>& act);
    static ModulePtr from_tables_named(RingPtr ring, const std::vector<std::vector<int>>& add,
                                       const std::vector<std::vector<int>>& act,
                                       std::vector<std::string> names, std::string description);
    // The target module with scalars restricted along phi.
    static ModulePtr restrict_scalars(const RingHom& phi, const ModulePtr& target_module);

    const RingPtr& ring() const { return ring_; }
    int order() const { return order_; }
    int zero_elem() const { return zero_; }

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int act(int r, int m) const { return act_[r * order_ + m]; }

    int additive_order(int a) const;

    const std::string& description() const { return description_; }
    std::string element_name(int a) const;
    std::string subset_name(const Bitset& s) const;

private:
    FiniteModule() = default;
    void verify() const;

    RingPtr ring_;
    int order_ = 0, zero_ = 0;
    std::vector<int> add_, neg_, act_;
    std::string description_;
    std::vector<std::string> names_;
};

}  // namespace secsheaf
