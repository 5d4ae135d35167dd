#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "secsheaf/bitset.hpp"

namespace secsheaf {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// A finite commutative ring with identity, given by closed operation tables.
// Elements are ids 0..order-1.  The ring axioms are checked exhaustively on
// construction; values are immutable afterwards.
class FiniteRing {
public:
    static RingPtr zmod(int n);
    static RingPtr product(std::vector<RingPtr> factors);
    static RingPtr from_tables(const std::vector<std::vector<int>>& add,
                               const std::vector<std::vector<int>>& mul, int one);

    int order() const { return order_; }
    int zero() const { return zero_; }
    int one() const { return one_; }

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, int k) const;

    bool is_unit(int a) const;
    std::optional<int> unit_inverse(int a) const;

    bool is_zero_ring() const { return order_ == 1; }

    const std::string& description() const { return description_; }
    std::string element_name(int a) const;
    std::string subset_name(const Bitset& s) const;

    // Non-empty exactly when built by product().
    const std::vector<RingPtr>& factors() const { return factors_; }
    std::vector<int> decode(int a) const;  // product rings: per-factor components
    int encode(const std::vector<int>& comps) const;

private:
    FiniteRing() = default;
    void verify() const;

    int order_ = 0, zero_ = 0, one_ = 0;
    std::vector<int> add_, mul_, neg_;
    std::string description_;
    std::vector<std::string> names_;
    std::vector<RingPtr> factors_;
};

}  // namespace secsheaf
