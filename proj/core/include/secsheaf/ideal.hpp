#pragma once

#include <string>
#include <vector>

#include "secsheaf/bitset.hpp"
#include "secsheaf/ring.hpp"

namespace secsheaf {

// An ideal of a FiniteRing, stored as a membership bit-set.  Closure under
// addition and scalar multiplication is checked on construction.
class Ideal {
public:
    Ideal(RingPtr ring, Bitset elements);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);
    static Ideal principal(RingPtr ring, int a);
    static Ideal span(RingPtr ring, const std::vector<int>& gens);

    const RingPtr& ring() const { return ring_; }
    const Bitset& elements() const { return elems_; }
    int size() const { return elems_.count(); }
    bool contains(int a) const { return elems_.test(a); }

    bool is_proper() const { return !elems_.test(ring_->one()); }
    bool is_prime() const;
    bool subset_of(const Ideal& o) const { return elems_.subset_of(o.elems_); }

    bool operator==(const Ideal& o) const { return elems_ == o.elems_; }
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    bool operator<(const Ideal& o) const { return elems_ < o.elems_; }

    Ideal sum(const Ideal& o) const;
    Ideal intersect(const Ideal& o) const;
    Ideal product(const Ideal& o) const;
    Ideal power(int n) const;       // n >= 1
    Ideal stable_power() const;     // I^n with I^n = I^(n+1)
    int stable_exponent() const;    // least such n
    Ideal radical() const;          // {r : r^k in I for some k}

    // Greedy minimal generating set, ascending by element id.
    std::vector<int> minimal_generators() const;
    std::optional<int> principal_generator() const;
    std::string name() const;  // "(2)", "(0)", "(2,3)"

private:
    static void check_same_ring(const Ideal& a, const Ideal& b);

    RingPtr ring_;
    Bitset elems_;
};

// A prime ideal; primality is re-verified on construction.
struct PrimePoint {
    explicit PrimePoint(Ideal ideal);
    Ideal ideal;
};

}  // namespace secsheaf
