#pragma once

#include <vector>

#include "secsheaf/guards.hpp"
#include "secsheaf/ideal.hpp"

namespace secsheaf {

// All ideals and prime ideals of a finite ring, with the Zariski closed-set
// calculus V(I) and the basic opens D_r.
class RingSpectrum {
public:
    static RingSpectrum compute(RingPtr ring, const Guards& guards = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Ideal>& ideals() const { return ideals_; }
    int prime_count() const { return (int)primes_.size(); }
    const Ideal& prime(int i) const { return primes_[i]; }
    const std::vector<Ideal>& primes() const { return primes_; }
    std::vector<PrimePoint> prime_points() const;  // primality re-verified

    int index_of_prime(const Ideal& p) const;  // -1 if absent

    Bitset closed_set(const Ideal& i) const;  // V(I) over prime indices
    Bitset basic_open(int r) const;           // D_r = {p : r not in p}
    Ideal radical_via_primes(const Ideal& i) const;

    // The distinct V(I), sorted; the Zariski closed family.
    std::vector<Bitset> closed_family() const;

private:
    RingPtr ring_;
    std::vector<Ideal> ideals_;
    std::vector<Ideal> primes_;
};

// Multiplicative subsets used for localization.
Bitset complement_of_prime(const Ideal& p);
Bitset powers_of(const RingPtr& ring, int f);
Bitset units_of(const RingPtr& ring);

// R_S realized as R/T with T = {r : sr = 0 for some s in S}; every image of
// S is a unit in the result.
struct LocalizedRing {
    RingPtr source;
    Bitset inverted;              // S
    RingPtr result;               // R/T
    std::vector<int> to_result;   // canonical map r -> id
    std::vector<int> rep;         // id -> least representative in R
    bool zero_ring() const { return result->order() == 1; }
    int fraction(int a, int s) const;  // resolves a/s; s must become a unit
};

LocalizedRing localize_ring(RingPtr ring, Bitset mult_set);

// Ring homomorphism given element-wise; preservation of +, *, 1 is verified.
class RingHom {
public:
    RingHom(RingPtr source, RingPtr target, std::vector<int> values);

    static RingHom identity(RingPtr ring);
    // Z/n -> Z/m reduction, m | n.
    static RingHom zmod_reduction(const RingPtr& source, const RingPtr& target);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    int operator()(int a) const { return values_[a]; }
    const std::vector<int>& values() const { return values_; }

    bool is_surjective() const;
    Ideal preimage(const Ideal& ideal_of_target) const;

private:
    RingPtr source_, target_;
    std::vector<int> values_;
};

}  // namespace secsheaf
