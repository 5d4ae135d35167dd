#include "secsheaf/ring_spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "secsheaf/errors.hpp"

namespace secsheaf {

RingSpectrum RingSpectrum::compute(RingPtr ring, const Guards& guards) {
    if (ring->order() > guards.ring_cap)
        throw CapacityError("ideal enumeration supports |R| <= " + std::to_string(guards.ring_cap) +
                                ", got " + std::to_string(ring->order()),
                            guards.ring_cap);

    // Every ideal is a sum of principal ideals, so closing the set of
    // principal ideals under pairwise sum enumerates all of them.
    std::set<Bitset> seen;
    std::vector<Ideal> principal;
    for (int a = 0; a < ring->order(); ++a) {
        Ideal p = Ideal::principal(ring, a);
        if (seen.insert(p.elements()).second) principal.push_back(p);
    }
    std::vector<Ideal> queue = principal;
    while (!queue.empty()) {
        Ideal cur = queue.back();
        queue.pop_back();
        for (const auto& p : principal) {
            Ideal s = cur.sum(p);
            if (seen.insert(s.elements()).second) queue.push_back(s);
        }
    }

    RingSpectrum spec;
    spec.ring_ = ring;
    for (const auto& bits : seen) spec.ideals_.emplace_back(ring, bits);
    for (const auto& i : spec.ideals_)
        if (i.is_prime()) spec.primes_.push_back(i);

    // Cross-check: the nilpotent-search radical must match the intersection
    // of the primes above each ideal.
    for (const auto& i : spec.ideals_)
        if (i.radical() != spec.radical_via_primes(i))
            throw InternalCheckError("radical routes disagree for " + i.name());
    return spec;
}

std::vector<PrimePoint> RingSpectrum::prime_points() const {
    std::vector<PrimePoint> out;
    out.reserve(primes_.size());
    for (const auto& p : primes_) out.emplace_back(p);
    return out;
}

int RingSpectrum::index_of_prime(const Ideal& p) const {
    for (int i = 0; i < (int)primes_.size(); ++i)
        if (primes_[i] == p) return i;
    return -1;
}

Bitset RingSpectrum::closed_set(const Ideal& i) const {
    Bitset out((int)primes_.size());
    for (int k = 0; k < (int)primes_.size(); ++k)
        if (i.subset_of(primes_[k])) out.set(k);
    return out;
}

Bitset RingSpectrum::basic_open(int r) const {
    Bitset out((int)primes_.size());
    for (int k = 0; k < (int)primes_.size(); ++k)
        if (!primes_[k].contains(r)) out.set(k);
    return out;
}

Ideal RingSpectrum::radical_via_primes(const Ideal& i) const {
    Bitset acc = Bitset::full(ring_->order());
    bool met = false;
    for (const auto& p : primes_)
        if (i.subset_of(p)) {
            acc &= p.elements();
            met = true;
        }
    if (!met) return Ideal::unit(ring_);
    return Ideal(ring_, acc);
}

std::vector<Bitset> RingSpectrum::closed_family() const {
    std::set<Bitset> fam;
    for (const auto& i : ideals_) fam.insert(closed_set(i));
    return {fam.begin(), fam.end()};
}

Bitset complement_of_prime(const Ideal& p) {
    if (!p.is_prime()) throw PreconditionError("localization set requires a prime ideal");
    return p.elements().complement();
}

Bitset powers_of(const RingPtr& ring, int f) {
    Bitset s(ring->order());
    int x = ring->one();
    while (!s.test(x)) {
        s.set(x);
        x = ring->mul(x, f);
    }
    return s;
}

Bitset units_of(const RingPtr& ring) {
    Bitset s(ring->order());
    for (int a = 0; a < ring->order(); ++a)
        if (ring->is_unit(a)) s.set(a);
    return s;
}

LocalizedRing localize_ring(RingPtr ring, Bitset mult_set) {
    if (!mult_set.test(ring->one())) throw PreconditionError("multiplicative set must contain 1");
    for (int s : mult_set.elements())
        for (int t : mult_set.elements())
            if (!mult_set.test(ring->mul(s, t)))
                throw PreconditionError("set is not multiplicatively closed");

    int n = ring->order();
    Bitset torsion(n);
    for (int r = 0; r < n; ++r)
        for (int s : mult_set.elements())
            if (ring->mul(s, r) == ring->zero()) {
                torsion.set(r);
                break;
            }

    // Quotient by T: the least element of each coset represents it.
    std::vector<int> coset_rep(n);
    for (int r = 0; r < n; ++r) {
        int best = r;
        for (int t : torsion.elements()) best = std::min(best, ring->add(r, t));
        coset_rep[r] = best;
    }
    std::vector<int> reps;
    for (int r = 0; r < n; ++r)
        if (coset_rep[r] == r) reps.push_back(r);
    std::map<int, int> id_of;
    for (int i = 0; i < (int)reps.size(); ++i) id_of[reps[i]] = i;

    int q = (int)reps.size();
    std::vector<std::vector<int>> add(q, std::vector<int>(q)), mul(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            add[i][j] = id_of[coset_rep[ring->add(reps[i], reps[j])]];
            mul[i][j] = id_of[coset_rep[ring->mul(reps[i], reps[j])]];
        }

    LocalizedRing loc;
    loc.source = ring;
    loc.inverted = std::move(mult_set);
    loc.result = FiniteRing::from_tables(add, mul, id_of[coset_rep[ring->one()]]);
    loc.rep = reps;
    loc.to_result.resize(n);
    for (int r = 0; r < n; ++r) loc.to_result[r] = id_of[coset_rep[r]];

    // Images of S must be units in the result.
    for (int s : loc.inverted.elements())
        if (!loc.result->is_unit(loc.to_result[s]))
            throw InternalCheckError("inverted element " + ring->element_name(s) +
                                     " fails to become a unit");
    return loc;
}

int LocalizedRing::fraction(int a, int s) const {
    auto inv = result->unit_inverse(to_result[s]);
    if (!inv) throw PreconditionError("denominator " + source->element_name(s) + " is not invertible");
    return result->mul(*inv, to_result[a]);
}

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if ((int)values_.size() != source_->order()) throw StructureError("ring hom table has wrong size");
    for (int v : values_)
        if (v < 0 || v >= target_->order()) throw StructureError("ring hom value out of range");
    if (values_[source_->one()] != target_->one()) throw StructureError("ring hom does not send 1 to 1");
    for (int a = 0; a < source_->order(); ++a)
        for (int b = 0; b < source_->order(); ++b) {
            if (values_[source_->add(a, b)] != target_->add(values_[a], values_[b]))
                throw StructureError("ring hom not additive");
            if (values_[source_->mul(a, b)] != target_->mul(values_[a], values_[b]))
                throw StructureError("ring hom not multiplicative");
        }
}

RingHom RingHom::identity(RingPtr ring) {
    std::vector<int> v(ring->order());
    for (int a = 0; a < ring->order(); ++a) v[a] = a;
    RingPtr copy = ring;
    return RingHom(std::move(copy), std::move(ring), std::move(v));
}

RingHom RingHom::zmod_reduction(const RingPtr& source, const RingPtr& target) {
    int n = source->order(), m = target->order();
    if (m == 0 || n % m != 0)
        throw PreconditionError("reduction requires target order dividing source order");
    std::vector<int> v(n);
    for (int a = 0; a < n; ++a) v[a] = a % m;
    return RingHom(source, target, std::move(v));
}

bool RingHom::is_surjective() const {
    Bitset hit(target_->order());
    for (int v : values_) hit.set(v);
    return hit.count() == target_->order();
}

Ideal RingHom::preimage(const Ideal& ideal_of_target) const {
    if (ideal_of_target.ring() != target_) throw StructureError("preimage of ideal over wrong ring");
    Bitset s(source_->order());
    for (int a = 0; a < source_->order(); ++a)
        if (ideal_of_target.contains(values_[a])) s.set(a);
    return Ideal(source_, s);
}

}  // namespace secsheaf
