#include "secsheaf/ideal.hpp"

#include "secsheaf/errors.hpp"

namespace secsheaf {

namespace {

// Closes a subset under addition and multiplication by every ring element.
Bitset close_ideal(const FiniteRing& ring, Bitset s) {
    s.set(ring.zero());
    bool changed = true;
    while (changed) {
        changed = false;
        auto elems = s.elements();
        for (int a : elems) {
            for (int b : elems) {
                int c = ring.add(a, b);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
            for (int r = 0; r < ring.order(); ++r) {
                int c = ring.mul(r, a);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
        }
    }
    return s;
}

}  // namespace

Ideal::Ideal(RingPtr ring, Bitset elements) : ring_(std::move(ring)), elems_(std::move(elements)) {
    if (elems_.universe() != ring_->order()) throw StructureError("ideal bit-set has wrong universe");
    if (!elems_.test(ring_->zero())) throw StructureError("ideal does not contain zero");
    for (int a : elems_.elements()) {
        for (int b : elems_.elements())
            if (!elems_.test(ring_->add(a, b)))
                throw StructureError("ideal not closed under addition");
        for (int r = 0; r < ring_->order(); ++r)
            if (!elems_.test(ring_->mul(r, a)))
                throw StructureError("ideal not closed under ring multiplication");
    }
}

Ideal Ideal::zero(RingPtr ring) {
    Bitset s(ring->order());
    s.set(ring->zero());
    return Ideal(std::move(ring), s);
}

Ideal Ideal::unit(RingPtr ring) {
    int n = ring->order();
    return Ideal(std::move(ring), Bitset::full(n));
}

Ideal Ideal::principal(RingPtr ring, int a) { return span(std::move(ring), {a}); }

Ideal Ideal::span(RingPtr ring, const std::vector<int>& gens) {
    Bitset s(ring->order());
    for (int g : gens) s.set(g);
    s = close_ideal(*ring, s);
    return Ideal(std::move(ring), s);
}

bool Ideal::is_prime() const {
    if (!is_proper()) return false;
    int n = ring_->order();
    for (int a = 0; a < n; ++a) {
        if (elems_.test(a)) continue;
        for (int b = 0; b < n; ++b) {
            if (elems_.test(b)) continue;
            if (elems_.test(ring_->mul(a, b))) return false;
        }
    }
    return true;
}

void Ideal::check_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring_ != b.ring_) throw StructureError("ideal operation across different rings");
}

Ideal Ideal::sum(const Ideal& o) const {
    check_same_ring(*this, o);
    Bitset s(ring_->order());
    for (int a : elems_.elements())
        for (int b : o.elems_.elements()) s.set(ring_->add(a, b));
    return Ideal(ring_, s);
}

Ideal Ideal::intersect(const Ideal& o) const {
    check_same_ring(*this, o);
    return Ideal(ring_, elems_ & o.elems_);
}

Ideal Ideal::product(const Ideal& o) const {
    check_same_ring(*this, o);
    Bitset s(ring_->order());
    for (int a : elems_.elements())
        for (int b : o.elems_.elements()) s.set(ring_->mul(a, b));
    return Ideal(ring_, close_ideal(*ring_, s));
}

Ideal Ideal::power(int n) const {
    Ideal p = *this;
    for (int i = 1; i < n; ++i) p = p.product(*this);
    return p;
}

Ideal Ideal::stable_power() const {
    Ideal p = *this;
    while (true) {
        Ideal q = p.product(*this);
        if (q == p) return p;
        p = q;
    }
}

int Ideal::stable_exponent() const {
    Ideal p = *this;
    int n = 1;
    while (true) {
        Ideal q = p.product(*this);
        if (q == p) return n;
        p = q;
        ++n;
    }
}

Ideal Ideal::radical() const {
    Bitset s(ring_->order());
    for (int r = 0; r < ring_->order(); ++r) {
        int p = r;
        for (int k = 1; k <= ring_->order(); ++k) {
            if (elems_.test(p)) {
                s.set(r);
                break;
            }
            p = ring_->mul(p, r);
        }
    }
    return Ideal(ring_, s);
}

std::vector<int> Ideal::minimal_generators() const {
    std::vector<int> gens;
    Bitset span_so_far(ring_->order());
    span_so_far.set(ring_->zero());
    for (int a : elems_.elements()) {
        if (span_so_far.test(a)) continue;
        gens.push_back(a);
        span_so_far = span(ring_, gens).elements();
        if (span_so_far == elems_) break;
    }
    // Drop redundant generators picked up along the way.
    for (size_t i = 0; i < gens.size();) {
        std::vector<int> rest;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (!rest.empty() && span(ring_, rest).elements() == elems_)
            gens = rest;
        else
            ++i;
    }
    return gens;
}

std::optional<int> Ideal::principal_generator() const {
    for (int a : elems_.elements())
        if (principal(ring_, a) == *this) return a;
    return std::nullopt;
}

std::string Ideal::name() const {
    auto gens = minimal_generators();
    if (gens.empty()) return "(0)";
    std::string s = "(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += ring_->element_name(gens[i]);
    }
    return s + ")";
}

PrimePoint::PrimePoint(Ideal i) : ideal(std::move(i)) {
    if (!ideal.is_prime()) throw StructureError("ideal " + ideal.name() + " is not prime");
}

}  // namespace secsheaf
