#include "secsheaf/second_spectrum.hpp"

#include <algorithm>

#include "secsheaf/errors.hpp"

namespace secsheaf {

SecondCheck is_second(const Submodule& n) {
    SecondCheck out;
    if (n.is_zero()) {
        out.zero_module = true;
        return out;
    }
    const auto& m = n.parent();
    for (int r = 0; r < m->ring()->order(); ++r) {
        Bitset image(m->order());
        for (int a : n.elements().elements()) image.set(m->act(r, a));
        bool is_zero = image.count() == 1 && image.test(m->zero_elem());
        if (!is_zero && image != n.elements()) {
            out.witness_r = r;
            return out;
        }
    }
    out.second = true;
    return out;
}

SecondSpectrum SecondSpectrum::compute(ModulePtr m, const Guards& guards) {
    SecondSpectrum spec(m, RingSpectrum::compute(m->ring(), guards));
    spec.submodules_ = submodules(m, guards);
    std::sort(spec.submodules_.begin(), spec.submodules_.end());

    for (const auto& n : spec.submodules_) {
        if (!is_second(n).second) continue;
        Ideal ann = n.annihilator();
        if (!ann.is_prime())
            throw InternalCheckError("annihilator of second submodule " + n.name() + " is not prime");
        spec.points_.push_back(SecondPoint{n, std::move(ann)});
    }

    std::vector<Ideal> primes;
    for (const auto& p : spec.points_) primes.push_back(p.annihilator);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    spec.support_primes_ = std::move(primes);

    for (const auto& p : spec.points_) {
        auto it = std::lower_bound(spec.support_primes_.begin(), spec.support_primes_.end(),
                                   p.annihilator);
        spec.point_prime_.push_back((int)(it - spec.support_primes_.begin()));
    }

    spec.module_ann_ = annihilator_of_module(m);
    return spec;
}

int SecondSpectrum::index_of_point(const Bitset& submodule_elems) const {
    for (int i = 0; i < (int)points_.size(); ++i)
        if (points_[i].submodule.elements() == submodule_elems) return i;
    return -1;
}

std::vector<int> SecondSpectrum::points_with_prime(const Ideal& p) const {
    std::vector<int> out;
    for (int i = 0; i < (int)points_.size(); ++i)
        if (points_[i].annihilator == p) out.push_back(i);
    return out;
}

bool SecondSpectrum::is_faithful() const { return module_ann_->size() == 1; }

bool SecondSpectrum::is_secondful() const {
    // psi is onto Spec(R/ann M): every prime of R over ann M must be hit.
    for (const auto& p : ring_spectrum_.primes()) {
        if (!module_ann_->subset_of(p)) continue;
        bool hit = false;
        for (const auto& q : support_primes_)
            if (q == p) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

Submodule SecondSpectrum::zariski_socle(const Submodule& n) const {
    Ideal ann = n.annihilator();
    Submodule acc = Submodule::zero(module_);
    for (const auto& pt : points_)
        if (ann.subset_of(pt.annihilator)) acc = acc.sum(pt.submodule);
    return acc;
}

}  // namespace secsheaf
