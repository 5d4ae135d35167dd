#pragma once

#include <optional>
#include <vector>

#include "secsheaf/submodule.hpp"

namespace secsheaf {

// Outcome of the second-submodule test.  On failure, witness_r is a scalar
// with 0 != rN != N, unless the candidate was the zero submodule.
struct SecondCheck {
    bool second = false;
    bool zero_module = false;
    std::optional<int> witness_r;
};

SecondCheck is_second(const Submodule& n);

// A second submodule together with its (prime) annihilator.
struct SecondPoint {
    Submodule submodule;
    Ideal annihilator;
};

// The second spectrum of a module: all second submodules, each labeled with
// its annihilator prime; carries the natural map into Spec(R/ann M).
class SecondSpectrum {
public:
    static SecondSpectrum compute(ModulePtr m, const Guards& guards = {});

    const ModulePtr& module() const { return module_; }
    const std::vector<SecondPoint>& points() const { return points_; }
    int point_count() const { return (int)points_.size(); }
    const SecondPoint& point(int i) const { return points_[i]; }
    int index_of_point(const Bitset& submodule_elems) const;  // -1 if absent

    // Distinct annihilators of points, sorted; the support primes.
    const std::vector<Ideal>& support_primes() const { return support_primes_; }
    int prime_of_point(int point) const { return point_prime_[point]; }
    std::vector<int> points_with_prime(const Ideal& p) const;

    const std::vector<Submodule>& all_submodules() const { return submodules_; }
    const RingSpectrum& ring_spectrum() const { return ring_spectrum_; }

    const Ideal& module_annihilator() const { return *module_ann_; }
    bool is_faithful() const;
    bool is_secondful() const;

    // Sum of all points whose annihilator contains ann(N); zero if none.
    Submodule zariski_socle(const Submodule& n) const;

private:
    SecondSpectrum(ModulePtr m, RingSpectrum rs) : module_(std::move(m)), ring_spectrum_(std::move(rs)) {}

    ModulePtr module_;
    RingSpectrum ring_spectrum_;
    std::vector<Submodule> submodules_;
    std::vector<SecondPoint> points_;
    std::vector<Ideal> support_primes_;
    std::vector<int> point_prime_;
    std::optional<Ideal> module_ann_;
};

}  // namespace secsheaf
