#pragma once

#include <string>
#include <vector>

#include "secsheaf/second_spectrum.hpp"

namespace secsheaf {

struct ClosedSet {
    Bitset points;
    Submodule witness;  // a submodule N with V^s(N) = points
};

struct T0Report {
    bool psi_injective = false;
    bool vs_separates = false;       // V^s(S1) = V^s(S2) implies S1 = S2
    bool fibers_singleton = false;   // at most one point per prime
    bool topologically_t0 = false;
    bool t0() const { return psi_injective; }
};

struct BaseReport {
    bool every_open_is_union_of_basics = false;
    std::vector<int> failing_opens;
};

struct CotopReport {
    bool cotop = false;
    int family_size = 0;
    std::string witness;  // a pair of V^{s*} sets whose union leaves the family
};

struct ContinuityReport {
    bool evaluated = false;
    bool preimages_closed = false;
    std::string failure;
    bool homeo_hypotheses = false;  // T_0 + faithful + secondful
    bool basic_opens_homeomorphic = false;
    std::string homeo_failure;
    std::string skip_reason;
};

// The dual Zariski topology on a second spectrum: the closed family
// {V^s(N)}, its open complements, and the base {Y_r}.
class DualTopology {
public:
    static DualTopology compute(SecondSpectrum spectrum);

    const SecondSpectrum& spectrum() const { return spectrum_; }
    int point_count() const { return spectrum_.point_count(); }

    const std::vector<ClosedSet>& closed_sets() const { return closed_; }
    int open_count() const { return (int)opens_.size(); }
    const Bitset& open_points(int i) const { return opens_[i]; }
    int index_of_open(const Bitset& points) const;  // -1 if not open
    bool is_open(const Bitset& points) const { return index_of_open(points) >= 0; }
    int full_open() const { return full_open_; }
    int empty_open() const { return empty_open_; }

    Bitset v_s(const Submodule& n) const;      // cross-checked against V^{s*}((0:_M ann N))
    Bitset v_star(const Submodule& n) const;   // points contained in N

    const Bitset& basic_open(int r) const { return basics_[r]; }
    int basic_open_index(int r) const { return index_of_open(basics_[r]); }

    std::vector<int> supp_of(const Bitset& open_pts) const;  // prime indices, sorted
    int minimal_open_containing(int point) const;

    BaseReport verify_base() const;
    bool is_quasi_compact(int open_index, std::vector<int>* subcover_elems = nullptr) const;
    T0Report t0() const;  // throws InternalCheckError if the four criteria disagree
    CotopReport cotop() const;
    ContinuityReport natural_map_continuity() const;

    std::string to_dot() const;

private:
    explicit DualTopology(SecondSpectrum s) : spectrum_(std::move(s)) {}

    SecondSpectrum spectrum_;
    std::vector<ClosedSet> closed_;
    std::vector<Bitset> opens_;  // sorted
    std::vector<Bitset> basics_;
    int full_open_ = -1, empty_open_ = -1;
};

}  // namespace secsheaf
