#include "secsheaf/topology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "secsheaf/errors.hpp"

namespace secsheaf {

DualTopology DualTopology::compute(SecondSpectrum spectrum) {
    DualTopology topo(std::move(spectrum));
    const auto& spec = topo.spectrum_;

    std::map<Bitset, Submodule> closed;
    for (const auto& n : spec.all_submodules()) {
        Bitset pts = topo.v_s(n);
        closed.emplace(pts, n);  // first witness in sorted submodule order wins
    }
    for (const auto& [pts, witness] : closed) topo.closed_.push_back(ClosedSet{pts, witness});

    // The family must already be a closed-set system; re-closing it under
    // union and intersection is a correctness check, not a construction step.
    for (const auto& a : topo.closed_)
        for (const auto& b : topo.closed_) {
            if (!closed.count(a.points | b.points))
                throw InternalCheckError("closed family not closed under union: " +
                                         a.witness.name() + ", " + b.witness.name());
            if (!closed.count(a.points & b.points))
                throw InternalCheckError("closed family not closed under intersection: " +
                                         a.witness.name() + ", " + b.witness.name());
        }

    for (const auto& c : topo.closed_) topo.opens_.push_back(c.points.complement());
    std::sort(topo.opens_.begin(), topo.opens_.end());
    topo.empty_open_ = topo.index_of_open(Bitset(spec.point_count()));
    topo.full_open_ = topo.index_of_open(Bitset::full(spec.point_count()));
    if (topo.empty_open_ < 0 || topo.full_open_ < 0)
        throw InternalCheckError("open lattice misses the empty or the full set");

    // Basic opens, by both characterizations.
    const auto& m = spec.module();
    for (int r = 0; r < m->ring()->order(); ++r) {
        Bitset via_colon = topo.v_s(colon_element(m, r)).complement();
        Bitset via_ann(spec.point_count());
        for (int i = 0; i < spec.point_count(); ++i)
            if (!spec.point(i).annihilator.contains(r)) via_ann.set(i);
        if (via_colon != via_ann)
            throw InternalCheckError("basic open characterizations disagree at r = " +
                                     m->ring()->element_name(r));
        if (topo.index_of_open(via_ann) < 0)
            throw InternalCheckError("basic open Y_" + m->ring()->element_name(r) +
                                     " is not in the open lattice");
        topo.basics_.push_back(via_ann);
    }
    return topo;
}

int DualTopology::index_of_open(const Bitset& points) const {
    auto it = std::lower_bound(opens_.begin(), opens_.end(), points);
    if (it == opens_.end() || *it != points) return -1;
    return (int)(it - opens_.begin());
}

Bitset DualTopology::v_s(const Submodule& n) const {
    Ideal ann = n.annihilator();
    Bitset pts(spectrum_.point_count());
    for (int i = 0; i < spectrum_.point_count(); ++i)
        if (ann.subset_of(spectrum_.point(i).annihilator)) pts.set(i);

    // V^s(N) = V^s((0:_M ann N)) = V^{s*}((0:_M ann N)).
    Submodule c = colon_submodule(n.parent(), ann);
    if (pts != v_star(c) || pts != [&] {
            Ideal ann2 = c.annihilator();
            Bitset q(spectrum_.point_count());
            for (int i = 0; i < spectrum_.point_count(); ++i)
                if (ann2.subset_of(spectrum_.point(i).annihilator)) q.set(i);
            return q;
        }())
        throw InternalCheckError("closed-set identities fail at " + n.name());
    return pts;
}

Bitset DualTopology::v_star(const Submodule& n) const {
    Bitset pts(spectrum_.point_count());
    for (int i = 0; i < spectrum_.point_count(); ++i)
        if (spectrum_.point(i).submodule.elements().subset_of(n.elements())) pts.set(i);
    return pts;
}

std::vector<int> DualTopology::supp_of(const Bitset& open_pts) const {
    std::set<int> primes;
    for (int p : open_pts.elements()) primes.insert(spectrum_.prime_of_point(p));
    return {primes.begin(), primes.end()};
}

int DualTopology::minimal_open_containing(int point) const {
    Bitset acc = Bitset::full(spectrum_.point_count());
    for (const auto& u : opens_)
        if (u.test(point)) acc &= u;
    int idx = index_of_open(acc);
    if (idx < 0) throw InternalCheckError("minimal neighborhood is not open");
    return idx;
}

BaseReport DualTopology::verify_base() const {
    BaseReport rep;
    rep.every_open_is_union_of_basics = true;
    for (int i = 0; i < open_count(); ++i) {
        Bitset acc(spectrum_.point_count());
        for (const auto& b : basics_)
            if (b.subset_of(opens_[i])) acc |= b;
        if (acc != opens_[i]) {
            rep.every_open_is_union_of_basics = false;
            rep.failing_opens.push_back(i);
        }
    }
    return rep;
}

bool DualTopology::is_quasi_compact(int open_index, std::vector<int>* subcover_elems) const {
    // Greedy finite subcover from the basic cover of the open set.
    const Bitset& u = opens_[open_index];
    Bitset acc(spectrum_.point_count());
    std::vector<int> chosen;
    for (int r = 0; r < (int)basics_.size(); ++r) {
        if (!basics_[r].subset_of(u)) continue;
        if ((basics_[r] - acc).none()) continue;
        acc |= basics_[r];
        chosen.push_back(r);
        if (acc == u) break;
    }
    if (subcover_elems) *subcover_elems = chosen;
    return acc == u;
}

T0Report DualTopology::t0() const {
    T0Report rep;
    const auto& pts = spectrum_.points();
    int n = (int)pts.size();

    std::vector<Bitset> vs_of(n);
    for (int i = 0; i < n; ++i) vs_of[i] = v_s(pts[i].submodule);

    rep.psi_injective = true;
    rep.vs_separates = true;
    rep.topologically_t0 = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pts[i].annihilator == pts[j].annihilator) rep.psi_injective = false;
            if (vs_of[i] == vs_of[j]) rep.vs_separates = false;
            bool distinguished = false;
            for (const auto& u : opens_)
                if (u.test(i) != u.test(j)) {
                    distinguished = true;
                    break;
                }
            if (!distinguished) rep.topologically_t0 = false;
        }

    rep.fibers_singleton = true;
    for (const auto& p : spectrum_.support_primes())
        if ((int)spectrum_.points_with_prime(p).size() > 1) rep.fibers_singleton = false;

    if (rep.psi_injective != rep.vs_separates || rep.psi_injective != rep.fibers_singleton ||
        rep.psi_injective != rep.topologically_t0)
        throw InternalCheckError("the four T_0 criteria disagree");
    return rep;
}

CotopReport DualTopology::cotop() const {
    CotopReport rep;
    std::map<Bitset, Submodule> fam;
    for (const auto& n : spectrum_.all_submodules()) fam.emplace(v_star(n), n);
    rep.family_size = (int)fam.size();
    rep.cotop = true;
    for (const auto& [a, wa] : fam)
        for (const auto& [b, wb] : fam)
            if (!fam.count(a | b)) {
                rep.cotop = false;
                rep.witness = "V*(" + wa.name() + ") union V*(" + wb.name() + ")";
                return rep;
            }
    return rep;
}

ContinuityReport DualTopology::natural_map_continuity() const {
    ContinuityReport rep;
    rep.evaluated = true;
    const auto& rs = spectrum_.ring_spectrum();
    const auto& ann_m = spectrum_.module_annihilator();

    // Closed sets of Spec(R/ann M) correspond to V(I) with ann M <= I.
    rep.preimages_closed = true;
    for (const auto& ideal : rs.ideals()) {
        if (!ann_m.subset_of(ideal)) continue;
        Bitset pre(spectrum_.point_count());
        for (int i = 0; i < spectrum_.point_count(); ++i)
            if (ideal.subset_of(spectrum_.point(i).annihilator)) pre.set(i);
        bool found = false;
        for (const auto& c : closed_)
            if (c.points == pre) {
                found = true;
                break;
            }
        if (!found) {
            rep.preimages_closed = false;
            rep.failure = "preimage of V(" + ideal.name() + ") is not closed";
            break;
        }
    }

    T0Report t = t0();
    rep.homeo_hypotheses = t.t0() && spectrum_.is_faithful() && spectrum_.is_secondful();
    if (!rep.homeo_hypotheses) {
        rep.skip_reason = "requires T_0 + faithful + secondful";
        return rep;
    }

    // With those hypotheses each Y_g matches D_g in Spec(R).
    rep.basic_opens_homeomorphic = true;
    const auto& ring = spectrum_.module()->ring();
    for (int g = 0; g < ring->order(); ++g) {
        Bitset dg = rs.basic_open(g);
        Bitset image((int)rs.prime_count());
        for (int i : basics_[g].elements())
            image.set(rs.index_of_prime(spectrum_.point(i).annihilator));
        if (image != dg || (int)basics_[g].count() != dg.count()) {
            rep.basic_opens_homeomorphic = false;
            rep.homeo_failure = "Y_" + ring->element_name(g) + " does not match D_" +
                                ring->element_name(g);
            return rep;
        }
        // Closed subsets must map onto closed subsets of D_g.
        for (const auto& c : closed_) {
            Bitset rel = c.points & basics_[g];
            Bitset img((int)rs.prime_count());
            for (int i : rel.elements()) img.set(rs.index_of_prime(spectrum_.point(i).annihilator));
            bool matches = false;
            for (const auto& vi : rs.closed_family())
                if ((vi & dg) == img) {
                    matches = true;
                    break;
                }
            if (!matches) {
                rep.basic_opens_homeomorphic = false;
                rep.homeo_failure = "image of a closed set is not closed in D_" +
                                    ring->element_name(g);
                return rep;
            }
        }
    }
    return rep;
}

std::string DualTopology::to_dot() const {
    std::ostringstream os;
    os << "digraph dual_zariski {\n";
    os << "  node [shape=box];\n";
    for (int i = 0; i < spectrum_.point_count(); ++i) {
        const auto& pt = spectrum_.point(i);
        os << "  s" << i << " [label=\"" << pt.submodule.name() << "\\nann " << pt.annihilator.name()
           << "\"];\n";
    }
    for (int c = 0; c < (int)closed_.size(); ++c) {
        os << "  subgraph cluster_closed" << c << " {\n";
        os << "    label=\"V^s(" << closed_[c].witness.name() << ")\";\n";
        os << "    closed" << c << " [shape=plaintext,label=\"";
        bool sep = false;
        for (int i : closed_[c].points.elements()) {
            if (sep) os << " ";
            os << "s" << i;
            sep = true;
        }
        if (closed_[c].points.none()) os << "(empty)";
        os << "\"];\n  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace secsheaf
