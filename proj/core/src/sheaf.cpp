#include "secsheaf/sheaf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "secsheaf/errors.hpp"

namespace secsheaf {

int SectionSpace::index_of_open(const Bitset& pts) const {
    auto it = std::lower_bound(opens.begin(), opens.end(), pts);
    if (it == opens.end() || *it != pts) return -1;
    return (int)(it - opens.begin());
}

std::vector<int> SectionSpace::slots_of(const Bitset& pts) const {
    std::set<int> s;
    for (int p : pts.elements()) s.insert(point_slot[p]);
    return {s.begin(), s.end()};
}

int SectionSpace::full_open_index() const { return index_of_open(Bitset::full(point_count)); }
int SectionSpace::empty_open_index() const { return index_of_open(Bitset(point_count)); }

SectionSpace dual_section_space(const DualTopology& topo, const ModulePtr& coefficient) {
    if (coefficient->ring() != topo.spectrum().module()->ring())
        throw StructureError("coefficient module over a different ring than the spectrum");
    SectionSpace sp;
    sp.ring = coefficient->ring();
    sp.coefficient = coefficient;
    sp.point_count = topo.point_count();
    for (int i = 0; i < topo.open_count(); ++i) sp.opens.push_back(topo.open_points(i));
    for (int r = 0; r < sp.ring->order(); ++r) sp.basics.push_back(topo.basic_open(r));
    for (int i = 0; i < sp.point_count; ++i) {
        sp.point_slot.push_back(topo.spectrum().prime_of_point(i));
        sp.point_labels.push_back(topo.spectrum().point(i).submodule.name());
    }
    for (const auto& p : topo.spectrum().support_primes()) {
        sp.slot_primes.push_back(p);
        sp.slot_local.push_back(localize_at_prime(coefficient, p));
    }
    return sp;
}

SectionSpace ring_section_space(const RingSpectrum& rs, const ModulePtr& coefficient) {
    if (coefficient->ring() != rs.ring())
        throw StructureError("coefficient module over a different ring than the spectrum");
    SectionSpace sp;
    sp.ring = rs.ring();
    sp.coefficient = coefficient;
    sp.point_count = rs.prime_count();
    for (const auto& c : rs.closed_family()) sp.opens.push_back(c.complement());
    std::sort(sp.opens.begin(), sp.opens.end());
    sp.opens.erase(std::unique(sp.opens.begin(), sp.opens.end()), sp.opens.end());
    for (int r = 0; r < sp.ring->order(); ++r) sp.basics.push_back(rs.basic_open(r));
    for (int i = 0; i < sp.point_count; ++i) {
        sp.point_slot.push_back(i);
        sp.point_labels.push_back(rs.prime(i).name());
        sp.slot_primes.push_back(rs.prime(i));
        sp.slot_local.push_back(localize_at_prime(coefficient, rs.prime(i)));
    }
    return sp;
}

int SectionModule::index_of(const std::vector<int>& family) const {
    auto it = std::lower_bound(families.begin(), families.end(), family);
    if (it == families.end() || *it != family) return -1;
    return (int)(it - families.begin());
}

int SectionModule::slot_position(int slot) const {
    auto it = std::lower_bound(slots.begin(), slots.end(), slot);
    if (it == slots.end() || *it != slot) return -1;
    return (int)(it - slots.begin());
}

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

Sheaf::Sheaf(SectionSpace space, const Guards& guards) : space_(std::move(space)), guards_(guards) {
    if (space_.full_open_index() < 0 || space_.empty_open_index() < 0)
        throw StructureError("section space lacks the empty or the full open");
    for (int u = 0; u < (int)space_.opens.size(); ++u) sections_.push_back(compute_sections(u));
}

namespace {

struct BasicPatch {
    Bitset pts;
    std::vector<int> positions;            // into the open's slot list
    std::set<std::vector<int>> fractions;  // admissible (m, t) values over those positions
};

}  // namespace

SectionModule Sheaf::compute_sections(int open_index) const {
    const Bitset& u = space_.opens[open_index];
    SectionModule out;
    out.open_index = open_index;
    out.points = u;
    out.slots = space_.slots_of(u);

    std::vector<int> pos_of_slot(space_.slot_primes.size(), -1);
    for (int i = 0; i < (int)out.slots.size(); ++i) pos_of_slot[out.slots[i]] = i;

    // Basic opens inside U, deduplicated by point set, with their
    // constant-fraction patches.
    std::vector<BasicPatch> patches;
    {
        std::set<Bitset> seen;
        for (const auto& b : space_.basics) {
            if (b.none() || !b.subset_of(u)) continue;
            if (!seen.insert(b).second) continue;
            BasicPatch bp;
            bp.pts = b;
            for (int s : space_.slots_of(b)) bp.positions.push_back(pos_of_slot[s]);
            for (int t = 0; t < space_.ring->order(); ++t) {
                bool admissible = true;
                for (int pos : bp.positions)
                    if (space_.slot_primes[out.slots[pos]].contains(t)) {
                        admissible = false;
                        break;
                    }
                if (!admissible) continue;
                for (int m = 0; m < space_.coefficient->order(); ++m) {
                    std::vector<int> v(bp.positions.size());
                    for (size_t k = 0; k < bp.positions.size(); ++k)
                        v[k] = space_.slot_local[out.slots[bp.positions[k]]].fraction(m, t);
                    bp.fractions.insert(std::move(v));
                }
            }
            patches.push_back(std::move(bp));
        }
    }

    std::vector<std::vector<int>> patches_at_point(space_.point_count);
    for (int i = 0; i < (int)patches.size(); ++i)
        for (int p : patches[i].pts.elements()) patches_at_point[p].push_back(i);

    auto extract = [](const std::vector<int>& family, const std::vector<int>& positions) {
        std::vector<int> v(positions.size());
        for (size_t k = 0; k < positions.size(); ++k) v[k] = family[positions[k]];
        return v;
    };

    // Constructive path: cover the points in order, one patch at a time.
    std::set<std::vector<int>> constructive;
    bool constructive_ok = true;
    {
        long long steps = 0;
        std::vector<int> assign(out.slots.size(), -1);
        Bitset covered(space_.point_count);
        auto rec = [&](auto&& self) -> void {
            if (++steps > guards_.family_cap)
                throw CapacityError("constructive section search exceeded the cap",
                                    guards_.family_cap);
            int point = -1;
            for (int p : u.elements())
                if (!covered.test(p)) {
                    point = p;
                    break;
                }
            if (point < 0) {
                constructive.insert(assign);
                return;
            }
            for (int pi : patches_at_point[point]) {
                const auto& bp = patches[pi];
                for (const auto& frac : bp.fractions) {
                    bool compatible = true;
                    for (size_t k = 0; k < bp.positions.size(); ++k) {
                        int cur = assign[bp.positions[k]];
                        if (cur >= 0 && cur != frac[k]) {
                            compatible = false;
                            break;
                        }
                    }
                    if (!compatible) continue;
                    std::vector<int> saved_vals;
                    for (int posk : bp.positions) saved_vals.push_back(assign[posk]);
                    Bitset saved_cov = covered;
                    for (size_t k = 0; k < bp.positions.size(); ++k)
                        assign[bp.positions[k]] = frac[k];
                    covered |= bp.pts;
                    self(self);
                    covered = saved_cov;
                    for (size_t k = 0; k < bp.positions.size(); ++k)
                        assign[bp.positions[k]] = saved_vals[k];
                }
            }
        };
        try {
            rec(rec);
        } catch (const CapacityError&) {
            constructive_ok = false;
            constructive.clear();
        }
    }

    // Brute-force path: filter the full product when it is small enough.
    std::set<std::vector<int>> brute;
    bool brute_ok = false;
    {
        long long product = 1;
        for (int s : out.slots) {
            product *= space_.slot_local[s].result->order();
            if (product > guards_.family_cap) break;
        }
        if (product <= guards_.family_cap) {
            brute_ok = true;
            std::vector<int> family(out.slots.size(), 0);
            while (true) {
                bool section = true;
                for (int p : u.elements()) {
                    bool local = false;
                    for (int pi : patches_at_point[p]) {
                        if (patches[pi].fractions.count(extract(family, patches[pi].positions))) {
                            local = true;
                            break;
                        }
                    }
                    if (!local) {
                        section = false;
                        break;
                    }
                }
                if (section) brute.insert(family);

                size_t i = 0;
                while (i < family.size() &&
                       ++family[i] == space_.slot_local[out.slots[i]].result->order())
                    family[i++] = 0;
                if (i == family.size()) break;
            }
        }
    }

    if (!constructive_ok && !brute_ok)
        throw CapacityError("both section computation paths exceed their caps", guards_.family_cap);
    if (constructive_ok && brute_ok && constructive != brute)
        throw InternalCheckError("section computation paths disagree on open " +
                                 std::to_string(open_index));

    out.constructive_ran = constructive_ok;
    out.brute_ran = brute_ok;
    const auto& chosen = constructive_ok ? constructive : brute;
    out.families.assign(chosen.begin(), chosen.end());

    // Pointwise module structure; sections must be closed under it.
    std::map<std::vector<int>, int> id_of;
    for (int i = 0; i < (int)out.families.size(); ++i) id_of[out.families[i]] = i;
    int k = (int)out.families.size();
    std::vector<std::vector<int>> add(k, std::vector<int>(k)),
        act(space_.ring->order(), std::vector<int>(k));
    std::vector<int> tmp(out.slots.size());
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (size_t s = 0; s < out.slots.size(); ++s)
                tmp[s] = space_.slot_local[out.slots[s]].result->add(out.families[i][s],
                                                                     out.families[j][s]);
            auto it = id_of.find(tmp);
            if (it == id_of.end())
                throw InternalCheckError("sections not closed under addition on open " +
                                         std::to_string(open_index));
            add[i][j] = it->second;
        }
        for (int r = 0; r < space_.ring->order(); ++r) {
            for (size_t s = 0; s < out.slots.size(); ++s)
                tmp[s] = space_.slot_local[out.slots[s]].result->act(r, out.families[i][s]);
            auto it = id_of.find(tmp);
            if (it == id_of.end())
                throw InternalCheckError("sections not closed under scalar action on open " +
                                         std::to_string(open_index));
            act[r][i] = it->second;
        }
    }
    out.module = FiniteModule::from_tables_named(space_.ring, add, act, {},
                                                 "sections(open " + std::to_string(open_index) + ")");
    return out;
}

ModuleMap Sheaf::restriction(int from_open, int to_open) const {
    const auto& su = sections_[from_open];
    const auto& sv = sections_[to_open];
    if (!sv.points.subset_of(su.points))
        throw StructureError("restriction target is not contained in the source open");
    std::vector<int> positions;
    for (int s : sv.slots) {
        int pos = su.slot_position(s);
        if (pos < 0) throw InternalCheckError("nested open uses a slot missing from its superset");
        positions.push_back(pos);
    }
    std::vector<int> values(su.families.size());
    for (size_t i = 0; i < su.families.size(); ++i) {
        std::vector<int> v(positions.size());
        for (size_t kk = 0; kk < positions.size(); ++kk) v[kk] = su.families[i][positions[kk]];
        int idx = sv.index_of(v);
        if (idx < 0) throw InternalCheckError("restriction of a section is not a section");
        values[i] = idx;
    }
    return ModuleMap(su.module, sv.module, std::move(values));
}

ModuleMap Sheaf::tau(int open_index) const {
    const auto& su = sections_[open_index];
    std::vector<int> values(space_.coefficient->order());
    for (int n = 0; n < space_.coefficient->order(); ++n) {
        std::vector<int> v(su.slots.size());
        for (size_t s = 0; s < su.slots.size(); ++s)
            v[s] = space_.slot_local[su.slots[s]].canonical(n);
        int idx = su.index_of(v);
        if (idx < 0) throw InternalCheckError("canonical image n/1 is not a section");
        values[n] = idx;
    }
    return ModuleMap(space_.coefficient, su.module, std::move(values));
}

StalkInfo Sheaf::stalk(int point) const {
    StalkInfo info;
    info.point = point;
    Bitset acc = Bitset::full(space_.point_count);
    for (const auto& o : space_.opens)
        if (o.test(point)) acc &= o;
    info.minimal_open = space_.index_of_open(acc);
    if (info.minimal_open < 0) throw InternalCheckError("minimal neighborhood is not open");

    const auto& sm = sections_[info.minimal_open];
    info.value = sm.module;
    int slot = space_.point_slot[point];
    info.localization = &space_.slot_local[slot];
    int pos = sm.slot_position(slot);
    if (pos < 0) throw InternalCheckError("point's slot missing from its minimal neighborhood");

    std::vector<int> proj(sm.families.size());
    for (size_t i = 0; i < sm.families.size(); ++i) proj[i] = sm.families[i][pos];
    ModuleMap phi(sm.module, info.localization->result, std::move(proj));
    info.comparison_ok = phi.is_bijective();
    if (!info.comparison_ok)
        info.failure = "projection to the localization is not bijective (|stalk| = " +
                       std::to_string(sm.module->order()) + ", |N_p| = " +
                       std::to_string(info.localization->result->order()) + ")";
    return info;
}

AxiomReport Sheaf::verify_axioms() const {
    AxiomReport rep;
    auto check = [&rep](const std::string& axiom, bool ok, const std::string& witness = "") {
        rep.checks.push_back(AxiomCheck{axiom, ok, ok ? "" : witness});
    };

    check("empty-sections-vanish", sections_[space_.empty_open_index()].module->order() == 1);

    bool id_ok = true, comp_ok = true, tau_ok = true;
    std::string comp_witness, tau_witness;
    for (int ui = 0; ui < open_count(); ++ui) {
        if (!(restriction(ui, ui) == ModuleMap::identity(sections_[ui].module))) id_ok = false;
        for (int vi = 0; vi < open_count(); ++vi) {
            if (!space_.opens[vi].subset_of(space_.opens[ui])) continue;
            ModuleMap uv = restriction(ui, vi);
            if (!(uv.compose_after(tau(ui)) == tau(vi))) {
                tau_ok = false;
                tau_witness = "opens " + std::to_string(ui) + " -> " + std::to_string(vi);
            }
            for (int wi = 0; wi < open_count(); ++wi) {
                if (!space_.opens[wi].subset_of(space_.opens[vi])) continue;
                if (!(restriction(vi, wi).compose_after(uv) == restriction(ui, wi))) {
                    comp_ok = false;
                    comp_witness = "opens " + std::to_string(ui) + " -> " + std::to_string(vi) +
                                   " -> " + std::to_string(wi);
                }
            }
        }
    }
    check("restriction-identity", id_ok);
    check("restriction-composition", comp_ok, comp_witness);
    check("restriction-tau-compatibility", tau_ok, tau_witness);

    bool separation_ok = true, gluing_ok = true;
    std::string sep_witness, glue_witness;
    for (int ui = 0; ui < open_count(); ++ui) {
        const Bitset& u = space_.opens[ui];
        if (u.none()) continue;

        std::vector<int> basic_opens;  // open indices of distinct basics inside U
        {
            std::set<Bitset> seen;
            for (const auto& b : space_.basics)
                if (b.any() && b.subset_of(u) && seen.insert(b).second)
                    basic_opens.push_back(space_.index_of_open(b));
        }
        int nb = (int)basic_opens.size();
        if (nb == 0) continue;

        std::vector<std::vector<int>> covers;
        if (nb < 62 && (1LL << nb) <= guards_.cover_cap) {
            for (long long mask = 1; mask < (1LL << nb); ++mask) {
                Bitset acc(space_.point_count);
                std::vector<int> cover;
                for (int i = 0; i < nb; ++i)
                    if (mask & (1LL << i)) {
                        cover.push_back(basic_opens[i]);
                        acc |= space_.opens[basic_opens[i]];
                    }
                if (acc == u) covers.push_back(std::move(cover));
            }
        } else {
            rep.guard_limited = true;
            Bitset acc(space_.point_count);
            for (int b : basic_opens) acc |= space_.opens[b];
            if (acc == u) covers.push_back(basic_opens);
        }
        rep.covers_checked += (long long)covers.size();

        for (const auto& cover : covers) {
            // Separation: a section vanishing on every cover element is zero.
            std::vector<ModuleMap> rho;
            for (int b : cover) rho.push_back(restriction(ui, b));
            for (int f = 0; f < sections_[ui].module->order(); ++f) {
                bool all_zero = true;
                for (size_t c = 0; c < cover.size(); ++c)
                    if (rho[c](f) != sections_[cover[c]].module->zero_elem()) {
                        all_zero = false;
                        break;
                    }
                if (all_zero && f != sections_[ui].module->zero_elem()) {
                    separation_ok = false;
                    sep_witness = "open " + std::to_string(ui);
                }
            }

            // Gluing: every compatible tuple assembles to a section of U.
            long long steps = 0;
            bool budget_hit = false;
            std::vector<int> assign(sections_[ui].slots.size(), -1);
            auto rec = [&](auto&& self, size_t ci) -> void {
                if (budget_hit) return;
                if (++steps > guards_.family_cap) {
                    budget_hit = true;
                    return;
                }
                if (ci == cover.size()) {
                    std::vector<int> family = assign;
                    int idx = sections_[ui].index_of(family);
                    if (idx < 0) {
                        gluing_ok = false;
                        glue_witness = "open " + std::to_string(ui) + ": compatible tuple has no glue";
                        return;
                    }
                    for (size_t c = 0; c < cover.size(); ++c) {
                        const auto& sb = sections_[cover[c]];
                        std::vector<int> restr(sb.slots.size());
                        for (size_t kk = 0; kk < sb.slots.size(); ++kk)
                            restr[kk] = family[sections_[ui].slot_position(sb.slots[kk])];
                        if (rho[c](idx) != sb.index_of(restr)) {
                            gluing_ok = false;
                            glue_witness = "open " + std::to_string(ui) + ": glue restricts wrongly";
                        }
                    }
                    return;
                }
                const auto& sb = sections_[cover[ci]];
                std::vector<int> positions;
                for (int s : sb.slots) positions.push_back(sections_[ui].slot_position(s));
                for (const auto& fam : sb.families) {
                    bool compatible = true;
                    for (size_t kk = 0; kk < positions.size(); ++kk) {
                        int cur = assign[positions[kk]];
                        if (cur >= 0 && cur != fam[kk]) {
                            compatible = false;
                            break;
                        }
                    }
                    if (!compatible) continue;
                    std::vector<int> saved;
                    for (int p : positions) saved.push_back(assign[p]);
                    for (size_t kk = 0; kk < positions.size(); ++kk) assign[positions[kk]] = fam[kk];
                    self(self, ci + 1);
                    for (size_t kk = 0; kk < positions.size(); ++kk) assign[positions[kk]] = saved[kk];
                    if (budget_hit || !gluing_ok) return;
                }
            };
            rec(rec, 0);
            if (budget_hit) rep.guard_limited = true;
            if (!gluing_ok) break;
        }
        if (!gluing_ok) break;
    }
    check("separation", separation_ok, sep_witness);
    check("gluing", gluing_ok, glue_witness);
    return rep;
}

bool Sheaf::has_ring_structure() const {
    const auto& c = space_.coefficient;
    const auto& r = space_.ring;
    if (c->order() != r->order() || c->zero_elem() != r->zero()) return false;
    for (int a = 0; a < r->order(); ++a)
        for (int b = 0; b < r->order(); ++b)
            if (c->add(a, b) != r->add(a, b) || c->act(a, b) != r->mul(a, b)) return false;
    return true;
}

int Sheaf::section_one(int open_index) const {
    if (!has_ring_structure()) throw PreconditionError("sections carry no ring structure");
    return tau(open_index)(space_.ring->one());
}

int Sheaf::section_product(int open_index, int a, int b) const {
    if (!has_ring_structure()) throw PreconditionError("sections carry no ring structure");
    const auto& su = sections_[open_index];
    std::vector<int> v(su.slots.size());
    for (size_t s = 0; s < su.slots.size(); ++s) {
        const auto& loc = space_.slot_local[su.slots[s]];
        v[s] = loc.canonical(space_.ring->mul(loc.rep[su.families[a][s]], loc.rep[su.families[b][s]]));
    }
    int idx = su.index_of(v);
    if (idx < 0) throw InternalCheckError("componentwise product of sections is not a section");
    return idx;
}

}  // namespace secsheaf
