#include "secsheaf/morphisms.hpp"

#include <algorithm>

#include "secsheaf/errors.hpp"

namespace secsheaf {

namespace {

bool same_lattice(const SectionSpace& a, const SectionSpace& b) {
    return a.point_count == b.point_count && a.opens == b.opens && a.point_slot == b.point_slot;
}

}  // namespace

InducedSheafMorphism induced_sheaf_morphism(const Sheaf& source_sheaf, const Sheaf& target_sheaf,
                                            const ModuleMap& phi, const Guards&) {
    const auto& sp = source_sheaf.space();
    const auto& tp = target_sheaf.space();
    if (!same_lattice(sp, tp))
        throw StructureError("induced sheaf morphism requires sheaves over the same space");
    if (phi.source() != sp.coefficient || phi.target() != tp.coefficient)
        throw StructureError("map does not match the sheaf coefficients");

    InducedSheafMorphism out;
    bool lands = true;
    std::string lands_witness;
    for (int u = 0; u < source_sheaf.open_count(); ++u) {
        const auto& su = source_sheaf.sections(u);
        const auto& tu = target_sheaf.sections(u);
        std::vector<int> values(su.families.size());
        for (size_t i = 0; i < su.families.size(); ++i) {
            std::vector<int> fam(su.slots.size());
            for (size_t s = 0; s < su.slots.size(); ++s) {
                const auto& src_loc = sp.slot_local[su.slots[s]];
                const auto& tgt_loc = tp.slot_local[su.slots[s]];
                fam[s] = tgt_loc.canonical(phi(src_loc.rep[su.families[i][s]]));
            }
            int idx = tu.index_of(fam);
            if (idx < 0) {
                lands = false;
                lands_witness = "open " + std::to_string(u);
                idx = tu.module->zero_elem();
            }
            values[i] = idx;
        }
        out.components.push_back(ModuleMap(su.module, tu.module, std::move(values)));
    }
    out.records.push_back(lands ? CheckRecord::pass("induced_components_are_sections", {})
                                : CheckRecord::fail("induced_components_are_sections", {},
                                                    json{{"witness", lands_witness}}));

    bool natural = true;
    std::string nat_witness;
    for (int u = 0; u < source_sheaf.open_count() && natural; ++u)
        for (int v = 0; v < source_sheaf.open_count(); ++v) {
            if (!sp.opens[v].subset_of(sp.opens[u])) continue;
            ModuleMap lhs = target_sheaf.restriction(u, v).compose_after(out.components[u]);
            ModuleMap rhs = out.components[v].compose_after(source_sheaf.restriction(u, v));
            if (!(lhs == rhs)) {
                natural = false;
                nat_witness = "opens " + std::to_string(u) + " -> " + std::to_string(v);
                break;
            }
        }
    out.records.push_back(natural ? CheckRecord::pass("induced_naturality", {})
                                  : CheckRecord::fail("induced_naturality", {},
                                                      json{{"witness", nat_witness}}));

    out.all_components_iso =
        std::all_of(out.components.begin(), out.components.end(),
                    [](const ModuleMap& c) { return c.is_bijective(); });
    if (phi.is_bijective()) {
        json hyps{{"map_is_isomorphism", true}};
        out.records.push_back(out.all_components_iso
                                  ? CheckRecord::pass("iso_transfers_to_components", hyps)
                                  : CheckRecord::fail("iso_transfers_to_components", hyps));
    }
    return out;
}

MorphismResult mono_induced_checks(const DualTopology& topo_m, const DualTopology& topo_n,
                                   const ModuleMap& phi, const Guards& guards) {
    MorphismResult out;
    if (topo_m.spectrum().module() != phi.source() || topo_n.spectrum().module() != phi.target())
        throw StructureError("map endpoints do not match the two spectra");
    if (!phi.is_injective()) throw PreconditionError("hypothesis failed: map is not injective");

    const auto& ring = phi.source()->ring();
    ModulePtr r_mod = FiniteModule::natural(ring);
    Sheaf sheaf_m(dual_section_space(topo_m, r_mod), guards);
    Sheaf sheaf_n(dual_section_space(topo_n, r_mod), guards);

    // Point map S -> phi(S), preserving annihilators.
    std::vector<int> point_map(topo_m.point_count(), -1);
    bool points_ok = true;
    std::string point_witness;
    for (int i = 0; i < topo_m.point_count(); ++i) {
        const auto& pt = topo_m.spectrum().point(i);
        Bitset image(phi.target()->order());
        for (int x : pt.submodule.elements().elements()) image.set(phi(x));
        int j = topo_n.spectrum().index_of_point(image);
        if (j < 0) {
            points_ok = false;
            point_witness = "image of " + pt.submodule.name() + " is not a second submodule";
            continue;
        }
        if (!(topo_n.spectrum().point(j).annihilator == pt.annihilator)) {
            points_ok = false;
            point_witness = "annihilator not preserved at " + pt.submodule.name();
        }
        point_map[i] = j;
    }
    out.records.push_back(points_ok
                              ? CheckRecord::pass("mono_point_map", {})
                              : CheckRecord::fail("mono_point_map", {}, json{{"witness", point_witness}}));
    if (!points_ok) return out;

    auto preimage_of = [&](const Bitset& open_n) {
        Bitset pre(topo_m.point_count());
        for (int i = 0; i < topo_m.point_count(); ++i)
            if (open_n.test(point_map[i])) pre.set(i);
        return pre;
    };

    bool continuous = true;
    for (int u = 0; u < topo_n.open_count(); ++u)
        if (!topo_m.is_open(preimage_of(topo_n.open_points(u)))) continuous = false;
    out.records.push_back(continuous ? CheckRecord::pass("mono_continuity", {})
                                     : CheckRecord::fail("mono_continuity", {}));
    if (!continuous) return out;

    // Pullback components: sections of O(R,N) reindexed over preimages.
    const auto& spn = sheaf_n.space();
    const auto& spm = sheaf_m.space();
    std::vector<std::vector<int>> components(sheaf_n.open_count());
    bool lands = true;
    for (int u = 0; u < sheaf_n.open_count(); ++u) {
        const auto& su = sheaf_n.sections(u);
        int pre_idx = spm.index_of_open(preimage_of(spn.opens[u]));
        const auto& tu = sheaf_m.sections(pre_idx);
        components[u].resize(su.families.size());
        for (size_t i = 0; i < su.families.size(); ++i) {
            std::vector<int> fam(tu.slots.size());
            for (size_t s = 0; s < tu.slots.size(); ++s) {
                const Ideal& q = spm.slot_primes[tu.slots[s]];
                int pos = -1;
                for (size_t t = 0; t < su.slots.size(); ++t)
                    if (spn.slot_primes[su.slots[t]] == q) {
                        pos = (int)t;
                        break;
                    }
                if (pos < 0) throw InternalCheckError("pullback misses a support prime");
                fam[s] = spm.slot_local[tu.slots[s]].canonical(
                    spn.slot_local[su.slots[pos]].rep[su.families[i][pos]]);
            }
            int idx = tu.index_of(fam);
            if (idx < 0) lands = false;
            components[u][i] = idx < 0 ? tu.module->zero_elem() : idx;
        }
    }
    out.records.push_back(lands ? CheckRecord::pass("mono_components_are_sections", {})
                                : CheckRecord::fail("mono_components_are_sections", {}));

    bool natural = true;
    for (int u = 0; u < sheaf_n.open_count() && natural; ++u)
        for (int v = 0; v < sheaf_n.open_count(); ++v) {
            if (!spn.opens[v].subset_of(spn.opens[u])) continue;
            int pu = spm.index_of_open(preimage_of(spn.opens[u]));
            int pv = spm.index_of_open(preimage_of(spn.opens[v]));
            ModuleMap rho_m = sheaf_m.restriction(pu, pv);
            ModuleMap rho_n = sheaf_n.restriction(u, v);
            for (int f = 0; f < sheaf_n.sections(u).module->order(); ++f)
                if (rho_m(components[u][f]) != components[v][rho_n(f)]) {
                    natural = false;
                    break;
                }
            if (!natural) break;
        }
    out.records.push_back(natural ? CheckRecord::pass("mono_naturality", {})
                                  : CheckRecord::fail("mono_naturality", {}));

    // Stalk maps resolve to the identity on fractions, hence are local.
    bool stalks_ok = true;
    std::string stalk_witness;
    for (int i = 0; i < topo_m.point_count() && stalks_ok; ++i) {
        int j = point_map[i];
        StalkInfo st_n = sheaf_n.stalk(j);
        StalkInfo st_m = sheaf_m.stalk(i);
        if (!st_n.comparison_ok || !st_m.comparison_ok) {
            stalks_ok = false;
            stalk_witness = "stalk comparison failed";
            break;
        }
        int v0 = st_n.minimal_open;
        int pre_v0 = spm.index_of_open(preimage_of(spn.opens[v0]));
        ModuleMap rho = sheaf_m.restriction(pre_v0, st_m.minimal_open);

        const auto& sn = sheaf_n.sections(v0);
        const auto& sm = sheaf_m.sections(st_m.minimal_open);
        int pos_n = sn.slot_position(spn.point_slot[j]);
        int pos_m = sm.slot_position(spm.point_slot[i]);
        const auto& loc_n = spn.slot_local[spn.point_slot[j]];
        const auto& loc_m = spm.slot_local[spm.point_slot[i]];
        // Sweep the stalk via representatives of the localization.
        for (int x = 0; x < loc_n.result->order() && stalks_ok; ++x) {
            int fam_n = -1;
            for (size_t f = 0; f < sn.families.size(); ++f)
                if (sn.families[f][pos_n] == x) {
                    fam_n = (int)f;
                    break;
                }
            if (fam_n < 0) {
                stalks_ok = false;
                stalk_witness = "stalk projection not surjective";
                break;
            }
            int y = sm.families[rho(components[v0][fam_n])][pos_m];
            if (loc_m.rep[y] != loc_n.rep[x]) {
                stalks_ok = false;
                stalk_witness = "stalk map moved a fraction";
            }
        }
    }
    out.records.push_back(stalks_ok
                              ? CheckRecord::pass("mono_stalk_identity_of_fractions", {})
                              : CheckRecord::fail("mono_stalk_identity_of_fractions", {},
                                                  json{{"witness", stalk_witness}}));
    return out;
}

namespace {

bool ring_is_local(const FiniteRing& r, Bitset* nonunits_out = nullptr) {
    Bitset nonunits(r.order());
    for (int a = 0; a < r.order(); ++a)
        if (!r.is_unit(a)) nonunits.set(a);
    for (int a : nonunits.elements())
        for (int b : nonunits.elements())
            if (r.is_unit(r.add(a, b))) return false;
    if (nonunits_out) *nonunits_out = nonunits;
    return true;
}

}  // namespace

MorphismResult ring_hom_induced_checks(const RingHom& phi, const DualTopology& topo_m,
                                       const DualTopology& topo_n, const ModulePtr& a,
                                       const ModulePtr& b, const std::vector<int>& delta_values,
                                       const Guards& guards) {
    MorphismResult out;
    const auto& spec_m = topo_m.spectrum();
    const auto& spec_n = topo_n.spectrum();
    if (spec_m.module()->ring() != phi.source())
        throw StructureError("first spectrum is not over the hom's source ring");
    if (spec_n.module()->ring() != phi.target())
        throw StructureError("second spectrum is not over the hom's target ring");
    if (a->ring() != phi.source() || b->ring() != phi.target())
        throw StructureError("coefficients over the wrong rings");

    if (!spec_m.is_secondful()) throw PreconditionError("hypothesis failed: M is not secondful");
    if (!topo_m.t0().t0()) throw PreconditionError("hypothesis failed: Spec^s(M) is not T_0");
    ModulePtr n_over_r = FiniteModule::restrict_scalars(phi, spec_n.module());
    if (!spec_m.module_annihilator().subset_of(annihilator_of_module(n_over_r)))
        throw PreconditionError("hypothesis failed: ann_R(M) is not contained in ann_R(N)");

    // delta must be R-linear into B viewed over R.
    ModulePtr b_over_r = FiniteModule::restrict_scalars(phi, b);
    ModuleMap delta(a, b_over_r, delta_values);

    // h(T) is the unique point of Spec^s(M) whose annihilator is the
    // contraction of ann_S(T).
    std::vector<int> h(topo_n.point_count(), -1);
    bool h_ok = true;
    std::string h_witness;
    for (int t = 0; t < topo_n.point_count(); ++t) {
        Ideal p = phi.preimage(spec_n.point(t).annihilator);
        std::vector<int> hits;
        for (int i = 0; i < topo_m.point_count(); ++i)
            if (spec_m.point(i).annihilator == p) hits.push_back(i);
        if (hits.size() != 1) {
            h_ok = false;
            h_witness = "contraction " + p.name() + " has " + std::to_string(hits.size()) +
                        " preimage points";
        } else {
            h[t] = hits[0];
        }
    }
    out.records.push_back(h_ok ? CheckRecord::pass("contraction_point_map", {})
                               : CheckRecord::fail("contraction_point_map", {},
                                                   json{{"witness", h_witness}}));
    if (!h_ok) return out;

    auto h_preimage = [&](const Bitset& open_m) {
        Bitset pre(topo_n.point_count());
        for (int t = 0; t < topo_n.point_count(); ++t)
            if (open_m.test(h[t])) pre.set(t);
        return pre;
    };

    bool continuous = true;
    for (int u = 0; u < topo_m.open_count(); ++u)
        if (!topo_n.is_open(h_preimage(topo_m.open_points(u)))) continuous = false;
    out.records.push_back(continuous ? CheckRecord::pass("contraction_continuity", {})
                                     : CheckRecord::fail("contraction_continuity", {}));
    if (!continuous) return out;

    Sheaf sheaf_a(dual_section_space(topo_m, a), guards);
    Sheaf sheaf_b(dual_section_space(topo_n, b), guards);
    const auto& spa = sheaf_a.space();
    const auto& spb = sheaf_b.space();

    // Components a/s -> delta(a)/phi(s), entrywise through the contraction.
    std::vector<std::vector<int>> components(sheaf_a.open_count());
    bool lands = true, semilinear = true;
    for (int u = 0; u < sheaf_a.open_count(); ++u) {
        const auto& su = sheaf_a.sections(u);
        int v_idx = spb.index_of_open(h_preimage(spa.opens[u]));
        const auto& tv = sheaf_b.sections(v_idx);
        components[u].resize(su.families.size());
        for (size_t i = 0; i < su.families.size(); ++i) {
            std::vector<int> fam(tv.slots.size());
            for (size_t s = 0; s < tv.slots.size(); ++s) {
                const Ideal& q = spb.slot_primes[tv.slots[s]];
                Ideal p = phi.preimage(q);
                int pos = -1;
                for (size_t w = 0; w < su.slots.size(); ++w)
                    if (spa.slot_primes[su.slots[w]] == p) {
                        pos = (int)w;
                        break;
                    }
                if (pos < 0) throw InternalCheckError("contraction misses a support prime");
                fam[s] = spb.slot_local[tv.slots[s]].canonical(
                    delta(spa.slot_local[su.slots[pos]].rep[su.families[i][pos]]));
            }
            int idx = tv.index_of(fam);
            if (idx < 0) lands = false;
            components[u][i] = idx < 0 ? tv.module->zero_elem() : idx;
        }
        // Additive and semilinear over phi.
        for (int i = 0; i < su.module->order() && semilinear; ++i) {
            for (int j = 0; j < su.module->order(); ++j)
                if (components[u][su.module->add(i, j)] !=
                    tv.module->add(components[u][i], components[u][j])) {
                    semilinear = false;
                    break;
                }
            for (int r = 0; r < phi.source()->order() && semilinear; ++r)
                if (components[u][su.module->act(r, i)] != tv.module->act(phi(r), components[u][i]))
                    semilinear = false;
        }
    }
    out.records.push_back(lands ? CheckRecord::pass("pushforward_components_are_sections", {})
                                : CheckRecord::fail("pushforward_components_are_sections", {}));
    out.records.push_back(semilinear ? CheckRecord::pass("pushforward_semilinearity", {})
                                     : CheckRecord::fail("pushforward_semilinearity", {}));

    bool natural = true;
    for (int u = 0; u < sheaf_a.open_count() && natural; ++u)
        for (int v = 0; v < sheaf_a.open_count(); ++v) {
            if (!spa.opens[v].subset_of(spa.opens[u])) continue;
            int pu = spb.index_of_open(h_preimage(spa.opens[u]));
            int pv = spb.index_of_open(h_preimage(spa.opens[v]));
            ModuleMap rho_b = sheaf_b.restriction(pu, pv);
            ModuleMap rho_a = sheaf_a.restriction(u, v);
            for (int f = 0; f < sheaf_a.sections(u).module->order(); ++f)
                if (rho_b(components[u][f]) != components[v][rho_a(f)]) {
                    natural = false;
                    break;
                }
            if (!natural) break;
        }
    out.records.push_back(natural ? CheckRecord::pass("pushforward_naturality", {})
                                  : CheckRecord::fail("pushforward_naturality", {}));

    // With A = R, B = S, delta = phi the stalk maps are local ring homs.
    bool is_corollary_case = sheaf_a.has_ring_structure() && sheaf_b.has_ring_structure() &&
                             delta_values == phi.values();
    if (is_corollary_case) {
        bool local_ok = true;
        std::string witness;
        for (int t = 0; t < topo_n.point_count() && local_ok; ++t) {
            const Ideal& q = spec_n.point(t).annihilator;
            Ideal p = phi.preimage(q);
            LocalizedModule loc_r = localize_at_prime(FiniteModule::natural(phi.source()), p);
            LocalizedModule loc_s = localize_at_prime(FiniteModule::natural(phi.target()), q);

            auto stalk_map = [&](int x) { return loc_s.canonical(phi(loc_r.rep[x])); };

            // Ring hom on the localizations.
            const auto& rr = phi.source();
            const auto& ss = phi.target();
            if (stalk_map(loc_r.canonical(rr->one())) != loc_s.canonical(ss->one())) local_ok = false;
            for (int x = 0; x < loc_r.result->order() && local_ok; ++x)
                for (int y = 0; y < loc_r.result->order(); ++y) {
                    int sum_src = loc_r.result->add(x, y);
                    int mul_src = loc_r.canonical(rr->mul(loc_r.rep[x], loc_r.rep[y]));
                    if (stalk_map(sum_src) != loc_s.result->add(stalk_map(x), stalk_map(y)) ||
                        stalk_map(mul_src) !=
                            loc_s.canonical(ss->mul(loc_s.rep[stalk_map(x)], loc_s.rep[stalk_map(y)]))) {
                        local_ok = false;
                        break;
                    }
                }

            // Both stalks are local; nonunits map to nonunits.
            // Localized rings of the natural module are quotient rings, so
            // unit testing happens through representatives.
            auto loc_ring_m = localize_ring(rr, complement_of_prime(p));
            auto loc_ring_n = localize_ring(ss, complement_of_prime(q));
            Bitset nm, nn;
            if (!ring_is_local(*loc_ring_m.result, &nm) || !ring_is_local(*loc_ring_n.result, &nn)) {
                local_ok = false;
                witness = "a stalk ring is not local";
            }
            for (int x = 0; x < loc_r.result->order() && local_ok; ++x) {
                bool src_unit = loc_ring_m.result->is_unit(loc_ring_m.to_result[loc_r.rep[x]]);
                bool dst_unit =
                    loc_ring_n.result->is_unit(loc_ring_n.to_result[loc_s.rep[stalk_map(x)]]);
                if (!src_unit && dst_unit) {
                    local_ok = false;
                    witness = "a nonunit maps to a unit";
                }
            }
        }
        out.records.push_back(local_ok
                                  ? CheckRecord::pass("stalk_maps_local", {})
                                  : CheckRecord::fail("stalk_maps_local", {}, json{{"witness", witness}}));
    }
    return out;
}

}  // namespace secsheaf
