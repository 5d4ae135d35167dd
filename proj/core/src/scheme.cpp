#include "secsheaf/scheme.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "secsheaf/errors.hpp"

namespace secsheaf {

SchemeResult verify_scheme(const DualTopology& topo, const Guards& guards) {
    SchemeResult out;
    const auto& spec = topo.spectrum();
    const auto& ring = spec.module()->ring();
    const auto& rs = spec.ring_spectrum();

    bool faithful = spec.is_faithful();
    bool secondful = spec.is_secondful();
    bool t0 = topo.t0().t0();
    json hyps{{"faithful", faithful}, {"secondful", secondful}, {"t0", t0}};
    out.hypotheses_hold = faithful && secondful && t0;
    if (!out.hypotheses_hold) {
        std::string reason = "requires";
        if (!faithful) reason += " faithful";
        if (!secondful) reason += " secondful";
        if (!t0) reason += " T_0";
        out.records.push_back(CheckRecord::skipped("scheme_structure", hyps, reason));
        return out;
    }

    Sheaf sheaf(dual_section_space(topo, FiniteModule::natural(ring)), guards);

    // Covering family of distinct non-empty basic opens.
    std::vector<int> family;
    {
        std::set<Bitset> seen;
        for (int g = 0; g < ring->order(); ++g)
            if (topo.basic_open(g).any() && seen.insert(topo.basic_open(g)).second)
                family.push_back(g);
    }
    {
        Bitset acc(topo.point_count());
        for (int g : family) acc |= topo.basic_open(g);
        out.records.push_back(acc == Bitset::full(topo.point_count())
                                  ? CheckRecord::pass("scheme_covering_family", hyps,
                                                      json{{"size", (int)family.size()}})
                                  : CheckRecord::fail("scheme_covering_family", hyps));
    }

    for (int g : family) {
        const std::string tag = "[g=" + ring->element_name(g) + "]";
        const Bitset& yg = topo.basic_open(g);

        // (a) psi restricted to Y_g is a homeomorphism onto D_g.
        {
            Bitset dg = rs.basic_open(g);
            Bitset image(rs.prime_count());
            bool injective = true;
            for (int i : yg.elements()) {
                int idx = rs.index_of_prime(spec.point(i).annihilator);
                if (image.test(idx)) injective = false;
                image.set(idx);
            }
            bool bijective = injective && image == dg;

            bool closed_maps = true;
            for (int c = 0; c < (int)topo.closed_sets().size() && closed_maps; ++c) {
                Bitset rel = topo.closed_sets()[c].points & yg;
                Bitset img(rs.prime_count());
                for (int i : rel.elements()) img.set(rs.index_of_prime(spec.point(i).annihilator));
                bool matches = false;
                for (const auto& vi : rs.closed_family())
                    if ((vi & dg) == img) {
                        matches = true;
                        break;
                    }
                closed_maps = matches;
            }
            // And conversely: preimages of relative closed sets are closed.
            for (const auto& vi : rs.closed_family()) {
                Bitset pre(topo.point_count());
                for (int i : yg.elements())
                    if (vi.test(rs.index_of_prime(spec.point(i).annihilator))) pre.set(i);
                bool matches = false;
                for (const auto& c : topo.closed_sets())
                    if ((c.points & yg) == pre) {
                        matches = true;
                        break;
                    }
                if (!matches) closed_maps = false;
            }
            out.records.push_back(bijective && closed_maps
                                      ? CheckRecord::pass("scheme_basic_homeo" + tag, hyps)
                                      : CheckRecord::fail("scheme_basic_homeo" + tag, hyps));
            if (!(bijective && closed_maps)) continue;
        }

        // (b) Spec(R_g) matches D_g prime by prime.
        LocalizedRing rg = localize_ring(ring, powers_of(ring, g));
        RingSpectrum rg_spec = RingSpectrum::compute(rg.result, guards);
        std::map<int, int> prime_to_rg;  // R-prime index in D_g -> R_g prime index
        {
            bool ok = true;
            Bitset hit(rg_spec.prime_count());
            for (int pi : rs.basic_open(g).elements()) {
                Bitset img(rg.result->order());
                for (int x : rs.prime(pi).elements().elements()) img.set(rg.to_result[x]);
                int idx = rg_spec.index_of_prime(Ideal(rg.result, img));
                if (idx < 0 || hit.test(idx)) {
                    ok = false;
                    break;
                }
                hit.set(idx);
                prime_to_rg[pi] = idx;
            }
            ok = ok && hit.count() == rg_spec.prime_count();
            out.records.push_back(ok ? CheckRecord::pass("scheme_localized_spectrum" + tag, hyps,
                                                         json{{"localized_ring_order",
                                                               rg.result->order()}})
                                     : CheckRecord::fail("scheme_localized_spectrum" + tag, hyps));
            if (!ok) continue;
        }

        Sheaf classical(ring_section_space(rg_spec, FiniteModule::natural(rg.result)), guards);
        const auto& csp = classical.space();
        const auto& dsp = sheaf.space();

        auto point_to_classical = [&](int i) {
            return prime_to_rg.at(rs.index_of_prime(spec.point(i).annihilator));
        };
        auto map_open = [&](const Bitset& rel_open) {
            Bitset img(rg_spec.prime_count());
            for (int i : rel_open.elements()) img.set(point_to_classical(i));
            return img;
        };

        // Entry isomorphisms R_p -> (R_g)_{p-bar}, one per prime in D_g.
        std::map<int, std::vector<int>> entry_iso;  // dual slot -> value map
        bool entries_ok = true;
        for (int i : yg.elements()) {
            int slot = dsp.point_slot[i];
            if (entry_iso.count(slot)) continue;
            const auto& dual_loc = dsp.slot_local[slot];
            const auto& cls_loc = csp.slot_local[point_to_classical(i)];
            if (dual_loc.result->order() != cls_loc.result->order()) {
                entries_ok = false;
                break;
            }
            std::vector<int> iso(dual_loc.result->order());
            Bitset seen(cls_loc.result->order());
            for (int x = 0; x < dual_loc.result->order(); ++x) {
                iso[x] = cls_loc.canonical(rg.to_result[dual_loc.rep[x]]);
                if (seen.test(iso[x])) entries_ok = false;
                seen.set(iso[x]);
            }
            entry_iso[slot] = std::move(iso);
        }
        out.records.push_back(entries_ok
                                  ? CheckRecord::pass("scheme_entry_isos" + tag, hyps)
                                  : CheckRecord::fail("scheme_entry_isos" + tag, hyps));
        if (!entries_ok) continue;

        // (c) Relative opens correspond and sections match as rings.
        std::vector<int> rel_opens;  // dual open indices contained in Y_g
        for (int u = 0; u < sheaf.open_count(); ++u)
            if (dsp.opens[u].subset_of(yg)) rel_opens.push_back(u);

        bool lattice_ok = true;
        std::set<Bitset> classical_images;
        for (int u : rel_opens) {
            Bitset img = map_open(dsp.opens[u]);
            if (csp.index_of_open(img) < 0) lattice_ok = false;
            classical_images.insert(img);
        }
        // Every classical open inside the image of Y_g must arise.
        Bitset dg_cls = map_open(yg);
        for (const auto& o : csp.opens)
            if (o.subset_of(dg_cls) && !classical_images.count(o)) lattice_ok = false;
        out.records.push_back(lattice_ok ? CheckRecord::pass("scheme_open_lattice" + tag, hyps)
                                         : CheckRecord::fail("scheme_open_lattice" + tag, hyps));
        if (!lattice_ok) continue;

        std::map<int, std::vector<int>> section_iso;  // dual open -> family map
        bool sections_ok = true;
        std::string sections_witness;
        for (int u : rel_opens) {
            const auto& su = sheaf.sections(u);
            int cu = csp.index_of_open(map_open(dsp.opens[u]));
            const auto& tu = classical.sections(cu);
            if (su.module->order() != tu.module->order()) {
                sections_ok = false;
                sections_witness = "order mismatch on open " + std::to_string(u);
                break;
            }
            // Positions: dual slot -> classical slot position.
            std::vector<int> cls_pos(su.slots.size());
            for (size_t s = 0; s < su.slots.size(); ++s) {
                int i = -1;
                for (int p : dsp.opens[u].elements())
                    if (dsp.point_slot[p] == su.slots[s]) {
                        i = p;
                        break;
                    }
                cls_pos[s] = tu.slot_position(point_to_classical(i));
            }
            std::vector<int> fmap(su.families.size());
            Bitset seen((int)tu.families.size());
            for (size_t f = 0; f < su.families.size(); ++f) {
                std::vector<int> cls_fam(tu.slots.size());
                for (size_t s = 0; s < su.slots.size(); ++s)
                    cls_fam[cls_pos[s]] = entry_iso[su.slots[s]][su.families[f][s]];
                int idx = tu.index_of(cls_fam);
                if (idx < 0 || seen.test(idx)) {
                    sections_ok = false;
                    sections_witness = "family does not transfer on open " + std::to_string(u);
                    break;
                }
                seen.set(idx);
                fmap[f] = idx;
            }
            if (!sections_ok) break;

            // Ring isomorphism: identity, addition, multiplication.
            if (fmap[sheaf.section_one(u)] != classical.section_one(cu)) {
                sections_ok = false;
                sections_witness = "identity section does not transfer";
                break;
            }
            for (int x = 0; x < su.module->order() && sections_ok; ++x)
                for (int y = 0; y < su.module->order(); ++y) {
                    if (fmap[su.module->add(x, y)] != tu.module->add(fmap[x], fmap[y]) ||
                        fmap[sheaf.section_product(u, x, y)] !=
                            classical.section_product(cu, fmap[x], fmap[y])) {
                        sections_ok = false;
                        sections_witness = "ring operations do not transfer";
                        break;
                    }
                }
            section_iso[u] = std::move(fmap);
        }
        // Restriction squares commute.
        if (sections_ok) {
            for (int u : rel_opens) {
                for (int v : rel_opens) {
                    if (!dsp.opens[v].subset_of(dsp.opens[u])) continue;
                    int cu = csp.index_of_open(map_open(dsp.opens[u]));
                    int cv = csp.index_of_open(map_open(dsp.opens[v]));
                    ModuleMap rho_d = sheaf.restriction(u, v);
                    ModuleMap rho_c = classical.restriction(cu, cv);
                    for (int f = 0; f < sheaf.sections(u).module->order(); ++f)
                        if (section_iso[v][rho_d(f)] != rho_c(section_iso[u][f])) {
                            sections_ok = false;
                            sections_witness = "restrictions do not commute";
                        }
                }
            }
        }
        out.records.push_back(sections_ok
                                  ? CheckRecord::pass("scheme_sections_iso" + tag, hyps)
                                  : CheckRecord::fail("scheme_sections_iso" + tag, hyps,
                                                      json{{"witness", sections_witness}}));

        // (e) Stalks are local rings matched by the entry isomorphisms.
        bool stalks_ok = true;
        for (int i : yg.elements()) {
            StalkInfo dual_st = sheaf.stalk(i);
            StalkInfo cls_st = classical.stalk(point_to_classical(i));
            if (!dual_st.comparison_ok || !cls_st.comparison_ok) stalks_ok = false;

            auto loc_dual = localize_ring(ring, complement_of_prime(spec.point(i).annihilator));
            auto loc_cls = localize_ring(rg.result,
                                         complement_of_prime(rg_spec.prime(point_to_classical(i))));
            auto local = [](const RingPtr& r) {
                Bitset nonunits(r->order());
                for (int x = 0; x < r->order(); ++x)
                    if (!r->is_unit(x)) nonunits.set(x);
                for (int x : nonunits.elements())
                    for (int y : nonunits.elements())
                        if (r->is_unit(r->add(x, y))) return false;
                return true;
            };
            if (!local(loc_dual.result) || !local(loc_cls.result)) stalks_ok = false;

            // The entry map is a ring isomorphism on the stalk carriers.
            const auto& iso = entry_iso[dsp.point_slot[i]];
            const auto& dual_loc = dsp.slot_local[dsp.point_slot[i]];
            const auto& cls_loc = csp.slot_local[point_to_classical(i)];
            for (int x = 0; x < dual_loc.result->order() && stalks_ok; ++x)
                for (int y = 0; y < dual_loc.result->order(); ++y) {
                    int mul_d = dual_loc.canonical(ring->mul(dual_loc.rep[x], dual_loc.rep[y]));
                    int mul_c = cls_loc.canonical(
                        rg.result->mul(cls_loc.rep[iso[x]], cls_loc.rep[iso[y]]));
                    if (iso[mul_d] != mul_c ||
                        iso[dual_loc.result->add(x, y)] != cls_loc.result->add(iso[x], iso[y])) {
                        stalks_ok = false;
                        break;
                    }
                }
        }
        out.records.push_back(stalks_ok ? CheckRecord::pass("scheme_stalks_local" + tag, hyps)
                                        : CheckRecord::fail("scheme_stalks_local" + tag, hyps));
    }

    {
        std::vector<int> subcover;
        bool qc = topo.is_quasi_compact(topo.full_open(), &subcover);
        out.records.push_back(qc ? CheckRecord::pass("scheme_quasi_compact", hyps,
                                                     json{{"subcover_size", (int)subcover.size()}})
                                 : CheckRecord::fail("scheme_quasi_compact", hyps));
    }
    out.records.push_back(CheckRecord::pass("scheme_noetherian", hyps,
                                            json{{"note", "finite rings are Noetherian"}}));
    return out;
}

}  // namespace secsheaf
