#include "secsheaf/theorems.hpp"

#include <algorithm>

#include "secsheaf/errors.hpp"

namespace secsheaf {

Sheaf build_sheaf(const DualTopology& topo, const ModulePtr& coefficient, const Guards& guards) {
    return Sheaf(dual_section_space(topo, coefficient), guards);
}

TheoremSuiteResult theorem_suite(const DualTopology& topo, const ModulePtr& coefficient,
                                 const Submodule& k, const Guards& guards) {
    const auto& spec = topo.spectrum();
    const auto& m = spec.module();
    if (k.parent() != m) throw StructureError("K must be a submodule of the spectrum's module");
    if (coefficient->ring() != m->ring())
        throw StructureError("coefficient module over a different ring");

    const bool faithful = spec.is_faithful();
    const bool secondful = spec.is_secondful();
    json base_hyps{{"noetherian", true}, {"faithful", faithful}, {"secondful", secondful}};

    Sheaf sheaf = build_sheaf(topo, coefficient, guards);
    const Ideal ann_k = k.annihilator();
    const int u_index = sheaf.space().index_of_open(topo.v_s(k).complement());
    if (u_index < 0) throw InternalCheckError("complement of V^s(K) is not open");
    const SectionModule& sec_u = sheaf.sections(u_index);

    TheoremSuiteResult out;
    auto push = [&out](CheckRecord rec) {
        if (rec.status == "pass") ++out.passed;
        if (rec.status == "fail") ++out.failed;
        if (rec.status == "skipped") ++out.skipped;
        out.records.push_back(std::move(rec));
    };

    // Stalks are the localizations of the coefficient at each point's prime.
    {
        json hyps{{"noetherian", true}};
        bool ok = true;
        json witness = json::array();
        for (int p = 0; p < topo.point_count(); ++p) {
            StalkInfo st = sheaf.stalk(p);
            ok = ok && st.comparison_ok;
            witness.push_back(json{{"point", spec.point(p).submodule.name()},
                                   {"stalk_order", st.value->order()},
                                   {"localization_order", st.localization->result->order()},
                                   {"isomorphic", st.comparison_ok}});
        }
        push(ok ? CheckRecord::pass("stalk_localization", hyps, json{{"points", witness}})
                : CheckRecord::fail("stalk_localization", hyps, json{{"points", witness}}));
    }

    // Gamma_annK of the sections over U vanishes (no extra hypotheses).
    {
        json hyps{{"noetherian", true}};
        TorsionSubmodule g = torsion_submodule(sec_u.module, ann_k);
        push(g.elements.is_zero()
                 ? CheckRecord::pass("section_torsion_vanishes", hyps)
                 : CheckRecord::fail("section_torsion_vanishes", hyps,
                                     json{{"torsion_order", g.elements.size()}}));
    }

    // ker(tau_U) is the annK-torsion of the coefficient.
    if (faithful && secondful) {
        Submodule ker = sheaf.tau(u_index).kernel();
        Submodule gamma = torsion_submodule(coefficient, ann_k).elements;
        json witness{{"kernel", ker.name()}, {"torsion", gamma.name()}};
        push(ker == gamma ? CheckRecord::pass("tau_kernel", base_hyps, witness)
                          : CheckRecord::fail("tau_kernel", base_hyps, witness));
    } else {
        push(CheckRecord::skipped("tau_kernel", base_hyps, "requires faithful + secondful"));
    }

    // ker(rho_WU) = Gamma_annK(sections(W)) for every open W containing U.
    if (faithful && secondful) {
        bool ok = true;
        json witness = json::array();
        for (int w = 0; w < sheaf.open_count(); ++w) {
            if (!sheaf.space().opens[u_index].subset_of(sheaf.space().opens[w])) continue;
            Submodule ker = sheaf.restriction(w, u_index).kernel();
            Submodule gamma = torsion_submodule(sheaf.sections(w).module, ann_k).elements;
            bool same = ker == gamma;
            ok = ok && same;
            if (!same)
                witness.push_back(json{{"open", w},
                                       {"kernel_order", ker.size()},
                                       {"torsion_order", gamma.size()}});
        }
        push(ok ? CheckRecord::pass("restriction_kernel", base_hyps)
                : CheckRecord::fail("restriction_kernel", base_hyps, json{{"failures", witness}}));
    } else {
        push(CheckRecord::skipped("restriction_kernel", base_hyps, "requires faithful + secondful"));
    }

    // coker(tau_U) is annK-torsion.
    if (faithful && secondful) {
        QuotientModule coker = quotient(sec_u.module, sheaf.tau(u_index).image());
        bool ok = is_torsion(coker.module, ann_k);
        json witness{{"cokernel_order", coker.module->order()}};
        push(ok ? CheckRecord::pass("tau_cokernel_torsion", base_hyps, witness)
                : CheckRecord::fail("tau_cokernel_torsion", base_hyps, witness));
    } else {
        push(CheckRecord::skipped("tau_cokernel_torsion", base_hyps,
                                  "requires faithful + secondful"));
    }

    // O(N,M)(U) is the ideal transform D_annK(N), uniquely over tau/eta.
    if (faithful && secondful) {
        IdealTransform it = ideal_transform(coefficient, ann_k, guards);
        ModuleMap tau_u = sheaf.tau(u_index);
        std::vector<std::pair<int, int>> pinned;
        for (int n = 0; n < coefficient->order(); ++n) pinned.emplace_back(tau_u(n), it.eta(n));
        auto candidates = extend_homs(sec_u.module, it.transform, pinned, guards);
        bool unique = candidates.size() == 1;
        bool iso = unique && ModuleMap(sec_u.module, it.transform, candidates[0]).is_bijective();
        json witness{{"sections_order", sec_u.module->order()},
                     {"transform_order", it.transform->order()},
                     {"triangle_maps", (int)candidates.size()}};
        push(unique && iso ? CheckRecord::pass("transform_iso", base_hyps, witness)
                           : CheckRecord::fail("transform_iso", base_hyps, witness));
    } else {
        push(CheckRecord::skipped("transform_iso", base_hyps, "requires faithful + secondful"));
    }

    // Every section over U is a patchwork of fractions m_i/s_i with
    // s_i in ann K and U covered by the Y_{s_i}.
    if (secondful) {
        json hyps{{"noetherian", true}, {"secondful", true}};
        bool ok = true;
        int first_bad = -1;
        for (int f = 0; f < sec_u.module->order() && ok; ++f) {
            Bitset covered(topo.point_count());
            for (int s : ann_k.elements().elements()) {
                const Bitset& ys = topo.basic_open(s);
                if (ys.none()) continue;
                if (!ys.subset_of(sec_u.points)) {
                    ok = false;
                    break;
                }
                std::vector<int> positions;
                for (int slot : sheaf.space().slots_of(ys))
                    positions.push_back(sec_u.slot_position(slot));
                for (int mm = 0; mm < coefficient->order(); ++mm) {
                    bool constant = true;
                    for (int pos : positions) {
                        const auto& loc = sheaf.space().slot_local[sec_u.slots[pos]];
                        if (sec_u.families[f][pos] != loc.fraction(mm, s)) {
                            constant = false;
                            break;
                        }
                    }
                    if (constant) {
                        covered |= ys;
                        break;
                    }
                }
            }
            if (covered != sec_u.points) {
                ok = false;
                first_bad = f;
            }
        }
        push(ok ? CheckRecord::pass("covering_fractions", hyps)
                : CheckRecord::fail("covering_fractions", hyps, json{{"section", first_bad}}));
    } else {
        json hyps{{"noetherian", true}, {"secondful", false}};
        push(CheckRecord::skipped("covering_fractions", hyps, "requires secondful"));
    }

    // Corollary block: sections with torsion coefficients.
    if (faithful && secondful) {
        TorsionSubmodule gamma = torsion_submodule(coefficient, ann_k);

        {
            ModulePtr gamma_mod = gamma.elements.as_module().module;
            Sheaf sg = build_sheaf(topo, gamma_mod, guards);
            int order = sg.sections(u_index).module->order();
            json witness{{"order", order}};
            push(order == 1
                     ? CheckRecord::pass("torsion_coefficient_sections_vanish", base_hyps, witness)
                     : CheckRecord::fail("torsion_coefficient_sections_vanish", base_hyps, witness));
        }
        {
            QuotientModule nq = quotient(coefficient, gamma.elements);
            Sheaf sq = build_sheaf(topo, nq.module, guards);
            bool ok = modules_isomorphic(sec_u.module, sq.sections(u_index).module, guards);
            json witness{{"orders",
                          json::array({sec_u.module->order(), sq.sections(u_index).module->order()})}};
            push(ok ? CheckRecord::pass("torsion_quotient_sections_iso", base_hyps, witness)
                    : CheckRecord::fail("torsion_quotient_sections_iso", base_hyps, witness));
        }
        {
            Sheaf sc = build_sheaf(topo, sec_u.module, guards);
            bool ok = modules_isomorphic(sec_u.module, sc.sections(u_index).module, guards);
            json witness{{"orders",
                          json::array({sec_u.module->order(), sc.sections(u_index).module->order()})}};
            push(ok ? CheckRecord::pass("section_module_idempotent", base_hyps, witness)
                    : CheckRecord::fail("section_module_idempotent", base_hyps, witness));
        }
        if (gamma.elements.is_full()) {
            json hyps = base_hyps;
            hyps["coefficient_is_torsion"] = true;
            int order = sec_u.module->order();
            push(order == 1 ? CheckRecord::pass("torsion_module_sections_vanish", hyps)
                            : CheckRecord::fail("torsion_module_sections_vanish", hyps,
                                                json{{"order", order}}));
        } else {
            json hyps = base_hyps;
            hyps["coefficient_is_torsion"] = false;
            push(CheckRecord::skipped("torsion_module_sections_vanish", hyps,
                                      "coefficient is not annK-torsion"));
        }
    } else {
        for (const char* name : {"torsion_coefficient_sections_vanish",
                                 "torsion_quotient_sections_iso", "section_module_idempotent",
                                 "torsion_module_sections_vanish"})
            push(CheckRecord::skipped(name, base_hyps, "requires faithful + secondful"));
    }

    // O(N,M)(Y_f) is N_f via the constant-fraction map, for every f.
    {
        json hyps{{"faithful", faithful}, {"secondful", secondful}};
        if (faithful && secondful) {
            bool ok = true;
            json witness = json::array();
            for (int f = 0; f < m->ring()->order() && ok; ++f) {
                LocalizedModule loc = localize_at_element(coefficient, f);
                int yf = sheaf.space().index_of_open(topo.basic_open(f));
                const SectionModule& sf = sheaf.sections(yf);

                std::vector<int> values(loc.result->order(), -1);
                for (int x = 0; x < loc.result->order(); ++x) {
                    std::vector<int> fam(sf.slots.size());
                    for (size_t s = 0; s < sf.slots.size(); ++s)
                        fam[s] = sheaf.space().slot_local[sf.slots[s]].canonical(loc.rep[x]);
                    values[x] = sf.index_of(fam);
                }
                bool defined = std::all_of(values.begin(), values.end(), [](int v) { return v >= 0; });
                bool iso = false;
                if (defined) iso = ModuleMap(loc.result, sf.module, values).is_bijective();

                // Spot-check: a/f^e maps to the constant-fraction family.
                bool constant_ok = true;
                for (int a = 0; a < coefficient->order() && constant_ok && iso; ++a)
                    for (int e = 0; e <= 2 && constant_ok; ++e) {
                        int t = m->ring()->pow(f, e);
                        int x = loc.fraction(a, t);
                        const auto& fam = sf.families[values[x]];
                        for (size_t s = 0; s < sf.slots.size(); ++s)
                            if (fam[s] != sheaf.space().slot_local[sf.slots[s]].fraction(a, t)) {
                                constant_ok = false;
                                break;
                            }
                    }

                bool this_ok = defined && iso && constant_ok;
                ok = ok && this_ok;
                witness.push_back(json{{"f", m->ring()->element_name(f)},
                                       {"localization_order", loc.result->order()},
                                       {"sections_order", sf.module->order()},
                                       {"isomorphic", this_ok}});
            }
            push(ok ? CheckRecord::pass("basic_open_sections", hyps, json{{"per_element", witness}})
                    : CheckRecord::fail("basic_open_sections", hyps, json{{"per_element", witness}}));
        } else {
            push(CheckRecord::skipped("basic_open_sections", hyps, "requires faithful + secondful"));
        }
    }

    // Global sections of a free coefficient are free of the same rank.
    {
        json hyps = base_hyps;
        int rank = -1;
        long long power = 1;
        for (int kk = 0; kk <= 8; ++kk) {
            if (power == coefficient->order()) {
                rank = kk;
                break;
            }
            power *= m->ring()->order();
            if (power > coefficient->order()) break;
        }
        ModulePtr free_model;
        if (rank == 0) {
            free_model = FiniteModule::zero_module(m->ring());
        } else if (rank > 0) {
            free_model = FiniteModule::natural(m->ring());
            for (int i = 1; i < rank; ++i)
                free_model = direct_sum(free_model, FiniteModule::natural(m->ring())).module;
        }
        bool is_free = rank >= 0 && free_model && modules_isomorphic(coefficient, free_model, guards);
        hyps["coefficient_free"] = is_free;
        if (!(faithful && secondful)) {
            push(CheckRecord::skipped("global_sections_free", hyps, "requires faithful + secondful"));
        } else if (!is_free) {
            push(CheckRecord::skipped("global_sections_free", hyps, "coefficient is not free"));
        } else {
            const auto& global = sheaf.global_sections().module;
            bool ok = modules_isomorphic(global, free_model, guards);
            json witness{{"rank", rank}, {"global_order", global->order()}};
            push(ok ? CheckRecord::pass("global_sections_free", hyps, witness)
                    : CheckRecord::fail("global_sections_free", hyps, witness));
        }
    }

    // V^s((0 : sum R s_i^n)) = V^s((0 : sum R s_i)) for tuples of size <= 2.
    {
        json hyps{{"noetherian", true}};
        bool ok = true;
        std::string bad;
        const auto& ring = m->ring();
        auto check_tuple = [&](const std::vector<int>& tuple) {
            Bitset base = topo.v_s(colon_submodule(m, Ideal::span(ring, tuple)));
            for (int n = 2; n <= 3 && ok; ++n) {
                std::vector<int> powered;
                for (int s : tuple) powered.push_back(ring->pow(s, n));
                if (topo.v_s(colon_submodule(m, Ideal::span(ring, powered))) != base) {
                    ok = false;
                    bad = "tuple size " + std::to_string(tuple.size()) + ", n = " + std::to_string(n);
                }
            }
        };
        for (int s1 = 0; s1 < ring->order() && ok; ++s1) {
            check_tuple({s1});
            for (int s2 = s1; s2 < ring->order() && ok; ++s2) check_tuple({s1, s2});
        }
        push(ok ? CheckRecord::pass("colon_power_invariance", hyps)
                : CheckRecord::fail("colon_power_invariance", hyps, json{{"witness", bad}}));
    }

    // When ann K is principal, the sections over U are a localization of N.
    {
        json hyps = base_hyps;
        auto gen = ann_k.principal_generator();
        hyps["annK_principal"] = gen.has_value();
        if (!(faithful && secondful)) {
            push(CheckRecord::skipped("principal_ideal_localization", hyps,
                                      "requires faithful + secondful"));
        } else if (!gen) {
            push(CheckRecord::skipped("principal_ideal_localization", hyps, "ann K is not principal"));
        } else {
            LocalizedModule loc = localize_at_element(coefficient, *gen);
            bool ok = modules_isomorphic(sec_u.module, loc.result, guards);
            json witness{{"generator", m->ring()->element_name(*gen)},
                         {"sections_order", sec_u.module->order()},
                         {"localization_order", loc.result->order()}};
            push(ok ? CheckRecord::pass("principal_ideal_localization", hyps, witness)
                    : CheckRecord::fail("principal_ideal_localization", hyps, witness));
        }
    }

    return out;
}

}  // namespace secsheaf
