#include "secsheaf/runner.hpp"

#include <chrono>

#include "secsheaf/errors.hpp"
#include "secsheaf/morphisms.hpp"
#include "secsheaf/scheme.hpp"
#include "secsheaf/theorems.hpp"

namespace secsheaf {

namespace {

json point_json(const SecondSpectrum& spec, int i) {
    const auto& pt = spec.point(i);
    return json{{"submodule", pt.submodule.name()},
                {"order", pt.submodule.size()},
                {"annihilator", pt.annihilator.name()}};
}

json spectrum_json(const SecondSpectrum& spec) {
    json points = json::array();
    for (int i = 0; i < spec.point_count(); ++i) points.push_back(point_json(spec, i));
    json primes = json::array();
    for (const auto& p : spec.support_primes()) primes.push_back(p.name());
    return json{{"ring", spec.module()->ring()->description()},
                {"module", spec.module()->description()},
                {"module_order", spec.module()->order()},
                {"points", points},
                {"support_primes", primes},
                {"annihilator", spec.module_annihilator().name()},
                {"faithful", spec.is_faithful()},
                {"secondful", spec.is_secondful()}};
}

json topology_json(const DualTopology& topo) {
    const auto& spec = topo.spectrum();
    json closed = json::array();
    for (const auto& c : topo.closed_sets())
        closed.push_back(json{{"points", c.points.elements()}, {"witness", c.witness.name()}});
    json opens = json::array();
    for (int i = 0; i < topo.open_count(); ++i) opens.push_back(topo.open_points(i).elements());
    json basics = json::array();
    for (int r = 0; r < spec.module()->ring()->order(); ++r)
        basics.push_back(json{{"r", spec.module()->ring()->element_name(r)},
                              {"points", topo.basic_open(r).elements()}});

    T0Report t0 = topo.t0();
    CotopReport cotop = topo.cotop();
    BaseReport base = topo.verify_base();
    ContinuityReport cont = topo.natural_map_continuity();
    std::vector<int> subcover;
    bool qc = topo.is_quasi_compact(topo.full_open(), &subcover);

    json j;
    j["closed_sets"] = closed;
    j["opens"] = opens;
    j["basic_opens"] = basics;
    j["t0"] = json{{"psi_injective", t0.psi_injective},
                   {"vs_separates", t0.vs_separates},
                   {"fibers_singleton", t0.fibers_singleton},
                   {"topologically_t0", t0.topologically_t0},
                   {"t0", t0.t0()}};
    j["cotop"] = json{{"cotop", cotop.cotop}, {"family_size", cotop.family_size}};
    j["base_verified"] = base.every_open_is_union_of_basics;
    j["quasi_compact"] = json{{"holds", qc}, {"subcover_size", (int)subcover.size()}};
    j["natural_map"] = json{{"preimages_closed", cont.preimages_closed},
                            {"homeo_hypotheses", cont.homeo_hypotheses},
                            {"basic_opens_homeomorphic",
                             cont.homeo_hypotheses ? json(cont.basic_opens_homeomorphic) : json()},
                            {"skip_reason", cont.skip_reason}};
    return j;
}

std::string family_string(const Sheaf& sheaf, const SectionModule& sm, int f) {
    std::string s = "(";
    for (size_t k = 0; k < sm.slots.size(); ++k) {
        const auto& loc = sheaf.space().slot_local[sm.slots[k]];
        if (k) s += ", ";
        s += sheaf.space().slot_primes[sm.slots[k]].name() + ": " +
             loc.result->element_name(sm.families[f][k]);
    }
    return s + ")";
}

json sections_json(const Sheaf& sheaf) {
    json per_open = json::array();
    for (int u = 0; u < sheaf.open_count(); ++u) {
        const auto& sm = sheaf.sections(u);
        json supp = json::array();
        for (int s : sm.slots) supp.push_back(sheaf.space().slot_primes[s].name());
        json entry{{"open", sm.points.elements()},
                   {"supp", supp},
                   {"order", sm.module->order()},
                   {"paths", sm.brute_ran && sm.constructive_ran
                                 ? "both"
                                 : (sm.constructive_ran ? "constructive" : "brute")}};
        if (sm.module->order() <= 64) {
            json fams = json::array();
            for (int f = 0; f < (int)sm.families.size(); ++f)
                fams.push_back(family_string(sheaf, sm, f));
            entry["families"] = fams;
        }
        per_open.push_back(std::move(entry));
    }
    return json{{"coefficient", sheaf.space().coefficient->description()},
                {"coefficient_order", sheaf.space().coefficient->order()},
                {"per_open", per_open}};
}

json stalks_json(const Sheaf& sheaf, const DualTopology& topo) {
    json arr = json::array();
    for (int p = 0; p < topo.point_count(); ++p) {
        StalkInfo st = sheaf.stalk(p);
        arr.push_back(json{{"point", topo.spectrum().point(p).submodule.name()},
                           {"prime", topo.spectrum().point(p).annihilator.name()},
                           {"minimal_open", sheaf.space().opens[st.minimal_open].elements()},
                           {"stalk_order", st.value->order()},
                           {"localization_order", st.localization->result->order()},
                           {"isomorphic", st.comparison_ok}});
    }
    return arr;
}

json axioms_json(const AxiomReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"axiom", c.axiom}, {"passed", c.passed}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"checks", checks},
                {"covers_checked", rep.covers_checked},
                {"guard_limited", rep.guard_limited},
                {"all_passed", rep.all_passed()}};
}

json cross_validation_json(const Sheaf& sheaf) {
    int both = 0, constructive_only = 0;
    for (int u = 0; u < sheaf.open_count(); ++u) {
        const auto& sm = sheaf.sections(u);
        if (sm.brute_ran && sm.constructive_ran)
            ++both;
        else
            ++constructive_only;
    }
    json j{{"opens_cross_validated", both},
           {"opens_single_path", constructive_only},
           {"discrepancies", 0}};  // a discrepancy raises InternalCheckError instead
    if (constructive_only > 0)
        j["notices"] = json::array({"family cap skipped the brute-force path on " +
                                    std::to_string(constructive_only) + " open(s)"});
    return j;
}

MorphismResult run_morphism_block(const InstanceDocument& doc) {
    const json& mb = doc.morphism;
    if (mb.empty()) throw InputError("/morphism: missing block for the morphism command");
    if (!mb.contains("kind") || !mb["kind"].is_string())
        throw InputError("/morphism/kind: expected a string");
    std::string kind = mb["kind"].get<std::string>();

    auto values_of = [&](const json& j, const std::string& path) {
        if (!j.is_array()) throw InputError(path + ": expected an array of element ids");
        std::vector<int> v;
        for (const auto& x : j) v.push_back(x.get<int>());
        return v;
    };

    if (kind == "module-hom") {
        const auto& m = doc.module_named("M");
        const auto& k = doc.module_named(mb.value("source", "N"));
        const auto& l = doc.module_named(mb.value("target", "N"));
        auto values = values_of(mb.contains("values") ? mb["values"] : json(), "/morphism/values");
        DualTopology topo = DualTopology::compute(SecondSpectrum::compute(m, doc.guards));
        Sheaf sk(dual_section_space(topo, k), doc.guards);
        Sheaf sl(dual_section_space(topo, l), doc.guards);
        auto induced = induced_sheaf_morphism(sk, sl, ModuleMap(k, l, values), doc.guards);
        return MorphismResult{induced.records};
    }
    if (kind == "module-mono") {
        const auto& src = doc.module_named(mb.value("source", "M"));
        const auto& tgt = doc.module_named(mb.value("target", "N"));
        auto values = values_of(mb.contains("values") ? mb["values"] : json(), "/morphism/values");
        DualTopology topo_m = DualTopology::compute(SecondSpectrum::compute(src, doc.guards));
        DualTopology topo_n = DualTopology::compute(SecondSpectrum::compute(tgt, doc.guards));
        return mono_induced_checks(topo_m, topo_n, ModuleMap(src, tgt, values), doc.guards);
    }
    if (kind == "ring-hom") {
        if (!mb.contains("target_ring")) throw InputError("/morphism: ring-hom needs \"target_ring\"");
        RingPtr s = parse_ring(mb["target_ring"], "/morphism/target_ring");
        auto values = values_of(mb.contains("values") ? mb["values"] : json(), "/morphism/values");
        RingHom phi(doc.ring, s, values);
        const auto& m = doc.module_named("M");
        ModulePtr n = mb.contains("N") ? parse_module(mb["N"], s, "/morphism/N")
                                       : FiniteModule::natural(s);
        ModulePtr a = mb.contains("A") ? doc.module_named(mb["A"].get<std::string>())
                                       : FiniteModule::natural(doc.ring);
        ModulePtr b = mb.contains("B") ? parse_module(mb["B"], s, "/morphism/B")
                                       : FiniteModule::natural(s);
        std::vector<int> delta =
            mb.contains("delta") ? values_of(mb["delta"], "/morphism/delta") : values;
        DualTopology topo_m = DualTopology::compute(SecondSpectrum::compute(m, doc.guards));
        DualTopology topo_n = DualTopology::compute(SecondSpectrum::compute(n, doc.guards));
        return ring_hom_induced_checks(phi, topo_m, topo_n, a, b, delta, doc.guards);
    }
    throw InputError("/morphism/kind: unknown kind \"" + kind + "\"");
}

}  // namespace

RunOutcome run_command(const std::string& command, const json& document, bool include_timings) {
    RunOutcome out;
    json& rep = out.report;
    rep["tool"] = "secsheaf";
    rep["version"] = kToolVersion;
    rep["command"] = command;

    auto started = std::chrono::steady_clock::now();
    std::vector<CheckRecord> checks;
    json results = json::object();
    std::string status = "pass";

    try {
        InstanceDocument doc = parse_document(document);
        rep["instance"] = doc.raw;
        rep["guards"] = json{{"ring", doc.guards.ring_cap},
                             {"submodules", doc.guards.submodule_cap},
                             {"hom", doc.guards.hom_cap},
                             {"families", doc.guards.family_cap},
                             {"covers", doc.guards.cover_cap}};

        if (command == "spectrum") {
            auto spec = SecondSpectrum::compute(doc.module_named("M"), doc.guards);
            results = spectrum_json(spec);
        } else if (command == "topology") {
            auto topo = DualTopology::compute(SecondSpectrum::compute(doc.module_named("M"), doc.guards));
            results["spectrum"] = spectrum_json(topo.spectrum());
            results["topology"] = topology_json(topo);
        } else if (command == "sections") {
            auto topo = DualTopology::compute(SecondSpectrum::compute(doc.module_named("M"), doc.guards));
            Sheaf sheaf(dual_section_space(topo, doc.module_named("N")), doc.guards);
            results["sections"] = sections_json(sheaf);
            results["cross_validation"] = cross_validation_json(sheaf);
        } else if (command == "stalks") {
            auto topo = DualTopology::compute(SecondSpectrum::compute(doc.module_named("M"), doc.guards));
            Sheaf sheaf(dual_section_space(topo, doc.module_named("N")), doc.guards);
            results["stalks"] = stalks_json(sheaf, topo);
            for (int p = 0; p < topo.point_count(); ++p)
                if (!sheaf.stalk(p).comparison_ok) status = "fail";
        } else if (command == "verify") {
            const auto& m = doc.module_named("M");
            const auto& n = doc.module_named("N");
            const Submodule& k = doc.submodule_named("K");
            auto topo = DualTopology::compute(SecondSpectrum::compute(m, doc.guards));
            results["spectrum"] = spectrum_json(topo.spectrum());
            results["topology"] = topology_json(topo);
            Sheaf sheaf(dual_section_space(topo, n), doc.guards);
            results["axioms"] = axioms_json(sheaf.verify_axioms());
            results["cross_validation"] = cross_validation_json(sheaf);
            TheoremSuiteResult suite = theorem_suite(topo, n, k, doc.guards);
            checks = suite.records;
            results["suite"] = json{{"passed", suite.passed},
                                    {"failed", suite.failed},
                                    {"skipped", suite.skipped}};
            if (!suite.clean() || !results["axioms"]["all_passed"].get<bool>()) status = "fail";
        } else if (command == "scheme") {
            auto topo = DualTopology::compute(SecondSpectrum::compute(doc.module_named("M"), doc.guards));
            SchemeResult sr = verify_scheme(topo, doc.guards);
            checks = sr.records;
            results["hypotheses_hold"] = sr.hypotheses_hold;
            if (!sr.clean()) status = "fail";
        } else if (command == "morphism") {
            MorphismResult mr = run_morphism_block(doc);
            checks = mr.records;
            if (!mr.clean()) status = "fail";
        } else if (command == "export-dot") {
            auto topo = DualTopology::compute(SecondSpectrum::compute(doc.module_named("M"), doc.guards));
            out.dot = topo.to_dot();
            results["dot"] = out.dot;
        } else {
            throw InputError("unknown command \"" + command + "\"");
        }
    } catch (const InputError& e) {
        rep["error"] = e.what();
        rep["status"] = "error";
        rep["exit_code"] = kExitInputError;
        out.exit_code = kExitInputError;
        return out;
    } catch (const CapacityError& e) {
        rep["error"] = e.what();
        rep["status"] = "guard-tripped";
        rep["exit_code"] = kExitGuardTripped;
        out.exit_code = kExitGuardTripped;
        return out;
    } catch (const InternalCheckError& e) {
        rep["error"] = std::string("internal consistency failure: ") + e.what();
        rep["status"] = "fail";
        rep["exit_code"] = kExitViolation;
        out.exit_code = kExitViolation;
        return out;
    } catch (const Error& e) {
        rep["error"] = e.what();
        rep["status"] = "error";
        rep["exit_code"] = kExitInputError;
        out.exit_code = kExitInputError;
        return out;
    }

    rep["results"] = results;
    if (!checks.empty()) rep["checks"] = records_to_json(checks);
    if (any_failed(checks)) status = "fail";
    rep["status"] = status;
    out.exit_code = status == "pass" ? kExitOk : kExitViolation;
    rep["exit_code"] = out.exit_code;

    if (include_timings) {
        auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        rep["timings"] = json{{"total_ms", elapsed.count()}};
    }
    return out;
}

}  // namespace secsheaf
