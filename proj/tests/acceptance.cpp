// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>

#include "secsheaf/errors.hpp"
#include "secsheaf/generator.hpp"
#include "secsheaf/morphisms.hpp"
#include "secsheaf/runner.hpp"
#include "secsheaf/scheme.hpp"
#include "secsheaf/theorems.hpp"

using namespace secsheaf;

namespace {

int failures = 0;

void report(int criterion, bool passed, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", passed ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!passed) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json canonical_doc() {
    return json::parse(R"({
      "ring": {"kind": "zmod", "n": 6},
      "modules": {
        "M": {"kind": "natural"},
        "N": {"kind": "natural"},
        "K": {"kind": "submodule", "of": "M", "generators": [3]}
      }
    })");
}

// Criterion 1: the canonical Z/6 instance, every value exact.
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    };

    try {
        auto ring = FiniteRing::zmod(6);
        auto m = FiniteModule::natural(ring);
        DualTopology topo = DualTopology::compute(SecondSpectrum::compute(m));
        const auto& spec = topo.spectrum();

        expect(spec.point_count() == 2, "expected 2 spectrum points");
        expect(spec.point(0).annihilator == Ideal::principal(ring, 2), "first annihilator");
        expect(spec.point(1).annihilator == Ideal::principal(ring, 3), "second annihilator");

        // Discrete topology: all four subsets open.
        expect(topo.open_count() == 4, "topology is not discrete");

        T0Report t0 = topo.t0();
        expect(t0.psi_injective && t0.vs_separates && t0.fibers_singleton && t0.topologically_t0,
               "T_0 criteria");

        Sheaf sheaf(dual_section_space(topo, m));
        std::vector<int> stalk_orders;
        for (int p = 0; p < 2; ++p) {
            StalkInfo st = sheaf.stalk(p);
            expect(st.comparison_ok, "stalk comparison");
            stalk_orders.push_back(st.value->order());
        }
        std::sort(stalk_orders.begin(), stalk_orders.end());
        expect(stalk_orders == std::vector<int>{2, 3}, "stalk orders");

        const auto& global = sheaf.global_sections();
        expect(global.module->order() == 6, "global sections order");
        expect(modules_isomorphic(global.module, m), "global sections isomorphic to N");

        Submodule k = Submodule::span(m, {3});
        int u = sheaf.space().index_of_open(topo.v_s(k).complement());
        expect(sheaf.tau(u).kernel() == Submodule::span(m, {3}), "ker tau equals {0,3}");
        expect(torsion_submodule(m, Ideal::principal(ring, 2)).elements == Submodule::span(m, {3}),
               "torsion submodule equals {0,3}");

        IdealTransform it = ideal_transform(m, Ideal::principal(ring, 2));
        expect(sheaf.sections(u).module->order() == 3, "sections over U order 3");
        expect(it.transform->order() == 3, "ideal transform order 3");
        expect(modules_isomorphic(sheaf.sections(u).module, it.transform),
               "sections over U isomorphic to the ideal transform");

        TheoremSuiteResult suite = theorem_suite(topo, m, k);
        expect(suite.clean(), "theorem suite clean");
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }

    double t = seconds_since(start);
    expect(t < 5.0, "runtime bound");
    char buf[160];
    std::snprintf(buf, sizeof(buf), "canonical Z/6 instance (%.2fs)%s%s", t, ok ? "" : " - ",
                  why.c_str());
    report(1, ok, buf);
}

// Criterion 2: the non-T_0 instance over F2.
void criterion_2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    };

    try {
        auto ring = FiniteRing::zmod(2);
        auto m = FiniteModule::cyclic_product(ring, {2, 2});
        auto n = FiniteModule::natural(ring);
        DualTopology topo = DualTopology::compute(SecondSpectrum::compute(m));

        expect(topo.point_count() == 4, "expected 4 spectrum points");
        expect(topo.spectrum().support_primes().size() == 1, "expected one support prime");
        expect(topo.open_count() == 2, "topology should be indiscrete");

        T0Report t0 = topo.t0();  // agreement enforced internally
        expect(!t0.psi_injective && !t0.vs_separates && !t0.fibers_singleton &&
                   !t0.topologically_t0,
               "all T_0 criteria should answer false");

        Sheaf sheaf(dual_section_space(topo, n));
        expect(sheaf.verify_axioms().all_passed(), "sheaf axioms");
        expect(modules_isomorphic(sheaf.global_sections().module, n),
               "global sections isomorphic to N");
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }

    double t = seconds_since(start);
    expect(t < 5.0, "runtime bound");
    char buf[160];
    std::snprintf(buf, sizeof(buf), "non-T0 F2-plane instance (%.2fs)%s%s", t, ok ? "" : " - ",
                  why.c_str());
    report(2, ok, buf);
}

// Criteria 3, 4 and 5 share one pass over 200 seeded instances.
void criteria_3_4_5() {
    auto start = std::chrono::steady_clock::now();
    GeneratorOptions opt;
    opt.max_ring = 12;
    opt.max_module = 36;

    int suite_failures = 0, skips = 0, passes = 0;
    int cross_validated = 0, single_path = 0;
    int scheme_eligible = 0, scheme_failures = 0;
    std::string first_failure;

    for (uint64_t seed = 1; seed <= 200; ++seed) {
        try {
            RandomInstance inst = random_instance(seed, opt);
            DualTopology topo = DualTopology::compute(SecondSpectrum::compute(inst.m));

            TheoremSuiteResult suite = theorem_suite(topo, inst.n, inst.k());
            passes += suite.passed;
            skips += suite.skipped;
            if (!suite.clean()) {
                ++suite_failures;
                if (first_failure.empty()) {
                    for (const auto& r : suite.records)
                        if (r.status == "fail") {
                            first_failure = "seed " + std::to_string(seed) + ": " + r.check;
                            break;
                        }
                }
            }

            Sheaf sheaf(dual_section_space(topo, inst.n));
            for (int u = 0; u < sheaf.open_count(); ++u) {
                const auto& sm = sheaf.sections(u);
                if (sm.brute_ran && sm.constructive_ran)
                    ++cross_validated;
                else
                    ++single_path;
            }

            if (topo.spectrum().is_faithful() && topo.spectrum().is_secondful() &&
                topo.t0().t0()) {
                ++scheme_eligible;
                SchemeResult sr = verify_scheme(topo);
                if (!sr.clean()) {
                    ++scheme_failures;
                    if (first_failure.empty())
                        first_failure = "seed " + std::to_string(seed) + ": scheme";
                }
            }
        } catch (const std::exception& e) {
            ++suite_failures;
            if (first_failure.empty())
                first_failure = "seed " + std::to_string(seed) + ": " + e.what();
        }
    }

    double t = seconds_since(start);
    char buf[240];
    bool c3 = suite_failures == 0 && t < 600.0;
    std::snprintf(buf, sizeof(buf),
                  "200 randomized instances, %d checks passed, %d hypothesis-skips logged, "
                  "%d failures (%.1fs)%s%s",
                  passes, skips, suite_failures, t, first_failure.empty() ? "" : " - ",
                  first_failure.c_str());
    report(3, c3, buf);

    std::snprintf(buf, sizeof(buf),
                  "section paths cross-validated on %d opens (%d constructive-only), "
                  "0 discrepancies",
                  cross_validated, single_path);
    report(4, suite_failures == 0 && cross_validated > 0, buf);

    std::snprintf(buf, sizeof(buf),
                  "scheme verified on %d eligible instances, %d failures", scheme_eligible,
                  scheme_failures);
    report(5, scheme_failures == 0 && scheme_eligible > 0, buf);
}

// Criterion 6: the morphism suite.
void criterion_6() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    auto below = [&rng](int n) { return (int)(rng() % (uint64_t)n); };

    int failures_here = 0;
    int iso_cases = 0;
    std::string why;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures_here;
            if (why.empty()) why = what;
        }
    };

    GeneratorOptions small;
    small.max_ring = 9;
    small.max_module = 16;
    small.allow_product_rings = false;

    // Induced sheaf morphisms from 50 random module maps.
    for (int i = 0; i < 50; ++i) {
        try {
            RandomInstance inst = random_instance(1000 + i, small);
            DualTopology topo = DualTopology::compute(SecondSpectrum::compute(inst.m));
            ModulePtr k = inst.n;
            ModulePtr l = i % 5 == 0 ? k : random_module(2000 + i, inst.ring, 16);
            Sheaf sk(dual_section_space(topo, k));
            Sheaf sl(dual_section_space(topo, l));
            std::vector<int> values;
            if (i % 5 == 0) {
                values = ModuleMap::identity(k).values();  // guaranteed isomorphism case
            } else {
                auto homs = enumerate_homs(k, l);
                values = homs[below((int)homs.size())];
            }
            ModuleMap phi(k, l, values);
            auto induced = induced_sheaf_morphism(sk, sl, phi);
            note(induced.clean(), "induced morphism checks (map " + std::to_string(i) + ")");
            if (phi.is_bijective()) {
                ++iso_cases;
                note(induced.all_components_iso, "iso transfer (map " + std::to_string(i) + ")");
            }
        } catch (const std::exception& e) {
            note(false, std::string("module-hom exception: ") + e.what());
        }
    }

    // Locally ringed morphisms from 20 random monomorphisms.
    for (int i = 0; i < 20; ++i) {
        try {
            RandomInstance inst = random_instance(3000 + i, small);
            ModulePtr n = inst.m;
            auto subs = submodules(n);
            StandaloneSubmodule sub = subs[below((int)subs.size())].as_module();
            DualTopology topo_m = DualTopology::compute(SecondSpectrum::compute(sub.module));
            DualTopology topo_n = DualTopology::compute(SecondSpectrum::compute(n));
            note(mono_induced_checks(topo_m, topo_n, sub.inclusion).clean(),
                 "mono checks (draw " + std::to_string(i) + ")");
        } catch (const std::exception& e) {
            note(false, std::string("mono exception: ") + e.what());
        }
    }

    // Pushforward morphisms from 10 surjective reductions Z/n -> Z/m.
    for (int i = 0; i < 10; ++i) {
        try {
            int n = 2 + below(11);
            std::vector<int> divs;
            for (int m = 2; m <= n; ++m)
                if (n % m == 0) divs.push_back(m);
            int m = divs[below((int)divs.size())];
            auto rn = FiniteRing::zmod(n);
            auto rm = FiniteRing::zmod(m);
            RingHom phi = RingHom::zmod_reduction(rn, rm);
            DualTopology topo_m = DualTopology::compute(SecondSpectrum::compute(FiniteModule::natural(rn)));
            DualTopology topo_n = DualTopology::compute(SecondSpectrum::compute(FiniteModule::natural(rm)));
            note(ring_hom_induced_checks(phi, topo_m, topo_n, FiniteModule::natural(rn),
                                         FiniteModule::natural(rm), phi.values())
                     .clean(),
                 "ring-hom checks Z/" + std::to_string(n) + " -> Z/" + std::to_string(m));
        } catch (const std::exception& e) {
            note(false, std::string("ring-hom exception: ") + e.what());
        }
    }

    double t = seconds_since(start);
    bool ok = failures_here == 0 && iso_cases > 0 && t < 300.0;
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "50 module maps (%d iso cases), 20 monomorphisms, 10 ring surjections, "
                  "%d failures (%.1fs)%s%s",
                  iso_cases, failures_here, t, why.empty() ? "" : " - ", why.c_str());
    report(6, ok, buf);
}

// Criterion 7: byte-identical reports.
void criterion_7() {
    bool ok = true;
    std::string why;
    try {
        for (const char* cmd : {"spectrum", "topology", "verify", "scheme"}) {
            RunOutcome a = run_command(cmd, canonical_doc());
            RunOutcome b = run_command(cmd, canonical_doc());
            if (a.report.dump(2) != b.report.dump(2)) {
                ok = false;
                why = std::string("command ") + cmd;
            }
        }
        GeneratorOptions opt;
        opt.max_ring = 10;
        opt.max_module = 24;
        json doc = generate_document(42, opt);
        if (doc.dump() != generate_document(42, opt).dump()) {
            ok = false;
            why = "generator not reproducible";
        }
        RunOutcome a = run_command("verify", doc);
        RunOutcome b = run_command("verify", doc);
        if (a.report.dump(2) != b.report.dump(2)) {
            ok = false;
            why = "verify on generated document";
        }
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    report(7, ok, "byte-identical reports across consecutive runs" + (ok ? "" : " - " + why));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_4_5();
    criterion_6();
    criterion_7();
    return failures == 0 ? 0 : 1;
}
