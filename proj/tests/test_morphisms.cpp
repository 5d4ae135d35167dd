#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secsheaf/errors.hpp"
#include "secsheaf/morphisms.hpp"
#include "secsheaf/scheme.hpp"

using namespace secsheaf;

namespace {
const RingPtr z6 = FiniteRing::zmod(6);
const RingPtr z2 = FiniteRing::zmod(2);
const RingPtr z3 = FiniteRing::zmod(3);
const RingPtr z4 = FiniteRing::zmod(4);

DualTopology topo_of(const ModulePtr& m) {
    return DualTopology::compute(SecondSpectrum::compute(m));
}

std::vector<int> scaling(const ModulePtr& m, int c) {
    std::vector<int> v(m->order());
    for (int i = 0; i < m->order(); ++i) v[i] = m->act(c, i);
    return v;
}
}  // namespace

TEST_CASE("identity and zero induce the expected sheaf morphisms") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo = topo_of(m);
    Sheaf sheaf(dual_section_space(topo, m));

    auto ident = induced_sheaf_morphism(sheaf, sheaf, ModuleMap::identity(m));
    CHECK(ident.clean());
    CHECK(ident.all_components_iso);
    for (const auto& c : ident.components) CHECK(c == ModuleMap::identity(c.source()));

    auto zero = induced_sheaf_morphism(sheaf, sheaf, ModuleMap::zero_map(m, m));
    CHECK(zero.clean());
    for (const auto& c : zero.components)
        for (int f = 0; f < c.source()->order(); ++f) CHECK(c(f) == c.target()->zero_elem());
}

TEST_CASE("multiplication by a unit induces isomorphisms on all opens") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo = topo_of(m);
    Sheaf sheaf(dual_section_space(topo, m));

    auto by5 = induced_sheaf_morphism(sheaf, sheaf, ModuleMap(m, m, scaling(m, 5)));
    CHECK(by5.clean());
    CHECK(by5.all_components_iso);

    // A non-iso map does not transfer as one.
    auto by2 = induced_sheaf_morphism(sheaf, sheaf, ModuleMap(m, m, scaling(m, 2)));
    CHECK(by2.clean());
    CHECK(!by2.all_components_iso);
}

TEST_CASE("induced morphisms respect composition") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo = topo_of(m);
    auto k = FiniteModule::cyclic_product(z6, {2});
    auto l = FiniteModule::natural(z6);

    Sheaf sk(dual_section_space(topo, k));
    Sheaf sl(dual_section_space(topo, l));

    // phi: Z/2 -> Z/6, 1 -> 3; psi: multiplication by 5 on Z/6.
    ModuleMap phi(k, l, {0, 3});
    ModuleMap psi(l, l, scaling(l, 5));
    auto f = induced_sheaf_morphism(sk, sl, phi);
    auto g = induced_sheaf_morphism(sl, sl, psi);
    auto gf = induced_sheaf_morphism(sk, sl, psi.compose_after(phi));
    REQUIRE(f.clean());
    REQUIRE(g.clean());
    REQUIRE(gf.clean());
    for (size_t u = 0; u < f.components.size(); ++u)
        CHECK(gf.components[u] == g.components[u].compose_after(f.components[u]));
}

TEST_CASE("scheme verification on Z/6") {
    DualTopology topo = topo_of(FiniteModule::natural(z6));
    SchemeResult res = verify_scheme(topo);
    CHECK(res.hypotheses_hold);
    CHECK(res.clean());
    // Two-point discrete scheme: stalk and section checks per basic open.
    bool saw_sections = false, saw_stalks = false;
    for (const auto& r : res.records) {
        if (r.check.rfind("scheme_sections_iso", 0) == 0) saw_sections = true;
        if (r.check.rfind("scheme_stalks_local", 0) == 0) saw_stalks = true;
    }
    CHECK(saw_sections);
    CHECK(saw_stalks);
}

TEST_CASE("scheme verification on Z/4: one point with stalk ring Z/4") {
    auto m = FiniteModule::natural(z4);
    DualTopology topo = topo_of(m);
    REQUIRE(topo.point_count() == 1);
    SchemeResult res = verify_scheme(topo);
    CHECK(res.hypotheses_hold);
    CHECK(res.clean());

    Sheaf sheaf(dual_section_space(topo, m));
    StalkInfo st = sheaf.stalk(0);
    CHECK(st.comparison_ok);
    CHECK(st.value->order() == 4);
}

TEST_CASE("scheme verification is skipped without T0") {
    DualTopology topo = topo_of(FiniteModule::cyclic_product(z2, {2, 2}));
    SchemeResult res = verify_scheme(topo);
    CHECK(!res.hypotheses_hold);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].status == "skipped");
    CHECK(res.records[0].reason.find("T_0") != std::string::npos);
}

TEST_CASE("submodule inclusion induces a morphism of locally ringed spaces") {
    auto n = FiniteModule::natural(z6);
    auto standalone = Submodule::span(n, {3}).as_module();
    DualTopology topo_m = topo_of(standalone.module);
    DualTopology topo_n = topo_of(n);
    REQUIRE(topo_m.point_count() == 1);
    REQUIRE(topo_n.point_count() == 2);

    MorphismResult res = mono_induced_checks(topo_m, topo_n, standalone.inclusion);
    CHECK(res.clean());
}

TEST_CASE("identity induces the identity morphism") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo_a = topo_of(m);
    DualTopology topo_b = topo_of(m);
    MorphismResult res = mono_induced_checks(topo_a, topo_b, ModuleMap::identity(m));
    CHECK(res.clean());
}

TEST_CASE("coordinate inclusion into the F2 plane") {
    auto plane = FiniteModule::cyclic_product(z2, {2, 2});
    auto line = FiniteModule::cyclic_product(z2, {2});
    // x -> (x, 0): element (a,b) of the plane is encoded as 2a + b.
    ModuleMap phi(line, plane, {0, 2});
    DualTopology topo_m = topo_of(line);
    DualTopology topo_n = topo_of(plane);
    REQUIRE(topo_m.point_count() == 1);
    REQUIRE(topo_n.point_count() == 4);
    CHECK(mono_induced_checks(topo_m, topo_n, phi).clean());
}

TEST_CASE("non-injective maps are rejected") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo_a = topo_of(m);
    DualTopology topo_b = topo_of(m);
    CHECK_THROWS_AS(mono_induced_checks(topo_a, topo_b, ModuleMap(m, m, scaling(m, 2))),
                    PreconditionError);
}

TEST_CASE("reduction Z/6 -> Z/2 induces a locally ringed morphism") {
    RingHom phi = RingHom::zmod_reduction(z6, z2);
    auto m = FiniteModule::natural(z6);
    auto n = FiniteModule::natural(z2);
    DualTopology topo_m = topo_of(m);
    DualTopology topo_n = topo_of(n);

    MorphismResult res = ring_hom_induced_checks(phi, topo_m, topo_n, FiniteModule::natural(z6),
                                                 FiniteModule::natural(z2), phi.values());
    CHECK(res.clean());
    bool saw_local = false;
    for (const auto& r : res.records)
        if (r.check == "stalk_maps_local") saw_local = true;
    CHECK(saw_local);

    // The single point of Spec^s(Z/2) contracts to ann = (2), the point {0,3}.
    // Verified indirectly: the morphism ran with a unique contraction target.
    REQUIRE(topo_n.point_count() == 1);
    Ideal contracted = phi.preimage(topo_n.spectrum().point(0).annihilator);
    CHECK(contracted == Ideal::principal(z6, 2));
}

TEST_CASE("reduction Z/6 -> Z/3 gives an isomorphic stalk map") {
    RingHom phi = RingHom::zmod_reduction(z6, z3);
    auto m = FiniteModule::natural(z6);
    auto n = FiniteModule::natural(z3);
    DualTopology topo_m = topo_of(m);
    DualTopology topo_n = topo_of(n);
    MorphismResult res = ring_hom_induced_checks(phi, topo_m, topo_n, FiniteModule::natural(z6),
                                                 FiniteModule::natural(z3), phi.values());
    CHECK(res.clean());

    // (Z/6)_(3) has order 3; the induced map to (Z/3)_(0) = Z/3 is bijective.
    LocalizedModule loc = localize_at_prime(m, Ideal::principal(z6, 3));
    CHECK(loc.result->order() == 3);
}

TEST_CASE("identity ring hom induces the identity") {
    RingHom phi = RingHom::identity(z6);
    auto m = FiniteModule::natural(z6);
    DualTopology topo_a = topo_of(m);
    DualTopology topo_b = topo_of(m);
    MorphismResult res = ring_hom_induced_checks(phi, topo_a, topo_b, m, m, phi.values());
    CHECK(res.clean());
}

TEST_CASE("ring hom hypotheses are enforced by name") {
    RingHom phi = RingHom::zmod_reduction(z6, z2);
    // The F2-plane analogue over Z/6... a non-T0 source M: (Z/2)^2 over Z/6
    auto m = FiniteModule::cyclic_product(z6, {2, 2});
    auto n = FiniteModule::natural(z2);
    DualTopology topo_m = topo_of(m);
    DualTopology topo_n = topo_of(n);
    try {
        ring_hom_induced_checks(phi, topo_m, topo_n, FiniteModule::natural(z6), n, phi.values());
        CHECK(false);
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("T_0") != std::string::npos);
    }
}
