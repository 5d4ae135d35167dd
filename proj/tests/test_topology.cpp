#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secsheaf/topology.hpp"

using namespace secsheaf;

namespace {
const RingPtr z6 = FiniteRing::zmod(6);
const RingPtr z2 = FiniteRing::zmod(2);

DualTopology topo_of(const ModulePtr& m) {
    return DualTopology::compute(SecondSpectrum::compute(m));
}
}  // namespace

TEST_CASE("closed sets and opens on the canonical instance") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo = topo_of(m);
    REQUIRE(topo.point_count() == 2);

    // Discrete: four closed sets, four opens.
    CHECK(topo.closed_sets().size() == 4);
    CHECK(topo.open_count() == 4);

    CHECK(topo.v_star(Submodule::zero(m)).none());
    CHECK(topo.v_star(Submodule::full(m)) == Bitset::full(2));

    // V^s({0,2,4}) is the single point {0,2,4}.
    Bitset v = topo.v_s(Submodule::span(m, {2}));
    CHECK(v.count() == 1);
    CHECK(topo.spectrum().point(v.first()).submodule == Submodule::span(m, {2}));
}

TEST_CASE("basic opens") {
    auto m = FiniteModule::natural(z6);
    DualTopology topo = topo_of(m);

    CHECK(topo.basic_open(0).none());                  // Y_0 is empty
    CHECK(topo.basic_open(1) == Bitset::full(2));      // Y_1 is everything
    Bitset y2 = topo.basic_open(2);
    CHECK(y2.count() == 1);
    CHECK(topo.spectrum().point(y2.first()).submodule == Submodule::span(m, {2}));
}

TEST_CASE("the closed family is a closed-set system") {
    for (auto m : {FiniteModule::natural(z6), FiniteModule::cyclic_product(z6, {6, 2}),
                   FiniteModule::cyclic_product(z2, {2, 2})}) {
        DualTopology topo = topo_of(m);
        const auto& closed = topo.closed_sets();
        auto member = [&](const Bitset& pts) {
            for (const auto& c : closed)
                if (c.points == pts) return true;
            return false;
        };
        CHECK(member(Bitset(topo.point_count())));              // empty = V^s*(0)
        CHECK(member(Bitset::full(topo.point_count())));        // X^s = V^s*(M)
        for (const auto& a : closed)
            for (const auto& b : closed) {
                CHECK(member(a.points | b.points));
                CHECK(member(a.points & b.points));
            }
        // Every closed set is reproduced by its witness.
        for (const auto& c : closed) CHECK(topo.v_s(c.witness) == c.points);
    }
}

TEST_CASE("basic opens form a base and intersect multiplicatively") {
    for (auto m : {FiniteModule::natural(z6), FiniteModule::cyclic_product(z2, {2, 2}),
                   FiniteModule::cyclic_product(z6, {6, 2})}) {
        DualTopology topo = topo_of(m);
        CHECK(topo.verify_base().every_open_is_union_of_basics);
        int n = m->ring()->order();
        for (int r = 0; r < n; ++r) {
            for (int t = 0; t < n; ++t)
                CHECK((topo.basic_open(r) & topo.basic_open(t)) ==
                      topo.basic_open(m->ring()->mul(r, t)));
            // Y_{r^k} = Y_r.
            int p = r;
            for (int k = 2; k <= 4; ++k) {
                p = m->ring()->mul(p, r);
                CHECK(topo.basic_open(p) == topo.basic_open(r));
            }
        }
    }
}

TEST_CASE("every open is quasi-compact via a finite basic subcover") {
    auto m = FiniteModule::cyclic_product(z6, {6, 2});
    DualTopology topo = topo_of(m);
    for (int u = 0; u < topo.open_count(); ++u) {
        std::vector<int> subcover;
        CHECK(topo.is_quasi_compact(u, &subcover));
        Bitset acc(topo.point_count());
        for (int r : subcover) acc |= topo.basic_open(r);
        CHECK(acc == topo.open_points(u));
    }
}

TEST_CASE("T0 criteria agree and hold for Z/6") {
    DualTopology topo = topo_of(FiniteModule::natural(z6));
    T0Report rep = topo.t0();
    CHECK(rep.psi_injective);
    CHECK(rep.vs_separates);
    CHECK(rep.fibers_singleton);
    CHECK(rep.topologically_t0);
}

TEST_CASE("T0 criteria agree and fail for the F2 plane") {
    DualTopology topo = topo_of(FiniteModule::cyclic_product(z2, {2, 2}));
    // Indiscrete: only the empty set and everything.
    CHECK(topo.open_count() == 2);
    T0Report rep = topo.t0();
    CHECK(!rep.psi_injective);
    CHECK(!rep.vs_separates);
    CHECK(!rep.fibers_singleton);
    CHECK(!rep.topologically_t0);
}

TEST_CASE("cotop diagnostics") {
    CHECK(topo_of(FiniteModule::natural(z6)).cotop().cotop);
    // The F2 plane is not cotop: the union of two point sets {line1}, {line2}
    // is no V^{s*}(N), since a submodule containing two lines is the plane.
    CotopReport rep = topo_of(FiniteModule::cyclic_product(z2, {2, 2})).cotop();
    CHECK(!rep.cotop);
    CHECK(!rep.witness.empty());
}

TEST_CASE("colon power invariance of closed sets") {
    auto m = FiniteModule::cyclic_product(z6, {6, 2});
    DualTopology topo = topo_of(m);
    const auto& ring = m->ring();
    for (int s1 = 0; s1 < ring->order(); ++s1)
        for (int s2 = s1; s2 < ring->order(); ++s2)
            for (int n = 2; n <= 3; ++n) {
                Ideal base = Ideal::span(ring, {s1, s2});
                Ideal powered = Ideal::span(ring, {ring->pow(s1, n), ring->pow(s2, n)});
                CHECK(topo.v_s(colon_submodule(m, powered)) == topo.v_s(colon_submodule(m, base)));
            }
}

TEST_CASE("natural map continuity and basic-open homeomorphisms") {
    DualTopology topo = topo_of(FiniteModule::natural(z6));
    ContinuityReport rep = topo.natural_map_continuity();
    CHECK(rep.preimages_closed);
    CHECK(rep.homeo_hypotheses);
    CHECK(rep.basic_opens_homeomorphic);

    // psi(Y_2) = D_2 = {(3)}.
    const auto& rs = topo.spectrum().ring_spectrum();
    Bitset y2 = topo.basic_open(2);
    REQUIRE(y2.count() == 1);
    int prime_idx = rs.index_of_prime(topo.spectrum().point(y2.first()).annihilator);
    CHECK(rs.basic_open(2).test(prime_idx));
    CHECK(rs.basic_open(2).count() == 1);
}

TEST_CASE("homeomorphism check is skipped without its hypotheses") {
    DualTopology topo = topo_of(FiniteModule::cyclic_product(z2, {2, 2}));
    ContinuityReport rep = topo.natural_map_continuity();
    CHECK(rep.preimages_closed);
    CHECK(!rep.homeo_hypotheses);
    CHECK(!rep.skip_reason.empty());
}

TEST_CASE("minimal open neighborhoods") {
    DualTopology topo = topo_of(FiniteModule::natural(z6));
    for (int p = 0; p < topo.point_count(); ++p) {
        int u = topo.minimal_open_containing(p);
        CHECK(topo.open_points(u).count() == 1);  // discrete space
        CHECK(topo.open_points(u).test(p));
    }
}

TEST_CASE("DOT export is deterministic and lists points and closed sets") {
    DualTopology topo = topo_of(FiniteModule::natural(z6));
    std::string dot = topo.to_dot();
    CHECK(dot == topo.to_dot());
    CHECK(dot.find("digraph dual_zariski") != std::string::npos);
    CHECK(dot.find("{0,3}") != std::string::npos);
    CHECK(dot.find("ann (2)") != std::string::npos);
    CHECK(dot.find("subgraph cluster_closed0") != std::string::npos);
}
