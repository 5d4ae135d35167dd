#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secsheaf/second_spectrum.hpp"

using namespace secsheaf;

namespace {
const RingPtr z6 = FiniteRing::zmod(6);
const RingPtr z2 = FiniteRing::zmod(2);
const RingPtr z4 = FiniteRing::zmod(4);
}  // namespace

TEST_CASE("second-submodule test with witnesses") {
    auto m = FiniteModule::natural(z6);

    SecondCheck a = is_second(Submodule::span(m, {2}));
    CHECK(a.second);

    SecondCheck zero = is_second(Submodule::zero(m));
    CHECK(!zero.second);
    CHECK(zero.zero_module);

    auto m4 = FiniteModule::natural(z4);
    SecondCheck full = is_second(Submodule::full(m4));
    CHECK(!full.second);
    REQUIRE(full.witness_r.has_value());
    CHECK(*full.witness_r == 2);  // 2*(Z/4) = {0,2} is neither 0 nor Z/4
}

TEST_CASE("second spectrum of Z/6") {
    auto spec = SecondSpectrum::compute(FiniteModule::natural(z6));
    REQUIRE(spec.point_count() == 2);
    CHECK(spec.point(0).submodule.elements().elements() == std::vector<int>{0, 3});
    CHECK(spec.point(0).annihilator == Ideal::principal(z6, 2));
    CHECK(spec.point(1).submodule.elements().elements() == std::vector<int>{0, 2, 4});
    CHECK(spec.point(1).annihilator == Ideal::principal(z6, 3));
    CHECK(spec.is_faithful());
    CHECK(spec.is_secondful());
}

TEST_CASE("second spectrum of the zero module is empty") {
    auto spec = SecondSpectrum::compute(FiniteModule::zero_module(z6));
    CHECK(spec.point_count() == 0);
}

TEST_CASE("second spectrum of the plane over F2") {
    auto spec = SecondSpectrum::compute(FiniteModule::cyclic_product(z2, {2, 2}));
    CHECK(spec.point_count() == 4);  // three lines and the plane
    REQUIRE(spec.support_primes().size() == 1);
    CHECK(spec.support_primes()[0] == Ideal::zero(z2));
    CHECK(spec.points_with_prime(Ideal::zero(z2)).size() == 4);
    CHECK(spec.is_faithful());
    CHECK(spec.is_secondful());
}

TEST_CASE("spectrum agrees with the brute-force definition") {
    for (auto m : {FiniteModule::natural(z6), FiniteModule::natural(z4),
                   FiniteModule::cyclic_product(z6, {2, 3}),
                   FiniteModule::cyclic_product(z4, {2, 2})}) {
        auto spec = SecondSpectrum::compute(m);
        // Independent oracle: filter every submodule by the raw definition.
        std::vector<Bitset> expected;
        for (const auto& n : submodules(m)) {
            if (n.is_zero()) continue;
            bool second = true;
            for (int r = 0; r < m->ring()->order() && second; ++r) {
                Bitset image(m->order());
                for (int x : n.elements().elements()) image.set(m->act(r, x));
                bool is_zero = image.count() == 1;
                if (!is_zero && image != n.elements()) second = false;
            }
            if (second) expected.push_back(n.elements());
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE((int)expected.size() == spec.point_count());
        for (int i = 0; i < spec.point_count(); ++i)
            CHECK(spec.point(i).submodule.elements() == expected[i]);
    }
}

TEST_CASE("annihilators of points are primes with domain quotients") {
    for (auto m : {FiniteModule::natural(z6), FiniteModule::cyclic_product(z6, {2, 3}),
                   FiniteModule::natural(z4)}) {
        auto spec = SecondSpectrum::compute(m);
        for (const auto& pt : spec.points()) {
            const Ideal& p = pt.annihilator;
            CHECK(p.is_prime());
            // Zero-divisor scan of R/p: no product of two non-members lies in p.
            for (int a = 0; a < m->ring()->order(); ++a)
                for (int b = 0; b < m->ring()->order(); ++b)
                    if (!p.contains(a) && !p.contains(b)) CHECK(!p.contains(m->ring()->mul(a, b)));
        }
    }
}

TEST_CASE("minimal nonzero submodules are second") {
    for (auto m : {FiniteModule::natural(z6), FiniteModule::natural(z4),
                   FiniteModule::cyclic_product(z6, {6, 2})}) {
        auto spec = SecondSpectrum::compute(m);
        auto subs = submodules(m);
        for (const auto& n : subs) {
            if (n.is_zero()) continue;
            bool minimal = true;
            for (const auto& other : subs)
                if (!other.is_zero() && other != n && other.subset_of(n)) minimal = false;
            if (minimal) CHECK(spec.index_of_point(n.elements()) >= 0);
        }
        if (m->order() > 1) CHECK(spec.point_count() > 0);
    }
}

TEST_CASE("faithful and secondful classification") {
    // Z/2 as a Z/6-module: annihilated by (2), so not faithful; psi still
    // covers Spec(R/ann M) = {(2)}.
    auto m = FiniteModule::cyclic_product(z6, {2});
    auto spec = SecondSpectrum::compute(m);
    CHECK(!spec.is_faithful());
    CHECK(spec.module_annihilator() == Ideal::principal(z6, 2));
    CHECK(spec.is_secondful());
}

TEST_CASE("Zariski socle") {
    auto m = FiniteModule::natural(z6);
    auto spec = SecondSpectrum::compute(m);

    // V^s(M) is everything, so the socle of M is the sum of all points.
    CHECK(spec.zariski_socle(Submodule::full(m)) == Submodule::full(m));
    // ann(0) = R is contained in no prime: V^s(0) is empty, socle 0.
    CHECK(spec.zariski_socle(Submodule::zero(m)) == Submodule::zero(m));
    // V^s({0,3}) = {{0,3}}.
    CHECK(spec.zariski_socle(Submodule::span(m, {3})) == Submodule::span(m, {3}));
}
