#include "secsheaf/generator.hpp"

#include <algorithm>
#include <random>

#include "secsheaf/constructions.hpp"

namespace secsheaf {

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}
    int below(int n) { return (int)(engine() % (uint64_t)n); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
    bool chance(int percent) { return below(100) < percent; }
};

std::vector<int> divisors_above_one(int n) {
    std::vector<int> out;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Random orders for a cyclic-product module over Z/n with bounded total.
std::vector<int> random_orders(Rng& rng, int n, int max_total) {
    auto divs = divisors_above_one(n);
    std::vector<int> orders;
    int total = 1;
    int pieces = rng.in(1, 3);
    for (int i = 0; i < pieces; ++i) {
        int d = divs[rng.below((int)divs.size())];
        if ((long long)total * d > max_total) break;
        orders.push_back(d);
        total *= d;
    }
    if (orders.empty()) orders.push_back(divs[0] <= max_total ? divs[0] : 1);
    return orders;
}

json describe_ring(const RingPtr& ring) {
    if (!ring->factors().empty()) {
        json factors = json::array();
        for (const auto& f : ring->factors()) factors.push_back(describe_ring(f));
        return json{{"kind", "product"}, {"factors", factors}};
    }
    return json{{"kind", "zmod"}, {"n", ring->order()}};
}

json describe_module(const ModulePtr& m) {
    // Emitted as explicit tables: reproducible for any construction.
    json add = json::array(), act = json::array();
    for (int a = 0; a < m->order(); ++a) {
        json row = json::array();
        for (int b = 0; b < m->order(); ++b) row.push_back(m->add(a, b));
        add.push_back(row);
    }
    for (int r = 0; r < m->ring()->order(); ++r) {
        json row = json::array();
        for (int a = 0; a < m->order(); ++a) row.push_back(m->act(r, a));
        act.push_back(row);
    }
    return json{{"kind", "table"}, {"add", add}, {"act", act}};
}

ModulePtr random_module_over(Rng& rng, const RingPtr& ring, int max_module) {
    if (ring->factors().empty()) {
        if (ring->order() <= max_module && rng.chance(35)) return FiniteModule::natural(ring);
        return FiniteModule::cyclic_product(ring, random_orders(rng, ring->order(), max_module));
    }
    // Product ring: one component module per factor, within the total budget.
    if (ring->order() <= max_module && rng.chance(35)) return FiniteModule::natural(ring);
    std::vector<ModulePtr> comps;
    long long total = 1;
    for (const auto& f : ring->factors()) {
        int budget = (int)std::max<long long>(1, max_module / total);
        ModulePtr c;
        if (rng.chance(40) && f->order() <= budget)
            c = FiniteModule::natural(f);
        else
            c = FiniteModule::cyclic_product(f, random_orders(rng, f->order(), budget));
        total *= c->order();
        comps.push_back(std::move(c));
    }
    return product_module(ring, comps);
}

}  // namespace

RandomInstance random_instance(uint64_t seed, const GeneratorOptions& options) {
    Rng rng(seed);
    RandomInstance out;

    bool product = options.allow_product_rings && options.max_ring >= 4 && rng.chance(40);
    if (product) {
        int a = rng.in(2, options.max_ring / 2);
        int b = rng.in(2, std::max(2, options.max_ring / a));
        out.ring = FiniteRing::product({FiniteRing::zmod(a), FiniteRing::zmod(b)});
    } else {
        out.ring = FiniteRing::zmod(rng.in(2, options.max_ring));
    }

    out.m = random_module_over(rng, out.ring, options.max_module);
    out.n = random_module_over(rng, out.ring, options.max_module);

    out.k_generators = Bitset(out.m->order());
    int gens = rng.in(0, 2);
    for (int i = 0; i < gens; ++i) out.k_generators.set(rng.below(out.m->order()));
    return out;
}

ModulePtr random_module(uint64_t seed, const RingPtr& ring, int max_module) {
    Rng rng(seed);
    return random_module_over(rng, ring, max_module);
}

json generate_document(uint64_t seed, const GeneratorOptions& options) {
    RandomInstance inst = random_instance(seed, options);
    json modules;
    modules["M"] = describe_module(inst.m);
    modules["N"] = describe_module(inst.n);
    modules["K"] = json{{"kind", "submodule"},
                        {"of", "M"},
                        {"generators", inst.k_generators.elements()}};
    return json{{"ring", describe_ring(inst.ring)}, {"modules", modules}, {"seed", seed}};
}

}  // namespace secsheaf
