#pragma once

#include <cstdint>

#include "secsheaf/document.hpp"

namespace secsheaf {

struct GeneratorOptions {
    int max_ring = 36;
    int max_module = 64;
    bool allow_product_rings = true;
};

// A seeded random small instance: Z/n or a two-factor product ring, modules
// M and N over it, and a random submodule K of M.
struct RandomInstance {
    RingPtr ring;
    ModulePtr m;
    ModulePtr n;
    Bitset k_generators;  // subset of M's carrier spanning K
    Submodule k() const { return Submodule::span(m, k_generators.elements()); }
};

RandomInstance random_instance(uint64_t seed, const GeneratorOptions& options = {});

// A seeded random module over an existing ring.
ModulePtr random_module(uint64_t seed, const RingPtr& ring, int max_module);

// The same instance as a reusable input document.
json generate_document(uint64_t seed, const GeneratorOptions& options = {});

}  // namespace secsheaf
