#pragma once

#include <map>
#include <optional>
#include <string>

#include "secsheaf/report.hpp"
#include "secsheaf/submodule.hpp"

namespace secsheaf {

// A parsed and validated instance description: the ring, the named modules
// (at least "M"), named submodules of M (typically "K"), guards, seed, and
// the optional morphism block.
struct InstanceDocument {
    json raw;
    RingPtr ring;
    std::map<std::string, ModulePtr> modules;
    std::map<std::string, Submodule> submodules;
    Guards guards;
    uint64_t seed = 0;
    json morphism;  // empty object when absent

    const ModulePtr& module_named(const std::string& name) const;
    const Submodule& submodule_named(const std::string& name) const;
    bool has_module(const std::string& name) const { return modules.count(name) > 0; }
    bool has_submodule(const std::string& name) const { return submodules.count(name) > 0; }
};

RingPtr parse_ring(const json& spec, const std::string& path);
ModulePtr parse_module(const json& spec, const RingPtr& ring, const std::string& path);
InstanceDocument parse_document(const json& doc);

}  // namespace secsheaf
