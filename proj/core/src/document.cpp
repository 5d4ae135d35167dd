#include "secsheaf/document.hpp"

#include "secsheaf/errors.hpp"

namespace secsheaf {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

int require_int(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) bad(path, "missing \"" + key + "\"");
    if (!j[key].is_number_integer()) bad(path + "/" + key, "expected an integer");
    return j[key].get<int>();
}

std::string require_string(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) bad(path, "missing \"" + key + "\"");
    if (!j[key].is_string()) bad(path + "/" + key, "expected a string");
    return j[key].get<std::string>();
}

std::vector<std::vector<int>> parse_table(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of rows");
    std::vector<std::vector<int>> out;
    for (size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) bad(path + "[" + std::to_string(r) + "]", "expected a row array");
        std::vector<int> row;
        for (const auto& v : j[r]) {
            if (!v.is_number_integer()) bad(path + "[" + std::to_string(r) + "]", "expected integers");
            row.push_back(v.get<int>());
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

RingPtr parse_ring(const json& spec, const std::string& path) {
    if (!spec.is_object()) bad(path, "expected an object");
    std::string kind = require_string(spec, "kind", path);
    try {
        if (kind == "zmod") {
            int n = require_int(spec, "n", path);
            if (n < 1) bad(path + "/n", "must be >= 1");
            return FiniteRing::zmod(n);
        }
        if (kind == "product") {
            if (!spec.contains("factors") || !spec["factors"].is_array() || spec["factors"].empty())
                bad(path, "product needs a non-empty \"factors\" array");
            std::vector<RingPtr> factors;
            for (size_t i = 0; i < spec["factors"].size(); ++i)
                factors.push_back(
                    parse_ring(spec["factors"][i], path + "/factors[" + std::to_string(i) + "]"));
            return FiniteRing::product(std::move(factors));
        }
        if (kind == "table") {
            auto add = parse_table(spec.contains("add") ? spec["add"] : json(), path + "/add");
            auto mul = parse_table(spec.contains("mul") ? spec["mul"] : json(), path + "/mul");
            int one = require_int(spec, "one", path);
            if (spec.contains("order") && spec["order"].get<int>() != (int)add.size())
                bad(path + "/order", "does not match the table size");
            return FiniteRing::from_tables(add, mul, one);
        }
    } catch (const StructureError& e) {
        bad(path, e.what());
    }
    bad(path + "/kind", "unknown ring kind \"" + kind + "\"");
}

ModulePtr parse_module(const json& spec, const RingPtr& ring, const std::string& path) {
    if (!spec.is_object()) bad(path, "expected an object");
    std::string kind = require_string(spec, "kind", path);
    try {
        if (kind == "natural") return FiniteModule::natural(ring);
        if (kind == "cyclic-product") {
            if (!spec.contains("orders") || !spec["orders"].is_array())
                bad(path, "cyclic-product needs an \"orders\" array");
            std::vector<int> orders;
            for (const auto& v : spec["orders"]) orders.push_back(v.get<int>());
            return FiniteModule::cyclic_product(ring, orders);
        }
        if (kind == "table") {
            auto add = parse_table(spec.contains("add") ? spec["add"] : json(), path + "/add");
            auto act = parse_table(spec.contains("act") ? spec["act"] : json(), path + "/act");
            return FiniteModule::from_tables(ring, add, act);
        }
    } catch (const StructureError& e) {
        bad(path, e.what());
    }
    bad(path + "/kind", "unknown module kind \"" + kind + "\"");
}

const ModulePtr& InstanceDocument::module_named(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw InputError("missing module \"" + name + "\" in the document");
    return it->second;
}

const Submodule& InstanceDocument::submodule_named(const std::string& name) const {
    auto it = submodules.find(name);
    if (it == submodules.end()) throw InputError("missing submodule \"" + name + "\" in the document");
    return it->second;
}

InstanceDocument parse_document(const json& doc) {
    if (!doc.is_object()) throw InputError("document root must be an object");
    InstanceDocument out;
    out.raw = doc;

    if (!doc.contains("ring")) throw InputError("/: missing \"ring\"");
    out.ring = parse_ring(doc["ring"], "/ring");

    if (doc.contains("guards")) {
        const auto& g = doc["guards"];
        if (!g.is_object()) throw InputError("/guards: expected an object");
        if (g.contains("ring")) out.guards.ring_cap = g["ring"].get<int>();
        if (g.contains("submodules")) out.guards.submodule_cap = g["submodules"].get<int>();
        if (g.contains("hom")) out.guards.hom_cap = g["hom"].get<long long>();
        if (g.contains("families")) out.guards.family_cap = g["families"].get<long long>();
        if (g.contains("covers")) out.guards.cover_cap = g["covers"].get<long long>();
    }
    if (doc.contains("seed")) out.seed = doc["seed"].get<uint64_t>();
    if (doc.contains("morphism")) out.morphism = doc["morphism"];
    if (!out.morphism.is_object()) out.morphism = json::object();

    if (doc.contains("modules")) {
        const auto& mods = doc["modules"];
        if (!mods.is_object()) throw InputError("/modules: expected an object");
        std::vector<std::pair<std::string, json>> deferred;
        for (const auto& [name, spec] : mods.items()) {
            std::string path = "/modules/" + name;
            if (spec.is_object() && spec.contains("kind") && spec["kind"] == "submodule") {
                deferred.emplace_back(name, spec);
                continue;
            }
            out.modules.emplace(name, parse_module(spec, out.ring, path));
        }
        for (const auto& [name, spec] : deferred) {
            std::string path = "/modules/" + name;
            std::string of = require_string(spec, "of", path);
            auto parent = out.modules.find(of);
            if (parent == out.modules.end())
                throw InputError(path + "/of: unknown module \"" + of + "\"");
            if (!spec.contains("generators") || !spec["generators"].is_array())
                throw InputError(path + ": submodule needs a \"generators\" array");
            std::vector<int> gens;
            for (const auto& v : spec["generators"]) {
                int g = v.get<int>();
                if (g < 0 || g >= parent->second->order())
                    throw InputError(path + "/generators: element id " + std::to_string(g) +
                                     " out of range");
                gens.push_back(g);
            }
            out.submodules.emplace(name, Submodule::span(parent->second, gens));
        }
    }
    return out;
}

}  // namespace secsheaf
