#include "secsheaf/submodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "secsheaf/errors.hpp"

namespace secsheaf {

namespace {

Bitset close_submodule(const FiniteModule& m, Bitset s) {
    s.set(m.zero_elem());
    bool changed = true;
    while (changed) {
        changed = false;
        auto elems = s.elements();
        for (int a : elems) {
            for (int b : elems) {
                int c = m.add(a, b);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
            for (int r = 0; r < m.ring()->order(); ++r) {
                int c = m.act(r, a);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
        }
    }
    return s;
}

}  // namespace

Submodule::Submodule(ModulePtr parent, Bitset elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
    if (elems_.universe() != parent_->order()) throw StructureError("submodule bit-set has wrong universe");
    if (!elems_.test(parent_->zero_elem())) throw StructureError("submodule does not contain zero");
    for (int a : elems_.elements()) {
        for (int b : elems_.elements())
            if (!elems_.test(parent_->add(a, b)))
                throw StructureError("submodule not closed under addition");
        for (int r = 0; r < parent_->ring()->order(); ++r)
            if (!elems_.test(parent_->act(r, a)))
                throw StructureError("submodule not closed under scalar action");
    }
}

Submodule Submodule::zero(ModulePtr parent) {
    Bitset s(parent->order());
    s.set(parent->zero_elem());
    return Submodule(std::move(parent), s);
}

Submodule Submodule::full(ModulePtr parent) {
    int n = parent->order();
    return Submodule(std::move(parent), Bitset::full(n));
}

Submodule Submodule::span(ModulePtr parent, const std::vector<int>& gens) {
    Bitset s(parent->order());
    for (int g : gens) s.set(g);
    s = close_submodule(*parent, s);
    return Submodule(std::move(parent), s);
}

Submodule Submodule::sum(const Submodule& o) const {
    if (parent_ != o.parent_) throw StructureError("sum of submodules of different modules");
    Bitset s(parent_->order());
    for (int a : elems_.elements())
        for (int b : o.elems_.elements()) s.set(parent_->add(a, b));
    return Submodule(parent_, s);
}

Submodule Submodule::intersect(const Submodule& o) const {
    if (parent_ != o.parent_) throw StructureError("intersection of submodules of different modules");
    return Submodule(parent_, elems_ & o.elems_);
}

Ideal Submodule::annihilator() const {
    const auto& ring = parent_->ring();
    Bitset s(ring->order());
    for (int r = 0; r < ring->order(); ++r) {
        bool kills = true;
        for (int a : elems_.elements())
            if (parent_->act(r, a) != parent_->zero_elem()) {
                kills = false;
                break;
            }
        if (kills) s.set(r);
    }
    return Ideal(ring, s);
}

StandaloneSubmodule Submodule::as_module() const {
    std::vector<int> elem = elems_.elements();
    std::map<int, int> id_of;
    for (int i = 0; i < (int)elem.size(); ++i) id_of[elem[i]] = i;

    int k = (int)elem.size();
    const auto& ring = parent_->ring();
    std::vector<std::vector<int>> add(k, std::vector<int>(k)), act(ring->order(), std::vector<int>(k));
    std::vector<std::string> names(k);
    for (int i = 0; i < k; ++i) {
        names[i] = parent_->element_name(elem[i]);
        for (int j = 0; j < k; ++j) add[i][j] = id_of[parent_->add(elem[i], elem[j])];
        for (int r = 0; r < ring->order(); ++r) act[r][i] = id_of[parent_->act(r, elem[i])];
    }
    ModulePtr mod = FiniteModule::from_tables_named(ring, add, act, std::move(names),
                                                    "submodule " + name() + " of " + parent_->description());
    ModuleMap incl(mod, parent_, elem);
    return StandaloneSubmodule{std::move(mod), std::move(elem), std::move(incl)};
}

std::vector<Submodule> submodules(const ModulePtr& m, const Guards& guards) {
    if (m->order() > guards.submodule_cap)
        throw CapacityError("submodule enumeration supports |M| <= " +
                                std::to_string(guards.submodule_cap) + ", got " +
                                std::to_string(m->order()),
                            guards.submodule_cap);

    std::set<Bitset> seen;
    std::vector<Submodule> cyclic;
    for (int a = 0; a < m->order(); ++a) {
        Submodule s = Submodule::span(m, {a});
        if (seen.insert(s.elements()).second) cyclic.push_back(s);
    }
    std::vector<Submodule> queue = cyclic;
    while (!queue.empty()) {
        Submodule cur = queue.back();
        queue.pop_back();
        for (const auto& c : cyclic) {
            Submodule j = cur.sum(c);
            if (seen.insert(j.elements()).second) queue.push_back(j);
        }
    }

    std::vector<Submodule> out;
    out.reserve(seen.size());
    for (const auto& bits : seen) out.emplace_back(m, bits);
    return out;
}

Submodule colon_submodule(const ModulePtr& m, const Ideal& ideal) {
    if (ideal.ring() != m->ring()) throw StructureError("colon with ideal over a different ring");
    Bitset s(m->order());
    for (int a = 0; a < m->order(); ++a) {
        bool killed = true;
        for (int r : ideal.elements().elements())
            if (m->act(r, a) != m->zero_elem()) {
                killed = false;
                break;
            }
        if (killed) s.set(a);
    }
    return Submodule(m, s);
}

Submodule colon_element(const ModulePtr& m, int r) {
    Bitset s(m->order());
    for (int a = 0; a < m->order(); ++a)
        if (m->act(r, a) == m->zero_elem()) s.set(a);
    return Submodule(m, s);
}

Ideal annihilator_of_module(const ModulePtr& m) { return Submodule::full(m).annihilator(); }

}  // namespace secsheaf
