#include "secsheaf/module_map.hpp"

#include "secsheaf/errors.hpp"
#include "secsheaf/submodule.hpp"

namespace secsheaf {

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, std::vector<int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if (source_->ring() != target_->ring())
        throw StructureError("module map between modules over different rings");
    if ((int)values_.size() != source_->order()) throw StructureError("module map table has wrong size");
    for (int v : values_)
        if (v < 0 || v >= target_->order()) throw StructureError("module map value out of range");
    for (int a = 0; a < source_->order(); ++a)
        for (int b = 0; b < source_->order(); ++b)
            if (values_[source_->add(a, b)] != target_->add(values_[a], values_[b]))
                throw StructureError("module map not additive");
    for (int r = 0; r < source_->ring()->order(); ++r)
        for (int a = 0; a < source_->order(); ++a)
            if (values_[source_->act(r, a)] != target_->act(r, values_[a]))
                throw StructureError("module map not equivariant");
}

ModuleMap ModuleMap::identity(ModulePtr m) {
    std::vector<int> v(m->order());
    for (int a = 0; a < m->order(); ++a) v[a] = a;
    ModulePtr copy = m;
    return ModuleMap(std::move(copy), std::move(m), std::move(v));
}

ModuleMap ModuleMap::zero_map(ModulePtr source, ModulePtr target) {
    std::vector<int> v(source->order(), target->zero_elem());
    return ModuleMap(std::move(source), std::move(target), std::move(v));
}

ModuleMap ModuleMap::compose_after(const ModuleMap& inner) const {
    if (inner.target_ != source_) throw StructureError("composition of non-matching maps");
    std::vector<int> v(inner.source_->order());
    for (int a = 0; a < inner.source_->order(); ++a) v[a] = values_[inner.values_[a]];
    return ModuleMap(inner.source_, target_, std::move(v));
}

Submodule ModuleMap::kernel() const {
    Bitset s(source_->order());
    for (int a = 0; a < source_->order(); ++a)
        if (values_[a] == target_->zero_elem()) s.set(a);
    return Submodule(source_, s);
}

Submodule ModuleMap::image() const {
    Bitset s(target_->order());
    for (int v : values_) s.set(v);
    return Submodule(target_, s);
}

bool ModuleMap::is_injective() const {
    Bitset seen(target_->order());
    for (int v : values_) {
        if (seen.test(v)) return false;
        seen.set(v);
    }
    return true;
}

bool ModuleMap::is_surjective() const {
    Bitset seen(target_->order());
    for (int v : values_) seen.set(v);
    return seen.count() == target_->order();
}

ModuleMap ModuleMap::inverse() const {
    if (source_->order() != target_->order() || !is_bijective())
        throw PreconditionError("inverse of a non-bijective module map");
    std::vector<int> v(target_->order());
    for (int a = 0; a < source_->order(); ++a) v[values_[a]] = a;
    return ModuleMap(target_, source_, std::move(v));
}

}  // namespace secsheaf
