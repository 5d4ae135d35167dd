#include "secsheaf/hom.hpp"

#include <algorithm>
#include <map>

#include "secsheaf/errors.hpp"

namespace secsheaf {

namespace {

// Propagates pinned values through sums and scalar multiples.  Returns the
// value table with -1 outside the span of the pins, or nullopt on conflict.
std::optional<std::vector<int>> close_partial(const FiniteModule& a, const FiniteModule& b,
                                              std::vector<int> val) {
    val[a.zero_elem()] = b.zero_elem();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> defined;
        for (int x = 0; x < a.order(); ++x)
            if (val[x] >= 0) defined.push_back(x);
        for (int x : defined) {
            for (int y : defined) {
                int s = a.add(x, y), w = b.add(val[x], val[y]);
                if (val[s] < 0) {
                    val[s] = w;
                    changed = true;
                } else if (val[s] != w) {
                    return std::nullopt;
                }
            }
            for (int r = 0; r < a.ring()->order(); ++r) {
                int s = a.act(r, x), w = b.act(r, val[x]);
                if (val[s] < 0) {
                    val[s] = w;
                    changed = true;
                } else if (val[s] != w) {
                    return std::nullopt;
                }
            }
        }
    }
    return val;
}

bool all_defined(const std::vector<int>& val) {
    return std::all_of(val.begin(), val.end(), [](int v) { return v >= 0; });
}

}  // namespace

std::vector<int> minimal_generators(const ModulePtr& m) {
    std::vector<int> gens;
    Bitset spanned(m->order());
    spanned.set(m->zero_elem());
    for (int x = 0; x < m->order(); ++x) {
        if (spanned.test(x)) continue;
        gens.push_back(x);
        spanned = Submodule::span(m, gens).elements();
        if (spanned.count() == m->order()) break;
    }
    for (size_t i = 0; i < gens.size();) {
        std::vector<int> rest;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (Submodule::span(m, rest).size() == m->order())
            gens = rest;
        else
            ++i;
    }
    return gens;
}

std::vector<std::vector<int>> enumerate_homs(const ModulePtr& source, const ModulePtr& target,
                                             const Guards& guards) {
    if (source->ring() != target->ring())
        throw StructureError("hom enumeration between modules over different rings");
    auto gens = minimal_generators(source);

    long long candidates = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        candidates *= target->order();
        if (candidates > guards.hom_cap)
            throw CapacityError("hom search space |B|^" + std::to_string(gens.size()) +
                                    " exceeds the cap",
                                guards.hom_cap);
    }

    std::vector<std::vector<int>> out;
    std::vector<int> images(gens.size(), 0);
    while (true) {
        std::vector<int> val(source->order(), -1);
        for (size_t i = 0; i < gens.size(); ++i) val[gens[i]] = images[i];
        if (auto closed = close_partial(*source, *target, std::move(val));
            closed && all_defined(*closed))
            out.push_back(std::move(*closed));

        size_t i = 0;
        while (i < gens.size() && ++images[i] == target->order()) images[i++] = 0;
        if (i == gens.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int HomModule::index_of(const std::vector<int>& values) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), values);
    if (it == maps.end() || *it != values) return -1;
    return (int)(it - maps.begin());
}

HomModule hom_module(const ModulePtr& a, const ModulePtr& b, const Guards& guards) {
    HomModule h;
    h.domain = a;
    h.codomain = b;
    h.maps = enumerate_homs(a, b, guards);

    int k = (int)h.maps.size();
    const auto& ring = a->ring();
    std::map<std::vector<int>, int> id_of;
    for (int i = 0; i < k; ++i) id_of[h.maps[i]] = i;

    std::vector<std::vector<int>> add(k, std::vector<int>(k)), act(ring->order(), std::vector<int>(k));
    std::vector<int> tmp(a->order());
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (int x = 0; x < a->order(); ++x) tmp[x] = b->add(h.maps[i][x], h.maps[j][x]);
            auto it = id_of.find(tmp);
            if (it == id_of.end()) throw InternalCheckError("hom set not closed under addition");
            add[i][j] = it->second;
        }
        for (int r = 0; r < ring->order(); ++r) {
            for (int x = 0; x < a->order(); ++x) tmp[x] = b->act(r, h.maps[i][x]);
            auto it = id_of.find(tmp);
            if (it == id_of.end()) throw InternalCheckError("hom set not closed under scalar action");
            act[r][i] = it->second;
        }
    }
    h.module = FiniteModule::from_tables_named(
        ring, add, act, {}, "Hom(" + a->description() + ", " + b->description() + ")");
    return h;
}

std::vector<std::vector<int>> extend_homs(const ModulePtr& source, const ModulePtr& target,
                                          const std::vector<std::pair<int, int>>& pinned,
                                          const Guards& guards) {
    std::vector<int> val(source->order(), -1);
    for (auto [x, y] : pinned) {
        if (val[x] >= 0 && val[x] != y) return {};
        val[x] = y;
    }
    auto base = close_partial(*source, *target, std::move(val));
    if (!base) return {};

    std::vector<std::vector<int>> out;
    long long steps = 0;
    auto rec = [&](auto&& self, const std::vector<int>& cur) -> void {
        if (++steps > guards.hom_cap)
            throw CapacityError("hom extension search exceeded the cap", guards.hom_cap);
        int x = -1;
        for (int i = 0; i < source->order(); ++i)
            if (cur[i] < 0) {
                x = i;
                break;
            }
        if (x < 0) {
            out.push_back(cur);
            return;
        }
        for (int y = 0; y < target->order(); ++y) {
            std::vector<int> next = cur;
            next[x] = y;
            if (auto closed = close_partial(*source, *target, std::move(next)))
                self(self, *closed);
        }
    };
    rec(rec, *base);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<ModuleMap> find_isomorphism(const ModulePtr& a, const ModulePtr& b,
                                          const Guards& guards) {
    if (a->ring() != b->ring()) return std::nullopt;
    if (a->order() != b->order()) return std::nullopt;
    if (annihilator_of_module(a) != annihilator_of_module(b)) return std::nullopt;

    // Per-element invariant: additive order plus the ideal of scalars killing
    // the element.  Isomorphisms must preserve it.
    auto invariant = [](const FiniteModule& m, int x) {
        Bitset ann(m.ring()->order());
        for (int r = 0; r < m.ring()->order(); ++r)
            if (m.act(r, x) == m.zero_elem()) ann.set(r);
        return std::make_pair(m.additive_order(x), ann);
    };
    std::vector<std::pair<int, Bitset>> inv_a(a->order()), inv_b(b->order());
    for (int x = 0; x < a->order(); ++x) inv_a[x] = invariant(*a, x);
    for (int x = 0; x < b->order(); ++x) inv_b[x] = invariant(*b, x);
    {
        auto ha = inv_a, hb = inv_b;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }

    auto gens = minimal_generators(a);
    long long steps = 0;
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, size_t gi, const std::vector<int>& cur) -> bool {
        if (++steps > guards.hom_cap)
            throw CapacityError("isomorphism search exceeded the cap", guards.hom_cap);
        if (gi == gens.size()) {
            Bitset seen(b->order());
            for (int v : cur) {
                if (seen.test(v)) return false;
                seen.set(v);
            }
            found = cur;
            return true;
        }
        int g = gens[gi];
        if (cur[g] >= 0) return self(self, gi + 1, cur);
        for (int y = 0; y < b->order(); ++y) {
            if (inv_b[y] != inv_a[g]) continue;
            std::vector<int> next = cur;
            next[g] = y;
            if (auto closed = close_partial(*a, *b, std::move(next)))
                if (self(self, gi + 1, *closed)) return true;
        }
        return false;
    };
    auto start = close_partial(*a, *b, std::vector<int>(a->order(), -1));
    if (!start || !rec(rec, 0, *start)) return std::nullopt;
    return ModuleMap(a, b, *found);
}

bool modules_isomorphic(const ModulePtr& a, const ModulePtr& b, const Guards& guards) {
    return find_isomorphism(a, b, guards).has_value();
}

}  // namespace secsheaf
